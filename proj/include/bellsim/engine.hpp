#ifndef BELLSIM_ENGINE_HPP
#define BELLSIM_ENGINE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bellsim/rng.hpp"
#include "bellsim/transcript.hpp"

namespace bellsim {

// Stream labels fixed by the engine so that runs replay bit-for-bit.
inline constexpr std::uint64_t kStreamShared = 1;
inline constexpr std::uint64_t kStreamAlice = 2;
inline constexpr std::uint64_t kStreamBob = 3;
inline constexpr std::uint64_t kStreamRun = 4;

// A two-party scheme with a preparation stage and a metered measurement
// stage. The callback shapes are the isolation contract: Alice's callbacks
// receive (her measurement, her hidden variable, bits received from Bob)
// and nothing of Bob's, and vice versa. A party's own private stream backs
// any local coin flips.
template <class MeasA, class MeasB, class HiddenA, class HiddenB>
struct ProtocolSpec {
    using SendA = std::function<int(const MeasA&, const HiddenA&, int round,
                                    std::span<const int> received, RngStream&)>;
    using SendB = std::function<int(const MeasB&, const HiddenB&, int round,
                                    std::span<const int> received, RngStream&)>;

    int budget = 0;
    std::function<std::pair<HiddenA, HiddenB>(RngStream&)> sample_shared;
    std::function<Direction(int round)> direction;
    SendA alice_send;
    SendB bob_send;
    SendA alice_output;
    SendB bob_output;
};

template <class MeasA, class MeasB>
struct ProtocolRun {
    MeasA x;
    MeasB y;
    int a = 0;
    int b = 0;
    Transcript transcript;
    std::uint64_t seed = 0;
};

// Executes one run: preparation (shared randomness from the seeded stream),
// then `budget` rounds in the protocol's declared directions, then both
// outputs. Replaying with the same seed reproduces everything bit-for-bit.
template <class MeasA, class MeasB, class HiddenA, class HiddenB>
ProtocolRun<MeasA, MeasB> run(const ProtocolSpec<MeasA, MeasB, HiddenA, HiddenB>& protocol,
                              const MeasA& x, const MeasB& y, std::uint64_t seed) {
    RngStream shared_rng = RngStream::derive(seed, {kStreamShared});
    RngStream alice_rng = RngStream::derive(seed, {kStreamAlice});
    RngStream bob_rng = RngStream::derive(seed, {kStreamBob});

    auto [hidden_a, hidden_b] = protocol.sample_shared(shared_rng);

    Transcript transcript(protocol.budget);
    std::vector<int> to_alice;
    std::vector<int> to_bob;
    to_bob.reserve(static_cast<size_t>(protocol.budget));

    for (int round = 0; round < protocol.budget; ++round) {
        Direction dir = protocol.direction(round);
        if (dir == Direction::AliceToBob) {
            int bit = protocol.alice_send(x, hidden_a, round,
                                          std::span<const int>(to_alice), alice_rng);
            transcript.append(dir, bit);
            to_bob.push_back(bit);
        } else {
            int bit = protocol.bob_send(y, hidden_b, round,
                                        std::span<const int>(to_bob), bob_rng);
            transcript.append(dir, bit);
            to_alice.push_back(bit);
        }
    }

    ProtocolRun<MeasA, MeasB> result;
    result.x = x;
    result.y = y;
    result.a = protocol.alice_output(x, hidden_a, protocol.budget,
                                     std::span<const int>(to_alice), alice_rng);
    result.b = protocol.bob_output(y, hidden_b, protocol.budget,
                                   std::span<const int>(to_bob), bob_rng);
    result.transcript = std::move(transcript);
    result.seed = seed;
    return result;
}

}  // namespace bellsim

#endif  // BELLSIM_ENGINE_HPP
