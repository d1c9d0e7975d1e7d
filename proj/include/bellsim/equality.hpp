#ifndef BELLSIM_EQUALITY_HPP
#define BELLSIM_EQUALITY_HPP

#include <cstdint>
#include <vector>

#include "bellsim/dj.hpp"
#include "bellsim/engine.hpp"

namespace bellsim {

// Restricted equality: decide x = y versus Hamming distance exactly
// 2^{n-1}, for 2^n-bit inputs. Any exact simulator of the coherent
// measurement scenario solves it with n extra bits: run the simulator on
// (x, y) and have Alice ship her n output bits so Bob can compare.

enum class PromiseKind { Equal, HalfDistance };

struct PromisePair {
    DJMeasurement x;
    DJMeasurement y;
    PromiseKind kind;
};

// Every promise pair, both kinds; exhaustive enumeration is only feasible
// for n <= 2 (at n = 2: 16 Equal + 96 HalfDistance).
std::vector<PromisePair> enumerate_promise_pairs(int n);

// Deterministic pseudorandom sample for larger n; kinds alternate draws.
std::vector<PromisePair> sample_promise_pairs(int n, int count, std::uint64_t seed);

struct EqProtocolResult {
    int answer = 0;     // 1 declares x = y
    int bits_used = 0;  // simulator budget plus n
};

// `sim` must be an index-addressed exact simulator of the n-pair coherent
// scenario (e.g. make_table_protocol(dj_scenario(n))).
template <class HiddenA, class HiddenB>
EqProtocolResult restricted_eq(const ProtocolSpec<int, int, HiddenA, HiddenB>& sim,
                               const DJMeasurement& x, const DJMeasurement& y,
                               std::uint64_t seed) {
    if (x.n() != y.n()) {
        throw DimensionMismatchError("inputs have different lengths");
    }
    int n = x.n();
    auto outcome = run(sim, static_cast<int>(x.to_index()), static_cast<int>(y.to_index()),
                       seed);

    // Alice appends her n output bits to the conversation.
    Transcript full(sim.budget + n);
    for (const auto& e : outcome.transcript.entries()) full.append(e.direction, e.bit);
    for (int i = n - 1; i >= 0; --i) {
        full.append(Direction::AliceToBob, (outcome.a >> i) & 1);
    }

    EqProtocolResult result;
    result.answer = outcome.a == outcome.b ? 1 : 0;
    result.bits_used = bits_used(full);
    return result;
}

}  // namespace bellsim

#endif  // BELLSIM_EQUALITY_HPP
