#include "bellsim/general_protocol.hpp"

namespace bellsim {

GeneralHidden sample_general_hidden(RngStream& rng) {
    GeneralHidden h;
    h.first = sample_slot_hidden(rng);
    h.second = sample_slot_hidden(rng);
    return h;
}

namespace {

Angle signed_angle(Angle base, int sign_bit) {
    return sign_bit ? base.negated() : base;
}

}  // namespace

GeneralRunDetail general_run_detail(const GeneralMeasurement& alice,
                                    const GeneralMeasurement& bob,
                                    const GeneralHidden& hidden, RngStream& bob_rng) {
    GeneralRunDetail r;

    IntervalMessage m1 = slot_alice_message(alice.phase, hidden.first);
    r.a_prime = slot_alice_output(hidden.first);
    r.b_prime = slot_bob_output(bob.phase.negated(), hidden.first, m1, bob_rng);

    IntervalMessage m2 =
        slot_alice_message(signed_angle(alice.angle, r.a_prime), hidden.second);
    r.a = slot_alice_output(hidden.second);
    r.b = slot_bob_output(signed_angle(bob.angle, r.b_prime), hidden.second, m2, bob_rng);
    return r;
}

GeneralProtocol make_general_protocol() {
    GeneralProtocol p;
    p.budget = 8;
    p.sample_shared = [](RngStream& rng) {
        GeneralHidden h = sample_general_hidden(rng);
        return std::pair<GeneralHidden, GeneralHidden>(h, h);
    };
    p.direction = [](int) { return Direction::AliceToBob; };
    p.alice_send = [](const GeneralMeasurement& x, const GeneralHidden& h, int round,
                      std::span<const int>, RngStream&) {
        if (round < 4) {
            int index = slot_alice_message(x.phase, h.first).index;
            return (index >> (3 - round)) & 1;
        }
        Angle adjusted = h.first.c ? x.angle.negated() : x.angle;
        int index = slot_alice_message(adjusted, h.second).index;
        return (index >> (7 - round)) & 1;
    };
    p.bob_send = nullptr;  // one-way
    p.alice_output = [](const GeneralMeasurement&, const GeneralHidden& h, int,
                        std::span<const int>, RngStream&) {
        return slot_alice_output(h.second);
    };
    p.bob_output = [](const GeneralMeasurement& y, const GeneralHidden& h, int,
                      std::span<const int> received, RngStream& rng) {
        int m1 = 0;
        int m2 = 0;
        for (int i = 0; i < 4; ++i) m1 = (m1 << 1) | received[static_cast<size_t>(i)];
        for (int i = 4; i < 8; ++i) m2 = (m2 << 1) | received[static_cast<size_t>(i)];
        int b_prime = slot_bob_output(y.phase.negated(), h.first, IntervalMessage{m1}, rng);
        Angle adjusted = b_prime ? y.angle.negated() : y.angle;
        return slot_bob_output(adjusted, h.second, IntervalMessage{m2}, rng);
    };
    return p;
}

}  // namespace bellsim
