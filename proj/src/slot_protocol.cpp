#include "bellsim/slot_protocol.hpp"

#include <cmath>

namespace bellsim {

SlotHidden sample_slot_hidden(RngStream& rng) {
    SlotHidden h;
    h.c = rng.next_bernoulli(0.5) ? 1 : 0;
    h.theta = Theta::sample(rng);
    return h;
}

IntervalMessage slot_alice_message(Angle x, const SlotHidden& hidden) {
    return encode_interval(x, hidden.theta);
}

namespace detail {

SlotDecision slot_bob_decision(const SlotTriple& x_slots, Angle y, Theta theta) {
    SlotDecision d;

    // Far apart on the alpha cycle: work with the antipode and negate.
    Angle yw = y;
    if (circular_slot_distance(x_slots.alpha, alpha_slot(y)) > 2) {
        yw = y.antipode();
        d.flipped = true;
    }

    // Near the wrap-around the beta points cannot separate the pair; the
    // gamma family covers that region.
    int ay = alpha_slot(yw);
    bool use_gamma = (ay >= 7 || ay <= 1);

    auto points = use_gamma ? gamma_points(theta) : beta_points(theta);
    int sx = use_gamma ? x_slots.gamma : x_slots.beta;
    int sy = use_gamma ? gamma_slot(yw, theta) : beta_slot(yw, theta);

    if (sx == sy) {
        d.same_slot = true;
        return d;
    }

    // The two slots are adjacent along the short arc; the separating point
    // is their shared endpoint: the left end of whichever slot is
    // counterclockwise of the other.
    int k = (sy == (sx + 1) % 3) ? sy : sx;
    d.u = arc_distance(yw, points[static_cast<size_t>(k)]);
    if (!(d.u <= kThetaMax + 1e-9)) {
        throw Error("separating boundary fell outside the short arc");
    }
    return d;
}

}  // namespace detail

int slot_bob_output(Angle y, const SlotHidden& hidden, IntervalMessage message,
                    RngStream& rng) {
    SlotTriple x_slots = decode_interval(message, hidden.theta);
    detail::SlotDecision d = detail::slot_bob_decision(x_slots, y, hidden.theta);
    int c = d.flipped ? 1 - hidden.c : hidden.c;
    if (d.same_slot) return c;
    double p = 1.0 - kSlotBernoulliCoeff * std::sin(d.u);
    return rng.next_bernoulli(p) ? c : 1 - c;
}

double slot_pr_equal_given_theta(Angle x, Angle y, Theta theta) {
    detail::SlotDecision d = detail::slot_bob_decision(slot_triple(x, theta), y, theta);
    double inner = d.same_slot ? 1.0 : 1.0 - kSlotBernoulliCoeff * std::sin(d.u);
    return d.flipped ? 1.0 - inner : inner;
}

SlotProtocol make_slot_protocol() {
    SlotProtocol p;
    p.budget = 4;
    p.sample_shared = [](RngStream& rng) {
        SlotHidden h = sample_slot_hidden(rng);
        return std::pair<SlotHidden, SlotHidden>(h, h);
    };
    p.direction = [](int) { return Direction::AliceToBob; };
    p.alice_send = [](const Angle& x, const SlotHidden& h, int round,
                      std::span<const int>, RngStream&) {
        int index = slot_alice_message(x, h).index;
        return (index >> (3 - round)) & 1;  // four bits, most significant first
    };
    p.bob_send = nullptr;  // one-way
    p.alice_output = [](const Angle&, const SlotHidden& h, int,
                        std::span<const int>, RngStream&) {
        return slot_alice_output(h);
    };
    p.bob_output = [](const Angle& y, const SlotHidden& h, int,
                      std::span<const int> received, RngStream& rng) {
        int index = 0;
        for (int bit : received) index = (index << 1) | bit;
        return slot_bob_output(y, h, IntervalMessage{index}, rng);
    };
    return p;
}

}  // namespace bellsim
