#ifndef BELLSIM_SLOT_PROTOCOL_HPP
#define BELLSIM_SLOT_PROTOCOL_HPP

#include "bellsim/engine.hpp"
#include "bellsim/slots.hpp"

namespace bellsim {

// Four-bit one-way protocol reproducing the real-measurement correlations
// exactly, for arbitrary measurement angles. Shared hidden variables: a
// uniform bit c and a uniform shift theta in [0, 3*pi/5). Alice sends the
// index of the sixteenth of the circle containing her angle and outputs c;
// Bob combines his angle, the decoded slots, and one private coin.
struct SlotHidden {
    int c = 0;
    Theta theta;
};

inline constexpr double kSlotBernoulliCoeff = 3.0 * kPi / 10.0;

// Draw order: c first, then theta.
SlotHidden sample_slot_hidden(RngStream& rng);

IntervalMessage slot_alice_message(Angle x, const SlotHidden& hidden);

inline int slot_alice_output(const SlotHidden& hidden) { return hidden.c; }

int slot_bob_output(Angle y, const SlotHidden& hidden, IntervalMessage message,
                    RngStream& rng);

// Probability that Bob's output equals Alice's, conditioned on theta
// (independent of c). Averaging this over theta uniform on [0, 3*pi/5)
// yields cos^2((x-y)/2); the exact average lives in integrate.hpp.
double slot_pr_equal_given_theta(Angle x, Angle y, Theta theta);

namespace detail {

// Everything Bob derives before his final coin flip.
struct SlotDecision {
    bool flipped = false;    // output bit negated (far-slot case)
    bool same_slot = false;  // x and the working y share the active slot
    double u = 0.0;          // arc distance from working y to the separating
                             // boundary; meaningful when !same_slot
};

SlotDecision slot_bob_decision(const SlotTriple& x_slots, Angle y, Theta theta);

}  // namespace detail

using SlotProtocol = ProtocolSpec<Angle, Angle, SlotHidden, SlotHidden>;

SlotProtocol make_slot_protocol();

}  // namespace bellsim

#endif  // BELLSIM_SLOT_PROTOCOL_HPP
