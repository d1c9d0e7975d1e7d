#ifndef BELLSIM_SLOTS_HPP
#define BELLSIM_SLOTS_HPP

#include <array>
#include <cstdint>

#include "bellsim/angle.hpp"
#include "bellsim/rng.hpp"

namespace bellsim {

// The circle is partitioned three ways:
//   - ten fixed alpha-slots [j*pi/5, (j+1)*pi/5),
//   - three beta-slots anchored at {0, 3*pi/5, 6*pi/5} shifted by theta,
//   - three gamma-slots anchored at {pi, 8*pi/5, pi/5} shifted by theta.
// All intervals are half-open: a boundary angle belongs to the slot on its
// right. Overlaying all three families cuts the circle into at most sixteen
// intervals, so one slot triple fits in a four-bit message.

inline constexpr double kAlphaStep = kPi / 5.0;
inline constexpr double kThetaMax = 3.0 * kPi / 5.0;

inline constexpr std::array<double, 3> kBetaAnchors = {0.0, 3.0 * kPi / 5.0,
                                                       6.0 * kPi / 5.0};
inline constexpr std::array<double, 3> kGammaAnchors = {kPi, 8.0 * kPi / 5.0,
                                                        kPi / 5.0};

// Shared hidden shift, uniform on [0, 3*pi/5).
class Theta {
public:
    Theta() : value_(0.0) {}

    explicit Theta(double value) {
        if (!(value >= 0.0 && value < kThetaMax)) {
            throw InvalidAngleError("theta must lie in [0, 3*pi/5)");
        }
        value_ = value;
    }

    static Theta sample(RngStream& rng);

    double value() const { return value_; }

private:
    double value_;
};

struct SlotTriple {
    int alpha = 0;  // 0..9
    int beta = 0;   // 0..2
    int gamma = 0;  // 0..2

    friend bool operator==(const SlotTriple&, const SlotTriple&) = default;
};

// Index of one of the sixteen intervals of the overlaid partitions; the
// protocol's four-bit message.
struct IntervalMessage {
    int index = 0;  // 0..15

    friend bool operator==(const IntervalMessage&, const IntervalMessage&) = default;
};

inline double alpha_point(int j) { return static_cast<double>(j) * kAlphaStep; }

int alpha_slot(Angle x);

// The three boundary points of each shifted family, normalized mod 2*pi.
std::array<Angle, 3> beta_points(Theta theta);
std::array<Angle, 3> gamma_points(Theta theta);

int beta_slot(Angle x, Theta theta);
int gamma_slot(Angle x, Theta theta);

SlotTriple slot_triple(Angle x, Theta theta);

// Rank of the interval containing x among the distinct boundary points of
// all three families, sorted counterclockwise from 0. Inverse available to
// anyone who knows theta.
IntervalMessage encode_interval(Angle x, Theta theta);
SlotTriple decode_interval(IntervalMessage m, Theta theta);

// min(|s1-s2|, 10-|s1-s2|) on the 10-cycle of alpha-slots.
int circular_slot_distance(int s1, int s2);

namespace detail {
// Distinct boundary angles for the given theta, sorted ascending. Returns
// the count (16 generically; 10 when theta is a multiple of pi/5 and the
// shifted families land exactly on alpha points).
int boundary_points(Theta theta, std::array<double, 16>& out);
}  // namespace detail

}  // namespace bellsim

#endif  // BELLSIM_SLOTS_HPP
