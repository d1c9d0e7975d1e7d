#ifndef BELLSIM_ANGLE_HPP
#define BELLSIM_ANGLE_HPP

#include <cmath>

#include "bellsim/errors.hpp"

namespace bellsim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// A point on the unit circle, stored canonically in [0, 2*pi).
// Construction normalizes; NaN/infinity is rejected.
class Angle {
public:
    Angle() : value_(0.0) {}

    explicit Angle(double raw) {
        if (!std::isfinite(raw)) {
            throw InvalidAngleError("angle must be finite");
        }
        double v = std::fmod(raw, kTwoPi);
        if (v < 0.0) v += kTwoPi;
        // fmod can land exactly on 2*pi after the wrap-around add.
        if (v >= kTwoPi) v = 0.0;
        value_ = v;
    }

    double radians() const { return value_; }

    Angle shifted(double delta) const { return Angle(value_ + delta); }
    Angle antipode() const { return Angle(value_ + kPi); }
    Angle negated() const { return Angle(-value_); }

    friend bool operator==(Angle a, Angle b) { return a.value_ == b.value_; }
    friend bool operator!=(Angle a, Angle b) { return a.value_ != b.value_; }

private:
    double value_;
};

inline Angle normalize(double raw) { return Angle(raw); }

// Counterclockwise distance from `from` to `to`, in [0, 2*pi).
inline double ccw_distance(Angle from, Angle to) {
    double d = to.radians() - from.radians();
    if (d < 0.0) d += kTwoPi;
    if (d >= kTwoPi) d = 0.0;
    return d;
}

// Length of the shorter arc between two angles, in [0, pi].
inline double arc_distance(Angle a, Angle b) {
    double d = ccw_distance(a, b);
    return d <= kPi ? d : kTwoPi - d;
}

// Signed circular difference a - b folded into (-pi, pi].
inline double signed_circular_diff(double a, double b) {
    double d = std::fmod(a - b, kTwoPi);
    if (d > kPi) d -= kTwoPi;
    if (d <= -kPi) d += kTwoPi;
    return d;
}

}  // namespace bellsim

#endif  // BELLSIM_ANGLE_HPP
