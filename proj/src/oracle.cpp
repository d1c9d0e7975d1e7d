#include "bellsim/oracle.hpp"

#include <cmath>

namespace bellsim {

namespace {

double cos_sq(double t) {
    double c = std::cos(t);
    return c * c;
}

double sin_sq(double t) {
    double s = std::sin(t);
    return s * s;
}

}  // namespace

JointDistribution2 bell_joint_real(Angle x, Angle y) {
    double half = 0.5 * (x.radians() - y.radians());
    double eq = cos_sq(half);
    double ne = sin_sq(half);
    return JointDistribution2{0.5 * eq, 0.5 * ne, 0.5 * ne, 0.5 * eq};
}

double pr_equal_general(const GeneralMeasurement& a, const GeneralMeasurement& b) {
    double phase_sum = 0.5 * (a.phase.radians() + b.phase.radians());
    double diff = 0.5 * (a.angle.radians() - b.angle.radians());
    double sum = 0.5 * (a.angle.radians() + b.angle.radians());
    return cos_sq(phase_sum) * cos_sq(diff) + sin_sq(phase_sum) * cos_sq(sum);
}

JointDistribution2 bell_joint_general(const GeneralMeasurement& a,
                                      const GeneralMeasurement& b) {
    double eq = pr_equal_general(a, b);
    double ne = 1.0 - eq;
    return JointDistribution2{0.5 * eq, 0.5 * ne, 0.5 * ne, 0.5 * eq};
}

}  // namespace bellsim
