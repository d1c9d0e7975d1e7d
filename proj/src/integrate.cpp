#include "bellsim/integrate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "bellsim/slot_protocol.hpp"
#include "bellsim/slots.hpp"

namespace bellsim {

namespace {

constexpr double kBreakpointDedup = 1e-13;

}  // namespace

double integrate_slot_pr_equal(Angle x, Angle y) {
    // The far-slot flip and the active family depend on the measurements
    // only, never on theta.
    bool flipped = circular_slot_distance(alpha_slot(x), alpha_slot(y)) > 2;
    Angle yw = flipped ? y.antipode() : y;
    int ay = alpha_slot(yw);
    bool use_gamma = (ay >= 7 || ay <= 1);
    const std::array<double, 3>& anchors = use_gamma ? kGammaAnchors : kBetaAnchors;

    // Slot memberships change exactly where a family point crosses x or
    // the working y.
    std::vector<double> cuts{0.0, kThetaMax};
    for (double anchor : anchors) {
        for (double pos : {x.radians(), yw.radians()}) {
            double t = Angle(pos - anchor).radians();
            if (t < kThetaMax) cuts.push_back(t);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) { return b - a < kBreakpointDedup; }),
               cuts.end());
    if (cuts.back() < kThetaMax - kBreakpointDedup) cuts.push_back(kThetaMax);

    double total = 0.0;
    for (size_t piece = 0; piece + 1 < cuts.size(); ++piece) {
        double t0 = cuts[piece];
        double t1 = cuts[piece + 1];
        double width = t1 - t0;
        if (width <= 0.0) continue;
        Theta mid(0.5 * (t0 + t1));

        int sx = use_gamma ? gamma_slot(x, mid) : beta_slot(x, mid);
        int sy = use_gamma ? gamma_slot(yw, mid) : beta_slot(yw, mid);

        double inner;
        if (sx == sy) {
            inner = width;
        } else {
            int k = (sy == (sx + 1) % 3) ? sy : sx;
            double anchor = anchors[static_cast<size_t>(k)];
            // u(theta) = |yw - (anchor + theta)| on the circle; within one
            // piece the sign of the difference is fixed, so u is linear
            // with slope +-1.
            double g0 = signed_circular_diff(yw.radians(), anchor + t0);
            double g1 = signed_circular_diff(yw.radians(), anchor + t1);
            double gm = signed_circular_diff(yw.radians(), anchor + mid.value());
            double u0 = std::abs(g0);
            double u1 = std::abs(g1);
            double slope = gm > 0.0 ? -1.0 : 1.0;
            if (std::abs((u1 - u0) - slope * width) > 1e-9) {
                throw Error("slot boundary distance is not linear across a piece");
            }
            // integral of sin(u(theta)) with u = u0 + slope*(theta - t0)
            double sin_integral = slope * (std::cos(u0) - std::cos(u1));
            inner = width - kSlotBernoulliCoeff * sin_integral;
        }

        total += flipped ? width - inner : inner;
    }
    return total / kThetaMax;
}

}  // namespace bellsim
