#include "bellsim/slots.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace bellsim {

Theta Theta::sample(RngStream& rng) {
    return Theta(rng.next_uniform(0.0, kThetaMax));
}

int alpha_slot(Angle x) {
    double v = x.radians();
    for (int j = 9; j >= 1; --j) {
        if (v >= alpha_point(j)) return j;
    }
    return 0;
}

std::array<Angle, 3> beta_points(Theta theta) {
    return {Angle(kBetaAnchors[0] + theta.value()),
            Angle(kBetaAnchors[1] + theta.value()),
            Angle(kBetaAnchors[2] + theta.value())};
}

std::array<Angle, 3> gamma_points(Theta theta) {
    return {Angle(kGammaAnchors[0] + theta.value()),
            Angle(kGammaAnchors[1] + theta.value()),
            Angle(kGammaAnchors[2] + theta.value())};
}

namespace {

// Slot of x in a three-arc partition whose boundary points, taken
// counterclockwise from points[0], appear in index order. Exactly one arc
// contains x; left endpoints are included.
int family_slot(Angle x, const std::array<Angle, 3>& points) {
    double t = ccw_distance(points[0], x);
    double len1 = ccw_distance(points[0], points[1]);
    double len2 = ccw_distance(points[0], points[2]);
    if (t < len1) return 0;
    if (t < len2) return 1;
    return 2;
}

}  // namespace

int beta_slot(Angle x, Theta theta) { return family_slot(x, beta_points(theta)); }

int gamma_slot(Angle x, Theta theta) { return family_slot(x, gamma_points(theta)); }

SlotTriple slot_triple(Angle x, Theta theta) {
    return SlotTriple{alpha_slot(x), beta_slot(x, theta), gamma_slot(x, theta)};
}

namespace detail {

int boundary_points(Theta theta, std::array<double, 16>& out) {
    int count = 0;
    for (int j = 0; j < 10; ++j) out[count++] = alpha_point(j);
    for (double anchor : kBetaAnchors) out[count++] = Angle(anchor + theta.value()).radians();
    for (double anchor : kGammaAnchors) out[count++] = Angle(anchor + theta.value()).radians();
    std::sort(out.begin(), out.begin() + count);
    // Shifted points can coincide with alpha points (only when theta is an
    // exact multiple of pi/5); duplicates collapse to one boundary.
    int unique = static_cast<int>(std::unique(out.begin(), out.begin() + count) - out.begin());
    return unique;
}

}  // namespace detail

IntervalMessage encode_interval(Angle x, Theta theta) {
    std::array<double, 16> bounds;
    int count = detail::boundary_points(theta, bounds);
    // bounds[0] == 0 always (alpha_0), so every x has a boundary at or
    // below it; the interval rank is the index of that boundary.
    int rank = 0;
    for (int i = count - 1; i >= 1; --i) {
        if (x.radians() >= bounds[i]) {
            rank = i;
            break;
        }
    }
    return IntervalMessage{rank};
}

SlotTriple decode_interval(IntervalMessage m, Theta theta) {
    std::array<double, 16> bounds;
    int count = detail::boundary_points(theta, bounds);
    if (m.index < 0 || m.index >= count) {
        throw InconsistentMessageError("interval index names no interval for this theta");
    }
    // The left endpoint belongs to the interval, so it carries the triple.
    Angle representative(bounds[static_cast<size_t>(m.index)]);
    return slot_triple(representative, theta);
}

int circular_slot_distance(int s1, int s2) {
    assert(s1 >= 0 && s1 < 10 && s2 >= 0 && s2 < 10);
    int d = s1 - s2;
    if (d < 0) d = -d;
    return std::min(d, 10 - d);
}

}  // namespace bellsim
