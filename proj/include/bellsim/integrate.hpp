#ifndef BELLSIM_INTEGRATE_HPP
#define BELLSIM_INTEGRATE_HPP

#include "bellsim/angle.hpp"

namespace bellsim {

// Exact average over theta ~ U[0, 3*pi/5) of the probability that the slot
// protocol's outputs agree at measurements (x, y). The integrand is
// piecewise either constant or 1 - (3*pi/10) sin(linear in theta);
// breakpoints are the finitely many theta where a slot membership of x or
// of the working y changes, and each piece integrates in closed form. The
// protocol is exact iff this equals cos^2((x-y)/2) for all x, y.
double integrate_slot_pr_equal(Angle x, Angle y);

}  // namespace bellsim

#endif  // BELLSIM_INTEGRATE_HPP
