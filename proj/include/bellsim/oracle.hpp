#ifndef BELLSIM_ORACLE_HPP
#define BELLSIM_ORACLE_HPP

#include "bellsim/angle.hpp"
#include "bellsim/joint.hpp"

namespace bellsim {

// Most general von Neumann measurement on one qubit: a circle angle plus a
// complex phase. Zero phase reduces to the real (planar) measurement.
struct GeneralMeasurement {
    Angle angle;
    Angle phase;
};

// Joint outcome distribution when both halves of the maximally correlated
// two-qubit state are measured with real (phase-free) operators at angles
// x and y:
//   Pr[a = b] split evenly over (0,0) and (1,1) equals cos^2((x-y)/2),
//   Pr[a != b] split evenly equals sin^2((x-y)/2).
JointDistribution2 bell_joint_real(Angle x, Angle y);

// Same state under general measurements. The equal-outcome mass is
//   cos^2((x'+y')/2) cos^2((x-y)/2) + sin^2((x'+y')/2) cos^2((x+y)/2),
// and both single-party marginals are uniform, which pins the full table:
// the equal and unequal masses each split evenly over their two cells.
JointDistribution2 bell_joint_general(const GeneralMeasurement& a,
                                      const GeneralMeasurement& b);

double pr_equal_general(const GeneralMeasurement& a, const GeneralMeasurement& b);

}  // namespace bellsim

#endif  // BELLSIM_ORACLE_HPP
