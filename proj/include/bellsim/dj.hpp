#ifndef BELLSIM_DJ_HPP
#define BELLSIM_DJ_HPP

#include <cstdint>
#include <vector>

#include "bellsim/errors.hpp"
#include "bellsim/joint.hpp"

namespace bellsim {

// Coherent measurement on n qubit pairs, parametrized by a bitstring z of
// length 2^n: phase-flip |i> by (-1)^{z_i}, apply the n-qubit Hadamard
// transform, then read out in the computational basis.
class DJMeasurement {
public:
    DJMeasurement(int n, std::vector<std::uint8_t> bits);

    // Bits unpacked from an integer, z_i = bit i of `index`. Valid for
    // n <= 6 (2^n index bits).
    static DJMeasurement from_index(int n, std::uint64_t index);

    int n() const { return n_; }
    int length() const { return 1 << n_; }
    int bit(int i) const { return bits_[static_cast<size_t>(i)]; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    // Packs the bits back into an integer (n <= 6).
    std::uint64_t to_index() const;

private:
    int n_;
    std::vector<std::uint8_t> bits_;
};

int hamming_distance(const DJMeasurement& za, const DJMeasurement& zb);

// Exact joint distribution of the two 2^n-valued outcomes, by direct
// summation of the 2^n-term amplitude for every outcome pair. Capped at
// n <= 6 (the table has 2^{2n} cells).
OutcomeJoint dj_joint(const DJMeasurement& za, const DJMeasurement& zb);

// Closed form for the equal-outcome probability, (1 - 2d/2^n)^2 with d the
// Hamming distance between the parameters. No size cap.
double dj_pr_equal(const DJMeasurement& za, const DJMeasurement& zb);

inline constexpr int kDjJointMaxN = 6;

}  // namespace bellsim

#endif  // BELLSIM_DJ_HPP
