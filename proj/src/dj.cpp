#include "bellsim/dj.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace bellsim {

DJMeasurement::DJMeasurement(int n, std::vector<std::uint8_t> bits) : n_(n), bits_(std::move(bits)) {
    if (n < 1) {
        throw DimensionMismatchError("measurement needs n >= 1");
    }
    if (bits_.size() != (std::size_t{1} << n)) {
        throw DimensionMismatchError("parameter bitstring must have length 2^n");
    }
    for (auto& b : bits_) b = b ? 1 : 0;
}

DJMeasurement DJMeasurement::from_index(int n, std::uint64_t index) {
    if (n < 1 || n > 6) {
        throw ResourceLimitError("index form supports n in [1, 6]");
    }
    int len = 1 << n;
    std::vector<std::uint8_t> bits(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) bits[static_cast<size_t>(i)] = (index >> i) & 1u;
    return DJMeasurement(n, std::move(bits));
}

std::uint64_t DJMeasurement::to_index() const {
    if (n_ > 6) {
        throw ResourceLimitError("index form supports n in [1, 6]");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < length(); ++i) {
        v |= static_cast<std::uint64_t>(bits_[static_cast<size_t>(i)]) << i;
    }
    return v;
}

int hamming_distance(const DJMeasurement& za, const DJMeasurement& zb) {
    if (za.n() != zb.n()) {
        throw DimensionMismatchError("measurements act on different numbers of pairs");
    }
    int d = 0;
    for (int i = 0; i < za.length(); ++i) d += za.bit(i) != zb.bit(i);
    return d;
}

OutcomeJoint dj_joint(const DJMeasurement& za, const DJMeasurement& zb) {
    if (za.n() != zb.n()) {
        throw DimensionMismatchError("measurements act on different numbers of pairs");
    }
    int n = za.n();
    if (n > kDjJointMaxN) {
        throw ResourceLimitError("joint table capped at n <= " + std::to_string(kDjJointMaxN));
    }
    int k = 1 << n;
    // Pr[(j, k)] = 2^{-3n} (sum_i (-1)^{za_i + zb_i + i.(j xor k)})^2,
    // with i.s the mod-2 inner product of the index bitstrings. The signed
    // sum is an integer, so it is computed exactly.
    double scale = std::ldexp(1.0, -3 * n);
    OutcomeJoint table(k, k);
    for (int j = 0; j < k; ++j) {
        for (int m = 0; m < k; ++m) {
            unsigned s = static_cast<unsigned>(j ^ m);
            long long acc = 0;
            for (int i = 0; i < k; ++i) {
                int parity = (za.bit(i) + zb.bit(i) +
                              std::popcount(static_cast<unsigned>(i) & s)) & 1;
                acc += parity ? -1 : 1;
            }
            double amp_sum = static_cast<double>(acc);
            table.at(j, m) = scale * amp_sum * amp_sum;
        }
    }
    return table;
}

double dj_pr_equal(const DJMeasurement& za, const DJMeasurement& zb) {
    int d = hamming_distance(za, zb);
    double t = 1.0 - 2.0 * static_cast<double>(d) / static_cast<double>(za.length());
    return t * t;
}

}  // namespace bellsim
