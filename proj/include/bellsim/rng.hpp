#ifndef BELLSIM_RNG_HPP
#define BELLSIM_RNG_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace bellsim {

// Counter-based pseudorandom stream with explicit key derivation.
//
// Output function (fully specified so independent reimplementations agree):
//   out(i) = mix64(key + i * 0x9e3779b97f4a7c15)   for i = 1, 2, 3, ...
// where mix64 is the SplitMix64 finalizer:
//   z ^= z >> 30; z *= 0xbf58476d1ce4e5b9;
//   z ^= z >> 27; z *= 0x94d049bb133111eb;
//   z ^= z >> 31;
// Key derivation folds labels one at a time:
//   key(master)            = mix64(master ^ 0x6a09e667f3bcc909)
//   key(k, label)          = mix64(k ^ mix64(label + 0x9e3779b97f4a7c15))
// Uniform doubles use the top 53 bits: (out >> 11) * 2^-53, giving values
// in [0, 1). Scaled uniforms are clamped strictly below the upper bound.
class RngStream {
public:
    explicit RngStream(std::uint64_t key) : key_(key), counter_(0) {}

    // Stream for (master_seed, labels); same inputs give the same stream.
    static RngStream derive(std::uint64_t master_seed,
                            std::initializer_list<std::uint64_t> labels) {
        std::uint64_t k = derive_key(master_seed, labels);
        return RngStream(k);
    }

    static std::uint64_t derive_key(std::uint64_t master_seed,
                                    std::initializer_list<std::uint64_t> labels) {
        std::uint64_t k = mix64(master_seed ^ 0x6a09e667f3bcc909ULL);
        for (std::uint64_t label : labels) {
            k = fold_label(k, label);
        }
        return k;
    }

    // Child stream for one more label, leaving this stream untouched.
    RngStream child(std::uint64_t label) const {
        return RngStream(fold_label(key_, label));
    }

    std::uint64_t key() const { return key_; }

    std::uint64_t next_u64() {
        ++counter_;
        return mix64(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform in [lo, hi); the product is clamped below hi so rounding can
    // never produce the excluded endpoint.
    double next_uniform(double lo, double hi) {
        double v = lo + next_uniform01() * (hi - lo);
        if (v >= hi) v = std::nexttoward(hi, lo);
        if (v < lo) v = lo;
        return v;
    }

    bool next_bernoulli(double p) { return next_uniform01() < p; }

    int next_bit() { return static_cast<int>(next_u64() >> 63); }

    // Unbiased integer in [0, n) by masked rejection.
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
        for (;;) {
            std::uint64_t v = next_u64() & mask;
            if (v < n) return v;
        }
    }

    static std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xbf58476d1ce4e5b9ULL;
        z ^= z >> 27;
        z *= 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return z;
    }

private:
    static std::uint64_t fold_label(std::uint64_t key, std::uint64_t label) {
        return mix64(key ^ mix64(label + 0x9e3779b97f4a7c15ULL));
    }

    std::uint64_t key_;
    std::uint64_t counter_;
};

}  // namespace bellsim

#endif  // BELLSIM_RNG_HPP
