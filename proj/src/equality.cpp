#include "bellsim/equality.hpp"

#include <numeric>

namespace bellsim {

std::vector<PromisePair> enumerate_promise_pairs(int n) {
    if (n < 1 || n > 2) {
        throw ResourceLimitError("exhaustive enumeration only for n <= 2");
    }
    int len = 1 << n;
    int count = 1 << len;  // 2^{2^n} strings
    int half = 1 << (n - 1);

    std::vector<PromisePair> pairs;
    for (int xi = 0; xi < count; ++xi) {
        DJMeasurement x = DJMeasurement::from_index(n, static_cast<std::uint64_t>(xi));
        pairs.push_back(PromisePair{x, x, PromiseKind::Equal});
    }
    for (int xi = 0; xi < count; ++xi) {
        DJMeasurement x = DJMeasurement::from_index(n, static_cast<std::uint64_t>(xi));
        for (int yi = 0; yi < count; ++yi) {
            DJMeasurement y = DJMeasurement::from_index(n, static_cast<std::uint64_t>(yi));
            if (hamming_distance(x, y) == half) {
                pairs.push_back(PromisePair{x, y, PromiseKind::HalfDistance});
            }
        }
    }
    return pairs;
}

std::vector<PromisePair> sample_promise_pairs(int n, int count, std::uint64_t seed) {
    if (n < 1) {
        throw ResourceLimitError("need n >= 1");
    }
    int len = 1 << n;
    int half = 1 << (n - 1);
    RngStream rng = RngStream::derive(seed, {0x70726f6d /* "prom" */});

    std::vector<PromisePair> pairs;
    pairs.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::vector<std::uint8_t> xbits(static_cast<size_t>(len));
        for (auto& b : xbits) b = rng.next_bernoulli(0.5) ? 1 : 0;
        DJMeasurement x(n, xbits);

        if (rng.next_bernoulli(0.5)) {
            pairs.push_back(PromisePair{x, x, PromiseKind::Equal});
            continue;
        }

        // Flip exactly half of the positions: partial Fisher-Yates.
        std::vector<int> positions(static_cast<size_t>(len));
        std::iota(positions.begin(), positions.end(), 0);
        std::vector<std::uint8_t> ybits = xbits;
        for (int j = 0; j < half; ++j) {
            int pick = j + static_cast<int>(rng.next_below(
                               static_cast<std::uint64_t>(len - j)));
            std::swap(positions[static_cast<size_t>(j)], positions[static_cast<size_t>(pick)]);
            auto& bit = ybits[static_cast<size_t>(positions[static_cast<size_t>(j)])];
            bit = bit ? 0 : 1;
        }
        pairs.push_back(PromisePair{x, DJMeasurement(n, ybits), PromiseKind::HalfDistance});
    }
    return pairs;
}

}  // namespace bellsim
