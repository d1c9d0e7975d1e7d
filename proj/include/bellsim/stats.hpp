#ifndef BELLSIM_STATS_HPP
#define BELLSIM_STATS_HPP

#include <cstdint>
#include <vector>

#include "bellsim/engine.hpp"

namespace bellsim {

// Outcome-pair counts collected over independent protocol runs.
struct EmpiricalJoint {
    int ka = 0;
    int kb = 0;
    std::vector<long long> counts;  // row-major (a, b)
    long long total = 0;
    std::uint64_t seed = 0;
    // Runs whose transcript deviated from the declared budget or round
    // directions; always zero for a conforming protocol.
    long long budget_violations = 0;

    long long& at(int a, int b) { return counts[static_cast<size_t>(a) * kb + b]; }
    long long at(int a, int b) const { return counts[static_cast<size_t>(a) * kb + b]; }
};

// N independent runs on (x, y), each with its own derived stream.
template <class MeasA, class MeasB, class HiddenA, class HiddenB>
EmpiricalJoint empirical_joint(const ProtocolSpec<MeasA, MeasB, HiddenA, HiddenB>& protocol,
                               const MeasA& x, const MeasB& y, int ka, int kb,
                               long long n_runs, std::uint64_t seed) {
    EmpiricalJoint e;
    e.ka = ka;
    e.kb = kb;
    e.counts.assign(static_cast<size_t>(ka) * static_cast<size_t>(kb), 0);
    e.seed = seed;
    for (long long i = 0; i < n_runs; ++i) {
        std::uint64_t run_seed =
            RngStream::derive_key(seed, {kStreamRun, static_cast<std::uint64_t>(i)});
        auto outcome = run(protocol, x, y, run_seed);
        bool conforming = outcome.transcript.size() == protocol.budget;
        if (conforming) {
            const auto& entries = outcome.transcript.entries();
            for (int r = 0; r < protocol.budget; ++r) {
                if (entries[static_cast<size_t>(r)].direction != protocol.direction(r)) {
                    conforming = false;
                    break;
                }
            }
        }
        if (!conforming) ++e.budget_violations;
        ++e.at(outcome.a, outcome.b);
        ++e.total;
    }
    return e;
}

struct GofReport {
    double statistic = 0.0;
    int degrees_of_freedom = 0;
    double p_value = 1.0;
    // An outcome of exactly zero expected probability occurred. Under an
    // exact simulation this must never happen, so it fails the test
    // outright regardless of the statistic.
    bool impossible_outcome = false;
    bool pass = false;
};

// Pearson goodness-of-fit of observed counts against exact cell
// probabilities. Zero-probability cells must hold zero counts; the
// statistic runs over the positive cells with dof = (#positive - 1).
GofReport chi_square_gof(const EmpiricalJoint& observed,
                         const std::vector<double>& expected, double significance);

// Upper-tail chi-square p-value, Q(dof/2, statistic/2).
double chi_square_p_value(double statistic, int degrees_of_freedom);

// Regularized upper incomplete gamma Q(a, x): power series below x < a+1,
// Lentz continued fraction above; good to ~1e-10 over the ranges used here.
double regularized_gamma_q(double a, double x);

}  // namespace bellsim

#endif  // BELLSIM_STATS_HPP
