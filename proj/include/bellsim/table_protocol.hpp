#ifndef BELLSIM_TABLE_PROTOCOL_HPP
#define BELLSIM_TABLE_PROTOCOL_HPP

#include <functional>
#include <memory>
#include <vector>

#include "bellsim/dj.hpp"
#include "bellsim/engine.hpp"
#include "bellsim/joint.hpp"
#include "bellsim/oracle.hpp"

namespace bellsim {

// A finite bipartite measurement scenario: index-addressed measurement sets
// and the exact joint outcome table for every pair. Valid scenarios have an
// Alice marginal that does not depend on Bob's setting; construction
// verifies this (tolerance 1e-9) and rejects violators.
class FiniteScenario {
public:
    using JointFn = std::function<OutcomeJoint(int, int)>;

    FiniteScenario(int num_a, int num_b, int outcomes_a, int outcomes_b, JointFn joint);

    int num_a() const { return num_a_; }
    int num_b() const { return num_b_; }
    int outcomes_a() const { return outcomes_a_; }
    int outcomes_b() const { return outcomes_b_; }

    // Message width of the index protocol: ceil(log2(num_a)).
    int message_bits() const { return message_bits_; }

    OutcomeJoint joint(int ia, int ib) const;

    // Alice's setting-independent outcome marginal.
    const std::vector<double>& marginal_a(int ia) const {
        return marginals_a_[static_cast<size_t>(ia)];
    }

private:
    int num_a_;
    int num_b_;
    int outcomes_a_;
    int outcomes_b_;
    int message_bits_;
    JointFn joint_;
    std::vector<std::vector<double>> marginals_a_;
    std::vector<OutcomeJoint> cache_;  // all pairs, kept only for small scenarios
};

// Scenario over real measurements at the given angles.
std::shared_ptr<const FiniteScenario> bell_scenario(const std::vector<Angle>& alice_angles,
                                                    const std::vector<Angle>& bob_angles);

// Scenario whose measurements are all 2^{2^n} coherent-measurement
// parameters on each side (n <= 3; the next size has 65536 settings).
std::shared_ptr<const FiniteScenario> dj_scenario(int n);

inline constexpr int kDjScenarioMaxN = 3;

// Hidden variables of the index protocol: one pre-sampled outcome per
// Alice setting, and for every setting pair a Bob outcome drawn from the
// conditional given Alice's. Bob-side draws are materialized on demand
// from per-pair derived streams, which is bit-identical to sampling them
// all during preparation.
class TableHidden {
public:
    TableHidden(std::shared_ptr<const FiniteScenario> scenario, std::uint64_t prep_key);

    int outcome_a(int ia) const;
    int outcome_b(int ia, int ib) const;

private:
    std::shared_ptr<const FiniteScenario> scenario_;
    std::uint64_t prep_key_;
    std::vector<int> a_;
};

TableHidden prepare_table(std::shared_ptr<const FiniteScenario> scenario, RngStream& rng);

// Draws one outcome from `probs` (assumed to sum to ~1) by inverse CDF.
int sample_discrete(const std::vector<double>& probs, RngStream& rng);

using TableProtocol = ProtocolSpec<int, int, TableHidden, TableHidden>;

// The log2(|M_A|)-bit protocol: Alice sends her setting index (fixed-width,
// most significant bit first) and outputs her pre-sampled outcome; Bob
// outputs the pre-sampled outcome for the received pair.
TableProtocol make_table_protocol(std::shared_ptr<const FiniteScenario> scenario);

}  // namespace bellsim

#endif  // BELLSIM_TABLE_PROTOCOL_HPP
