#include "bellsim/table_protocol.hpp"

#include <cmath>
#include <string>

namespace bellsim {

namespace {

constexpr double kMarginalTolerance = 1e-9;
constexpr int kCacheMaxPairs = 4096;

constexpr std::uint64_t kPrepAlice = 10;
constexpr std::uint64_t kPrepBob = 11;

int ceil_log2(int n) {
    int bits = 0;
    while ((1 << bits) < n) ++bits;
    return bits;
}

}  // namespace

FiniteScenario::FiniteScenario(int num_a, int num_b, int outcomes_a, int outcomes_b,
                               JointFn joint)
    : num_a_(num_a),
      num_b_(num_b),
      outcomes_a_(outcomes_a),
      outcomes_b_(outcomes_b),
      message_bits_(ceil_log2(num_a)),
      joint_(std::move(joint)) {
    if (num_a_ < 1 || num_b_ < 1 || outcomes_a_ < 1 || outcomes_b_ < 1) {
        throw InvalidScenarioError("scenario must have measurements and outcomes");
    }

    bool cache = static_cast<long long>(num_a_) * num_b_ <= kCacheMaxPairs;
    if (cache) cache_.reserve(static_cast<size_t>(num_a_) * static_cast<size_t>(num_b_));

    marginals_a_.reserve(static_cast<size_t>(num_a_));
    for (int ia = 0; ia < num_a_; ++ia) {
        std::vector<double> reference;
        for (int ib = 0; ib < num_b_; ++ib) {
            OutcomeJoint table = joint_(ia, ib);
            if (table.outcomes_a() != outcomes_a_ || table.outcomes_b() != outcomes_b_) {
                throw InvalidScenarioError("joint table has wrong outcome dimensions");
            }
            std::vector<double> marginal = table.marginal_a();
            if (ib == 0) {
                reference = marginal;
            } else {
                for (int a = 0; a < outcomes_a_; ++a) {
                    if (std::abs(marginal[static_cast<size_t>(a)] -
                                 reference[static_cast<size_t>(a)]) > kMarginalTolerance) {
                        throw InvalidScenarioError(
                            "Alice's marginal depends on Bob's setting");
                    }
                }
            }
            if (cache) cache_.push_back(std::move(table));
        }
        marginals_a_.push_back(std::move(reference));
    }
}

OutcomeJoint FiniteScenario::joint(int ia, int ib) const {
    if (ia < 0 || ia >= num_a_) {
        throw UnknownMeasurementError("Alice setting index out of range");
    }
    if (ib < 0 || ib >= num_b_) {
        throw UnknownMeasurementError("Bob setting index out of range");
    }
    if (!cache_.empty()) {
        return cache_[static_cast<size_t>(ia) * static_cast<size_t>(num_b_) +
                      static_cast<size_t>(ib)];
    }
    return joint_(ia, ib);
}

std::shared_ptr<const FiniteScenario> bell_scenario(const std::vector<Angle>& alice_angles,
                                                    const std::vector<Angle>& bob_angles) {
    auto joint = [alice_angles, bob_angles](int ia, int ib) {
        return as_outcome_joint(bell_joint_real(alice_angles[static_cast<size_t>(ia)],
                                                bob_angles[static_cast<size_t>(ib)]));
    };
    return std::make_shared<const FiniteScenario>(static_cast<int>(alice_angles.size()),
                                                  static_cast<int>(bob_angles.size()), 2, 2,
                                                  joint);
}

std::shared_ptr<const FiniteScenario> dj_scenario(int n) {
    if (n < 1 || n > kDjScenarioMaxN) {
        throw ResourceLimitError("scenario supports n in [1, " +
                                 std::to_string(kDjScenarioMaxN) + "]");
    }
    int num = 1 << (1 << n);  // 2^{2^n} parameter strings
    int outcomes = 1 << n;
    auto joint = [n](int ia, int ib) {
        return dj_joint(DJMeasurement::from_index(n, static_cast<std::uint64_t>(ia)),
                        DJMeasurement::from_index(n, static_cast<std::uint64_t>(ib)));
    };
    return std::make_shared<const FiniteScenario>(num, num, outcomes, outcomes, joint);
}

int sample_discrete(const std::vector<double>& probs, RngStream& rng) {
    double u = rng.next_uniform01();
    double acc = 0.0;
    int last_positive = -1;
    for (int i = 0; i < static_cast<int>(probs.size()); ++i) {
        double p = probs[static_cast<size_t>(i)];
        if (p <= 0.0) continue;
        last_positive = i;
        acc += p;
        if (u < acc) return i;
    }
    // Rounding can leave acc a hair under 1; fall back to the last
    // positive-probability outcome.
    if (last_positive < 0) throw Error("cannot sample from an all-zero distribution");
    return last_positive;
}

TableHidden::TableHidden(std::shared_ptr<const FiniteScenario> scenario,
                         std::uint64_t prep_key)
    : scenario_(std::move(scenario)), prep_key_(prep_key) {
    a_.resize(static_cast<size_t>(scenario_->num_a()));
    RngStream base(prep_key_);
    for (int ia = 0; ia < scenario_->num_a(); ++ia) {
        RngStream s = base.child(kPrepAlice).child(static_cast<std::uint64_t>(ia));
        a_[static_cast<size_t>(ia)] = sample_discrete(scenario_->marginal_a(ia), s);
    }
}

int TableHidden::outcome_a(int ia) const {
    if (ia < 0 || ia >= scenario_->num_a()) {
        throw UnknownMeasurementError("Alice setting index out of range");
    }
    return a_[static_cast<size_t>(ia)];
}

int TableHidden::outcome_b(int ia, int ib) const {
    int a = outcome_a(ia);
    OutcomeJoint table = scenario_->joint(ia, ib);
    double row_sum = 0.0;
    for (int b = 0; b < table.outcomes_b(); ++b) row_sum += table.at(a, b);
    if (row_sum <= 0.0) {
        throw InvalidScenarioError("conditional undefined: sampled outcome has zero mass");
    }
    std::vector<double> conditional(static_cast<size_t>(table.outcomes_b()));
    for (int b = 0; b < table.outcomes_b(); ++b) {
        conditional[static_cast<size_t>(b)] = table.at(a, b) / row_sum;
    }
    RngStream s = RngStream(prep_key_)
                      .child(kPrepBob)
                      .child(static_cast<std::uint64_t>(ia))
                      .child(static_cast<std::uint64_t>(ib));
    return sample_discrete(conditional, s);
}

TableHidden prepare_table(std::shared_ptr<const FiniteScenario> scenario, RngStream& rng) {
    return TableHidden(std::move(scenario), rng.next_u64());
}

TableProtocol make_table_protocol(std::shared_ptr<const FiniteScenario> scenario) {
    TableProtocol p;
    p.budget = scenario->message_bits();
    int num_a = scenario->num_a();
    int num_b = scenario->num_b();
    int width = p.budget;
    p.sample_shared = [scenario](RngStream& rng) {
        TableHidden h = prepare_table(scenario, rng);
        return std::pair<TableHidden, TableHidden>(h, h);
    };
    p.direction = [](int) { return Direction::AliceToBob; };
    p.alice_send = [num_a, width](const int& ia, const TableHidden&, int round,
                                  std::span<const int>, RngStream&) {
        if (ia < 0 || ia >= num_a) {
            throw UnknownMeasurementError("Alice setting index out of range");
        }
        return (ia >> (width - 1 - round)) & 1;
    };
    p.bob_send = nullptr;  // one-way
    p.alice_output = [](const int& ia, const TableHidden& h, int, std::span<const int>,
                        RngStream&) { return h.outcome_a(ia); };
    p.bob_output = [num_b](const int& ib, const TableHidden& h, int,
                           std::span<const int> received, RngStream&) {
        if (ib < 0 || ib >= num_b) {
            throw UnknownMeasurementError("Bob setting index out of range");
        }
        int ia = 0;
        for (int bit : received) ia = (ia << 1) | bit;
        return h.outcome_b(ia, ib);
    };
    return p;
}

}  // namespace bellsim
