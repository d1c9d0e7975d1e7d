#ifndef BELLSIM_JOINT_HPP
#define BELLSIM_JOINT_HPP

#include <array>
#include <vector>

namespace bellsim {

// Joint outcome distribution of a bipartite two-outcome measurement,
// Pr[a = i, b = j] in pij.
struct JointDistribution2 {
    double p00 = 0.0;
    double p01 = 0.0;
    double p10 = 0.0;
    double p11 = 0.0;

    double pr_equal() const { return p00 + p11; }
    double pr_a(int a) const { return a == 0 ? p00 + p01 : p10 + p11; }
    double pr_b(int b) const { return b == 0 ? p00 + p10 : p01 + p11; }

    // Row-major (a, b) order, matching EmpiricalJoint cell layout.
    std::array<double, 4> probs() const { return {p00, p01, p10, p11}; }
};

// Joint outcome table of a bipartite measurement with finitely many
// outcomes per side; row-major over (a, b).
class OutcomeJoint {
public:
    OutcomeJoint(int outcomes_a, int outcomes_b)
        : ka_(outcomes_a), kb_(outcomes_b),
          p_(static_cast<size_t>(outcomes_a) * static_cast<size_t>(outcomes_b), 0.0) {}

    int outcomes_a() const { return ka_; }
    int outcomes_b() const { return kb_; }

    double& at(int a, int b) { return p_[static_cast<size_t>(a) * kb_ + b]; }
    double at(int a, int b) const { return p_[static_cast<size_t>(a) * kb_ + b]; }

    const std::vector<double>& cells() const { return p_; }

    double total() const {
        double s = 0.0;
        for (double v : p_) s += v;
        return s;
    }

    double pr_equal() const {
        int k = ka_ < kb_ ? ka_ : kb_;
        double s = 0.0;
        for (int i = 0; i < k; ++i) s += at(i, i);
        return s;
    }

    std::vector<double> marginal_a() const {
        std::vector<double> m(ka_, 0.0);
        for (int a = 0; a < ka_; ++a) {
            for (int b = 0; b < kb_; ++b) m[a] += at(a, b);
        }
        return m;
    }

    std::vector<double> marginal_b() const {
        std::vector<double> m(kb_, 0.0);
        for (int a = 0; a < ka_; ++a) {
            for (int b = 0; b < kb_; ++b) m[b] += at(a, b);
        }
        return m;
    }

private:
    int ka_;
    int kb_;
    std::vector<double> p_;
};

inline OutcomeJoint as_outcome_joint(const JointDistribution2& j) {
    OutcomeJoint t(2, 2);
    t.at(0, 0) = j.p00;
    t.at(0, 1) = j.p01;
    t.at(1, 0) = j.p10;
    t.at(1, 1) = j.p11;
    return t;
}

}  // namespace bellsim

#endif  // BELLSIM_JOINT_HPP
