#ifndef BELLSIM_TRANSCRIPT_HPP
#define BELLSIM_TRANSCRIPT_HPP

#include <vector>

#include "bellsim/errors.hpp"

namespace bellsim {

enum class Direction { AliceToBob, BobToAlice };

struct TranscriptEntry {
    Direction direction;
    int bit;  // 0 or 1

    friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) = default;
};

// Ordered record of every communicated bit. A transcript constructed with a
// budget refuses to grow past it.
class Transcript {
public:
    Transcript() : budget_(-1) {}

    explicit Transcript(int budget) : budget_(budget) {
        if (budget >= 0) entries_.reserve(static_cast<size_t>(budget));
    }

    void append(Direction direction, int bit) {
        if (bit != 0 && bit != 1) {
            throw Error("transcript bits must be 0 or 1");
        }
        if (budget_ >= 0 && static_cast<int>(entries_.size()) >= budget_) {
            throw BudgetViolationError("communication budget exhausted");
        }
        entries_.push_back(TranscriptEntry{direction, bit});
    }

    int size() const { return static_cast<int>(entries_.size()); }
    int budget() const { return budget_; }
    const std::vector<TranscriptEntry>& entries() const { return entries_; }

    bool all_from_alice() const {
        for (const auto& e : entries_) {
            if (e.direction != Direction::AliceToBob) return false;
        }
        return true;
    }

    friend bool operator==(const Transcript& lhs, const Transcript& rhs) {
        return lhs.entries_ == rhs.entries_;
    }

private:
    int budget_;
    std::vector<TranscriptEntry> entries_;
};

inline int bits_used(const Transcript& t) { return t.size(); }

}  // namespace bellsim

#endif  // BELLSIM_TRANSCRIPT_HPP
