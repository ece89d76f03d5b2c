#pragma once

#include <utility>
#include <vector>

#include "cfroots/numbers.hpp"

namespace cfroots {

/// Continued-fraction expansion prefix: partial quotients c_0 >= 0,
/// c_i >= 1 for i > 0, with the convergent pairs (P_i, Q_i) maintained by
///   P_{i+1} = c_{i+1} P_i + P_{i-1},  Q_{i+1} = c_{i+1} Q_i + Q_{i-1},
/// seeded P_{-1} = 1, Q_{-1} = 0.
class CFExpansion {
public:
    void push_quotient(const Integer& c);

    std::size_t size() const { return quotients_.size(); }
    bool empty() const { return quotients_.empty(); }
    const std::vector<Integer>& quotients() const { return quotients_; }

    /// i-th convergent P_i/Q_i, 0-based.
    const std::pair<Integer, Integer>& convergent(std::size_t i) const {
        return convergents_.at(i);
    }
    const std::vector<std::pair<Integer, Integer>>& convergents() const { return convergents_; }
    Rational value(std::size_t i) const;

private:
    std::vector<Integer> quotients_;
    std::vector<std::pair<Integer, Integer>> convergents_;
    std::pair<Integer, Integer> prev_{Integer(1), Integer(0)};  // (P_{-1}, Q_{-1})
};

}  // namespace cfroots
