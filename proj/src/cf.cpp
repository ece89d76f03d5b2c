#include "cfroots/cf.hpp"

#include <stdexcept>

namespace cfroots {

void CFExpansion::push_quotient(const Integer& c) {
    if (quotients_.empty()) {
        if (sgn(c) < 0) throw std::invalid_argument("first partial quotient must be >= 0");
    } else if (c < 1) {
        throw std::invalid_argument("partial quotients after the first must be >= 1");
    }
    std::pair<Integer, Integer> cur;
    if (convergents_.empty()) {
        cur = {c, Integer(1)};  // P_0 = c_0, Q_0 = 1
    } else {
        const auto& last = convergents_.back();
        cur = {c * last.first + prev_.first, c * last.second + prev_.second};
        prev_ = last;
    }
    quotients_.push_back(c);
    convergents_.push_back(std::move(cur));
}

Rational CFExpansion::value(std::size_t i) const {
    const auto& [p, q] = convergents_.at(i);
    return make_rational(p, q);
}

}  // namespace cfroots
