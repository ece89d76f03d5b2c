#pragma once

#include <algorithm>
#include <stdexcept>

#include "cfroots/numbers.hpp"

namespace cfroots {

/// Closed rational interval [lo, hi].
struct RatInterval {
    Rational lo;
    Rational hi;

    RatInterval() = default;
    RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    }
    static RatInterval point(const Rational& v) { return RatInterval(v, v); }

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool excludes_zero() const { return !contains_zero(); }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }

    RatInterval operator*(const RatInterval& o) const {
        Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        return {std::min(std::min(a, b), std::min(c, d)),
                std::max(std::max(a, b), std::max(c, d))};
    }

    RatInterval scaled(const Rational& c) const {
        if (sgn(c) >= 0) return {lo * c, hi * c};
        return {hi * c, lo * c};
    }
};

}  // namespace cfroots
