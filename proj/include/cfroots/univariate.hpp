#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cfroots/numbers.hpp"
#include "cfroots/tensor_poly.hpp"

namespace cfroots {

class depth_limit_error : public std::runtime_error {
public:
    explicit depth_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Isolating interval for one positive real root.  `exact` means lo == hi is
/// the root itself.
struct RootInterval {
    Rational lo;
    Rational hi;
    bool exact = false;
};

enum class BoundStrategy { ExactFloor, Cauchy };

/// Number of sign changes in the nonzero subsequence (Descartes).
int sign_variations(std::span<const Integer> coeffs);
int sign_variations(const std::vector<Integer>& coeffs);

/// Isolates all positive real roots of a univariate polynomial by
/// continued-fraction subdivision with Descartes' rule as the inclusion
/// criterion.  Intervals come out disjoint and sorted increasingly; exact
/// rational roots hit by the subdivision lattice are emitted as point
/// intervals.  Multiple roots exhaust the depth guard.
std::vector<RootInterval> isolate_positive_roots(const TensorPoly& f, int max_depth = 128);

std::optional<RootInterval> min_positive_root(const TensorPoly& f, int max_depth = 128);
std::optional<RootInterval> max_positive_root(const TensorPoly& f, int max_depth = 128);

/// Floor of the smallest positive real root, or empty when the polynomial has
/// no positive root.  ExactFloor runs the CF engine until the integer part is
/// certain; Cauchy uses the classical cheap bound (always <= the exact floor).
std::optional<Integer> integer_lower_bound(const TensorPoly& f,
                                           BoundStrategy strategy = BoundStrategy::ExactFloor,
                                           int max_depth = 128);

namespace detail {
// Internal engine over plain coefficient vectors (low-to-high), exposed for
// the reduction module and tests.
std::vector<Integer> univariate_coeffs(const TensorPoly& f);
std::vector<RootInterval> isolate_positive(std::vector<Integer> p, int max_depth,
                                           bool stop_after_first, bool require_positive_lo);
}  // namespace detail

}  // namespace cfroots
