#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cfroots/interval.hpp"
#include "cfroots/numbers.hpp"

namespace cfroots {

enum class SignSummary { Zero, AllNonneg, AllNonpos, Mixed };

/// Dense multivariate polynomial over unbounded integers in the monomial
/// basis.  Coefficients are stored row-major: the last variable varies
/// fastest.  The per-variable degrees are declared bounds; a slab at the
/// declared degree may be identically zero (reciprocal_axis relies on this),
/// so two representations of the same polynomial can differ in padding.
class TensorPoly {
public:
    TensorPoly() = default;

    /// Zero polynomial with the given declared degrees.
    TensorPoly(int nvars, std::vector<int> degrees);

    /// Takes coefficients as-is; sizes must be consistent.
    TensorPoly(int nvars, std::vector<int> degrees, std::vector<Integer> coeffs);

    static TensorPoly constant(int nvars, Integer c);
    static TensorPoly variable(int nvars, int axis);

    /// Builds from (exponents, coefficient) terms and trims to exact degrees.
    static TensorPoly from_terms(
        int nvars, const std::vector<std::pair<std::vector<int>, Integer>>& terms);

    int nvars() const { return nvars_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int axis) const;
    std::size_t coefficient_count() const { return coeffs_.size(); }
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    const Integer& coeff(const std::vector<int>& index) const;
    void set_coeff(const std::vector<int>& index, Integer value);
    const Integer& constant_coeff() const { return coeffs_.front(); }

    bool is_zero() const;

    /// Mathematical equality (padding-insensitive).
    bool operator==(const TensorPoly& other) const;

    /// Copy with degrees recomputed to the exact support.
    TensorPoly trimmed() const;

    /// Copy padded with zero slabs up to the given declared degrees.
    TensorPoly with_degrees(const std::vector<int>& degrees) const;

    TensorPoly operator+(const TensorPoly& other) const;
    TensorPoly operator-(const TensorPoly& other) const;
    TensorPoly operator-() const;
    TensorPoly operator*(const TensorPoly& other) const;
    TensorPoly scaled(const Integer& c) const;

    /// gcd of all coefficients (0 for the zero polynomial).
    Integer content() const;
    void divide_content(const Integer& g);

    std::size_t flat_index(const std::vector<int>& index) const;

private:
    int nvars_ = 0;
    std::vector<int> degrees_;
    std::vector<Integer> coeffs_ = {Integer(0)};

    friend TensorPoly shift_axis(const TensorPoly&, int, const Integer&);
    friend TensorPoly reciprocal_axis(const TensorPoly&, int);
    friend TensorPoly contract_axis(const TensorPoly&, int, const Integer&);
    friend TensorPoly partial_derivative(const TensorPoly&, int);
    friend TensorPoly face_lower(const TensorPoly&, int);
    friend TensorPoly face_upper(const TensorPoly&, int);
    friend TensorPoly mobius_axis(const TensorPoly&, int, const Integer&, const Integer&,
                                  const Integer&, const Integer&);
    friend TensorPoly scale_powers_of_two(const TensorPoly&, unsigned long);
};

/// f with x_axis replaced by x_axis + c, expanded exactly; degrees unchanged.
TensorPoly shift_axis(const TensorPoly& f, int axis, const Integer& c);

/// Sequential shift over all axes, applied in increasing order of |u_k| bit size.
TensorPoly shift_all(const TensorPoly& f, const std::vector<Integer>& u);

/// x_axis^d * f(1/x_axis): reverses coefficients along the axis.  Involution
/// on the declared-degree representation.
TensorPoly reciprocal_axis(const TensorPoly& f, int axis);

/// f with x_axis replaced by c*x_axis (c >= 1).
TensorPoly contract_axis(const TensorPoly& f, int axis, const Integer& c);

TensorPoly partial_derivative(const TensorPoly& f, int axis);

/// Slice at x_axis = 0 (resp. the declared-degree slab), as a polynomial in
/// the remaining nvars-1 variables.
TensorPoly face_lower(const TensorPoly& f, int axis);
TensorPoly face_upper(const TensorPoly& f, int axis);

SignSummary sign_summary(const TensorPoly& f);

Rational evaluate(const TensorPoly& f, const std::vector<Rational>& point);
Integer evaluate_int(const TensorPoly& f, const std::vector<Integer>& point);

/// Naive monomial-wise interval extension; all intervals must be bounded.
RatInterval interval_evaluate(const TensorPoly& f, const std::vector<RatInterval>& box);

/// Per-axis Moebius substitution: (c x + d)^{deg} * f at x -> (a x + b)/(c x + d).
/// Degrees are preserved.  This realizes one axis of the homography action.
TensorPoly mobius_axis(const TensorPoly& f, int axis, const Integer& a, const Integer& b,
                       const Integer& c, const Integer& d);

/// Substitutes x_k -> x_k / 2^l for every axis and clears denominators:
/// coefficient at index i is multiplied by 2^{l * (sum(d) - sum(i))}.
TensorPoly scale_powers_of_two(const TensorPoly& f, unsigned long l);

}  // namespace cfroots
