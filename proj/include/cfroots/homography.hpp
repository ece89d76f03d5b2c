#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cfroots/numbers.hpp"
#include "cfroots/tensor_poly.hpp"

namespace cfroots {

/// One axis of a domain box: [lo, hi] with hi possibly +infinity.
struct AxisInterval {
    Rational lo;
    UpperEndpoint hi;  // empty optional encodes +infinity

    bool bounded() const { return hi.has_value(); }
};

struct DomainBox {
    std::vector<AxisInterval> axes;

    int nvars() const { return static_cast<int>(axes.size()); }
    bool bounded() const;
    bool contains(const std::vector<Rational>& p) const;  // closed membership
    std::string str() const;
};

/// Per-axis Moebius map x -> (alpha x + beta)/(gamma x + delta) with integer
/// entries and nonzero determinant.  gamma = 0 encodes an unbounded upper
/// endpoint; delta is never zero.
struct AxisMap {
    Integer alpha{1}, beta{0}, gamma{0}, delta{1};

    Integer det() const { return alpha * delta - beta * gamma; }
    bool bounded() const { return gamma != 0; }

    Rational image_of_zero() const { return make_rational(beta, delta); }
    /// Image of the local point at infinity; empty when gamma = 0.
    std::optional<Rational> image_of_infinity() const {
        if (gamma == 0) return std::nullopt;
        return make_rational(alpha, gamma);
    }
    Rational apply(const Rational& x) const;

    /// Divides the quadruple by its gcd.  Not used on the solve path: the
    /// stored polynomials carry the matching scale for the Bernstein
    /// correspondence, which plain quadruple rescaling would break.
    void normalize();
};

struct Homography {
    std::vector<AxisMap> axes;

    int nvars() const { return static_cast<int>(axes.size()); }
    bool bounded() const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
};

/// Homography mapping the positive orthant onto the box: per axis, 0 -> lo
/// and infinity -> hi (a pure translation when hi is +infinity).
Homography for_box(const DomainBox& box);

/// The box represented by H: per axis the sorted pair {beta/delta, alpha/gamma}.
DomainBox box_of(const Homography& h);
AxisInterval axis_interval(const AxisMap& m);

/// Generator steps of the homography group.
struct ShiftStep {
    int axis;
    Integer amount;  // T_k^c, c >= 0
};
struct ReciprocalStep {
    int axis;  // R_k
};
struct ContractStep {
    int axis;
    Integer factor;  // C_k^c, c >= 1
};
using Step = std::variant<ShiftStep, ReciprocalStep, ContractStep>;

/// Applies one generator step to polynomials and map consistently: the
/// polynomials get the matching tensor operation, the axis map is composed
/// on the right with the step's 2x2 matrix.
void apply_step(std::vector<TensorPoly>& polys, Homography& h, const Step& step);

/// Transforms f by the full homography (all axes), so that the result's
/// positive-orthant zeros correspond to f's zeros in box_of(h).
TensorPoly transform_system_poly(const TensorPoly& f, const Homography& h);

struct Child {
    std::vector<TensorPoly> polys;
    Homography map;
    unsigned bits;  // bit k set means the lower child along axis k
};

/// Splits the represented domain at the interior point u (all u_k >= 1) into
/// 2^n children enumerated by binary counter: bit k = 1 applies T_k^1 R_k
/// C_k^{u_k} (the [0, u_k] side), bit k = 0 applies T_k^{u_k}.
std::vector<Child> subdivide_at(const std::vector<TensorPoly>& polys, const Homography& h,
                                const std::vector<Integer>& u);

/// Bernstein coefficients of the original polynomial over box_of(h), read off
/// the transformed coefficients: b_i = c_i / (binom(d, i) gamma^i delta^(d-i)).
/// Requires a bounded box.
std::vector<Rational> bernstein_coeffs(const TensorPoly& transformed, const Homography& h);

}  // namespace cfroots
