#pragma once

#include <optional>
#include <vector>

#include "cfroots/numbers.hpp"
#include "cfroots/tensor_poly.hpp"
#include "cfroots/univariate.hpp"

namespace cfroots {

/// Per-axis enveloping bounds on the positive roots: mu <= coordinate, and
/// coordinate <= M when M is finite.  mu = 0 with unbounded M means "no
/// reduction available".  `no_positive_root` marks the whole-orthant
/// exclusion witness (the polynomial cannot vanish at any finite point of
/// the closed orthant).
struct AxisBounds {
    Rational mu{0};
    UpperEndpoint M;  // empty optional: +infinity
    bool no_positive_root = false;
};

enum class ProjectionWeight { Plain, Bernstein };

/// Univariate lower/upper envelopes: coefficient i is the min (resp. max) of
/// the coefficient slab at x_axis^i over all other indices.  Structural zero
/// coefficients participate.  Requires nvars > 1.
TensorPoly projection_lower(const TensorPoly& f, int axis);
TensorPoly projection_upper(const TensorPoly& f, int axis);

/// Weighted variant: min/max taken under the ordering
/// c_i * binom(d,j) gamma^j delta^(d-j) < c_j * binom(d,i) gamma^i delta^(d-i)
/// over the other axes, which orders the projected Bernstein coefficients.
TensorPoly projection_lower_weighted(const TensorPoly& f, int axis,
                                     const std::vector<Integer>& gammas,
                                     const std::vector<Integer>& deltas);
TensorPoly projection_upper_weighted(const TensorPoly& f, int axis,
                                     const std::vector<Integer>& gammas,
                                     const std::vector<Integer>& deltas);

struct BoundsOptions {
    BoundStrategy strategy = BoundStrategy::ExactFloor;
    bool upper_bounds = false;  // compute finite M via reciprocal roots
    ProjectionWeight weight = ProjectionWeight::Plain;
    int cf_depth = 128;
};

/// The three-case table for mu (via the projection envelopes) and, when
/// requested, its mirror for M.  A one-variable input uses the polynomial
/// itself as both envelopes.
AxisBounds axis_bounds(const TensorPoly& f, int axis, const BoundsOptions& opts = {});

/// Intersection over the system: componentwise max of lower bounds, min of
/// upper bounds.  `empty` is set when max mu > min M strictly; `sentinel`
/// when some polynomial has no root in the closed orthant at all.
struct SystemBounds {
    Rational mu{0};
    UpperEndpoint M;
    bool empty = false;
    bool sentinel = false;
    int witness_poly = -1;  // for sentinel
};
SystemBounds system_bounds(const std::vector<TensorPoly>& polys, int axis,
                           const BoundsOptions& opts = {});

/// Result of one reduction pass over all axes of a transformed system.
struct ReduceOutcome {
    bool excluded = false;      // empty intersection or sentinel witness
    bool progress = false;      // some integer shift was applied
    int witness_poly = -1;      // poly index for sentinel exclusions
    int witness_axis = -1;
    std::vector<Integer> shift;  // the applied integer lower bounds l_k
};

/// Computes integer floors of the per-axis lower bounds and shifts the
/// system by them (the continued-fraction reduction step).  Soundness: every
/// zero of the system in the closed positive orthant has coordinates >= l.
ReduceOutcome reduce_system(std::vector<TensorPoly>& polys, const BoundsOptions& opts = {});

/// Jacobian preconditioning at the interior point (1, .., 1): replaces F by
/// the integer-cleared rows of J^{-1} F.  Returns false (state unchanged)
/// when the Jacobian is singular at the point.  Roots are unchanged.
bool precondition_system(std::vector<TensorPoly>& polys);

/// x_k -> x_k / 2^l for all axes with denominators cleared; roots are
/// multiplied by 2^l.
std::vector<TensorPoly> scale_spread(const std::vector<TensorPoly>& polys, unsigned long l);

/// Exact rational matrix inverse helper (Gauss-Jordan).  Empty on singular.
std::optional<std::vector<std::vector<Rational>>> invert_rational_matrix(
    std::vector<std::vector<Rational>> m);

}  // namespace cfroots
