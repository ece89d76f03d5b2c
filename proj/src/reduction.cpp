#include "cfroots/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfroots {

namespace {

std::vector<std::size_t> strides_of(const std::vector<int>& degrees) {
    std::vector<std::size_t> strides(degrees.size(), 1);
    for (int k = static_cast<int>(degrees.size()) - 2; k >= 0; --k)
        strides[k] = strides[k + 1] * (static_cast<std::size_t>(degrees[k + 1]) + 1);
    return strides;
}

enum class Extreme { Min, Max };

TensorPoly plain_projection(const TensorPoly& f, int axis, Extreme which) {
    if (f.nvars() <= 1) throw std::invalid_argument("projection needs more than one variable");
    int d = f.degrees()[static_cast<std::size_t>(axis)];
    auto strides = strides_of(f.degrees());
    std::size_t stride = strides[static_cast<std::size_t>(axis)];
    std::size_t len = static_cast<std::size_t>(d) + 1;
    std::vector<Integer> out(len);
    std::vector<bool> seen(len, false);
    for (std::size_t flat = 0; flat < f.coefficient_count(); ++flat) {
        std::size_t ik = (flat / stride) % len;
        const Integer& c = f.coeffs()[flat];
        if (!seen[ik]) {
            out[ik] = c;
            seen[ik] = true;
        } else if (which == Extreme::Min ? c < out[ik] : c > out[ik]) {
            out[ik] = c;
        }
    }
    return TensorPoly(1, {d}, std::move(out));
}

/// Weight of the multi-index over the non-axis variables:
/// prod binom(d_s, i_s) gamma_s^{i_s} delta_s^{d_s - i_s}.
Integer index_weight(const std::vector<int>& degrees, const std::vector<std::size_t>& strides,
                     std::size_t flat, int axis, const std::vector<Integer>& gammas,
                     const std::vector<Integer>& deltas) {
    Integer w = 1;
    std::size_t rem = flat;
    for (std::size_t s = 0; s < degrees.size(); ++s) {
        std::size_t is = rem / strides[s];
        rem %= strides[s];
        if (static_cast<int>(s) == axis) continue;
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(degrees[s]),
                     static_cast<unsigned long>(is));
        w *= binom * pow_int(gammas[s], static_cast<unsigned long>(is)) *
             pow_int(deltas[s], static_cast<unsigned long>(degrees[s] - static_cast<int>(is)));
    }
    return w;
}

TensorPoly weighted_projection(const TensorPoly& f, int axis, Extreme which,
                               const std::vector<Integer>& gammas,
                               const std::vector<Integer>& deltas) {
    if (f.nvars() <= 1) throw std::invalid_argument("projection needs more than one variable");
    if (gammas.size() != f.degrees().size() || deltas.size() != f.degrees().size())
        throw std::invalid_argument("weight vector arity mismatch");
    int d = f.degrees()[static_cast<std::size_t>(axis)];
    auto strides = strides_of(f.degrees());
    std::size_t stride = strides[static_cast<std::size_t>(axis)];
    std::size_t len = static_cast<std::size_t>(d) + 1;
    // Extreme of c/w per slab, kept as exact rationals, then denominators
    // cleared by a common positive factor (roots are unchanged).
    std::vector<Rational> best(len);
    std::vector<bool> seen(len, false);
    for (std::size_t flat = 0; flat < f.coefficient_count(); ++flat) {
        std::size_t ik = (flat / stride) % len;
        Integer w = index_weight(f.degrees(), strides, flat, axis, gammas, deltas);
        if (w == 0) continue;  // gamma = 0 axis: the weight degenerates; skip
        Rational r = make_rational(f.coeffs()[flat], w);
        if (!seen[ik]) {
            best[ik] = r;
            seen[ik] = true;
        } else if (which == Extreme::Min ? r < best[ik] : r > best[ik]) {
            best[ik] = r;
        }
    }
    Integer l = 1;
    for (std::size_t i = 0; i < len; ++i)
        if (seen[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), best[i].get_den().get_mpz_t());
    std::vector<Integer> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        if (!seen[i]) continue;
        Rational v = best[i] * Rational(l);
        out[i] = v.get_num();  // denominator is 1 by the lcm
    }
    return TensorPoly(1, {d}, std::move(out));
}

}  // namespace

TensorPoly projection_lower(const TensorPoly& f, int axis) {
    return plain_projection(f, axis, Extreme::Min);
}

TensorPoly projection_upper(const TensorPoly& f, int axis) {
    return plain_projection(f, axis, Extreme::Max);
}

TensorPoly projection_lower_weighted(const TensorPoly& f, int axis,
                                     const std::vector<Integer>& gammas,
                                     const std::vector<Integer>& deltas) {
    return weighted_projection(f, axis, Extreme::Min, gammas, deltas);
}

TensorPoly projection_upper_weighted(const TensorPoly& f, int axis,
                                     const std::vector<Integer>& gammas,
                                     const std::vector<Integer>& deltas) {
    return weighted_projection(f, axis, Extreme::Max, gammas, deltas);
}

namespace {

const Integer& declared_lead(const TensorPoly& uni) { return uni.coeffs().back(); }

struct GuardedRoot {
    bool known = true;  // false: depth guard tripped, no information
    std::optional<RootInterval> root;
};

GuardedRoot guarded_min_root(const TensorPoly& uni, int depth) {
    try {
        return {true, min_positive_root(uni, depth)};
    } catch (const depth_limit_error&) {
        // Multiple-root pathology in an envelope: fall back to "no bound".
        return {false, std::nullopt};
    }
}

GuardedRoot guarded_max_root(const TensorPoly& uni, int depth) {
    try {
        return {true, max_positive_root(uni, depth)};
    } catch (const depth_limit_error&) {
        return {false, std::nullopt};
    }
}

}  // namespace

AxisBounds axis_bounds(const TensorPoly& f, int axis, const BoundsOptions& opts) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no root bounds");
    TensorPoly lower_env, upper_env;
    if (f.nvars() == 1) {
        lower_env = f;
        upper_env = f;
    } else {
        lower_env = projection_lower(f, axis);
        upper_env = projection_upper(f, axis);
    }

    AxisBounds out;
    int m_at0 = sgn(lower_env.constant_coeff());
    int M_at0 = sgn(upper_env.constant_coeff());
    if (M_at0 < 0) {
        // f < 0 wherever the upper envelope is negative.
        auto g = guarded_min_root(upper_env, opts.cf_depth);
        if (g.known && !g.root) {
            // Envelope negative on the whole closed orthant (finite points).
            out.no_positive_root = true;
            return out;
        }
        if (g.root) out.mu = g.root->lo;
    } else if (m_at0 > 0) {
        auto g = guarded_min_root(lower_env, opts.cf_depth);
        if (g.known && !g.root) {
            out.no_positive_root = true;
            return out;
        }
        if (g.root) out.mu = g.root->lo;
    }
    if (opts.upper_bounds) {
        int M_atinf = sgn(declared_lead(upper_env));
        int m_atinf = sgn(declared_lead(lower_env));
        if (M_atinf < 0) {
            auto g = guarded_max_root(upper_env, opts.cf_depth);
            if (g.known) out.M = g.root ? g.root->hi : Rational(0);
        } else if (m_atinf > 0) {
            auto g = guarded_max_root(lower_env, opts.cf_depth);
            if (g.known) out.M = g.root ? g.root->hi : Rational(0);
        }
    }
    return out;
}

SystemBounds system_bounds(const std::vector<TensorPoly>& polys, int axis,
                           const BoundsOptions& opts) {
    if (polys.empty()) throw std::invalid_argument("empty system");
    SystemBounds out;
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].is_zero()) continue;  // vanishes everywhere, bounds nothing
        AxisBounds b = axis_bounds(polys[i], axis, opts);
        if (b.no_positive_root) {
            out.sentinel = true;
            out.witness_poly = static_cast<int>(i);
            return out;
        }
        out.mu = std::max(out.mu, b.mu);
        if (b.M && (!out.M || *b.M < *out.M)) out.M = b.M;
    }
    if (out.M && out.mu > *out.M) out.empty = true;
    return out;
}

ReduceOutcome reduce_system(std::vector<TensorPoly>& polys, const BoundsOptions& opts) {
    if (polys.empty()) throw std::invalid_argument("empty system");
    const int n = polys.front().nvars();
    ReduceOutcome out;
    out.shift.assign(static_cast<std::size_t>(n), Integer(0));
    for (int k = 0; k < n; ++k) {
        SystemBounds sb = system_bounds(polys, k, opts);
        if (sb.sentinel || sb.empty) {
            out.excluded = true;
            out.witness_poly = sb.witness_poly;
            out.witness_axis = k;
            return out;
        }
        out.shift[static_cast<std::size_t>(k)] = floor_rational(sb.mu);
    }
    bool any = std::any_of(out.shift.begin(), out.shift.end(),
                           [](const Integer& l) { return l > 0; });
    if (any) {
        for (auto& f : polys) f = shift_all(f, out.shift);
        out.progress = true;
    }
    return out;
}

std::optional<std::vector<std::vector<Rational>>> invert_rational_matrix(
    std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rational p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            Rational factor = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= factor * m[col][j];
                inv[r][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

bool precondition_system(std::vector<TensorPoly>& polys) {
    const std::size_t n = polys.size();
    if (n == 0 || polys.front().nvars() != static_cast<int>(n))
        throw std::invalid_argument("preconditioning needs a square system");
    std::vector<Integer> ones(n, Integer(1));
    std::vector<std::vector<Rational>> jac(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            jac[i][j] = Rational(
                evaluate_int(partial_derivative(polys[i], static_cast<int>(j)), ones));
    auto inv = invert_rational_matrix(std::move(jac));
    if (!inv) return false;
    std::vector<TensorPoly> next;
    next.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*inv)[i][j].get_den().get_mpz_t());
        TensorPoly row = TensorPoly::constant(static_cast<int>(n), 0);
        for (std::size_t j = 0; j < n; ++j) {
            Integer c((*inv)[i][j] * Rational(l));
            if (c != 0) row = row + polys[j].scaled(c);
        }
        row = row.trimmed();
        if (row.is_zero()) return false;  // dependent rows, keep the original system
        Integer g = row.content();
        row.divide_content(g);
        next.push_back(std::move(row));
    }
    polys = std::move(next);
    return true;
}

std::vector<TensorPoly> scale_spread(const std::vector<TensorPoly>& polys, unsigned long l) {
    std::vector<TensorPoly> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(scale_powers_of_two(f, l));
    return out;
}

}  // namespace cfroots
