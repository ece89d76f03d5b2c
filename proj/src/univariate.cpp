#include "cfroots/univariate.hpp"

#include <algorithm>

#include "cfroots/homography.hpp"

namespace cfroots {

int sign_variations(std::span<const Integer> coeffs) {
    int count = 0, last = 0;
    for (const Integer& c : coeffs) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int sign_variations(const std::vector<Integer>& coeffs) {
    return sign_variations(std::span<const Integer>(coeffs.data(), coeffs.size()));
}

namespace detail {

std::vector<Integer> univariate_coeffs(const TensorPoly& f) {
    if (f.nvars() != 1) throw std::invalid_argument("expected a univariate polynomial");
    return f.coeffs();
}

namespace {

void trim_high(std::vector<Integer>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

/// Divides out x^k; the dropped root at zero is never a positive root.
void strip_low(std::vector<Integer>& p) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k == p.size()) return;
    if (k > 0) p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
}

bool is_zero_poly(const std::vector<Integer>& p) {
    return std::all_of(p.begin(), p.end(), [](const Integer& c) { return c == 0; });
}

void shift_by(std::vector<Integer>& p, const Integer& c) {
    if (c == 0) return;
    int d = static_cast<int>(p.size()) - 1;
    for (int i = 0; i < d; ++i)
        for (int j = d - 1; j >= i; --j)
            p[static_cast<std::size_t>(j)] += c * p[static_cast<std::size_t>(j + 1)];
}

Integer eval_at_one(const std::vector<Integer>& p) {
    Integer s = 0;
    for (const Integer& c : p) s += c;
    return s;
}

/// Positive roots of the result correspond to roots of p inside (0, span).
std::vector<Integer> window_poly(const std::vector<Integer>& p, const Integer& span) {
    std::vector<Integer> q = p;
    if (span != 1) {
        Integer pw = 1;
        for (std::size_t i = 1; i < q.size(); ++i) {
            pw *= span;
            q[i] *= pw;
        }
    }
    std::reverse(q.begin(), q.end());
    shift_by(q, 1);
    return q;
}

/// Largest power-of-two prefix (0, b) certified root-free by Descartes.
/// Terminates: for large b the window variation count tends to var(p) > 0.
Integer certified_empty_prefix(const std::vector<Integer>& p) {
    Integer best = 0, b = 1;
    while (true) {
        if (sign_variations(window_poly(p, b)) != 0) break;
        best = b;
        b *= 2;
    }
    return best;
}

struct Node {
    std::vector<Integer> p;
    AxisMap m;  // local coordinate -> original positive axis
    int depth = 0;
};

struct Task {
    bool is_emit;
    Node node;           // when !is_emit
    RootInterval point;  // when is_emit
};

void compose_shift1(AxisMap& m) {
    m.beta += m.alpha;
    m.delta += m.gamma;
}

void compose_reciprocal(AxisMap& m) {
    std::swap(m.alpha, m.beta);
    std::swap(m.gamma, m.delta);
}

}  // namespace

std::vector<RootInterval> isolate_positive(std::vector<Integer> p, int max_depth,
                                           bool stop_after_first, bool require_positive_lo) {
    trim_high(p);
    if (is_zero_poly(p)) throw std::invalid_argument("zero polynomial");
    strip_low(p);

    std::vector<RootInterval> out;
    // Depth-first, lower child explored before the node's exact root and the
    // upper child: emission order is increasing along the positive axis.
    std::vector<Task> stack;
    stack.push_back(Task{false, Node{std::move(p), AxisMap{}, 0}, {}});
    while (!stack.empty()) {
        Task task = std::move(stack.back());
        stack.pop_back();
        if (task.is_emit) {
            out.push_back(task.point);
            if (stop_after_first) return out;
            continue;
        }
        Node node = std::move(task.node);
        if (node.depth > max_depth)
            throw depth_limit_error("root isolation depth guard exceeded");
        if (sign_variations(node.p) == 0) continue;

        // Shift past a certified root-free prefix (the CF reduction step).
        Integer b = certified_empty_prefix(node.p);
        if (b >= 1) {
            shift_by(node.p, b);
            node.m.beta += b * node.m.alpha;
            node.m.delta += b * node.m.gamma;
            if (node.p[0] == 0) {
                // Root exactly at the shift point: smallest in this subtree.
                Rational r = node.m.image_of_zero();
                strip_low(node.p);
                if (sgn(r) > 0) {
                    out.push_back(RootInterval{r, r, true});
                    if (stop_after_first) return out;
                }
            }
            if (sign_variations(node.p) == 0) continue;
        }

        int v = sign_variations(node.p);
        bool exact_at_one = (eval_at_one(node.p) == 0);

        if (!exact_at_one && v == 1 && node.m.bounded()) {
            AxisInterval iv = axis_interval(node.m);
            if (!require_positive_lo || sgn(iv.lo) > 0) {
                Task emit{true, {}, RootInterval{iv.lo, *iv.hi, false}};
                stack.push_back(std::move(emit));
                continue;
            }
        }

        Node upper;
        upper.p = node.p;
        shift_by(upper.p, 1);
        upper.m = node.m;
        compose_shift1(upper.m);
        upper.depth = node.depth + 1;

        Node lower;
        lower.p = std::move(node.p);
        std::reverse(lower.p.begin(), lower.p.end());
        trim_high(lower.p);
        shift_by(lower.p, 1);
        strip_low(lower.p);  // removes the subdivision-point root, emitted below
        lower.m = node.m;
        compose_reciprocal(lower.m);
        compose_shift1(lower.m);
        lower.depth = node.depth + 1;

        // Stack order: upper last-explored, exact point in between.
        if (sign_variations(upper.p) > 0) stack.push_back(Task{false, std::move(upper), {}});
        if (exact_at_one) {
            Rational r = node.m.apply(Rational(1));
            stack.push_back(Task{true, {}, RootInterval{r, r, true}});
        }
        if (sign_variations(lower.p) > 0) stack.push_back(Task{false, std::move(lower), {}});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace detail

std::vector<RootInterval> isolate_positive_roots(const TensorPoly& f, int max_depth) {
    return detail::isolate_positive(detail::univariate_coeffs(f), max_depth, false, false);
}

std::optional<RootInterval> min_positive_root(const TensorPoly& f, int max_depth) {
    auto roots = detail::isolate_positive(detail::univariate_coeffs(f), max_depth, true, false);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

std::optional<RootInterval> max_positive_root(const TensorPoly& f, int max_depth) {
    auto p = detail::univariate_coeffs(f);
    std::reverse(p.begin(), p.end());
    auto roots = detail::isolate_positive(std::move(p), max_depth, true, true);
    if (roots.empty()) return std::nullopt;
    const RootInterval& r = roots.front();
    if (r.exact) {
        Rational v = Rational(1) / r.lo;
        return RootInterval{v, v, true};
    }
    return RootInterval{Rational(1) / r.hi, Rational(1) / r.lo, false};
}

std::optional<Integer> integer_lower_bound(const TensorPoly& f, BoundStrategy strategy,
                                           int max_depth) {
    auto p = detail::univariate_coeffs(f);
    {
        std::vector<Integer> q = p;
        while (q.size() > 1 && q.back() == 0) q.pop_back();
        if (std::all_of(q.begin(), q.end(), [](const Integer& c) { return c == 0; }))
            throw std::invalid_argument("zero polynomial");
        if (sign_variations(q) == 0) return std::nullopt;
    }
    if (strategy == BoundStrategy::Cauchy) {
        std::size_t k = 0;
        while (p[k] == 0) ++k;
        Integer c0 = abs(p[k]), cmax = 0;
        for (std::size_t i = k + 1; i < p.size(); ++i) cmax = std::max(cmax, abs(p[i]));
        if (cmax == 0) return std::nullopt;  // pure monomial
        return floor_rational(make_rational(c0, c0 + cmax));
    }
    auto r = detail::isolate_positive(std::move(p), max_depth, true, false);
    if (r.empty()) return std::nullopt;
    return floor_rational(r.front().lo);
}

}  // namespace cfroots
