#include "cfroots/homography.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cfroots {

bool DomainBox::bounded() const {
    return std::all_of(axes.begin(), axes.end(),
                       [](const AxisInterval& a) { return a.bounded(); });
}

bool DomainBox::contains(const std::vector<Rational>& p) const {
    if (p.size() != axes.size()) return false;
    for (std::size_t k = 0; k < axes.size(); ++k) {
        if (p[k] < axes[k].lo) return false;
        if (axes[k].hi && p[k] > *axes[k].hi) return false;
    }
    return true;
}

std::string DomainBox::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < axes.size(); ++k) {
        if (k) os << " x ";
        os << "[" << to_string(axes[k].lo) << ", "
           << (axes[k].hi ? to_string(*axes[k].hi) : std::string("inf")) << "]";
    }
    return os.str();
}

Rational AxisMap::apply(const Rational& x) const {
    Rational num = Rational(alpha) * x + Rational(beta);
    Rational den = Rational(gamma) * x + Rational(delta);
    if (sgn(den) == 0) throw std::domain_error("axis map pole");
    return num / den;
}

void AxisMap::normalize() {
    Integer g = 0;
    for (const Integer* v : {&alpha, &beta, &gamma, &delta})
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v->get_mpz_t());
    if (g > 1) {
        alpha /= g;
        beta /= g;
        gamma /= g;
        delta /= g;
    }
}

bool Homography::bounded() const {
    return std::all_of(axes.begin(), axes.end(), [](const AxisMap& m) { return m.bounded(); });
}

std::vector<Rational> Homography::apply(const std::vector<Rational>& x) const {
    if (x.size() != axes.size()) throw std::invalid_argument("point arity mismatch");
    std::vector<Rational> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = axes[k].apply(x[k]);
    return out;
}

Homography for_box(const DomainBox& box) {
    Homography h;
    h.axes.reserve(box.axes.size());
    for (const AxisInterval& axis : box.axes) {
        AxisMap m;
        const Integer& p = axis.lo.get_num();
        const Integer& q = axis.lo.get_den();
        if (!axis.hi) {
            // Translation x -> x + lo, kept integral: (q x + p) / q.
            m = AxisMap{q, p, Integer(0), q};
        } else {
            if (*axis.hi < axis.lo) throw std::invalid_argument("box with lo > hi");
            if (*axis.hi == axis.lo) throw std::invalid_argument("degenerate box axis");
            const Integer& r = axis.hi->get_num();
            const Integer& s = axis.hi->get_den();
            // 0 -> p/q, infinity -> r/s.
            m = AxisMap{r * q, p * s, s * q, q * s};
            m.normalize();
        }
        h.axes.push_back(std::move(m));
    }
    return h;
}

AxisInterval axis_interval(const AxisMap& m) {
    Rational at0 = m.image_of_zero();
    auto atinf = m.image_of_infinity();
    if (!atinf) return AxisInterval{at0, std::nullopt};
    if (*atinf < at0) return AxisInterval{*atinf, at0};
    return AxisInterval{at0, *atinf};
}

DomainBox box_of(const Homography& h) {
    DomainBox box;
    box.axes.reserve(h.axes.size());
    for (const AxisMap& m : h.axes) box.axes.push_back(axis_interval(m));
    return box;
}

namespace {

// Right-composition with the step's 2x2 integer matrix.
void compose_shift(AxisMap& m, const Integer& c) {
    // M * [[1, c], [0, 1]]
    m.beta += c * m.alpha;
    m.delta += c * m.gamma;
}

void compose_reciprocal(AxisMap& m) {
    // M * [[0, 1], [1, 0]]
    std::swap(m.alpha, m.beta);
    std::swap(m.gamma, m.delta);
}

void compose_contract(AxisMap& m, const Integer& c) {
    // M * [[c, 0], [0, 1]]
    m.alpha *= c;
    m.gamma *= c;
}

}  // namespace

void apply_step(std::vector<TensorPoly>& polys, Homography& h, const Step& step) {
    if (std::holds_alternative<ShiftStep>(step)) {
        const auto& s = std::get<ShiftStep>(step);
        if (sgn(s.amount) < 0) throw std::invalid_argument("negative shift step");
        for (auto& f : polys) f = shift_axis(f, s.axis, s.amount);
        compose_shift(h.axes.at(static_cast<std::size_t>(s.axis)), s.amount);
    } else if (std::holds_alternative<ReciprocalStep>(step)) {
        const auto& s = std::get<ReciprocalStep>(step);
        for (auto& f : polys) f = reciprocal_axis(f, s.axis);
        compose_reciprocal(h.axes.at(static_cast<std::size_t>(s.axis)));
    } else {
        const auto& s = std::get<ContractStep>(step);
        if (sgn(s.factor) <= 0) throw std::invalid_argument("contraction step factor < 1");
        for (auto& f : polys) f = contract_axis(f, s.axis, s.factor);
        compose_contract(h.axes.at(static_cast<std::size_t>(s.axis)), s.factor);
    }
}

TensorPoly transform_system_poly(const TensorPoly& f, const Homography& h) {
    if (h.nvars() != f.nvars()) throw std::invalid_argument("variable count mismatch");
    TensorPoly out = f;
    for (int k = 0; k < f.nvars(); ++k) {
        const AxisMap& m = h.axes[static_cast<std::size_t>(k)];
        out = mobius_axis(out, k, m.alpha, m.beta, m.gamma, m.delta);
    }
    return out;
}

std::vector<Child> subdivide_at(const std::vector<TensorPoly>& polys, const Homography& h,
                                const std::vector<Integer>& u) {
    const int n = h.nvars();
    if (u.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("u arity mismatch");
    for (const Integer& uk : u)
        if (uk < 1) throw std::invalid_argument("subdivision point must be >= 1 per axis");

    std::vector<Child> children;
    children.reserve(1u << n);
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        Child child{polys, h, bits};
        for (int k = 0; k < n; ++k) {
            const Integer& uk = u[static_cast<std::size_t>(k)];
            if (bits & (1u << k)) {
                // Lower side [0, u_k]: apply C^{u_k}, then R, then T^1.
                if (uk != 1) apply_step(child.polys, child.map, ContractStep{k, uk});
                apply_step(child.polys, child.map, ReciprocalStep{k});
                apply_step(child.polys, child.map, ShiftStep{k, Integer(1)});
            } else {
                apply_step(child.polys, child.map, ShiftStep{k, uk});
            }
        }
        children.push_back(std::move(child));
    }
    return children;
}

std::vector<Rational> bernstein_coeffs(const TensorPoly& transformed, const Homography& h) {
    if (!h.bounded()) throw std::invalid_argument("Bernstein coefficients need a bounded box");
    const auto& degrees = transformed.degrees();
    const int n = transformed.nvars();
    std::vector<Rational> out(transformed.coefficient_count());
    std::vector<int> index(static_cast<std::size_t>(n), 0);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
        Integer denom = 1;
        for (int k = 0; k < n; ++k) {
            int d = degrees[static_cast<std::size_t>(k)];
            int i = index[static_cast<std::size_t>(k)];
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d),
                         static_cast<unsigned long>(i));
            const AxisMap& m = h.axes[static_cast<std::size_t>(k)];
            denom *= binom * pow_int(m.gamma, static_cast<unsigned long>(i)) *
                     pow_int(m.delta, static_cast<unsigned long>(d - i));
        }
        out[flat] = make_rational(transformed.coeffs()[flat], denom);
        // Advance the multi-index, last axis fastest.
        for (int k = n - 1; k >= 0; --k) {
            auto ku = static_cast<std::size_t>(k);
            if (++index[ku] <= degrees[ku]) break;
            index[ku] = 0;
        }
    }
    return out;
}

}  // namespace cfroots
