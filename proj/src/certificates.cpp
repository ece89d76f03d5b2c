#include "cfroots/certificates.hpp"

#include <algorithm>
#include <functional>

namespace cfroots {

std::string to_string(EmptyReason r) {
    switch (r) {
        case EmptyReason::AllSameSign: return "all-same-sign";
        case EmptyReason::IntervalSignConstant: return "interval-sign-constant";
        case EmptyReason::EmptyBoundsIntersection: return "empty-bounds-intersection";
        case EmptyReason::BoundSentinel: return "bound-sentinel";
    }
    return "?";
}

bool sign_excludes(const TensorPoly& transformed) {
    SignSummary s = sign_summary(transformed);
    if (s != SignSummary::AllNonneg && s != SignSummary::AllNonpos) return false;
    // The constant coefficient keeps the value away from zero at every
    // finite point of the closed orthant; zeros "at infinity" belong to a
    // neighbouring representation.
    return transformed.constant_coeff() != 0;
}

namespace {

std::vector<RatInterval> box_intervals(const DomainBox& box) {
    std::vector<RatInterval> out;
    out.reserve(box.axes.size());
    for (const auto& axis : box.axes) {
        if (!axis.hi) throw std::invalid_argument("unbounded interval input");
        out.emplace_back(axis.lo, *axis.hi);
    }
    return out;
}

}  // namespace

TestVerdict exclusion_test(const std::vector<TensorPoly>& transformed,
                           const std::vector<TensorPoly>& originals, const Homography& map,
                           const BoundsOptions& bounds_opts) {
    for (std::size_t i = 0; i < transformed.size(); ++i)
        if (sign_excludes(transformed[i]))
            return TestVerdict::empty(EmptyReason::AllSameSign, static_cast<int>(i));

    DomainBox box = box_of(map);
    if (box.bounded()) {
        auto ivs = box_intervals(box);
        for (std::size_t i = 0; i < originals.size(); ++i)
            if (interval_evaluate(originals[i], ivs).excludes_zero())
                return TestVerdict::empty(EmptyReason::IntervalSignConstant,
                                          static_cast<int>(i));
    }

    const int n = map.nvars();
    bool all_zero = std::all_of(transformed.begin(), transformed.end(),
                                [](const TensorPoly& f) { return f.is_zero(); });
    if (!all_zero) {
        for (int k = 0; k < n; ++k) {
            SystemBounds sb = system_bounds(transformed, k, bounds_opts);
            if (sb.sentinel)
                return TestVerdict::empty(EmptyReason::BoundSentinel, sb.witness_poly, k);
            if (sb.empty)
                return TestVerdict::empty(EmptyReason::EmptyBoundsIntersection, -1, k);
        }
    }
    return TestVerdict::unknown();
}

int strict_face_sign(const TensorPoly& face) {
    SignSummary s = sign_summary(face);
    int sign;
    if (s == SignSummary::AllNonneg) sign = 1;
    else if (s == SignSummary::AllNonpos) sign = -1;
    else return 0;
    // Every corner coefficient must be nonzero: indices with each entry at
    // 0 or at the declared degree.
    const int n = face.nvars();
    std::vector<int> index(static_cast<std::size_t>(n), 0);
    for (unsigned bits = 0; bits < (1u << n); ++bits) {
        for (int k = 0; k < n; ++k)
            index[static_cast<std::size_t>(k)] =
                (bits & (1u << k)) ? face.degrees()[static_cast<std::size_t>(k)] : 0;
        if (face.coeff(index) == 0) return 0;
    }
    return sign;
}

bool has_perfect_matching(const std::vector<std::vector<int>>& matrix) {
    const std::size_t n = matrix.size();
    std::vector<int> match_col(n, -1);
    std::function<bool(std::size_t, std::vector<bool>&)> augment =
        [&](std::size_t row, std::vector<bool>& visited) -> bool {
        for (std::size_t col = 0; col < n; ++col) {
            if (!matrix[row][col] || visited[col]) continue;
            visited[col] = true;
            if (match_col[col] < 0 ||
                augment(static_cast<std::size_t>(match_col[col]), visited)) {
                match_col[col] = static_cast<int>(row);
                return true;
            }
        }
        return false;
    };
    for (std::size_t row = 0; row < n; ++row) {
        std::vector<bool> visited(n, false);
        if (!augment(row, visited)) return false;
    }
    return true;
}

bool miranda_test(const std::vector<TensorPoly>& transformed) {
    const std::size_t n = transformed.size();
    if (n == 0 || transformed.front().nvars() != static_cast<int>(n))
        throw std::invalid_argument("Miranda test needs a square system");
    std::vector<std::vector<int>> opposition(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            int lo = strict_face_sign(face_lower(transformed[i], static_cast<int>(j)));
            if (lo == 0) continue;
            int up = strict_face_sign(face_upper(transformed[i], static_cast<int>(j)));
            if (up == -lo) opposition[i][j] = 1;
        }
    }
    return has_perfect_matching(opposition);
}

TensorPoly jacobian_determinant(const std::vector<TensorPoly>& originals) {
    const std::size_t n = originals.size();
    if (n == 0 || originals.front().nvars() != static_cast<int>(n))
        throw std::invalid_argument("Jacobian determinant needs a square system");
    std::vector<std::vector<TensorPoly>> jac(n, std::vector<TensorPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            jac[i][j] = partial_derivative(originals[i], static_cast<int>(j));
    // Cofactor expansion over column masks; n stays small here.
    std::function<TensorPoly(std::size_t, unsigned)> det = [&](std::size_t row,
                                                               unsigned used) -> TensorPoly {
        if (row == n) return TensorPoly::constant(static_cast<int>(n), 1);
        TensorPoly acc = TensorPoly::constant(static_cast<int>(n), 0);
        int pos = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (used & (1u << j)) continue;
            TensorPoly term = jac[row][j] * det(row + 1, used | (1u << j));
            acc = (pos % 2 == 0) ? (acc + term) : (acc - term);
            ++pos;
        }
        return acc;
    };
    return det(0, 0).trimmed();
}

namespace {

/// Interval Gaussian elimination determinant sign; 0 when inconclusive.
int interval_det_sign(std::vector<std::vector<RatInterval>> m) {
    const std::size_t n = m.size();
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (std::size_t r = col; r < n; ++r) {
            if (m[r][col].excludes_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            sign = -sign;
        }
        if (sgn(m[col][col].lo) < 0) sign = -sign;
        const RatInterval& p = m[col][col];
        RatInterval inv_pivot(Rational(1) / p.hi, Rational(1) / p.lo);
        for (std::size_t r = col + 1; r < n; ++r) {
            RatInterval ratio = m[r][col] * inv_pivot;
            for (std::size_t c2 = col; c2 < n; ++c2)
                m[r][c2] = m[r][c2] - ratio * m[col][c2];
        }
    }
    return sign;
}

}  // namespace

bool jacobian_sign_constant(const std::vector<TensorPoly>& originals, const DomainBox& box,
                            const TensorPoly* det_jacobian) {
    const std::size_t n = originals.size();
    if (n == 0 || originals.front().nvars() != static_cast<int>(n))
        throw std::invalid_argument("Jacobian test needs a square system");
    if (!box.bounded()) return false;
    auto ivs = box_intervals(box);
    if (det_jacobian != nullptr)
        return interval_evaluate(*det_jacobian, ivs).excludes_zero();
    if (n <= 3) {
        TensorPoly det = jacobian_determinant(originals);
        return interval_evaluate(det, ivs).excludes_zero();
    }
    std::vector<std::vector<RatInterval>> m(n, std::vector<RatInterval>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] =
                interval_evaluate(partial_derivative(originals[i], static_cast<int>(j)), ivs);
    return interval_det_sign(std::move(m)) != 0;
}

TestVerdict inclusion_test(const std::vector<TensorPoly>& transformed,
                           const std::vector<TensorPoly>& originals, const Homography& map,
                           const TensorPoly* det_jacobian) {
    const std::size_t n = transformed.size();
    if (n == 0 || transformed.front().nvars() != static_cast<int>(n))
        throw std::invalid_argument("inclusion test needs a square system");
    if (!map.bounded()) return TestVerdict::unknown();
    for (const auto& f : transformed)
        if (f.is_zero()) return TestVerdict::unknown();
    if (!miranda_test(transformed)) return TestVerdict::unknown();
    if (!jacobian_sign_constant(originals, box_of(map), det_jacobian))
        return TestVerdict::unknown();
    return TestVerdict::unique_root();
}

}  // namespace cfroots
