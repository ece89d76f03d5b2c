#include "cfroots/tensor_poly.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>

namespace cfroots {

namespace {

std::size_t tensor_size(const std::vector<int>& degrees) {
    std::size_t total = 1;
    for (int d : degrees) {
        if (d < 0) throw std::invalid_argument("negative degree");
        total *= static_cast<std::size_t>(d) + 1;
    }
    return total;
}

std::vector<std::size_t> compute_strides(const std::vector<int>& degrees) {
    std::vector<std::size_t> strides(degrees.size(), 1);
    for (int k = static_cast<int>(degrees.size()) - 2; k >= 0; --k)
        strides[k] = strides[k + 1] * (static_cast<std::size_t>(degrees[k + 1]) + 1);
    return strides;
}

void check_axis(const TensorPoly& f, int axis) {
    if (axis < 0 || axis >= f.nvars()) throw std::out_of_range("axis out of range");
}

/// Visits every 1-D line along `axis`: calls fn(start, stride).
template <typename Fn>
void for_each_line(const std::vector<int>& degrees, int axis, Fn&& fn) {
    auto strides = compute_strides(degrees);
    std::size_t stride = strides[static_cast<std::size_t>(axis)];
    std::size_t len = static_cast<std::size_t>(degrees[static_cast<std::size_t>(axis)]) + 1;
    std::size_t block = stride * len;
    std::size_t total = tensor_size(degrees);
    for (std::size_t base = 0; base < total; base += block)
        for (std::size_t off = 0; off < stride; ++off) fn(base + off, stride);
}

}  // namespace

TensorPoly::TensorPoly(int nvars, std::vector<int> degrees)
    : nvars_(nvars), degrees_(std::move(degrees)) {
    if (nvars_ < 0 || degrees_.size() != static_cast<std::size_t>(nvars_))
        throw std::invalid_argument("degree vector does not match variable count");
    coeffs_.assign(tensor_size(degrees_), Integer(0));
}

TensorPoly::TensorPoly(int nvars, std::vector<int> degrees, std::vector<Integer> coeffs)
    : nvars_(nvars), degrees_(std::move(degrees)), coeffs_(std::move(coeffs)) {
    if (nvars_ < 0 || degrees_.size() != static_cast<std::size_t>(nvars_))
        throw std::invalid_argument("degree vector does not match variable count");
    if (coeffs_.size() != tensor_size(degrees_))
        throw std::invalid_argument("coefficient count does not match degrees");
}

TensorPoly TensorPoly::constant(int nvars, Integer c) {
    TensorPoly f(nvars, std::vector<int>(static_cast<std::size_t>(nvars), 0));
    f.coeffs_[0] = std::move(c);
    return f;
}

TensorPoly TensorPoly::variable(int nvars, int axis) {
    if (axis < 0 || axis >= nvars) throw std::out_of_range("axis out of range");
    std::vector<int> degrees(static_cast<std::size_t>(nvars), 0);
    degrees[static_cast<std::size_t>(axis)] = 1;
    TensorPoly f(nvars, degrees);
    f.coeffs_[1] = 1;  // index (0,..,1,..,0) is flat position 1 along that axis
    return f;
}

TensorPoly TensorPoly::from_terms(
    int nvars, const std::vector<std::pair<std::vector<int>, Integer>>& terms) {
    std::vector<int> degrees(static_cast<std::size_t>(nvars), 0);
    for (const auto& [exps, c] : terms) {
        if (exps.size() != static_cast<std::size_t>(nvars))
            throw std::invalid_argument("term exponent arity mismatch");
        if (c == 0) continue;
        for (std::size_t k = 0; k < exps.size(); ++k)
            degrees[k] = std::max(degrees[k], exps[k]);
    }
    TensorPoly f(nvars, degrees);
    for (const auto& [exps, c] : terms) f.coeffs_[f.flat_index(exps)] += c;
    return f.trimmed();
}

int TensorPoly::degree(int axis) const {
    check_axis(*this, axis);
    return degrees_[static_cast<std::size_t>(axis)];
}

std::size_t TensorPoly::flat_index(const std::vector<int>& index) const {
    if (index.size() != degrees_.size()) throw std::invalid_argument("index arity mismatch");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (index[k] < 0 || index[k] > degrees_[k]) throw std::out_of_range("index out of range");
        flat = flat * (static_cast<std::size_t>(degrees_[k]) + 1) +
               static_cast<std::size_t>(index[k]);
    }
    return flat;
}

const Integer& TensorPoly::coeff(const std::vector<int>& index) const {
    return coeffs_[flat_index(index)];
}

void TensorPoly::set_coeff(const std::vector<int>& index, Integer value) {
    coeffs_[flat_index(index)] = std::move(value);
}

bool TensorPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

TensorPoly TensorPoly::trimmed() const {
    std::vector<int> exact(degrees_.size(), 0);
    auto strides = compute_strides(degrees_);
    bool any = false;
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (coeffs_[flat] == 0) continue;
        any = true;
        std::size_t rem = flat;
        for (std::size_t k = 0; k < degrees_.size(); ++k) {
            int ik = static_cast<int>(rem / strides[k]);
            rem %= strides[k];
            exact[k] = std::max(exact[k], ik);
        }
    }
    if (!any) return TensorPoly(nvars_, std::vector<int>(degrees_.size(), 0));
    if (exact == degrees_) return *this;
    TensorPoly out(nvars_, exact);
    auto out_strides = compute_strides(exact);
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (coeffs_[flat] == 0) continue;
        std::size_t rem = flat, oflat = 0;
        for (std::size_t k = 0; k < degrees_.size(); ++k) {
            oflat += (rem / strides[k]) * out_strides[k];
            rem %= strides[k];
        }
        out.coeffs_[oflat] = coeffs_[flat];
    }
    return out;
}

TensorPoly TensorPoly::with_degrees(const std::vector<int>& degrees) const {
    if (degrees.size() != degrees_.size()) throw std::invalid_argument("degree arity mismatch");
    for (std::size_t k = 0; k < degrees.size(); ++k)
        if (degrees[k] < degrees_[k]) throw std::invalid_argument("cannot shrink declared degree");
    if (degrees == degrees_) return *this;
    TensorPoly out(nvars_, degrees);
    auto strides = compute_strides(degrees_);
    auto out_strides = compute_strides(degrees);
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (coeffs_[flat] == 0) continue;
        std::size_t rem = flat, oflat = 0;
        for (std::size_t k = 0; k < degrees_.size(); ++k) {
            oflat += (rem / strides[k]) * out_strides[k];
            rem %= strides[k];
        }
        out.coeffs_[oflat] = coeffs_[flat];
    }
    return out;
}

bool TensorPoly::operator==(const TensorPoly& other) const {
    if (nvars_ != other.nvars_) return false;
    TensorPoly a = trimmed(), b = other.trimmed();
    return a.degrees_ == b.degrees_ && a.coeffs_ == b.coeffs_;
}

TensorPoly TensorPoly::operator+(const TensorPoly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
    std::vector<int> degrees(degrees_.size());
    for (std::size_t k = 0; k < degrees.size(); ++k)
        degrees[k] = std::max(degrees_[k], other.degrees_[k]);
    TensorPoly a = with_degrees(degrees), b = other.with_degrees(degrees);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
}

TensorPoly TensorPoly::operator-() const {
    TensorPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

TensorPoly TensorPoly::operator-(const TensorPoly& other) const { return *this + (-other); }

TensorPoly TensorPoly::operator*(const TensorPoly& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("variable count mismatch");
    TensorPoly a = trimmed(), b = other.trimmed();
    if (a.is_zero() || b.is_zero())
        return TensorPoly(nvars_, std::vector<int>(degrees_.size(), 0));
    std::vector<int> degrees(a.degrees_.size());
    for (std::size_t k = 0; k < degrees.size(); ++k) degrees[k] = a.degrees_[k] + b.degrees_[k];
    TensorPoly out(nvars_, degrees);
    auto sa = compute_strides(a.degrees_), sb = compute_strides(b.degrees_),
         so = compute_strides(degrees);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        std::size_t rem_i = i, base = 0;
        for (std::size_t k = 0; k < degrees.size(); ++k) {
            base += (rem_i / sa[k]) * so[k];
            rem_i %= sa[k];
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            std::size_t rem_j = j, off = 0;
            for (std::size_t k = 0; k < degrees.size(); ++k) {
                off += (rem_j / sb[k]) * so[k];
                rem_j %= sb[k];
            }
            out.coeffs_[base + off] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TensorPoly TensorPoly::scaled(const Integer& c) const {
    TensorPoly out = *this;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

Integer TensorPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void TensorPoly::divide_content(const Integer& g) {
    if (g == 0 || g == 1) return;
    for (auto& c : coeffs_) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        c = q;
    }
}

TensorPoly shift_axis(const TensorPoly& f, int axis, const Integer& c) {
    check_axis(f, axis);
    if (sgn(c) < 0) throw std::invalid_argument("shift by negative amount");
    TensorPoly out = f;
    if (c == 0) return out;
    int d = f.degrees_[static_cast<std::size_t>(axis)];
    // One univariate Taylor shift per coefficient line (synthetic division).
    for_each_line(f.degrees_, axis, [&](std::size_t start, std::size_t stride) {
        auto& a = out.coeffs_;
        for (int i = 0; i < d; ++i)
            for (int j = d - 1; j >= i; --j)
                a[start + static_cast<std::size_t>(j) * stride] +=
                    c * a[start + static_cast<std::size_t>(j + 1) * stride];
    });
    return out;
}

TensorPoly shift_all(const TensorPoly& f, const std::vector<Integer>& u) {
    if (u.size() != static_cast<std::size_t>(f.nvars()))
        throw std::invalid_argument("shift vector arity mismatch");
    // Smaller shift amounts first: keeps intermediate bit growth lower.
    std::vector<int> order(u.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return mpz_sizeinbase(u[static_cast<std::size_t>(i)].get_mpz_t(), 2) <
               mpz_sizeinbase(u[static_cast<std::size_t>(j)].get_mpz_t(), 2);
    });
    TensorPoly out = f;
    for (int k : order)
        if (u[static_cast<std::size_t>(k)] != 0)
            out = shift_axis(out, k, u[static_cast<std::size_t>(k)]);
    return out;
}

TensorPoly reciprocal_axis(const TensorPoly& f, int axis) {
    check_axis(f, axis);
    TensorPoly out = f;
    int d = f.degrees_[static_cast<std::size_t>(axis)];
    for_each_line(f.degrees_, axis, [&](std::size_t start, std::size_t stride) {
        for (int i = 0, j = d; i < j; ++i, --j)
            std::swap(out.coeffs_[start + static_cast<std::size_t>(i) * stride],
                      out.coeffs_[start + static_cast<std::size_t>(j) * stride]);
    });
    return out;
}

TensorPoly contract_axis(const TensorPoly& f, int axis, const Integer& c) {
    check_axis(f, axis);
    if (sgn(c) <= 0) throw std::invalid_argument("contraction factor must be positive");
    TensorPoly out = f;
    if (c == 1) return out;
    // Incremental powers: one multiplication per coefficient.
    auto strides = compute_strides(f.degrees_);
    std::size_t stride = strides[static_cast<std::size_t>(axis)];
    int d = f.degrees_[static_cast<std::size_t>(axis)];
    std::size_t block = stride * (static_cast<std::size_t>(d) + 1);
    Integer p = 1;
    for (int i = 1; i <= d; ++i) {
        p *= c;
        for (std::size_t base = 0; base < out.coeffs_.size(); base += block)
            for (std::size_t off = 0; off < stride; ++off)
                out.coeffs_[base + static_cast<std::size_t>(i) * stride + off] *= p;
    }
    return out;
}

TensorPoly partial_derivative(const TensorPoly& f, int axis) {
    check_axis(f, axis);
    int d = f.degrees_[static_cast<std::size_t>(axis)];
    if (d == 0) return TensorPoly(f.nvars_, std::vector<int>(f.degrees_.size(), 0));
    std::vector<int> degrees = f.degrees_;
    degrees[static_cast<std::size_t>(axis)] = d - 1;
    TensorPoly out(f.nvars_, degrees);
    auto sf = compute_strides(f.degrees_), so = compute_strides(degrees);
    std::size_t stride = sf[static_cast<std::size_t>(axis)];
    std::size_t ostride = so[static_cast<std::size_t>(axis)];
    std::size_t block = stride * (static_cast<std::size_t>(d) + 1);
    std::size_t oblock = ostride * static_cast<std::size_t>(d);
    std::size_t nblocks = f.coeffs_.size() / block;
    for (std::size_t b = 0; b < nblocks; ++b)
        for (int i = 1; i <= d; ++i)
            for (std::size_t off = 0; off < stride; ++off)
                out.coeffs_[b * oblock + static_cast<std::size_t>(i - 1) * ostride + off] =
                    Integer(i) * f.coeffs_[b * block + static_cast<std::size_t>(i) * stride + off];
    return out;
}

namespace {

TensorPoly extract_slab(const TensorPoly& f, int axis, int slab) {
    std::vector<int> degrees;
    degrees.reserve(f.degrees().size() - 1);
    for (std::size_t k = 0; k < f.degrees().size(); ++k)
        if (static_cast<int>(k) != axis) degrees.push_back(f.degrees()[k]);
    auto sf = compute_strides(f.degrees());
    std::size_t stride = sf[static_cast<std::size_t>(axis)];
    int d = f.degrees()[static_cast<std::size_t>(axis)];
    std::size_t block = stride * (static_cast<std::size_t>(d) + 1);
    std::size_t nblocks = f.coeffs().size() / block;
    std::vector<Integer> out;
    out.reserve(nblocks * stride);
    for (std::size_t b = 0; b < nblocks; ++b)
        for (std::size_t off = 0; off < stride; ++off)
            out.push_back(f.coeffs()[b * block + static_cast<std::size_t>(slab) * stride + off]);
    return TensorPoly(f.nvars() - 1, degrees, std::move(out));
}

}  // namespace

TensorPoly face_lower(const TensorPoly& f, int axis) {
    check_axis(f, axis);
    return extract_slab(f, axis, 0);
}

TensorPoly face_upper(const TensorPoly& f, int axis) {
    check_axis(f, axis);
    return extract_slab(f, axis, f.degrees()[static_cast<std::size_t>(axis)]);
}

SignSummary sign_summary(const TensorPoly& f) {
    bool pos = false, neg = false;
    for (const auto& c : f.coeffs()) {
        int s = sgn(c);
        if (s > 0) pos = true;
        else if (s < 0) neg = true;
        if (pos && neg) return SignSummary::Mixed;
    }
    if (!pos && !neg) return SignSummary::Zero;
    return pos ? SignSummary::AllNonneg : SignSummary::AllNonpos;
}

Rational evaluate(const TensorPoly& f, const std::vector<Rational>& point) {
    if (point.size() != static_cast<std::size_t>(f.nvars()))
        throw std::invalid_argument("evaluation point arity mismatch");
    // Horner along the last axis, collapsing one dimension at a time.
    std::vector<Rational> work(f.coeffs().begin(), f.coeffs().end());
    for (int k = f.nvars() - 1; k >= 0; --k) {
        std::size_t len = static_cast<std::size_t>(f.degrees()[static_cast<std::size_t>(k)]) + 1;
        std::size_t lines = work.size() / len;
        std::vector<Rational> next(lines);
        const Rational& x = point[static_cast<std::size_t>(k)];
        for (std::size_t ln = 0; ln < lines; ++ln) {
            Rational acc = work[ln * len + len - 1];
            for (std::size_t i = len - 1; i-- > 0;) acc = acc * x + work[ln * len + i];
            next[ln] = acc;
        }
        work.swap(next);
    }
    return work[0];
}

Integer evaluate_int(const TensorPoly& f, const std::vector<Integer>& point) {
    if (point.size() != static_cast<std::size_t>(f.nvars()))
        throw std::invalid_argument("evaluation point arity mismatch");
    std::vector<Integer> work(f.coeffs().begin(), f.coeffs().end());
    for (int k = f.nvars() - 1; k >= 0; --k) {
        std::size_t len = static_cast<std::size_t>(f.degrees()[static_cast<std::size_t>(k)]) + 1;
        std::size_t lines = work.size() / len;
        std::vector<Integer> next(lines);
        const Integer& x = point[static_cast<std::size_t>(k)];
        for (std::size_t ln = 0; ln < lines; ++ln) {
            Integer acc = work[ln * len + len - 1];
            for (std::size_t i = len - 1; i-- > 0;) acc = acc * x + work[ln * len + i];
            next[ln] = acc;
        }
        work.swap(next);
    }
    return work[0];
}

RatInterval interval_evaluate(const TensorPoly& f, const std::vector<RatInterval>& box) {
    if (box.size() != static_cast<std::size_t>(f.nvars()))
        throw std::invalid_argument("box arity mismatch");
    // Monomial-wise: sum of coeff * prod of axis interval powers.
    std::vector<std::vector<RatInterval>> powers(box.size());
    for (std::size_t k = 0; k < box.size(); ++k) {
        int d = f.degrees()[k];
        powers[k].resize(static_cast<std::size_t>(d) + 1);
        powers[k][0] = RatInterval::point(Rational(1));
        for (int i = 1; i <= d; ++i)
            powers[k][static_cast<std::size_t>(i)] = powers[k][static_cast<std::size_t>(i - 1)] * box[k];
    }
    auto strides = compute_strides(f.degrees());
    RatInterval sum = RatInterval::point(Rational(0));
    for (std::size_t flat = 0; flat < f.coeffs().size(); ++flat) {
        const Integer& c = f.coeffs()[flat];
        if (c == 0) continue;
        RatInterval term = RatInterval::point(Rational(c));
        std::size_t rem = flat;
        for (std::size_t k = 0; k < box.size(); ++k) {
            std::size_t ik = rem / strides[k];
            rem %= strides[k];
            term = term * powers[k][ik];
        }
        sum = sum + term;
    }
    return sum;
}

TensorPoly mobius_axis(const TensorPoly& f, int axis, const Integer& a, const Integer& b,
                       const Integer& c, const Integer& d) {
    check_axis(f, axis);
    if (a * d - b * c == 0) throw std::invalid_argument("singular axis map");
    int deg = f.degrees_[static_cast<std::size_t>(axis)];
    std::size_t len = static_cast<std::size_t>(deg) + 1;
    // Powers of (c x + d), low-to-high coefficients.
    std::vector<std::vector<Integer>> powq(len);
    powq[0] = {Integer(1)};
    for (std::size_t j = 1; j < len; ++j) {
        powq[j].assign(j + 1, Integer(0));
        for (std::size_t i = 0; i < j; ++i) {
            powq[j][i] += d * powq[j - 1][i];
            powq[j][i + 1] += c * powq[j - 1][i];
        }
    }
    TensorPoly out = f;
    std::vector<Integer> line(len), res(len), tmp(len);
    for_each_line(f.degrees_, axis, [&](std::size_t start, std::size_t stride) {
        for (std::size_t i = 0; i < len; ++i)
            line[i] = f.coeffs_[start + i * stride];
        // Horner in (a x + b) with (c x + d)-power padding.
        for (auto& r : res) r = 0;
        res[0] = line[len - 1];
        std::size_t reslen = 1;
        for (std::size_t i = len - 1; i-- > 0;) {
            // res <- res * (a x + b) + line[i] * powq[len-1-i]
            for (auto& t : tmp) t = 0;
            for (std::size_t j = 0; j < reslen; ++j) {
                tmp[j] += b * res[j];
                tmp[j + 1] += a * res[j];
            }
            ++reslen;
            const auto& q = powq[len - 1 - i];
            if (line[i] != 0)
                for (std::size_t j = 0; j < q.size(); ++j) tmp[j] += line[i] * q[j];
            std::swap(res, tmp);
        }
        for (std::size_t i = 0; i < len; ++i)
            out.coeffs_[start + i * stride] = res[i];
    });
    return out;
}

TensorPoly scale_powers_of_two(const TensorPoly& f, unsigned long l) {
    if (l == 0) return f;
    TensorPoly out = f;
    auto strides = compute_strides(f.degrees_);
    unsigned long total_degree = 0;
    for (int d : f.degrees_) total_degree += static_cast<unsigned long>(d);
    for (std::size_t flat = 0; flat < out.coeffs_.size(); ++flat) {
        if (out.coeffs_[flat] == 0) continue;
        std::size_t rem = flat;
        unsigned long isum = 0;
        for (std::size_t k = 0; k < f.degrees_.size(); ++k) {
            isum += static_cast<unsigned long>(rem / strides[k]);
            rem %= strides[k];
        }
        mpz_mul_2exp(out.coeffs_[flat].get_mpz_t(), out.coeffs_[flat].get_mpz_t(),
                     l * (total_degree - isum));
    }
    return out;
}

}  // namespace cfroots
