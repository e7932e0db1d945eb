#include "oreext/ore_poly.hpp"

#include "oreext/errors.hpp"

#include <stdexcept>
#include <utility>

namespace oreext {

namespace {
const BasePoly kZeroBase{};

// x * (sum_k c_k x^k) = sum_k (sigma(c_k) x^{k+1} + delta(c_k) x^k)
std::vector<BasePoly> left_multiply_by_x(const std::vector<BasePoly>& c, const OreAlgebra& algebra) {
    std::vector<BasePoly> out(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        out[k + 1] += algebra.apply_sigma(c[k]);
        out[k] += algebra.apply_delta(c[k]);
    }
    return out;
}
} // namespace

OrePoly::OrePoly(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
    if (!algebra_) throw std::invalid_argument("OrePoly requires an algebra");
}

OrePoly::OrePoly(AlgebraPtr algebra, std::vector<BasePoly> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
    if (!algebra_) throw std::invalid_argument("OrePoly requires an algebra");
    trim();
}

OrePoly OrePoly::constant(AlgebraPtr algebra, const Scalar& c) {
    return OrePoly(std::move(algebra), {BasePoly::constant(c)});
}

OrePoly OrePoly::from_base(AlgebraPtr algebra, BasePoly r) {
    return OrePoly(std::move(algebra), {std::move(r)});
}

OrePoly OrePoly::x(AlgebraPtr algebra) { return monomial(std::move(algebra), 1, 0, 1); }

OrePoly OrePoly::monomial(AlgebraPtr algebra, const Scalar& c, std::size_t y_power, std::size_t x_power) {
    std::vector<BasePoly> v(x_power + 1);
    v[x_power] = BasePoly::monomial(c, y_power);
    return OrePoly(std::move(algebra), std::move(v));
}

void OrePoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool OrePoly::is_scalar() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_[0].is_constant()); }

const BasePoly& OrePoly::coeff(std::size_t x_power) const {
    return x_power < coeffs_.size() ? coeffs_[x_power] : kZeroBase;
}

Degree OrePoly::max_y_degree() const {
    Degree d = Degree::bottom();
    for (const auto& c : coeffs_) d = max(d, c.degree());
    return d;
}

void require_same_algebra(const OrePoly& p, const OrePoly& q) {
    if (p.algebra_ptr() == q.algebra_ptr() || p.algebra() == q.algebra()) return;
    throw Error(ErrorKind::AlgebraMismatch,
                "operands belong to different algebras: " + p.algebra().describe() + " vs " + q.algebra().describe());
}

OrePoly& OrePoly::operator+=(const OrePoly& other) {
    require_same_algebra(*this, other);
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& other) {
    require_same_algebra(*this, other);
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

OrePoly& OrePoly::operator*=(const Scalar& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

OrePoly OrePoly::operator-() const {
    OrePoly r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

bool operator==(const OrePoly& p, const OrePoly& q) {
    if (p.algebra_ptr() != q.algebra_ptr() && !(p.algebra() == q.algebra())) return false;
    return p.coeffs_ == q.coeffs_;
}

OrePoly operator*(const OrePoly& p, const OrePoly& q) { return ore_mul(p, q); }

std::string OrePoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const auto& c = coeffs_[i].coeffs();
        for (std::size_t j = c.size(); j-- > 0;) {
            if (sgn(c[j]) == 0) continue;
            const bool negative = sgn(c[j]) < 0;
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string mono;
            if (j >= 1) mono = j == 1 ? "y" : "y^" + std::to_string(j);
            if (i >= 1) {
                if (!mono.empty()) mono += "*";
                mono += i == 1 ? "x" : "x^" + std::to_string(i);
            }
            const Scalar mag = abs(c[j]);
            if (mono.empty()) {
                out += mag.get_str();
            } else if (mag == 1) {
                out += mono;
            } else {
                out += mag.get_str() + "*" + mono;
            }
        }
    }
    return out;
}

OrePoly x_times(const BasePoly& r, const AlgebraPtr& algebra) {
    return OrePoly(algebra, left_multiply_by_x({r}, *algebra));
}

OrePoly ore_mul(const OrePoly& p, const OrePoly& q) {
    require_same_algebra(p, q);
    const OreAlgebra& algebra = p.algebra();
    if (p.is_zero() || q.is_zero()) return OrePoly(p.algebra_ptr());

    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    std::vector<BasePoly> out(a.size() + b.size() - 1);
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j].is_zero()) continue;
        // chain = x^i * b_j in normal form, for i = 0, 1, ...
        std::vector<BasePoly> chain{b[j]};
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i > 0) chain = left_multiply_by_x(chain, algebra);
            if (a[i].is_zero()) continue;
            for (std::size_t k = 0; k < chain.size(); ++k) {
                if (chain[k].is_zero()) continue;
                out[k + j] += a[i] * chain[k];
            }
        }
    }
    return OrePoly(p.algebra_ptr(), std::move(out));
}

OrePoly commutator(const OrePoly& p, const OrePoly& q) { return ore_mul(p, q) - ore_mul(q, p); }

OrePoly pow(const OrePoly& p, std::size_t k) {
    OrePoly result = OrePoly::constant(p.algebra_ptr(), 1);
    for (std::size_t i = 0; i < k; ++i) result = ore_mul(result, p);
    return result;
}

Degree chi(const OrePoly& p) {
    if (p.is_zero()) return Degree::bottom();
    return Degree(static_cast<std::int64_t>(p.coeffs().size() - 1));
}

const BasePoly& leading_coeff(const OrePoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::InvalidArgument, "leading coefficient of the zero operator");
    return p.coeffs().back();
}

} // namespace oreext
