#include "oreext/base_poly.hpp"

#include <stdexcept>
#include <utility>

namespace oreext {

namespace {
const Scalar kZero{0};
}

BasePoly::BasePoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BasePoly BasePoly::constant(const Scalar& c) { return BasePoly(std::vector<Scalar>{c}); }

BasePoly BasePoly::monomial(const Scalar& c, std::size_t power) {
    std::vector<Scalar> v(power + 1);
    v[power] = c;
    return BasePoly(std::move(v));
}

void BasePoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Degree BasePoly::degree() const {
    if (is_zero()) return Degree::bottom();
    return Degree(static_cast<std::int64_t>(coeffs_.size() - 1));
}

std::size_t BasePoly::degree_index() const {
    if (is_zero()) throw std::logic_error("degree_index of the zero polynomial");
    return coeffs_.size() - 1;
}

const Scalar& BasePoly::coeff(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : kZero;
}

const Scalar& BasePoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BasePoly& BasePoly::operator+=(const BasePoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

BasePoly& BasePoly::operator-=(const BasePoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

BasePoly& BasePoly::operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

BasePoly operator*(const BasePoly& p, const BasePoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Scalar> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (sgn(p.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return BasePoly(std::move(out));
}

BasePoly BasePoly::operator-() const {
    BasePoly r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

BasePoly BasePoly::compose(const BasePoly& inner) const {
    // Horner: p(q) = (...(c_n q + c_{n-1}) q + ...) + c_0
    BasePoly result;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        result = result * inner;
        result += constant(*it);
    }
    return result;
}

Scalar BasePoly::evaluate(const Scalar& at) const {
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::string BasePoly::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Scalar& c = coeffs_[k];
        if (sgn(c) == 0) continue;
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Scalar mag = abs(c);
        std::string mono;
        if (k >= 1) {
            mono = std::string(var);
            if (k > 1) mono += "^" + std::to_string(k);
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str() + "*" + mono;
        }
    }
    return out;
}

BasePoly pow(const BasePoly& p, std::size_t k) {
    BasePoly result = BasePoly::constant(1);
    BasePoly base = p;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

} // namespace oreext
