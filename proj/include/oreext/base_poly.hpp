#pragma once

#include "oreext/degree.hpp"
#include "oreext/scalar.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace oreext {

/// Dense univariate polynomial over Q. Used for the coefficient ring K[y]
/// and, with a different variable name, for elements of K[a].
/// The highest stored coefficient is always nonzero; zero is the empty vector.
class BasePoly {
public:
    BasePoly() = default;
    explicit BasePoly(std::vector<Scalar> coeffs);

    static BasePoly constant(const Scalar& c);
    static BasePoly monomial(const Scalar& c, std::size_t power);
    static BasePoly variable() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Degree degree() const;
    /// Degree as a plain index; the zero polynomial must be handled by the caller.
    std::size_t degree_index() const;

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    const Scalar& coeff(std::size_t power) const;
    const Scalar& leading() const;

    BasePoly compose(const BasePoly& inner) const;
    Scalar evaluate(const Scalar& at) const;

    BasePoly& operator+=(const BasePoly& other);
    BasePoly& operator-=(const BasePoly& other);
    BasePoly& operator*=(const Scalar& c);

    friend BasePoly operator+(BasePoly p, const BasePoly& q) { return p += q; }
    friend BasePoly operator-(BasePoly p, const BasePoly& q) { return p -= q; }
    friend BasePoly operator*(const BasePoly& p, const BasePoly& q);
    friend BasePoly operator*(BasePoly p, const Scalar& c) { return p *= c; }
    friend BasePoly operator*(const Scalar& c, BasePoly p) { return p *= c; }
    BasePoly operator-() const;

    friend bool operator==(const BasePoly&, const BasePoly&) = default;

    /// Descending powers, e.g. "3*y^2 - 1/2*y + 1".
    std::string to_string(std::string_view var = "y") const;

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

BasePoly pow(const BasePoly& p, std::size_t k);

} // namespace oreext
