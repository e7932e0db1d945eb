#pragma once

#include "oracle/naive_ore.hpp"
#include "oreext/ore_poly.hpp"
#include "oreext/parser.hpp"

#include <cctype>
#include <string>
#include <string_view>
#include <utility>

namespace testing_support {

inline oreext::OrePoly op(std::string_view text, const oreext::AlgebraPtr& algebra) {
    return oreext::parse_operator(text, algebra);
}

inline oracle::YPoly to_oracle(const oreext::BasePoly& p) {
    oracle::YPoly r;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j)
        if (sgn(p.coeffs()[j]) != 0) r[j] = p.coeffs()[j];
    return r;
}

inline oracle::Op to_oracle(const oreext::OrePoly& p) {
    oracle::Op r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        for (std::size_t j = 0; j < p.coeffs()[i].coeffs().size(); ++j)
            if (sgn(p.coeffs()[i].coeffs()[j]) != 0) r[{i, j}] = p.coeffs()[i].coeffs()[j];
    return r;
}

inline oracle::Algebra to_oracle(const oreext::OreAlgebra& a) {
    return oracle::Algebra{to_oracle(a.sigma_y()), to_oracle(a.delta_y())};
}

/// Readable gtest parameter name for a (sigma_y, delta_y) pair, e.g. "sigma_y2_delta_1".
template <class Info>
std::string algebra_case_name(const Info& info) {
    auto clean = [](std::string_view text) {
        std::string out;
        for (char c : text) {
            if (std::isalnum(static_cast<unsigned char>(c))) out += c;
            else if (c == '-') out += "m";
            else if (c == '+') out += "p";
            else if (c == '/') out += "d";
        }
        return out;
    };
    return "sigma_" + clean(info.param.first) + "_delta_" + clean(info.param.second);
}

} // namespace testing_support
