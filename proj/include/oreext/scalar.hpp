#pragma once

#include <gmpxx.h>

#include <string>

namespace oreext {

/// Elements of the coefficient field K = Q. mpq_class keeps fractions in
/// lowest terms with a positive denominator after every operation.
using Scalar = mpq_class;
using BigInt = mpz_class;

inline std::string to_string(const Scalar& c) { return c.get_str(); }

} // namespace oreext
