#pragma once
// High-precision reals (about 210 bits) for orbit computations.

#include "coreentropy/polyalg.hpp"

#include <boost/multiprecision/mpfr.hpp>

namespace ce {

using HP = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<64>,
                                         boost::multiprecision::et_off>;

HP to_hp(const BigInt& v);
// Newton refinement of a simple real root of p starting near guess.
HP refine_real_root(const IntPolynomial& p, double guess);
// Leading real root of p in high precision; 1 when no root exceeds 1.
HP growth_rate_hp(const IntPolynomial& p);

}  // namespace ce
