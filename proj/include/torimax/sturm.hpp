#pragma once

#include "torimax/numeric.hpp"

#include <vector>

namespace torimax {

/// Dense univariate polynomial over Q: coeffs[i] is the z^i coefficient.
using RatPoly = std::vector<Rat>;

/// Strips leading zero coefficients. The zero polynomial becomes empty.
RatPoly poly_normalize(RatPoly p);

/// -1 for the zero polynomial.
int poly_degree(const RatPoly& p);

RatPoly poly_derivative(const RatPoly& p);

/// Remainder of num / den (den nonzero).
RatPoly poly_rem(RatPoly num, const RatPoly& den);

/// gcd up to a rational scalar (leading coefficient 1 on output).
RatPoly poly_gcd(RatPoly a, RatPoly b);

bool poly_squarefree(const RatPoly& p);

Rat poly_eval(const RatPoly& p, const Rat& x);

/// Number of distinct real roots (Sturm chain, sign variations at -inf/+inf).
int sturm_real_root_count(const RatPoly& p);

/// Number of distinct real roots in the half-open interval (a, b].
int sturm_real_root_count_interval(const RatPoly& p, const Rat& a, const Rat& b);

} // namespace torimax
