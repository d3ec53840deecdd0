#pragma once

#include "hhodge/rational.hpp"

namespace hhodge {

/// B_m = B_m(0), from sum_{j<=m} binom(m+1, j) B_j = 0.  Memoized per thread.
Rational bernoulli_number(unsigned m);

/// B_m(x) = sum_j binom(m, j) B_j x^{m-j}.  Memoized per thread on (m, x).
Rational bernoulli_poly(unsigned m, const Rational& x);

}  // namespace hhodge
