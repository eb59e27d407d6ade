#pragma once

#include "overqt/mpoly.hpp"

namespace overqt {

enum class PochSign { plus, minus };

/* Rising product prod_{j=0}^{k-1} (1 +/- a q^j).  The base a must be a single
 * monomial (possibly with a negative q-exponent on the Laurent path). */
MPoly pochhammer(const MPoly& a, int k, PochSign sign);
inline MPoly poch_plus(const MPoly& a, int k) {
    return pochhammer(a, k, PochSign::plus);
}
inline MPoly poch_minus(const MPoly& a, int k) {
    return pochhammer(a, k, PochSign::minus);
}

/* (q;q)_k = prod_{j=1}^{k} (1 - q^j). */
MPoly qfactorial(int k);

/* Gaussian polynomial [top choose bottom]_q, zero outside 0 <= bottom <= top.
 * Computed by the q-Pascal recurrence with memoization. */
MPoly gaussian(int top, int bottom);

/* Same value computed as (q;q)_top / ((q;q)_bottom (q;q)_{top-bottom}) by
 * exact univariate division; a nonzero remainder anywhere throws
 * std::runtime_error("division-check"). */
MPoly gaussian_by_division(int top, int bottom);

/* (q;q)_{a+b+c} / ((q;q)_a (q;q)_b (q;q)_c) for a,b,c >= 0. */
MPoly qmultinomial(int a, int b, int c);
MPoly qmultinomial_by_division(int a, int b, int c);

/* sum_{|j| <= jmax} (-1)^j q^{j^2}. */
MPoly truncated_theta(int jmax);

/* Exact quotient of two polynomials in q alone (no t, no u, no Laurent).
 * Throws std::runtime_error("division-check") if the division leaves a
 * remainder or hits a non-divisible leading coefficient. */
MPoly exact_div_q(const MPoly& num, const MPoly& den);

}  // namespace overqt
