#pragma once

#include <string>

#include "overqt/mpoly.hpp"

namespace overqt {

/* B(m,n): the generating function sum t^{overlines} q^{weight} over
 * overpartitions with largest part <= m and at most n parts.  Specializes to
 * the Gaussian polynomial [m+n choose n]_q at t = 0 and to the Delannoy
 * number D(m,n) at q = t = 1. */

enum class ObMethod {
    enumerate,  // direct overpartition enumeration (m*n budget guard)
    formula,    // sum_k t^k q^{k(k+1)/2} [m k]_q [m+n-k n-k]_q
    pascal1,    // B(m,n) = B(m,n-1) + q^n B(m-1,n) + t q^n B(m-1,n-1)
    pascal2,    // B(m,n) = B(m-1,n) + q^m B(m,n-1) + t q^m B(m-1,n-1)
    paths,      // weighted Delannoy path enumeration (m*n budget guard)
    hyper,      // sum_k q^{k(k+1)/2} prod_{j<k}(t+q^j) [m k]_q [n k]_q
    phi21       // terminating basic hypergeometric sum, certified rationally
};

ObMethod ob_method_from_string(const std::string& name);
std::string to_string(ObMethod m);

/* Memoized table filled by the pascal1 recurrence (the production method).
 * Entries are written once and never change. */
class OverBinomTable {
  public:
    const MPoly& at(int m, int n);
    /* B with the zero convention for negative indices. */
    MPoly at_or_zero(int m, int n);

  private:
    std::map<std::pair<int, int>, MPoly> memo_;
};

/* Compute B(m,n) by the chosen method (m, n >= 0).  enumerate and paths
 * throw std::runtime_error("method-too-expensive") when m*n exceeds the
 * budget (default 100, override via the OVERQT_MAX_CELLS environment
 * variable).  phi21 certifies the hypergeometric representation against the
 * pascal1 value by cross-multiplication and throws
 * std::runtime_error("identity-violation ...") if it fails. */
MPoly ob_compute(int m, int n, ObMethod method = ObMethod::pascal1);

/* Shared pascal1 table lookup with the zero convention; the table persists
 * across calls. */
MPoly ob_or_zero(int m, int n);

/* Coefficient of t^k q^N in B(m,n). */
BigInt ob_coefficient(int m, int n, int k, long N);

/* B(m,n) at q = 1 with t renamed to q (a q-analogue of D(m,n) refining by
 * diagonal steps). */
MPoly sagan_q_delannoy(int m, int n);

struct CrossCheckReport {
    bool pass = true;
    std::string witness;  // first disagreement, empty when pass
    long combinations_checked = 0;
};

/* All-methods agreement on 0 <= m <= max_m, 0 <= n <= max_n (enumerate and
 * paths only within their budget), plus symmetry B(m,n) = B(n,m), the
 * q-multinomial form of the closed formula, and the q = t = 1 Delannoy
 * specialization. */
CrossCheckReport cross_check(int max_m, int max_n);

}  // namespace overqt
