#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace overqt {

using BigInt = mpz_class;

/* Exponent triple of one monomial c * q^q_ * t^t_ * u^u_.  t_ and u_ are
 * always >= 0; q_ may be negative only in a polynomial carrying the Laurent
 * flag (needed for terminating basic hypergeometric sums, nowhere else). */
struct Exponents {
    int q = 0;
    int t = 0;
    int u = 0;
    auto operator<=>(const Exponents&) const = default;
};

/* Sparse exact polynomial in q, t, u with big-integer coefficients.
 *
 * Terms are kept in a map ordered by (q, t, u) ascending; that order is the
 * canonical one for printing and JSON output.  Zero coefficients are never
 * stored.  Equality compares the term maps only; the Laurent flag is
 * bookkeeping, not part of the value. */
class MPoly {
  public:
    enum class Laurent { no, yes };

    MPoly() = default;

    static MPoly constant(BigInt c);
    static MPoly constant(long c) { return constant(BigInt(c)); }
    /* c * q^eq * t^et * u^eu.  Throws std::invalid_argument unless
     * et, eu >= 0 and (eq >= 0 or laurent == Laurent::yes). */
    static MPoly monomial(BigInt c, int eq, int et, int eu,
                          Laurent laurent = Laurent::no);
    static MPoly zero() { return MPoly(); }
    static MPoly one() { return constant(1); }
    static MPoly q(int e = 1) { return monomial(1, e, 0, 0); }
    static MPoly t(int e = 1) { return monomial(1, 0, e, 0); }
    static MPoly u(int e = 1) { return monomial(1, 0, 0, e); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool laurent() const { return laurent_; }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /* Coefficient of q^eq t^et u^eu (zero when the term is absent). */
    BigInt coeff(int eq, int et, int eu) const;
    /* The whole polynomial must be a constant; anything else throws. */
    BigInt as_constant() const;

    int min_q_degree() const;  // 0 for the zero polynomial
    int max_q_degree() const;
    int max_t_degree() const;
    int max_u_degree() const;

    /* Sub-polynomial in q,t made of the terms with u-exponent exactly eu,
     * with that exponent cleared. */
    MPoly coeff_of_u(int eu) const;
    /* Polynomial in t made of the terms with q-exponent exactly eq
     * (requires max_u_degree() == 0). */
    MPoly coeff_of_q(int eq) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly pow(unsigned e) const;

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  private:
    void add_term(const Exponents& e, const BigInt& c);

    std::map<Exponents, BigInt> terms_;
    bool laurent_ = false;
};

/* Partial variable assignment used by specialize().  Unset variables stay
 * symbolic. */
struct Assignment {
    std::optional<long> q;
    std::optional<long> t;
    std::optional<long> u;
};

/* Exact substitution of integers for some of q, t, u.  Substituting q = 0
 * into a polynomial holding a negative q-exponent throws
 * std::runtime_error("laurent-at-zero"); substituting any other value of
 * absolute size >= 2 for q in such a polynomial is not exact over the
 * integers and throws std::domain_error. */
MPoly specialize(const MPoly& p, const Assignment& at);
BigInt specialize_full(const MPoly& p, long q, long t, long u = 0);

/* Rename t to q.  The input must not mention q or u (used after a q = 1
 * specialization). */
MPoly rename_t_to_q(const MPoly& p);

/* Formal fraction of two MPoly values.  Never reduced; equality is decided
 * by cross-multiplication only. */
class RationalMPoly {
  public:
    RationalMPoly() : num_(), den_(MPoly::one()) {}
    RationalMPoly(MPoly num, MPoly den);
    static RationalMPoly from_poly(MPoly p) {
        return RationalMPoly(std::move(p), MPoly::one());
    }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    friend RationalMPoly operator+(const RationalMPoly& a,
                                   const RationalMPoly& b);
    friend RationalMPoly operator*(const RationalMPoly& a,
                                   const RationalMPoly& b);
    friend RationalMPoly operator-(const RationalMPoly& a,
                                   const RationalMPoly& b);

  private:
    MPoly num_, den_;
};

/* a/b == c/d as rational functions, i.e. a*d == c*b exactly. */
bool rat_eq(const RationalMPoly& a, const RationalMPoly& b);

}  // namespace overqt
