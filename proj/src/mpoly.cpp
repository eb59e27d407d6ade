#include "overqt/mpoly.hpp"

#include <utility>

namespace overqt {

MPoly MPoly::constant(BigInt c) {
    MPoly p;
    p.add_term(Exponents{0, 0, 0}, c);
    return p;
}

MPoly MPoly::monomial(BigInt c, int eq, int et, int eu, Laurent laurent) {
    if (et < 0 || eu < 0)
        throw std::invalid_argument("negative t/u exponent in monomial");
    if (eq < 0 && laurent == Laurent::no)
        throw std::invalid_argument(
            "negative q exponent requires the Laurent flag");
    MPoly p;
    p.laurent_ = (laurent == Laurent::yes);
    p.add_term(Exponents{eq, et, eu}, c);
    return p;
}

bool MPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0} &&
           terms_.begin()->second == 1;
}

BigInt MPoly::coeff(int eq, int et, int eu) const {
    auto it = terms_.find(Exponents{eq, et, eu});
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt MPoly::as_constant() const {
    if (terms_.empty()) return BigInt(0);
    if (terms_.size() != 1 || !(terms_.begin()->first == Exponents{0, 0, 0}))
        throw std::invalid_argument("polynomial is not a constant");
    return terms_.begin()->second;
}

int MPoly::min_q_degree() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first.q;  // map is ordered by q first
}

int MPoly::max_q_degree() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.q;
}

int MPoly::max_t_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.t);
    return d;
}

int MPoly::max_u_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.u);
    return d;
}

MPoly MPoly::coeff_of_u(int eu) const {
    MPoly r;
    r.laurent_ = laurent_;
    for (const auto& [e, c] : terms_)
        if (e.u == eu) r.add_term(Exponents{e.q, e.t, 0}, c);
    return r;
}

MPoly MPoly::coeff_of_q(int eq) const {
    if (max_u_degree() != 0)
        throw std::invalid_argument("coeff_of_q needs a u-free polynomial");
    MPoly r;
    for (const auto& [e, c] : terms_)
        if (e.q == eq) r.add_term(Exponents{0, e.t, 0}, c);
    return r;
}

void MPoly::add_term(const Exponents& e, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    r.laurent_ = laurent_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    laurent_ = laurent_ || o.laurent_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    laurent_ = laurent_ || o.laurent_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    r.laurent_ = a.laurent_ || b.laurent_;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(Exponents{ea.q + eb.q, ea.t + eb.t, ea.u + eb.u},
                       ca * cb);
    return r;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly r = MPoly::one();
    MPoly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

namespace {

/* val^e as an exact integer.  Negative e is only exact for |val| = 1; val=0
 * with e<0 is the Laurent-at-zero error. */
BigInt int_pow(long val, int e) {
    if (e >= 0) {
        BigInt r, b(val);
        mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned>(e));
        return r;
    }
    if (val == 0) throw std::runtime_error("laurent-at-zero");
    if (val == 1) return BigInt(1);
    if (val == -1) return (e % 2 == 0) ? BigInt(1) : BigInt(-1);
    throw std::domain_error(
        "negative q exponent with |q| >= 2 is not an integer substitution");
}

}  // namespace

MPoly specialize(const MPoly& p, const Assignment& at) {
    MPoly r;
    for (const auto& [e, c] : p.terms()) {
        BigInt nc = c;
        Exponents ne = e;
        if (at.q) {
            nc *= int_pow(*at.q, e.q);
            ne.q = 0;
        }
        if (at.t) {
            nc *= int_pow(*at.t, e.t);
            ne.t = 0;
        }
        if (at.u) {
            nc *= int_pow(*at.u, e.u);
            ne.u = 0;
        }
        if (nc == 0) continue;
        r += MPoly::monomial(nc, ne.q, ne.t, ne.u,
                             ne.q < 0 ? MPoly::Laurent::yes
                                      : MPoly::Laurent::no);
    }
    return r;
}

BigInt specialize_full(const MPoly& p, long q, long t, long u) {
    Assignment at;
    at.q = q;
    at.t = t;
    at.u = u;
    return specialize(p, at).as_constant();
}

MPoly rename_t_to_q(const MPoly& p) {
    MPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e.q != 0 || e.u != 0)
            throw std::invalid_argument(
                "rename_t_to_q needs a polynomial in t alone");
        r += MPoly::monomial(c, e.t, 0, 0);
    }
    return r;
}

RationalMPoly::RationalMPoly(MPoly num, MPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::invalid_argument("zero denominator in RationalMPoly");
}

RationalMPoly operator+(const RationalMPoly& a, const RationalMPoly& b) {
    return RationalMPoly(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalMPoly operator-(const RationalMPoly& a, const RationalMPoly& b) {
    return RationalMPoly(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalMPoly operator*(const RationalMPoly& a, const RationalMPoly& b) {
    return RationalMPoly(a.num_ * b.num_, a.den_ * b.den_);
}

bool rat_eq(const RationalMPoly& a, const RationalMPoly& b) {
    return a.num() * b.den() == b.num() * a.den();
}

}  // namespace overqt
