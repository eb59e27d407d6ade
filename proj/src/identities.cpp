#include "overqt/identities.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "overqt/delannoy.hpp"
#include "overqt/io.hpp"
#include "overqt/overbinomial.hpp"
#include "overqt/qfunctions.hpp"
#include "overqt/useries.hpp"

namespace overqt {

namespace {

std::string term_text(const Exponents& e, const BigInt& c) {
    std::ostringstream os;
    os << "coefficient of q^" << e.q << " t^" << e.t << " u^" << e.u << " is "
       << c.get_str();
    return os.str();
}

/* Smallest term of a-b in exponent order, or empty when equal. */
std::string first_difference(const MPoly& a, const MPoly& b) {
    MPoly d = a - b;
    if (d.is_zero()) return {};
    const auto& [e, c] = *d.terms().begin();
    return term_text(e, c);
}

std::string first_difference(const USeries& a, const USeries& b) {
    int order = std::min(a.order(), b.order());
    for (int e = 0; e <= order; ++e)
        if (!(a.coeff(e) == b.coeff(e))) {
            MPoly d = a.coeff(e) - b.coeff(e);
            const auto& [ex, c] = *d.terms().begin();
            Exponents shifted = ex;
            shifted.u = e;
            return term_text(shifted, c);
        }
    return {};
}

std::string first_negative(const MPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c < 0) return term_text(e, c);
    return {};
}

MPoly uq_pow(int e) { return MPoly::monomial(1, e, 0, e); }

/* Product (1-uq^{lo+1})(1-uq^{lo+2})...(1-uq^n): the factors that extend a
 * length-`lo` falling product to length n. */
MPoly minus_tail(int lo, int n) {
    MPoly r = MPoly::one();
    for (int i = lo; i < n; ++i)
        r = r - r * MPoly::monomial(1, i + 1, 0, 1);
    return r;
}

const MPoly kTUQ = MPoly::monomial(1, 1, 1, 1);
const MPoly kTUQ2 = MPoly::monomial(1, 2, 1, 1);
const MPoly kUQ = MPoly::monomial(1, 1, 0, 1);

struct Timer {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start)
            .count();
    }
};

void finish(IdentityReport& rep, const Timer& timer, std::string witness,
            std::string detail = {}) {
    if (!witness.empty()) {
        rep.verified = false;
        rep.witness = std::move(witness);
    } else {
        rep.detail = std::move(detail);
    }
    rep.elapsed_seconds = timer.seconds();
}

std::string normalize_id(std::string id) {
    for (char& ch : id)
        if (ch == '-') ch = '_';
    return id;
}

MPoly ob_t1(int m, int n) {
    Assignment at;
    at.t = 1;
    return specialize(ob_or_zero(m, n), at);
}

}  // namespace

IdentityReport verify_series_identity(const std::string& raw_id, int n,
                                      int trunc) {
    Timer timer;
    const std::string id = normalize_id(raw_id);
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (trunc < 1) throw std::invalid_argument("trunc must be at least 1");
    IdentityReport rep;
    rep.identity_id = id;
    rep.parameters = "n=" + std::to_string(n) + " trunc=" +
                     std::to_string(trunc);

    /* The column series: sum over k of B(n-1,k) u^k q^k. */
    auto column = [&] {
        USeries s(trunc);
        for (int k = 0; k <= trunc; ++k)
            s += USeries::from_poly(ob_or_zero(n - 1, k) * uq_pow(k), trunc);
        return s;
    };

    const std::string order_note =
        "series agree through u-order " + std::to_string(trunc);
    if (id == "fin_qbinom") {
        USeries rhs =
            useries_ratio(poch_plus(kTUQ2, n - 1), poch_minus(kUQ, n), trunc);
        finish(rep, timer, first_difference(column(), rhs), order_note);
    } else if (id == "fin_qbi") {
        USeries lhs =
            useries_ratio(poch_plus(kTUQ, n), poch_minus(kUQ, n), trunc);
        USeries rhs = USeries::from_poly(MPoly::one(), trunc);
        for (int k = 1; k <= trunc; ++k)
            rhs += USeries::from_poly(
                (ob_or_zero(n - 1, k) + MPoly::t() * ob_or_zero(n - 1, k - 1)) *
                    uq_pow(k),
                trunc);
        finish(rep, timer, first_difference(lhs, rhs), order_note);
    } else if (id == "fin_rogers_fine") {
        USeries rhs(trunc);
        for (int k = 0; k <= std::min(n - 1, trunc); ++k) {
            MPoly head = MPoly::monomial(1, k * k + k, 0, k) *
                         poch_plus(kTUQ2, k) *
                         (ob_or_zero(n - 1 - k, k) +
                          MPoly::monomial(1, 2 * k + 2, 1, 1) *
                              ob_or_zero(n - 2 - k, k));
            rhs += useries_ratio(head, poch_minus(kUQ, k + 1), trunc);
        }
        finish(rep, timer, first_difference(column(), rhs), order_note);
    } else {
        throw std::invalid_argument("unknown series identity: " + raw_id);
    }
    return rep;
}

IdentityReport verify_exact_identity(const std::string& raw_id,
                                     const IdentityParams& p) {
    Timer timer;
    const std::string id = normalize_id(raw_id);
    IdentityReport rep;
    rep.identity_id = id;

    if (id == "fin_lebesgue" || id == "thm43") {
        int n = p.n;
        if (n < 1) throw std::invalid_argument("n must be at least 1");
        rep.parameters = "n=" + std::to_string(n);
        MPoly lhs_cleared, rhs_cleared;
        if (id == "fin_lebesgue") {
            lhs_cleared = poch_minus(kUQ, n);
            for (int j = 1;; ++j) {
                MPoly below = ob_or_zero(n - j, j - 1);
                MPoly beside = ob_or_zero(n - j, j);
                if (below.is_zero() && beside.is_zero()) break;
                MPoly coupled =
                    MPoly::t() * below * poch_plus(kTUQ, j - 1) *
                        minus_tail(j - 1, n) +
                    beside * poch_plus(kTUQ, j) * minus_tail(j, n);
                lhs_cleared += coupled * MPoly::monomial(1, j * j, 0, j);
            }
            rhs_cleared = poch_plus(kTUQ, n);
        } else {
            lhs_cleared = poch_plus(kTUQ, n);
            rhs_cleared = poch_minus(kUQ, n);
            for (int m = 1; m <= n; ++m) {
                MPoly even_part = (ob_or_zero(n - m - 1, 2 * m) +
                                   MPoly::t() * ob_or_zero(n - m - 1,
                                                           2 * m - 1)) *
                                  MPoly::monomial(1, 2 * m * m + 2 * m, 0,
                                                  2 * m);
                MPoly odd_plain =
                    ob_or_zero(n - m, 2 * m - 1) *
                    MPoly::monomial(1, 2 * m * m - m, 0, 2 * m - 1);
                rhs_cleared += (even_part + odd_plain) * poch_plus(kTUQ, m) *
                               minus_tail(m, n);
                rhs_cleared += MPoly::t() * ob_or_zero(n - m, 2 * m - 2) *
                               MPoly::monomial(1, 2 * m * m - m, 0,
                                               2 * m - 1) *
                               poch_plus(kTUQ, m - 1) * minus_tail(m - 1, n);
            }
        }
        bool same = rat_eq(RationalMPoly(lhs_cleared, poch_minus(kUQ, n)),
                           RationalMPoly(rhs_cleared, poch_minus(kUQ, n)));
        finish(rep, timer,
               same ? "" : first_difference(lhs_cleared, rhs_cleared),
               "cleared forms agree as rational functions");
    } else if (id == "prop41") {
        int m = p.m, n = p.n;
        if (m < 1 || n < 1)
            throw std::invalid_argument("m and n must be at least 1");
        rep.parameters = "m=" + std::to_string(m) + " n=" + std::to_string(n);
        MPoly rhs = MPoly::one();
        for (int j = 1; j <= n; ++j)
            rhs += MPoly::q(j) * (ob_or_zero(m, j) +
                                  MPoly::t() * ob_or_zero(m, j - 1));
        finish(rep, timer, first_difference(ob_or_zero(n, m + 1), rhs),
               "polynomials agree");
    } else if (id == "prop42") {
        int m = p.m, n = p.n, h = p.h;
        if (h < 0 || m < h || n < h)
            throw std::invalid_argument("need m >= h >= 0 and n >= h");
        rep.parameters = "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                         " h=" + std::to_string(h);
        MPoly lhs;
        for (int k = 0; k <= h; ++k) {
            MPoly plain = ob_or_zero(n - k, k) *
                          ob_or_zero(m - h + k, h - k);
            MPoly marked = MPoly::t() * ob_or_zero(n - 1 - k, k) *
                           ob_or_zero(m - h + k, h - k - 1);
            lhs += MPoly::q((n - k) * (h - k)) * (plain + marked);
        }
        finish(rep, timer,
               first_difference(lhs, ob_or_zero(m + n - h, h)),
               "polynomials agree");
    } else if (id == "phi21_rep") {
        int m = p.m, n = p.n;
        if (m < 0 || n < 0)
            throw std::invalid_argument("m and n must be nonnegative");
        rep.parameters = "m=" + std::to_string(m) + " n=" + std::to_string(n);
        std::string witness;
        try {
            ob_compute(m, n, ObMethod::phi21);
        } catch (const std::runtime_error& e) {
            witness = e.what();
        }
        finish(rep, timer, witness,
               "hypergeometric sum certified against the recurrence value");
    } else {
        throw std::invalid_argument("unknown exact identity: " + raw_id);
    }
    return rep;
}

IdentityReport verify_theta(const std::string& raw_id, int n) {
    Timer timer;
    const std::string id = normalize_id(raw_id);
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    IdentityReport rep;
    rep.identity_id = id;
    rep.parameters = "n=" + std::to_string(n);

    if (id == "fin_theta") {
        MPoly lhs;
        for (int k = 0; k <= n; ++k) {
            MPoly term = ob_t1(n - k, k);
            lhs += (k % 2 == 0) ? term : -term;
        }
        MPoly rhs = (n % 2 == 1) ? MPoly::zero() : truncated_theta(n / 2);
        finish(rep, timer, first_difference(lhs, rhs),
               "both sides = " + to_string(rhs));
    } else if (id == "fine_cor") {
        MPoly lhs = MPoly::one();
        for (int k = 1; k <= n; ++k) {
            MPoly pair = ob_t1(n - k, k) + ob_t1(n - k, k - 1);
            lhs += MPoly::monomial(k % 2 == 0 ? 1 : -1, k, 0, 0) * pair;
        }
        MPoly rhs = truncated_theta((n + 1) / 2);
        finish(rep, timer, first_difference(lhs, rhs),
               "both sides = " + to_string(rhs));
    } else if (id == "multinomial_form") {
        MPoly rhs;
        for (int j = 0; j <= n - 1; ++j) {
            MPoly inner;
            for (int k = 0; k <= j; ++k)
                inner += MPoly::q(k * (k + 1) / 2) * gaussian(2 * n - k, j) *
                         gaussian(j, k);
            rhs += MPoly::constant(j % 2 == 0 ? 2 : -2) * inner;
        }
        MPoly last;
        for (int k = 0; k <= n; ++k)
            last += MPoly::q(k * (k + 1) / 2) * gaussian(2 * n - k, n) *
                    gaussian(n, k);
        rhs += MPoly::constant(n % 2 == 0 ? 1 : -1) * last;
        MPoly lhs = truncated_theta(n);
        finish(rep, timer, first_difference(lhs, rhs),
               "both sides = " + to_string(lhs));
    } else if (id == "delannoy_alternating") {
        BigInt lhs = 0;
        for (int k = 0; k <= n; ++k) {
            BigInt d = delannoy_number(n - k, k);
            lhs += (k % 2 == 0) ? d : -d;
        }
        BigInt rhs = (n % 2 == 1) ? 0 : (n % 4 == 0 ? 1 : -1);
        std::string witness;
        if (lhs != rhs)
            witness = "sum is " + lhs.get_str() + ", expected " +
                      rhs.get_str();
        finish(rep, timer, witness, "both sides = " + rhs.get_str());
    } else {
        throw std::invalid_argument("unknown theta identity: " + raw_id);
    }
    return rep;
}

IdentityReport verify_nonnegativity(const std::string& raw_id, int n, int k,
                                    int l, int r) {
    Timer timer;
    const std::string id = normalize_id(raw_id);
    IdentityReport rep;
    rep.identity_id = id;

    /* Index pairs (m1,k1) and (m2,k2) such that the difference is
     * B(m1,k1)B(m2,k2) - B(m1',k1')B(m2',k2'). */
    int k2 = -1, r_used = 0;
    if (id == "qlog_general" || id == "cor2") {
        if (!(0 < k && k <= l && l < n))
            throw std::invalid_argument("bad-indices: need 0 < k <= l < n");
        k2 = l;
        rep.parameters = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " l=" + std::to_string(l);
    } else if (id == "qlog_square") {
        if (!(0 < k && k < n))
            throw std::invalid_argument("bad-indices: need 0 < k < n");
        k2 = k;
        rep.parameters = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    } else if (id == "butler_r") {
        if (!(0 <= k - r && k <= l && l + r <= n && r >= 0))
            throw std::invalid_argument(
                "bad-indices: need 0 <= k-r <= k <= l <= l+r <= n");
        k2 = l;
        r_used = r;
        rep.parameters = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " l=" + std::to_string(l) + " r=" + std::to_string(r);
    } else {
        throw std::invalid_argument("unknown nonnegativity identity: " +
                                    raw_id);
    }

    struct Factor {
        int m, c;
    };
    Factor a1{n - k, k}, a2{n - k2, k2}, b1{}, b2{};
    if (id == "qlog_general" || id == "qlog_square") {
        b1 = {n - k + 1, k - 1};
        b2 = {n - k2 - 1, k2 + 1};
    } else if (id == "cor2") {
        b1 = {n - k, k - 1};
        b2 = {n - k2, k2 + 1};
    } else {
        b1 = {n - k + r_used, k - r_used};
        b2 = {n - k2 - r_used, k2 + r_used};
    }

    MPoly diff = ob_or_zero(a1.m, a1.c) * ob_or_zero(a2.m, a2.c) -
                 ob_or_zero(b1.m, b1.c) * ob_or_zero(b2.m, b2.c);
    std::string witness = first_negative(diff);

    if (witness.empty()) {
        /* Numeric shadow of the same difference from the lattice-path
         * recurrence, and the one-variable shadow counting overlines. */
        BigInt dnum = delannoy_number(a1.m, a1.c) * delannoy_number(a2.m,
                                                                    a2.c) -
                      delannoy_number(b1.m, b1.c) * delannoy_number(b2.m,
                                                                    b2.c);
        if (dnum < 0)
            witness = "path-count difference is negative: " + dnum.get_str();
        else if (dnum != specialize_full(diff, 1, 1))
            witness = "path-count difference disagrees with q=t=1 value";
        if (witness.empty()) {
            MPoly sagan = sagan_q_delannoy(a1.m, a1.c) *
                              sagan_q_delannoy(a2.m, a2.c) -
                          sagan_q_delannoy(b1.m, b1.c) *
                              sagan_q_delannoy(b2.m, b2.c);
            std::string neg = first_negative(sagan);
            if (!neg.empty()) {
                witness = "overline-count shadow: " + neg;
            } else {
                Assignment q1;
                q1.q = 1;
                if (!(sagan == rename_t_to_q(specialize(diff, q1))))
                    witness =
                        "overline-count shadow disagrees with q=1 value";
            }
        }
    }
    finish(rep, timer, witness,
           "difference is coefficientwise nonnegative; path-count and "
           "overline shadows agree");
    return rep;
}

IdentityReport verify_identity(const std::string& raw_id,
                               const IdentityParams& p) {
    const std::string id = normalize_id(raw_id);
    int trunc = p.trunc > 0 ? p.trunc : kDefaultSeriesOrder;
    if (id == "fin_qbinom" || id == "fin_qbi" || id == "fin_rogers_fine")
        return verify_series_identity(id, p.n, trunc);
    if (id == "fin_lebesgue" || id == "prop41" || id == "prop42" ||
        id == "thm43" || id == "phi21_rep")
        return verify_exact_identity(id, p);
    if (id == "fin_theta" || id == "fine_cor" || id == "multinomial_form" ||
        id == "delannoy_alternating")
        return verify_theta(id, p.n);
    if (id == "qlog_general" || id == "qlog_square" || id == "cor2" ||
        id == "butler_r")
        return verify_nonnegativity(id, p.n, p.k, p.l, p.r);
    throw std::invalid_argument("unknown identity: " + raw_id);
}

}  // namespace overqt
