#include "overqt/qfunctions.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace overqt {

MPoly pochhammer(const MPoly& a, int k, PochSign sign) {
    if (a.term_count() != 1)
        throw std::invalid_argument("pochhammer base must be a monomial");
    if (k < 0) throw std::invalid_argument("pochhammer length must be >= 0");
    MPoly r = MPoly::one();
    MPoly shifted = a;  // a * q^j
    for (int j = 0; j < k; ++j) {
        r = (sign == PochSign::plus) ? r + r * shifted : r - r * shifted;
        shifted *= MPoly::q();
    }
    return r;
}

MPoly qfactorial(int k) { return poch_minus(MPoly::q(), k); }

MPoly gaussian(int top, int bottom) {
    if (bottom < 0 || bottom > top) return MPoly::zero();
    if (bottom == 0 || bottom == top) return MPoly::one();

    static std::map<std::pair<int, int>, MPoly> memo;
    static std::mutex memo_mutex;
    std::lock_guard<std::mutex> lock(memo_mutex);

    /* [n k] = [n-1 k-1] + q^k [n-1 k], filled bottom-up so the recursion
     * depth stays flat.  Entries are never rewritten. */
    std::vector<std::pair<int, int>> stack{{top, bottom}};
    while (!stack.empty()) {
        auto [n, k] = stack.back();
        if (k <= 0 || k >= n || memo.count({n, k})) {
            stack.pop_back();
            continue;
        }
        bool ready = true;
        for (auto sub : {std::pair{n - 1, k - 1}, std::pair{n - 1, k}}) {
            if (sub.second > 0 && sub.second < sub.first &&
                !memo.count(sub)) {
                stack.push_back(sub);
                ready = false;
            }
        }
        if (!ready) continue;
        auto get = [&](int nn, int kk) -> MPoly {
            if (kk < 0 || kk > nn) return MPoly::zero();
            if (kk == 0 || kk == nn) return MPoly::one();
            return memo.at({nn, kk});
        };
        memo.emplace(std::pair{n, k},
                     get(n - 1, k - 1) + MPoly::q(k) * get(n - 1, k));
        stack.pop_back();
    }
    return memo.at({top, bottom});
}

MPoly exact_div_q(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("division by zero");
    auto to_dense = [](const MPoly& p) {
        std::vector<BigInt> v(static_cast<std::size_t>(p.max_q_degree()) + 1);
        for (const auto& [e, c] : p.terms()) {
            if (e.t != 0 || e.u != 0 || e.q < 0)
                throw std::invalid_argument(
                    "exact_div_q needs polynomials in q alone");
            v[static_cast<std::size_t>(e.q)] = c;
        }
        return v;
    };
    std::vector<BigInt> n = to_dense(num), d = to_dense(den);
    if (num.is_zero()) return MPoly::zero();
    if (n.size() < d.size()) throw std::runtime_error("division-check");

    std::size_t qdeg = n.size() - d.size();
    std::vector<BigInt> quot(qdeg + 1);
    const BigInt& lead = d.back();
    for (std::size_t i = qdeg + 1; i-- > 0;) {
        BigInt& top = n[i + d.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw std::runtime_error("division-check");
        BigInt f = top / lead;
        quot[i] = f;
        for (std::size_t j = 0; j < d.size(); ++j) n[i + j] -= f * d[j];
    }
    for (const BigInt& c : n)
        if (c != 0) throw std::runtime_error("division-check");

    MPoly r;
    for (std::size_t i = 0; i <= qdeg; ++i)
        if (quot[i] != 0) r += MPoly::monomial(quot[i], static_cast<int>(i), 0, 0);
    return r;
}

MPoly gaussian_by_division(int top, int bottom) {
    if (bottom < 0 || bottom > top) return MPoly::zero();
    return exact_div_q(qfactorial(top),
                       qfactorial(bottom) * qfactorial(top - bottom));
}

MPoly qmultinomial(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("qmultinomial needs a,b,c >= 0");
    /* (q)_{a+b+c}/((q)_a(q)_b(q)_c) = [a+b+c a]_q [b+c b]_q. */
    return gaussian(a + b + c, a) * gaussian(b + c, b);
}

MPoly qmultinomial_by_division(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0)
        throw std::invalid_argument("qmultinomial needs a,b,c >= 0");
    return exact_div_q(qfactorial(a + b + c),
                       qfactorial(a) * qfactorial(b) * qfactorial(c));
}

MPoly truncated_theta(int jmax) {
    MPoly r = MPoly::one();
    for (int j = 1; j <= jmax; ++j)
        r += MPoly::monomial(j % 2 == 0 ? 2 : -2, j * j, 0, 0);
    return r;
}

}  // namespace overqt
