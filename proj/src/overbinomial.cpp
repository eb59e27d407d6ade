#include "overqt/overbinomial.hpp"

#include <cstdlib>
#include <mutex>

#include "overqt/delannoy.hpp"
#include "overqt/overpartition.hpp"
#include "overqt/qfunctions.hpp"

namespace overqt {

ObMethod ob_method_from_string(const std::string& name) {
    if (name == "enumerate") return ObMethod::enumerate;
    if (name == "formula") return ObMethod::formula;
    if (name == "pascal1") return ObMethod::pascal1;
    if (name == "pascal2") return ObMethod::pascal2;
    if (name == "paths") return ObMethod::paths;
    if (name == "hyper") return ObMethod::hyper;
    if (name == "phi21") return ObMethod::phi21;
    throw std::invalid_argument("unknown method: " + name);
}

std::string to_string(ObMethod m) {
    switch (m) {
        case ObMethod::enumerate: return "enumerate";
        case ObMethod::formula: return "formula";
        case ObMethod::pascal1: return "pascal1";
        case ObMethod::pascal2: return "pascal2";
        case ObMethod::paths: return "paths";
        case ObMethod::hyper: return "hyper";
        case ObMethod::phi21: return "phi21";
    }
    throw std::logic_error("unhandled method");
}

const MPoly& OverBinomTable::at(int m, int n) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("OverBinomTable::at needs m,n >= 0");
    auto it = memo_.find({m, n});
    if (it != memo_.end()) return it->second;
    MPoly v;
    if (m == 0 || n == 0) {
        v = MPoly::one();
    } else {
        v = at(m, n - 1) + MPoly::q(n) * at(m - 1, n) +
            MPoly::t() * MPoly::q(n) * at(m - 1, n - 1);
    }
    return memo_.emplace(std::pair{m, n}, std::move(v)).first->second;
}

MPoly OverBinomTable::at_or_zero(int m, int n) {
    if (m < 0 || n < 0) return MPoly::zero();
    return at(m, n);
}

namespace {

long budget_cells() {
    if (const char* env = std::getenv("OVERQT_MAX_CELLS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100;
}

MPoly compute_pascal2(int m, int n) {
    std::map<std::pair<int, int>, MPoly> memo;
    std::function<const MPoly&(int, int)> get =
        [&](int a, int b) -> const MPoly& {
        auto it = memo.find({a, b});
        if (it != memo.end()) return it->second;
        MPoly v;
        if (a == 0 || b == 0)
            v = MPoly::one();
        else
            v = get(a - 1, b) + MPoly::q(a) * get(a, b - 1) +
                MPoly::t() * MPoly::q(a) * get(a - 1, b - 1);
        return memo.emplace(std::pair{a, b}, std::move(v)).first->second;
    };
    return get(m, n);
}

MPoly compute_formula(int m, int n) {
    /* sum over the staircase size k of the overlined parts:
     * t^k q^{k(k+1)/2} [m k]_q [m+n-k n-k]_q. */
    MPoly r;
    for (int k = 0; k <= std::min(m, n); ++k)
        r += MPoly::monomial(1, k * (k + 1) / 2, k, 0) * gaussian(m, k) *
             gaussian(m + n - k, n - k);
    return r;
}

MPoly compute_hyper(int m, int n) {
    MPoly r;
    for (int k = 0; k <= std::min(m, n); ++k) {
        MPoly prod = MPoly::one();
        for (int j = 0; j < k; ++j) prod *= MPoly::t() + MPoly::q(j);
        r += MPoly::q(k * (k + 1) / 2) * prod * gaussian(m, k) *
             gaussian(n, k);
    }
    return r;
}

/* (a q^lo; q)_k as a Laurent polynomial, a = q^lo with lo possibly < 0. */
MPoly laurent_poch_minus(int lo, int k) {
    MPoly r = MPoly::one();
    for (int j = 0; j < k; ++j)
        r -= r * MPoly::monomial(1, lo + j, 0, 0, MPoly::Laurent::yes);
    return r;
}

MPoly compute_phi21(int m, int n, const MPoly& pascal_value) {
    /* The terminating sum
     *   sum_k (q^{-n};q)_k (q^{-m};q)_k / ((q;q)_k (q^{-n-m};q)_k) (-tq)^k
     * equals (q)_n (q)_m / (q)_{n+m} * B(m,n).  Both sides are compared over
     * the common denominator (q)_np (q^{-n-m};q)_np, np = min(m,n); each
     * term's numerator picks up the tail factors of the two products instead
     * of dividing anything. */
    int np = std::min(m, n);
    MPoly sum_num;
    for (int k = 0; k <= np; ++k) {
        MPoly num = laurent_poch_minus(-n, k) * laurent_poch_minus(-m, k);
        num *= MPoly::monomial(k % 2 == 0 ? 1 : -1, k, k, 0);  // (-tq)^k
        for (int j = k; j < np; ++j) {
            num *= MPoly::one() - MPoly::q(j + 1);
            num -= num * MPoly::monomial(1, j - n - m, 0, 0,
                                         MPoly::Laurent::yes);
        }
        sum_num += num;
    }
    MPoly den = qfactorial(np) * laurent_poch_minus(-n - m, np);
    RationalMPoly lhs(sum_num, den);
    RationalMPoly rhs(pascal_value * qfactorial(n) * qfactorial(m),
                      qfactorial(n + m));
    if (!rat_eq(lhs, rhs))
        throw std::runtime_error("identity-violation at (m,n)=(" +
                                 std::to_string(m) + "," + std::to_string(n) +
                                 ")");
    return pascal_value;
}

OverBinomTable& shared_table() {
    static OverBinomTable table;
    return table;
}
std::mutex& shared_table_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

MPoly ob_or_zero(int m, int n) {
    if (m < 0 || n < 0) return MPoly::zero();
    std::lock_guard<std::mutex> lock(shared_table_mutex());
    return shared_table().at(m, n);
}

MPoly ob_compute(int m, int n, ObMethod method) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("ob_compute needs m,n >= 0");
    switch (method) {
        case ObMethod::enumerate:
            if (static_cast<long>(m) * n > budget_cells())
                throw std::runtime_error("method-too-expensive");
            return box_generating_function(m, n);
        case ObMethod::paths:
            if (static_cast<long>(m) * n > budget_cells())
                throw std::runtime_error("method-too-expensive");
            return path_generating_function(m, n);
        case ObMethod::formula:
            return compute_formula(m, n);
        case ObMethod::pascal1:
            return ob_or_zero(m, n);
        case ObMethod::pascal2:
            return compute_pascal2(m, n);
        case ObMethod::hyper:
            return compute_hyper(m, n);
        case ObMethod::phi21:
            return compute_phi21(m, n, ob_or_zero(m, n));
    }
    throw std::logic_error("unhandled method");
}

BigInt ob_coefficient(int m, int n, int k, long N) {
    if (m < 0 || n < 0 || k < 0 || N < 0)
        throw std::invalid_argument("ob_coefficient needs m,n,k,N >= 0");
    return ob_or_zero(m, n).coeff(static_cast<int>(N), k, 0);
}

MPoly sagan_q_delannoy(int m, int n) {
    Assignment at;
    at.q = 1;
    return rename_t_to_q(specialize(ob_or_zero(m, n), at));
}

CrossCheckReport cross_check(int max_m, int max_n) {
    CrossCheckReport rep;
    long budget = budget_cells();
    auto fail = [&](const std::string& w) {
        if (rep.pass) {
            rep.pass = false;
            rep.witness = w;
        }
    };
    for (int m = 0; m <= max_m && rep.pass; ++m) {
        for (int n = 0; n <= max_n && rep.pass; ++n) {
            MPoly ref = ob_compute(m, n, ObMethod::pascal1);
            for (ObMethod method :
                 {ObMethod::formula, ObMethod::pascal2, ObMethod::hyper,
                  ObMethod::phi21, ObMethod::enumerate, ObMethod::paths}) {
                if ((method == ObMethod::enumerate ||
                     method == ObMethod::paths) &&
                    static_cast<long>(m) * n > budget)
                    continue;
                MPoly got;
                try {
                    got = ob_compute(m, n, method);
                } catch (const std::runtime_error& e) {
                    fail("(" + std::to_string(m) + "," + std::to_string(n) +
                         ") " + to_string(method) + ": " + e.what());
                    break;
                }
                ++rep.combinations_checked;
                if (!(got == ref)) {
                    fail("(" + std::to_string(m) + "," + std::to_string(n) +
                         ") " + to_string(method) + " != pascal1");
                    break;
                }
            }
            if (!rep.pass) break;
            /* symmetry, q-multinomial form, Delannoy specialization */
            if (!(ob_compute(n, m) == ref))
                fail("symmetry fails at (" + std::to_string(m) + "," +
                     std::to_string(n) + ")");
            MPoly trinom;
            for (int k = 0; k <= std::min(m, n); ++k)
                trinom += MPoly::monomial(1, k * (k + 1) / 2, k, 0) *
                          qmultinomial(k, m - k, n - k);
            ++rep.combinations_checked;
            if (!(trinom == ref))
                fail("q-multinomial form fails at (" + std::to_string(m) +
                     "," + std::to_string(n) + ")");
            ++rep.combinations_checked;
            if (specialize_full(ref, 1, 1) != delannoy_number(m, n))
                fail("Delannoy specialization fails at (" + std::to_string(m) +
                     "," + std::to_string(n) + ")");
        }
    }
    return rep;
}

}  // namespace overqt
