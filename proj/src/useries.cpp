#include "overqt/useries.hpp"

namespace overqt {

USeries::USeries(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

USeries USeries::from_poly(const MPoly& p, int order) {
    USeries s(order);
    for (const auto& [e, c] : p.terms()) {
        if (e.u > order) continue;
        s.coeffs_[static_cast<std::size_t>(e.u)] +=
            MPoly::monomial(c, e.q, e.t, 0,
                            e.q < 0 ? MPoly::Laurent::yes : MPoly::Laurent::no);
    }
    return s;
}

const MPoly& USeries::coeff(int k) const {
    if (k < 0 || k > order_)
        throw std::out_of_range("series coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

void USeries::set_coeff(int k, MPoly value) {
    if (k < 0 || k > order_)
        throw std::out_of_range("series coefficient index out of range");
    if (value.max_u_degree() != 0)
        throw std::invalid_argument("series coefficient must be u-free");
    coeffs_[static_cast<std::size_t>(k)] = std::move(value);
}

USeries operator+(const USeries& a, const USeries& b) {
    int order = std::min(a.order_, b.order_);
    USeries r(order);
    for (int k = 0; k <= order; ++k)
        r.coeffs_[static_cast<std::size_t>(k)] =
            a.coeffs_[static_cast<std::size_t>(k)] +
            b.coeffs_[static_cast<std::size_t>(k)];
    return r;
}

USeries operator-(const USeries& a, const USeries& b) {
    int order = std::min(a.order_, b.order_);
    USeries r(order);
    for (int k = 0; k <= order; ++k)
        r.coeffs_[static_cast<std::size_t>(k)] =
            a.coeffs_[static_cast<std::size_t>(k)] -
            b.coeffs_[static_cast<std::size_t>(k)];
    return r;
}

USeries operator*(const USeries& a, const USeries& b) {
    int order = std::min(a.order_, b.order_);
    USeries r(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeffs_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j)
            r.coeffs_[static_cast<std::size_t>(i + j)] +=
                a.coeffs_[static_cast<std::size_t>(i)] *
                b.coeffs_[static_cast<std::size_t>(j)];
    }
    return r;
}

USeries USeries::inverse() const {
    if (!coeffs_[0].is_one()) throw std::runtime_error("non-unit-series");
    /* b_0 = 1,  b_n = -sum_{k=1..n} a_k b_{n-k}. */
    USeries b(order_);
    b.coeffs_[0] = MPoly::one();
    for (int n = 1; n <= order_; ++n) {
        MPoly acc;
        for (int k = 1; k <= n; ++k)
            acc += coeffs_[static_cast<std::size_t>(k)] *
                   b.coeffs_[static_cast<std::size_t>(n - k)];
        b.coeffs_[static_cast<std::size_t>(n)] = -acc;
    }
    return b;
}

bool USeries::operator==(const USeries& o) const {
    if (order_ != o.order_) return false;
    return coeffs_ == o.coeffs_;
}

USeries useries_ratio(const MPoly& num, const MPoly& den, int order) {
    return USeries::from_poly(num, order) *
           USeries::from_poly(den, order).inverse();
}

}  // namespace overqt
