#pragma once

#include <vector>

#include "overqt/mpoly.hpp"

namespace overqt {

/* Power series in u truncated at u^order, with MPoly coefficients in q and t
 * (every stored coefficient has u-exponent 0).  Arithmetic silently drops
 * anything beyond the truncation order. */
class USeries {
  public:
    explicit USeries(int order);
    /* Distribute the u-powers of p into slots, dropping those above order. */
    static USeries from_poly(const MPoly& p, int order);

    int order() const { return order_; }
    const MPoly& coeff(int k) const;
    void set_coeff(int k, MPoly value);

    friend USeries operator+(const USeries& a, const USeries& b);
    friend USeries operator-(const USeries& a, const USeries& b);
    friend USeries operator*(const USeries& a, const USeries& b);
    USeries& operator+=(const USeries& o) { return *this = *this + o; }

    /* Multiplicative inverse mod u^{order+1}.  The constant coefficient must
     * be exactly 1; otherwise throws std::runtime_error("non-unit-series"). */
    USeries inverse() const;

    bool operator==(const USeries& o) const;

  private:
    int order_;
    std::vector<MPoly> coeffs_;  // indices 0..order_
};

/* Expand num/den as a series in u to the given order (den must have constant
 * coefficient 1 after from_poly). */
USeries useries_ratio(const MPoly& num, const MPoly& den, int order);

}  // namespace overqt
