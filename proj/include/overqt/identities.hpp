#pragma once

#include <string>

#include "overqt/mpoly.hpp"

namespace overqt {

struct IdentityReport {
    std::string identity_id;
    std::string parameters;
    bool verified = true;
    std::string witness;  // first differing coefficient, set only on failure
    std::string detail;   // what matched, e.g. "both sides = 0"
    double elapsed_seconds = 0.0;
};

/* Optional knobs for the dispatcher; -1 means "not supplied".  Each identity
 * picks the arguments it needs and validates them. */
struct IdentityParams {
    int n = -1;
    int k = -1;
    int l = -1;
    int r = -1;
    int m = -1;
    int h = -1;
    int trunc = -1;
};

inline constexpr int kDefaultSeriesOrder = 12;

/* Truncated power-series identities in u, compared to order `trunc`. */
IdentityReport verify_series_identity(const std::string& id, int n,
                                      int trunc = kDefaultSeriesOrder);

/* Identities between finite polynomial (or cleared rational) expressions. */
IdentityReport verify_exact_identity(const std::string& id,
                                     const IdentityParams& p);

/* Alternating sums against truncated theta functions. */
IdentityReport verify_theta(const std::string& id, int n);

/* Coefficientwise nonnegative differences of products, with their numeric
 * and one-variable specializations. */
IdentityReport verify_nonnegativity(const std::string& id, int n, int k,
                                    int l, int r);

/* Routes an identity id (dashes and underscores both accepted) to the
 * verifier above that owns it. */
IdentityReport verify_identity(const std::string& id,
                               const IdentityParams& p);

}  // namespace overqt
