#pragma once

#include <string>
#include <vector>

#include "overqt/overpartition.hpp"

namespace overqt {

/* Member of the signed union behind the truncated theta identity: an
 * overpartition with exactly k non-negative parts (zeros allowed, never
 * overlined), every part <= ambient - k, counted with sign (-1)^k. */
struct SignedOverpartition {
    Overpartition partition;
    int ambient = 0;  // the n of the ambient family

    int part_count() const { return partition.num_parts(); }
    int sign() const { return part_count() % 2 == 0 ? 1 : -1; }
    bool in_domain() const {
        return partition.largest() <= ambient - part_count();
    }
    bool operator==(const SignedOverpartition&) const = default;
};

/* Everything the involution looked at while dispatching. */
struct InvolutionInternals {
    int durfee_side = 0;
    Overpartition below;  // pi: rows under the Durfee square, zeros included
    Overpartition right;  // mu: conjugate of the region right of the square
    int s_below = 0;      // smallest positive part of pi (0 if none)
    int s_right = 0;      // smallest part of mu (0 if mu is empty)
    int s2_below = 0;     // second smallest positive entry of pi (0 if none)
    int s2_right = 0;
    bool chi_below = false;  // overline status of those smallest parts
    bool chi_right = false;
};

struct InvolutionTrace {
    SignedOverpartition input;
    SignedOverpartition output;
    std::string case_label;  // 1, 2, 3.1, 3.2, 4.1, 4.2, 4.3, 4.4.1, 4.4.2
    InvolutionInternals internals;
};

/* Apply the sign-reversing involution.  Fixed points (label "1") are exactly
 * the square overpartitions j*j, plain or with the bottom row overlined,
 * padded with zeros; every other element moves the smallest part of mu below
 * pi or the smallest positive part of pi into mu, changing the part count by
 * one.  Throws std::invalid_argument("not-in-O-n ...") when the input
 * violates the family constraint. */
InvolutionTrace apply_involution(const SignedOverpartition& x);

/* Every member with part count k = 0..n, ordered by k then enumeration
 * order.  zero_free = true restricts to members without zero parts under the
 * shifted bound largest <= ambient - k (used with ambient n+1 to cover the
 * zero-free alternating identity with exactly-positive part counts). */
std::vector<SignedOverpartition> enumerate_signed_family(int n,
                                                         bool zero_free = false);

struct InvolutionReport {
    bool pass = true;
    std::string witness;
    long elements = 0;
    MPoly signed_sum;  // sum of sign * q^{weight} over the family
};

/* Exhaustive checks for the family of size parameter n: involutivity, sign
 * reversal off fixed points, the exact fixed-point set, the signed sum
 * against the truncated theta series, case-label pairing under the map, and
 * the zero-free variant against its own alternating identity. */
InvolutionReport verify_involution(int n);

}  // namespace overqt
