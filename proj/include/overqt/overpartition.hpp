#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "overqt/mpoly.hpp"

namespace overqt {

struct OverPart {
    int value = 0;
    bool overlined = false;
    auto operator<=>(const OverPart&) const = default;
};

/* An overpartition: a weakly decreasing list of positive parts where the
 * last occurrence of a value may carry an overline (at most one overline per
 * distinct value), plus a count of non-overlined zero parts.  Zero parts only
 * matter where a fixed part count is tracked; plain box enumeration keeps
 * zero_parts at 0. */
class Overpartition {
  public:
    Overpartition() = default;
    /* Validates the invariants; throws std::invalid_argument on violation. */
    explicit Overpartition(std::vector<OverPart> parts, int zero_parts = 0);

    static bool valid(const std::vector<OverPart>& parts, int zero_parts = 0);

    const std::vector<OverPart>& parts() const { return parts_; }
    int zero_parts() const { return zero_parts_; }
    int positive_count() const { return static_cast<int>(parts_.size()); }
    int num_parts() const { return positive_count() + zero_parts_; }
    long weight() const;
    int overline_count() const;
    int largest() const { return parts_.empty() ? 0 : parts_.front().value; }
    bool empty() const { return parts_.empty() && zero_parts_ == 0; }

    /* Transpose of the Ferrers diagram; overlines follow the corner cells
     * (the corner in row r, column v maps to the corner in row v, column r).
     * Requires zero_parts() == 0. */
    Overpartition conjugate() const;

    /* Insert one part keeping the invariants: an overlined v goes after all
     * non-overlined copies of v, a plain v goes before an overlined v.
     * Inserting value 0 requires overlined == false and bumps zero_parts. */
    Overpartition with_insert(int value, bool overlined) const;

    /* Smallest positive part = the last entry of the list (the overlined copy
     * when the smallest value carries one). */
    std::optional<OverPart> smallest_positive() const;
    /* Value of the second-smallest positive entry counting multiplicity
     * (0 when there are fewer than two positive parts). */
    int second_smallest_value() const;
    Overpartition without_smallest_positive() const;
    Overpartition overline_smallest_positive() const;
    Overpartition unoverline_smallest_positive() const;

    bool operator==(const Overpartition&) const = default;
    auto operator<=>(const Overpartition&) const = default;

  private:
    std::vector<OverPart> parts_;  // positive values, weakly decreasing
    int zero_parts_ = 0;
};

/* Durfee decomposition at a given column offset: side d is the largest k with
 * lambda_k >= k + offset among the positive parts.  `right` is the conjugate
 * of the rows 1..d truncated to the columns beyond d + offset (marks travel
 * with their rows; an all-zero truncated row disappears).  `below` is rows
 * d+1.. including zero parts.  When row d equals d + offset exactly and is
 * overlined, the mark sits on the rectangle's own corner and is recorded in
 * corner_overlined. */
struct DurfeeDecomposition {
    int side = 0;
    int offset = 0;
    bool corner_overlined = false;
    Overpartition right;
    Overpartition below;
};

DurfeeDecomposition durfee(const Overpartition& p, int offset);
/* Inverse of durfee(); validates and throws std::invalid_argument when the
 * pieces do not assemble into a well-formed overpartition with Durfee side
 * exactly dec.side. */
Overpartition durfee_reconstruct(const DurfeeDecomposition& dec);

struct OpStats {
    long weight = 0;
    int overline_count = 0;
    int num_parts = 0;
    int largest = 0;
};
OpStats op_stats(const Overpartition& p);

/* Visit every overpartition with largest part <= max_part and at most
 * max_count parts (no zero parts), each exactly once.  Order: underlying
 * partitions lexicographically by the part sequence read largest-first with
 * shorter prefixes first, and for each partition its overline masks in
 * increasing binary order (bit i = i-th distinct value, largest first). */
void for_each_overpartition(int max_part, int max_count,
                            const std::function<void(const Overpartition&)>& fn);
std::vector<Overpartition> enumerate_overpartitions(int max_part,
                                                    int max_count);

/* sum of t^{overlines} q^{weight} over the box. */
MPoly box_generating_function(int max_part, int max_count);

}  // namespace overqt
