#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "overqt/overpartition.hpp"

namespace overqt {

using OverPair = std::pair<Overpartition, Overpartition>;

/* Row-exchange map on pairs of zero-free overpartitions.  The first `index`
 * rows trade places between the two partitions, shifted by `shift`, with
 * overlines traveling along.  `shift` must be at least 1. */
int exchange_index(const OverPair& p, int shift);
OverPair exchange_rows(const OverPair& p, int shift);

OverPair swap_pair(OverPair p);
OverPair conjugate_pair(const OverPair& p);

/* The row-exchange map transported through swap and conjugation: an
 * involution acting on columns instead of rows. */
OverPair lifted_exchange(const OverPair& p, int shift);

/* lifted_exchange after exchange_rows: injective on box-pair families. */
OverPair pair_injection(const OverPair& p, int shift);

struct InjectionReport {
    bool pass = true;
    std::string witness;
    long domain_size = 0;
    long random_pairs = 0;
    int shift = 0;
};

/* Exhaustively maps the pair family with boxes widened by one on the left
 * and narrowed by one on the right into the balanced family, checking
 * containment, injectivity, weight and overline preservation, the two
 * intermediate containments, and involutivity on random samples. */
InjectionReport verify_pair_injection(int n, int k, int l,
                                      std::uint64_t seed = 20240901);

}  // namespace overqt
