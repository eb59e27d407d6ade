#pragma once

#include <string>
#include <vector>

#include "overqt/mpoly.hpp"

namespace overqt {

struct ScanResult {
    std::string conjecture_id;
    std::string parameter;
    bool holds = true;
    std::string detail;
};

enum class UnimodalKind { double_qt, t1, strict };
UnimodalKind unimodal_kind_from_string(const std::string& s);

/* First weak descent, then no strict ascent. */
bool is_unimodal(const std::vector<BigInt>& seq);
/* Strictly increasing to a single peak, then strictly decreasing. */
bool is_strictly_unimodal(const std::vector<BigInt>& seq);

/* Scans every box (m,n) with m+n <= max_mn.  double_qt checks each fixed
 * t-degree row in q and each fixed q-degree column in t; t1 checks the
 * polynomial at t=1; strict only reports where inequalities are strict and
 * always holds. */
std::vector<ScanResult> scan_unimodality(UnimodalKind kind, int max_mn);

/* q-series nonnegativity scan up to order trunc for each n <= max_n. */
std::vector<ScanResult> scan_prellberg(int max_n, int trunc);

inline constexpr int kDefaultPrellbergOrder = 50;

}  // namespace overqt
