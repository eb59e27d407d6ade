#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "overqt/conjectures.hpp"

using namespace overqt;

namespace {

std::vector<BigInt> seq(std::initializer_list<long> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("unimodality predicates") {
    CHECK(is_unimodal(seq({})));
    CHECK(is_unimodal(seq({5})));
    CHECK(is_unimodal(seq({1, 2, 3, 2, 1})));
    CHECK(is_unimodal(seq({1, 2, 2, 1})));
    CHECK(is_unimodal(seq({3, 2, 1})));
    CHECK(is_unimodal(seq({1, 2, 3})));
    CHECK_FALSE(is_unimodal(seq({1, 2, 1, 2})));
    CHECK_FALSE(is_unimodal(seq({2, 1, 2})));

    CHECK(is_strictly_unimodal(seq({})));
    CHECK(is_strictly_unimodal(seq({5})));
    CHECK(is_strictly_unimodal(seq({1, 2, 3, 2, 1})));
    CHECK_FALSE(is_strictly_unimodal(seq({1, 2, 2, 1})));
    CHECK_FALSE(is_strictly_unimodal(seq({1, 1})));
    CHECK(is_strictly_unimodal(seq({1, 2})));
}

TEST_CASE("kind names") {
    CHECK(unimodal_kind_from_string("double-unimodal") ==
          UnimodalKind::double_qt);
    CHECK(unimodal_kind_from_string("double") == UnimodalKind::double_qt);
    CHECK(unimodal_kind_from_string("unimodal-t1") == UnimodalKind::t1);
    CHECK(unimodal_kind_from_string("t1") == UnimodalKind::t1);
    CHECK(unimodal_kind_from_string("strict") == UnimodalKind::strict);
    CHECK_THROWS_AS(unimodal_kind_from_string("sorted"),
                    std::invalid_argument);
}

TEST_CASE("unimodality scans hold on small boxes") {
    for (UnimodalKind kind :
         {UnimodalKind::double_qt, UnimodalKind::t1, UnimodalKind::strict}) {
        std::vector<ScanResult> rows = scan_unimodality(kind, 8);
        CHECK(!rows.empty());
        for (const ScanResult& r : rows) {
            CHECK(r.holds);
            CHECK(!r.parameter.empty());
            CHECK(!r.detail.empty());
        }
    }
    /* every box with m+n <= max appears exactly once */
    std::vector<ScanResult> rows =
        scan_unimodality(UnimodalKind::t1, 6);
    int boxes = 0;
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; m + n <= 6; ++n) ++boxes;
    CHECK(static_cast<int>(rows.size()) == boxes);
    CHECK(rows.front().conjecture_id == "unimodal-t1");
}

TEST_CASE("strictness scan reports plateaus without failing") {
    std::vector<ScanResult> rows =
        scan_unimodality(UnimodalKind::strict, 4);
    bool saw_plateau = false, saw_strict = false;
    for (const ScanResult& r : rows) {
        CHECK(r.holds);
        CHECK(r.conjecture_id == "strict");
        if (r.detail.find("plateau") != std::string::npos) saw_plateau = true;
        if (r.detail.find("strict") != std::string::npos) saw_strict = true;
    }
    CHECK(saw_plateau);
    CHECK(saw_strict);
}

TEST_CASE("series coefficient scan stays nonnegative") {
    std::vector<ScanResult> rows = scan_prellberg(5, 30);
    CHECK(rows.size() == 5);
    for (const ScanResult& r : rows) {
        CHECK(r.holds);
        CHECK(r.conjecture_id == "prellberg");
        CHECK(r.detail == "nonnegative to q^30");
    }
    CHECK(rows.front().parameter == "n=1");
    CHECK_THROWS_AS(scan_prellberg(0, 30), std::invalid_argument);
    CHECK_THROWS_AS(scan_prellberg(3, 0), std::invalid_argument);
}
