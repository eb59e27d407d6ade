#include <doctest.h>

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "overqt/delannoy.hpp"
#include "overqt/overpartition.hpp"

using namespace overqt;

namespace {

Overpartition op(std::vector<OverPart> parts, int zeros = 0) {
    return Overpartition(std::move(parts), zeros);
}

}  // namespace

TEST_CASE("overpartition invariants are validated") {
    CHECK_NOTHROW(op({{3, false}, {3, true}, {1, false}}));
    /* increasing values */
    CHECK_THROWS_AS(op({{1, false}, {2, false}}), std::invalid_argument);
    /* overline not on the last occurrence */
    CHECK_THROWS_AS(op({{3, true}, {3, false}}), std::invalid_argument);
    /* two overlines on one value */
    CHECK_THROWS_AS(op({{3, true}, {3, true}}), std::invalid_argument);
    CHECK_THROWS_AS(op({{0, false}}), std::invalid_argument);
    CHECK_THROWS_AS(op({}, -1), std::invalid_argument);
}

TEST_CASE("enumeration matches the documented counts") {
    CHECK(enumerate_overpartitions(1, 1).size() == 3);
    CHECK(enumerate_overpartitions(0, 5).size() == 1);
    CHECK(enumerate_overpartitions(0, 5).front().empty());

    int weight_three = 0;
    for (const Overpartition& p : enumerate_overpartitions(3, 3))
        if (p.weight() == 3) ++weight_three;
    CHECK(weight_three == 8);

    /* deterministic order */
    CHECK(enumerate_overpartitions(3, 2) == enumerate_overpartitions(3, 2));

    /* the box count is a Delannoy number */
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            CHECK(BigInt(static_cast<long>(
                      enumerate_overpartitions(m, n).size())) ==
                  delannoy_number(m, n));
}

TEST_CASE("conjugation follows the corner rule") {
    CHECK(op({{2, false}, {2, true}}).conjugate() ==
          op({{2, false}, {2, true}}));
    CHECK(op({{3, true}}).conjugate() ==
          op({{1, false}, {1, false}, {1, true}}));
    CHECK(op({{3, false}}).conjugate() ==
          op({{1, false}, {1, false}, {1, false}}));
    CHECK(op({}).conjugate() == op({}));

    for_each_overpartition(6, 6, [](const Overpartition& p) {
        Overpartition c = p.conjugate();
        CHECK(c.conjugate() == p);
        CHECK(c.weight() == p.weight());
        CHECK(c.overline_count() == p.overline_count());
        CHECK(c.largest() == p.num_parts());
        CHECK(c.num_parts() == p.largest());
    });
}

TEST_CASE("generating function symmetry in the box") {
    for (int m = 0; m <= 8; ++m)
        for (int n = m; n <= 8; ++n)
            CHECK(box_generating_function(m, n) ==
                  box_generating_function(n, m));
}

TEST_CASE("insertion keeps the overline on the last occurrence") {
    CHECK(op({{2, false}, {2, true}}).with_insert(2, false) ==
          op({{2, false}, {2, false}, {2, true}}));
    CHECK(op({{1, false}}).with_insert(1, true) ==
          op({{1, false}, {1, true}}));
    CHECK(op({{3, false}}).with_insert(5, true) ==
          op({{5, true}, {3, false}}));
    CHECK(op({{2, false}}).with_insert(0, false) == op({{2, false}}, 1));
    CHECK_THROWS_AS(op({}).with_insert(0, true), std::invalid_argument);
    /* a second overline on the same value has no legal placement */
    CHECK_THROWS_AS(op({{2, true}}).with_insert(2, true),
                    std::invalid_argument);
}

TEST_CASE("durfee decomposition reproduces the worked example") {
    Overpartition x = op({{5, false}, {5, true}, {3, false}, {2, false}}, 1);
    DurfeeDecomposition dec = durfee(x, 0);
    CHECK(dec.side == 3);
    CHECK(dec.below == op({{2, false}}, 1));
    CHECK(dec.right == op({{2, false}, {2, true}}));
    CHECK(durfee_reconstruct(dec) == x);

    DurfeeDecomposition rebuilt;
    rebuilt.side = 3;
    rebuilt.offset = 0;
    rebuilt.right = op({{2, false}});
    rebuilt.below = op({{2, false}, {2, true}}, 1);
    CHECK(durfee_reconstruct(rebuilt) ==
          op({{4, false}, {4, false}, {3, false}, {2, false}, {2, true}}, 1));

    DurfeeDecomposition empty = durfee(op({}), 0);
    CHECK(empty.side == 0);
    CHECK(empty.right.empty());
    CHECK(empty.below.empty());
}

TEST_CASE("durfee round-trips at offsets -1, 0, 1") {
    for (int offset : {-1, 0, 1})
        for_each_overpartition(8, 8, [offset](const Overpartition& p) {
            CHECK(durfee_reconstruct(durfee(p, offset)) == p);
        });
}

TEST_CASE("op_stats") {
    OpStats s = op_stats(op({{2, false}, {2, true}}, 1));
    CHECK(s.weight == 4);
    CHECK(s.overline_count == 1);
    CHECK(s.num_parts == 3);
    CHECK(s.largest == 2);

    OpStats e = op_stats(op({}));
    CHECK(e.weight == 0);
    CHECK(e.overline_count == 0);
    CHECK(e.num_parts == 0);
    CHECK(e.largest == 0);

    OpStats w = op_stats(op({{7, true}, {6, false}, {4, false}}));
    CHECK(w.weight == 17);
    CHECK(w.overline_count == 1);
    CHECK(w.num_parts == 3);
    CHECK(w.largest == 7);
}

TEST_CASE("delannoy paths carry the documented weights") {
    std::multiset<std::pair<int, long>> stats;
    for_each_delannoy_path(1, 1, [&](const DelannoyPath& p) {
        PathStats s = path_stats(p);
        stats.insert({s.diagonal_steps, s.weight});
    });
    std::multiset<std::pair<int, long>> expected{{0, 0}, {0, 1}, {1, 1}};
    CHECK(stats == expected);

    int count = 0;
    for_each_delannoy_path(2, 2, [&](const DelannoyPath&) { ++count; });
    CHECK(count == 13);

    count = 0;
    for_each_delannoy_path(0, 3, [&](const DelannoyPath& p) {
        ++count;
        CHECK(p.steps.size() == 3);
        CHECK(path_stats(p).weight == 0);
    });
    CHECK(count == 1);

    /* endpoint bookkeeping */
    for_each_delannoy_path(3, 2, [&](const DelannoyPath& p) {
        int east = 0, north = 0, diag = 0;
        for (Step s : p.steps) {
            if (s == Step::east) ++east;
            if (s == Step::north) ++north;
            if (s == Step::northeast) ++diag;
        }
        CHECK(east + diag == 3);
        CHECK(north + diag == 2);
    });
}

TEST_CASE("delannoy numbers") {
    CHECK(delannoy_number(4, 4) == 321);
    CHECK(delannoy_number(2, 2) == 13);
    CHECK(delannoy_number(0, 9) == 1);
    CHECK(delannoy_number(-1, 2) == 0);
    for (int m = 1; m <= 10; ++m)
        for (int n = 1; n <= 10; ++n) {
            CHECK(delannoy_number(m, n) == delannoy_number(n, m));
            CHECK(delannoy_number(m, n) ==
                  delannoy_number(m - 1, n) + delannoy_number(m, n - 1) +
                      delannoy_number(m - 1, n - 1));
        }
}

TEST_CASE("paths and the box give the same generating function") {
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n)
            CHECK(path_generating_function(m, n) ==
                  box_generating_function(m, n));
}
