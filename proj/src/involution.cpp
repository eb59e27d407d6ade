#include "overqt/involution.hpp"

#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "overqt/overbinomial.hpp"
#include "overqt/qfunctions.hpp"

namespace overqt {

InvolutionTrace apply_involution(const SignedOverpartition& x) {
    if (!x.in_domain())
        throw std::invalid_argument(
            "not-in-O-n: part exceeds ambient minus part count");

    InvolutionTrace tr;
    tr.input = x;

    DurfeeDecomposition dec = durfee(x.partition, 0);
    const Overpartition& below = dec.below;
    const Overpartition& right = dec.right;

    InvolutionInternals& in = tr.internals;
    in.durfee_side = dec.side;
    in.below = below;
    in.right = right;
    if (auto sp = below.smallest_positive()) {
        in.s_below = sp->value;
        in.chi_below = sp->overlined;
    }
    if (auto sp = right.smallest_positive()) {
        in.s_right = sp->value;
        in.chi_right = sp->overlined;
    }
    in.s2_below = below.second_smallest_value();
    in.s2_right = right.second_smallest_value();

    Overpartition new_below = below;
    Overpartition new_right = right;

    /* An absent smallest part compares as +infinity: moving always takes the
     * genuinely smaller side.  Case 1 = nothing to move on either side. */
    if (in.s_below == 0 && in.s_right == 0) {
        tr.case_label = "1";
        tr.output = x;
        return tr;
    } else if (in.s_right > 0 && (in.s_below == 0 || in.s_below > in.s_right)) {
        tr.case_label = "2";
        new_right = right.without_smallest_positive();
        new_below = below.with_insert(in.s_right, in.chi_right);
    } else if (in.s_below > 0 &&
               (in.s_right == 0 || in.s_below < in.s_right)) {
        if (in.s2_below == in.s_below && !in.chi_below) {
            tr.case_label = "3.1";
            new_below = below.without_smallest_positive()
                            .overline_smallest_positive();
            new_right = right.with_insert(in.s_below, true);
        } else {
            tr.case_label = "3.2";
            new_below = below.without_smallest_positive();
            new_right = right.with_insert(in.s_below, in.chi_below);
        }
    } else {
        /* s_below == s_right > 0 */
        if (in.chi_below && in.chi_right) {
            tr.case_label = "4.1";
            new_right = right.without_smallest_positive();
            new_below = below.unoverline_smallest_positive().with_insert(
                in.s_right, false);
        } else if (in.chi_right) {
            tr.case_label = "4.2";
            new_right = right.without_smallest_positive();
            new_below = below.with_insert(in.s_right, true);
        } else if (in.chi_below) {
            tr.case_label = "4.3";
            new_below = below.without_smallest_positive();
            new_right = right.with_insert(in.s_below, true);
        } else if (in.s2_below == in.s_below) {
            tr.case_label = "4.4.1";
            new_below = below.without_smallest_positive()
                            .overline_smallest_positive();
            new_right = right.with_insert(in.s_below, true);
        } else {
            tr.case_label = "4.4.2";
            new_below = below.without_smallest_positive();
            new_right = right.with_insert(in.s_below, false);
        }
    }

    DurfeeDecomposition ndec;
    ndec.side = dec.side;
    ndec.offset = 0;
    ndec.corner_overlined = dec.corner_overlined;
    ndec.right = std::move(new_right);
    ndec.below = std::move(new_below);

    tr.output.partition = durfee_reconstruct(ndec);
    tr.output.ambient = x.ambient;
    if (!tr.output.in_domain() ||
        std::abs(tr.output.part_count() - x.part_count()) != 1)
        throw std::logic_error("involution output left the family");
    return tr;
}

std::vector<SignedOverpartition> enumerate_signed_family(int n,
                                                         bool zero_free) {
    std::vector<SignedOverpartition> out;
    for (int k = 0; k <= n; ++k) {
        int bound = n - k;
        for_each_overpartition(bound, k, [&](const Overpartition& p) {
            if (zero_free) {
                if (p.positive_count() == k)
                    out.push_back(SignedOverpartition{p, n});
            } else {
                Overpartition padded(p.parts(), k - p.positive_count());
                out.push_back(SignedOverpartition{std::move(padded), n});
            }
        });
    }
    return out;
}

namespace {

const std::map<std::string, std::set<std::string>>& inverse_case_table() {
    static const std::map<std::string, std::set<std::string>> table{
        {"1", {"1"}},
        {"2", {"3.2", "4.3", "4.4.2"}},
        {"3.1", {"4.1"}},
        {"3.2", {"2", "4.2"}},
        {"4.1", {"3.1", "4.4.1"}},
        {"4.2", {"3.2", "4.3"}},
        {"4.3", {"2", "4.2"}},
        {"4.4.1", {"4.1"}},
        {"4.4.2", {"2"}},
    };
    return table;
}

std::string describe(const SignedOverpartition& x) {
    std::string s = "[n=" + std::to_string(x.ambient) + " k=" +
                    std::to_string(x.part_count()) + ":";
    for (const auto& p : x.partition.parts()) {
        s += " " + std::to_string(p.value);
        if (p.overlined) s += "~";
    }
    for (int i = 0; i < x.partition.zero_parts(); ++i) s += " 0";
    return s + "]";
}

/* Squares j*j plus zero padding, plain and bottom-row-overlined, for every
 * part count k the family admits. */
std::set<std::pair<std::vector<OverPart>, int>> expected_fixed_points(
    int n, bool zero_free) {
    std::set<std::pair<std::vector<OverPart>, int>> fixed;
    for (int j = 0; 2 * j <= n; ++j) {
        int klo = j, khi = zero_free ? j : n - j;
        for (int k = klo; k <= khi && k <= n - j; ++k) {
            std::vector<OverPart> plain(static_cast<std::size_t>(j),
                                        OverPart{j, false});
            fixed.emplace(plain, k - j);
            if (j >= 1) {
                plain.back().overlined = true;
                fixed.emplace(plain, k - j);
            }
        }
    }
    return fixed;
}

struct FamilyCheck {
    bool pass = true;
    std::string witness;
    long elements = 0;
    MPoly signed_sum;
};

FamilyCheck run_family(int n, bool zero_free) {
    FamilyCheck fc;
    auto fail = [&](const std::string& w) {
        if (fc.pass) {
            fc.pass = false;
            fc.witness = w;
        }
    };
    auto family = enumerate_signed_family(n, zero_free);
    fc.elements = static_cast<long>(family.size());
    std::set<std::pair<std::vector<OverPart>, int>> seen_fixed;

    for (const auto& x : family) {
        InvolutionTrace tr = apply_involution(x);
        fc.signed_sum += MPoly::monomial(
            x.sign(), static_cast<int>(x.partition.weight()), 0, 0);
        if (tr.case_label == "1") {
            if (!(tr.output == x)) {
                fail("fixed point moved: " + describe(x));
                continue;
            }
            seen_fixed.emplace(x.partition.parts(), x.partition.zero_parts());
            continue;
        }
        if (tr.output.sign() != -x.sign()) {
            fail("sign not reversed: " + describe(x));
            continue;
        }
        if (zero_free && tr.output.partition.zero_parts() != 0) {
            fail("zero part appeared: " + describe(x));
            continue;
        }
        InvolutionTrace back = apply_involution(tr.output);
        if (!(back.output == x)) {
            fail("not involutive: " + describe(x));
            continue;
        }
        const auto& allowed = inverse_case_table().at(tr.case_label);
        if (!allowed.count(back.case_label))
            fail("case " + tr.case_label + " paired with " + back.case_label +
                 ": " + describe(x));
    }

    if (fc.pass && seen_fixed != expected_fixed_points(n, zero_free))
        fail("fixed points are not exactly the padded squares, n=" +
             std::to_string(n));
    return fc;
}

}  // namespace

InvolutionReport verify_involution(int n) {
    InvolutionReport rep;
    auto fail = [&](const std::string& w) {
        if (rep.pass) {
            rep.pass = false;
            rep.witness = w;
        }
    };

    FamilyCheck fc = run_family(n, false);
    rep.elements = fc.elements;
    rep.signed_sum = fc.signed_sum;
    if (!fc.pass) fail(fc.witness);

    /* Signed sum: zero for odd n, the truncated theta series for even n. */
    MPoly expected =
        (n % 2 == 1) ? MPoly::zero() : truncated_theta(n / 2);
    if (rep.pass && !(fc.signed_sum == expected))
        fail("signed sum mismatch at n=" + std::to_string(n));

    /* Same sum computed from the table, as an independent anchor. */
    if (rep.pass) {
        MPoly from_table;
        Assignment t1;
        t1.t = 1;
        for (int k = 0; k <= n; ++k) {
            MPoly term = specialize(ob_or_zero(n - k, k), t1);
            from_table += (k % 2 == 0) ? term : -term;
        }
        if (!(from_table == fc.signed_sum))
            fail("signed sum disagrees with the table at n=" +
                 std::to_string(n));
    }

    /* Zero-free variant with the bound shifted by one: its fixed points give
     * the alternating identity with both binomial columns. */
    if (rep.pass) {
        FamilyCheck zf = run_family(n + 1, true);
        if (!zf.pass) {
            fail("zero-free variant: " + zf.witness);
        } else {
            MPoly theta = truncated_theta((n + 1) / 2);
            if (!(zf.signed_sum == theta))
                fail("zero-free signed sum mismatch at n=" +
                     std::to_string(n));
            MPoly lhs = MPoly::one();
            Assignment t1;
            t1.t = 1;
            for (int k = 1; k <= n; ++k) {
                MPoly pair = specialize(ob_or_zero(n - k, k), t1) +
                             specialize(ob_or_zero(n - k, k - 1), t1);
                MPoly sgn = MPoly::monomial(k % 2 == 0 ? 1 : -1, k, 0, 0);
                lhs += sgn * pair;
            }
            if (rep.pass && !(lhs == theta))
                fail("alternating identity mismatch at n=" +
                     std::to_string(n));
        }
    }
    return rep;
}

}  // namespace overqt
