#include <doctest.h>

#include <array>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "overqt/injection.hpp"
#include "overqt/involution.hpp"
#include "overqt/io.hpp"
#include "overqt/qfunctions.hpp"

using namespace overqt;

namespace {

Json load_fixture(const std::string& name) {
    std::ifstream in(std::string(OVERQT_FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    Json j;
    in >> j;
    return j;
}

SignedOverpartition member(const std::string& text, int ambient) {
    return SignedOverpartition{overpartition_from_string(text), ambient};
}

}  // namespace

TEST_CASE("signed family enumeration") {
    CHECK(enumerate_signed_family(0).size() == 1);

    std::vector<SignedOverpartition> family = enumerate_signed_family(2);
    CHECK(family.size() == 5);
    int weight_one = 0;
    for (const SignedOverpartition& x : family) {
        CHECK(x.in_domain());
        if (x.partition.weight() == 1) {
            ++weight_one;
            CHECK(x.part_count() == 1);
        }
    }
    CHECK(weight_one == 2);

    SignedOverpartition example = member("5,5~,3,2,0", 10);
    CHECK(example.in_domain());
    CHECK(example.part_count() == 5);
    CHECK(example.sign() == -1);
}

TEST_CASE("the involution rejects members outside the family") {
    SignedOverpartition bad = member("3,1", 3);
    CHECK_FALSE(bad.in_domain());
    CHECK_THROWS_AS(apply_involution(bad), std::invalid_argument);
    try {
        apply_involution(bad);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).rfind("not-in-O-n", 0) == 0);
    }
}

TEST_CASE("squares are fixed points") {
    InvolutionTrace one = apply_involution(member("1", 2));
    CHECK(one.case_label == "1");
    CHECK(one.output == one.input);

    InvolutionTrace square = apply_involution(member("2,2,0,0", 8));
    CHECK(square.case_label == "1");
    CHECK(square.output == square.input);

    InvolutionTrace marked = apply_involution(member("2,2~", 6));
    CHECK(marked.case_label == "1");
    CHECK(marked.output == marked.input);
}

TEST_CASE("worked mappings from the fixture") {
    Json fixture = load_fixture("example_s5.json");
    for (const Json& entry : fixture) {
        int n = entry.at("n").get<int>();
        SignedOverpartition input =
            member(entry.at("input").get<std::string>(), n);
        InvolutionTrace tr = apply_involution(input);
        CHECK(tr.case_label == entry.at("case").get<std::string>());
        CHECK(tr.output.partition ==
              overpartition_from_string(entry.at("output").get<std::string>()));
        CHECK(tr.internals.durfee_side == entry.at("d").get<int>());
        CHECK(tr.internals.below ==
              overpartition_from_string(entry.at("pi").get<std::string>()));
        CHECK(tr.internals.right ==
              overpartition_from_string(entry.at("mu").get<std::string>()));
        /* applying the map again returns to the start */
        CHECK(apply_involution(tr.output).output == input);
    }
}

TEST_CASE("exhaustive involution checks") {
    for (int n = 0; n <= 9; ++n) {
        InvolutionReport rep = verify_involution(n);
        CHECK(rep.pass);
        CHECK(rep.witness.empty());
        CHECK(rep.elements > 0);
    }
    CHECK(verify_involution(3).signed_sum.is_zero());
    CHECK(verify_involution(4).signed_sum == truncated_theta(2));
    CHECK(verify_involution(8).signed_sum == truncated_theta(4));
}

TEST_CASE("row exchange reproduces the worked chain") {
    Json fixture = load_fixture("example_s6.json");
    int shift = fixture.at("shift").get<int>();
    CHECK(shift == fixture.at("l").get<int>() - fixture.at("k").get<int>() + 1);
    auto pair_at = [](const Json& j) {
        return OverPair{
            overpartition_from_string(j.at("lambda").get<std::string>()),
            overpartition_from_string(j.at("mu").get<std::string>())};
    };
    OverPair start = pair_at(fixture.at("start"));
    int index_before = exchange_index(start, shift);
    OverPair current = start;
    for (const Json& step : fixture.at("steps")) {
        std::string op = step.at("op").get<std::string>();
        if (op == "A")
            current = exchange_rows(current, shift);
        else if (op == "S")
            current = swap_pair(current);
        else
            current = conjugate_pair(current);
        CHECK(current == pair_at(step));
    }
    CHECK(current == pair_injection(start, shift));
    /* the exchange index survives the exchange */
    CHECK(exchange_index(exchange_rows(start, shift), shift) == index_before);
    /* weight and overline totals ride along */
    auto total = [](const OverPair& p) {
        return p.first.weight() + p.second.weight();
    };
    auto marks = [](const OverPair& p) {
        return p.first.overline_count() + p.second.overline_count();
    };
    CHECK(total(current) == total(start));
    CHECK(marks(current) == marks(start));
}

TEST_CASE("the component maps are involutions") {
    OverPair p{overpartition_from_string("7~,6,4"),
               overpartition_from_string("4,4~,3,3,2,2")};
    CHECK(swap_pair(swap_pair(p)) == p);
    CHECK(conjugate_pair(conjugate_pair(p)) == p);
    CHECK(exchange_rows(exchange_rows(p, 2), 2) == p);
    CHECK(lifted_exchange(lifted_exchange(p, 2), 2) == p);
}

TEST_CASE("row exchange input validation") {
    OverPair p{overpartition_from_string("3,2"),
               overpartition_from_string("2,1")};
    CHECK_THROWS_AS(exchange_rows(p, 0), std::invalid_argument);
    OverPair with_zero{Overpartition({{3, false}}, 1),
                       overpartition_from_string("2,1")};
    CHECK_THROWS_AS(exchange_rows(with_zero, 1), std::invalid_argument);
}

TEST_CASE("pair injection verifies on small families") {
    InjectionReport trivial = verify_pair_injection(2, 1, 1);
    CHECK(trivial.pass);
    CHECK(trivial.domain_size == 1);
    CHECK(trivial.shift == 1);

    for (auto [n, k, l] : std::vector<std::array<int, 3>>{
             {5, 2, 3}, {6, 2, 3}, {6, 1, 4}, {7, 3, 4}}) {
        InjectionReport rep = verify_pair_injection(n, k, l);
        CHECK(rep.pass);
        CHECK(rep.witness.empty());
        CHECK(rep.random_pairs == 1000);
    }

    CHECK_THROWS_AS(verify_pair_injection(3, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_pair_injection(3, 0, 2), std::invalid_argument);
}
