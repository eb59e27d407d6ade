#include "overqt/injection.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace overqt {

namespace {

void require_exchange_input(const OverPair& p, int shift) {
    if (shift < 1) throw std::invalid_argument("shift must be at least 1");
    if (p.first.zero_parts() != 0 || p.second.zero_parts() != 0)
        throw std::invalid_argument("zero parts have no row image");
}

std::string pair_text(const OverPair& p) {
    auto one = [](const Overpartition& q) {
        std::string s = "(";
        for (std::size_t i = 0; i < q.parts().size(); ++i) {
            if (i) s += ",";
            s += std::to_string(q.parts()[i].value);
            if (q.parts()[i].overlined) s += "~";
        }
        return s + ")";
    };
    return "(" + one(p.first) + "," + one(p.second) + ")";
}

}  // namespace

int exchange_index(const OverPair& p, int shift) {
    require_exchange_input(p, shift);
    const auto& lam = p.first.parts();
    const auto& mu = p.second.parts();
    auto mu_value = [&](std::size_t i) {
        return i >= 1 && i <= mu.size() ? mu[i - 1].value : 0;
    };
    int index = 0;
    for (std::size_t i = 1; i <= lam.size(); ++i) {
        int need = shift + (lam[i - 1].overlined ? 1 : 0);
        if (lam[i - 1].value - mu_value(i + 1) >= need)
            index = static_cast<int>(i);
    }
    return index;
}

OverPair exchange_rows(const OverPair& p, int shift) {
    const std::size_t index =
        static_cast<std::size_t>(exchange_index(p, shift));
    const auto& lam = p.first.parts();
    const auto& mu = p.second.parts();

    std::vector<OverPart> gamma, tau;
    for (std::size_t i = 0; i < index; ++i) {
        /* A row absent from mu contributes a plain row of size `shift`. */
        OverPart row = i < mu.size() ? mu[i] : OverPart{0, false};
        gamma.push_back(OverPart{row.value + shift, row.overlined});
    }
    gamma.insert(gamma.end(), lam.begin() + static_cast<long>(index),
                 lam.end());
    for (std::size_t i = 0; i < index; ++i)
        tau.push_back(OverPart{lam[i].value - shift, lam[i].overlined});
    if (index < mu.size())
        tau.insert(tau.end(), mu.begin() + static_cast<long>(index),
                   mu.end());
    while (!tau.empty() && tau.back().value == 0) {
        if (tau.back().overlined)
            throw std::runtime_error("ill-formed-image: overlined empty row");
        tau.pop_back();
    }
    try {
        return {Overpartition(gamma), Overpartition(tau)};
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("ill-formed-image: ") +
                                 e.what());
    }
}

OverPair swap_pair(OverPair p) {
    std::swap(p.first, p.second);
    return p;
}

OverPair conjugate_pair(const OverPair& p) {
    return {p.first.conjugate(), p.second.conjugate()};
}

OverPair lifted_exchange(const OverPair& p, int shift) {
    return swap_pair(conjugate_pair(
        exchange_rows(conjugate_pair(swap_pair(p)), shift)));
}

OverPair pair_injection(const OverPair& p, int shift) {
    return lifted_exchange(exchange_rows(p, shift), shift);
}

namespace {

bool fits_box(const Overpartition& p, int max_part, int max_count) {
    return p.largest() <= max_part &&
           p.num_parts() <= max_count;
}

Overpartition random_overpartition(std::mt19937_64& rng, int max_part,
                                   int max_count) {
    std::uniform_int_distribution<int> count_d(0, max_count);
    std::uniform_int_distribution<int> value_d(1, max_part);
    std::vector<int> values(static_cast<std::size_t>(count_d(rng)));
    for (auto& v : values) v = value_d(rng);
    std::sort(values.rbegin(), values.rend());
    std::vector<OverPart> parts;
    for (std::size_t i = 0; i < values.size(); ++i) {
        bool last = i + 1 == values.size() || values[i + 1] != values[i];
        bool mark = last && (rng() & 1u);
        parts.push_back(OverPart{values[i], mark});
    }
    return Overpartition(parts);
}

}  // namespace

InjectionReport verify_pair_injection(int n, int k, int l,
                                      std::uint64_t seed) {
    if (!(0 < k && k <= l && l < n))
        throw std::invalid_argument("need 0 < k <= l < n");
    InjectionReport rep;
    rep.shift = l - k + 1;
    auto fail = [&](const std::string& w) {
        if (rep.pass) {
            rep.pass = false;
            rep.witness = w;
        }
    };

    std::vector<Overpartition> left, right;
    for_each_overpartition(n - k + 1, k - 1,
                           [&](const Overpartition& p) { left.push_back(p); });
    for_each_overpartition(n - l - 1, l + 1, [&](const Overpartition& p) {
        right.push_back(p);
    });

    std::set<std::pair<std::vector<OverPart>, std::vector<OverPart>>> images;
    for (const auto& a : left) {
        for (const auto& b : right) {
            ++rep.domain_size;
            OverPair x{a, b};
            OverPair mid = exchange_rows(x, rep.shift);
            if (!fits_box(mid.first, n - k, k - 1) ||
                !fits_box(mid.second, n - l, l + 1)) {
                fail("row exchange left the intermediate family: " +
                     pair_text(x));
                continue;
            }
            OverPair y = lifted_exchange(mid, rep.shift);
            if (!fits_box(y.first, n - k, k) ||
                !fits_box(y.second, n - l, l)) {
                fail("image outside the target family: " + pair_text(x));
                continue;
            }
            if (a.weight() + b.weight() !=
                y.first.weight() + y.second.weight())
                fail("weight changed: " + pair_text(x));
            if (a.overline_count() + b.overline_count() !=
                y.first.overline_count() + y.second.overline_count())
                fail("overline count changed: " + pair_text(x));
            if (!images.emplace(y.first.parts(), y.second.parts()).second)
                fail("image collision at " + pair_text(x));
        }
    }

    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 1000; ++trial) {
        ++rep.random_pairs;
        OverPair x{random_overpartition(rng, n, l + 2),
                   random_overpartition(rng, n, l + 2)};
        try {
            OverPair ax = exchange_rows(x, rep.shift);
            if (!(exchange_rows(ax, rep.shift) == x))
                fail("row exchange not involutive: " + pair_text(x));
            else if (exchange_index(ax, rep.shift) !=
                     exchange_index(x, rep.shift))
                fail("exchange index not preserved: " + pair_text(x));
            if (!(lifted_exchange(lifted_exchange(x, rep.shift), rep.shift) ==
                  x))
                fail("lifted exchange not involutive: " + pair_text(x));
        } catch (const std::runtime_error& e) {
            fail(std::string(e.what()) + " on " + pair_text(x));
        }
    }
    return rep;
}

}  // namespace overqt
