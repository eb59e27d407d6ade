#include "overqt/overpartition.hpp"

#include <algorithm>

namespace overqt {

bool Overpartition::valid(const std::vector<OverPart>& parts, int zero_parts) {
    if (zero_parts < 0) return false;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].value <= 0) return false;
        if (i + 1 < parts.size()) {
            if (parts[i].value < parts[i + 1].value) return false;
            /* an overline sits on the last copy of its value */
            if (parts[i].overlined && parts[i].value == parts[i + 1].value)
                return false;
        }
    }
    return true;
}

Overpartition::Overpartition(std::vector<OverPart> parts, int zero_parts)
    : parts_(std::move(parts)), zero_parts_(zero_parts) {
    if (!valid(parts_, zero_parts_))
        throw std::invalid_argument("ill-formed overpartition");
}

long Overpartition::weight() const {
    long w = 0;
    for (const auto& p : parts_) w += p.value;
    return w;
}

int Overpartition::overline_count() const {
    int c = 0;
    for (const auto& p : parts_) c += p.overlined ? 1 : 0;
    return c;
}

Overpartition Overpartition::conjugate() const {
    if (zero_parts_ != 0)
        throw std::invalid_argument("conjugate undefined with zero parts");
    if (parts_.empty()) return Overpartition();
    std::vector<OverPart> conj(static_cast<std::size_t>(parts_[0].value));
    for (std::size_t j = 0; j < conj.size(); ++j) {
        int col = static_cast<int>(j) + 1;
        int height = 0;
        while (height < static_cast<int>(parts_.size()) &&
               parts_[static_cast<std::size_t>(height)].value >= col)
            ++height;
        conj[j].value = height;
    }
    /* The corner of row r, column v (r = last row of value v) transposes to
     * the corner of row v, column r, so a mark on value v moves to row v of
     * the conjugate, which is the last row of value r there. */
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (parts_[i].overlined)
            conj[static_cast<std::size_t>(parts_[i].value - 1)].overlined =
                true;
    return Overpartition(std::move(conj));
}

Overpartition Overpartition::with_insert(int value, bool overlined) const {
    if (value < 0) throw std::invalid_argument("part value must be >= 0");
    if (value == 0) {
        if (overlined)
            throw std::invalid_argument("zero parts are never overlined");
        Overpartition r = *this;
        r.zero_parts_ += 1;
        return r;
    }
    std::vector<OverPart> np = parts_;
    std::size_t pos = 0;
    if (overlined) {
        /* after every copy of value */
        while (pos < np.size() && np[pos].value >= value) ++pos;
    } else {
        /* before every copy of value (keeps an overlined copy last) */
        while (pos < np.size() && np[pos].value > value) ++pos;
    }
    np.insert(np.begin() + static_cast<std::ptrdiff_t>(pos),
              OverPart{value, overlined});
    return Overpartition(std::move(np), zero_parts_);
}

std::optional<OverPart> Overpartition::smallest_positive() const {
    if (parts_.empty()) return std::nullopt;
    return parts_.back();
}

int Overpartition::second_smallest_value() const {
    if (parts_.size() < 2) return 0;
    return parts_[parts_.size() - 2].value;
}

Overpartition Overpartition::without_smallest_positive() const {
    if (parts_.empty())
        throw std::invalid_argument("no positive part to remove");
    Overpartition r = *this;
    r.parts_.pop_back();
    return r;
}

Overpartition Overpartition::overline_smallest_positive() const {
    if (parts_.empty())
        throw std::invalid_argument("no positive part to overline");
    if (parts_.back().overlined)
        throw std::invalid_argument("smallest part already overlined");
    Overpartition r = *this;
    r.parts_.back().overlined = true;
    return r;
}

Overpartition Overpartition::unoverline_smallest_positive() const {
    if (parts_.empty() || !parts_.back().overlined)
        throw std::invalid_argument("smallest part is not overlined");
    Overpartition r = *this;
    r.parts_.back().overlined = false;
    return r;
}

DurfeeDecomposition durfee(const Overpartition& p, int offset) {
    const auto& parts = p.parts();
    int d = 0;
    for (int k = 1; k <= static_cast<int>(parts.size()); ++k)
        if (parts[static_cast<std::size_t>(k - 1)].value >= k + offset) d = k;

    DurfeeDecomposition dec;
    dec.side = d;
    dec.offset = offset;

    int width = d + offset;
    std::vector<OverPart> rightrows;
    for (int i = 0; i < d; ++i) {
        const OverPart& row = parts[static_cast<std::size_t>(i)];
        int rest = row.value - width;
        if (rest > 0) {
            rightrows.push_back(OverPart{rest, row.overlined});
        } else if (row.overlined) {
            if (i != d - 1)
                throw std::logic_error(
                    "overline above the rectangle corner");
            dec.corner_overlined = true;
        }
    }
    dec.right = Overpartition(std::move(rightrows)).conjugate();

    std::vector<OverPart> belowrows(parts.begin() + d, parts.end());
    dec.below = Overpartition(std::move(belowrows), p.zero_parts());
    return dec;
}

Overpartition durfee_reconstruct(const DurfeeDecomposition& dec) {
    int d = dec.side;
    int width = d + dec.offset;
    if (d < 0 || (d > 0 && width < 0))
        throw std::invalid_argument("durfee rectangle has negative width");

    Overpartition rightrows = dec.right.conjugate();
    if (rightrows.positive_count() > d)
        throw std::invalid_argument("right region taller than the rectangle");
    if (dec.corner_overlined && rightrows.positive_count() == d)
        throw std::invalid_argument(
            "corner mark requires an empty bottom rectangle row");

    std::vector<OverPart> parts;
    for (int i = 0; i < d; ++i) {
        OverPart row{width, false};
        if (i < rightrows.positive_count()) {
            row.value += rightrows.parts()[static_cast<std::size_t>(i)].value;
            row.overlined =
                rightrows.parts()[static_cast<std::size_t>(i)].overlined;
        } else if (i == d - 1 && dec.corner_overlined) {
            row.overlined = true;
        }
        parts.push_back(row);
    }
    for (const auto& bp : dec.below.parts()) parts.push_back(bp);

    Overpartition result(std::move(parts), dec.below.zero_parts());
    if (durfee(result, dec.offset).side != d)
        throw std::invalid_argument("pieces change the Durfee side");
    return result;
}

OpStats op_stats(const Overpartition& p) {
    return OpStats{p.weight(), p.overline_count(), p.num_parts(), p.largest()};
}

namespace {

void walk(std::vector<OverPart>& prefix, int max_part, int remaining_count,
          const std::function<void(const Overpartition&)>& fn) {
    /* emit the current partition under every valid overline mask */
    std::vector<std::size_t> last_of_value;
    for (std::size_t i = 0; i < prefix.size(); ++i)
        if (i + 1 == prefix.size() ||
            prefix[i + 1].value != prefix[i].value)
            last_of_value.push_back(i);
    std::size_t nmasks = std::size_t{1} << last_of_value.size();
    for (std::size_t mask = 0; mask < nmasks; ++mask) {
        for (std::size_t b = 0; b < last_of_value.size(); ++b)
            prefix[last_of_value[b]].overlined = (mask >> b) & 1u;
        fn(Overpartition(prefix));
    }
    for (auto i : last_of_value) prefix[i].overlined = false;

    if (remaining_count == 0) return;
    int cap = prefix.empty() ? max_part : prefix.back().value;
    for (int v = 1; v <= cap; ++v) {
        prefix.push_back(OverPart{v, false});
        walk(prefix, max_part, remaining_count - 1, fn);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_overpartition(
    int max_part, int max_count,
    const std::function<void(const Overpartition&)>& fn) {
    if (max_part < 0 || max_count < 0) return;  // no box, not even empty
    std::vector<OverPart> prefix;
    walk(prefix, max_part, max_count, fn);
}

std::vector<Overpartition> enumerate_overpartitions(int max_part,
                                                    int max_count) {
    std::vector<Overpartition> out;
    for_each_overpartition(max_part, max_count,
                           [&](const Overpartition& p) { out.push_back(p); });
    return out;
}

MPoly box_generating_function(int max_part, int max_count) {
    MPoly gf;
    for_each_overpartition(max_part, max_count, [&](const Overpartition& p) {
        gf += MPoly::monomial(1, static_cast<int>(p.weight()),
                              p.overline_count(), 0);
    });
    return gf;
}

}  // namespace overqt
