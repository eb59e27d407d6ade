#include "overqt/conjectures.hpp"

#include <sstream>
#include <stdexcept>

#include "overqt/overbinomial.hpp"
#include "overqt/qfunctions.hpp"

namespace overqt {

UnimodalKind unimodal_kind_from_string(const std::string& s) {
    if (s == "double-unimodal" || s == "double") return UnimodalKind::double_qt;
    if (s == "unimodal-t1" || s == "t1") return UnimodalKind::t1;
    if (s == "strict") return UnimodalKind::strict;
    throw std::invalid_argument("unknown unimodality kind: " + s);
}

bool is_unimodal(const std::vector<BigInt>& seq) {
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
    while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
    return i + 1 >= seq.size();
}

bool is_strictly_unimodal(const std::vector<BigInt>& seq) {
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] < seq[i + 1]) ++i;
    while (i + 1 < seq.size() && seq[i] > seq[i + 1]) ++i;
    return i + 1 >= seq.size();
}

namespace {

std::size_t peak_index(const std::vector<BigInt>& seq) {
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
    return i;
}

/* Index of the first ascent after a strict descent, for violation reports. */
std::size_t violation_index(const std::vector<BigInt>& seq) {
    std::size_t i = 0;
    while (i + 1 < seq.size() && seq[i] <= seq[i + 1]) ++i;
    while (i + 1 < seq.size() && seq[i] >= seq[i + 1]) ++i;
    return i;
}

/* First adjacent equality, or seq.size() when all steps are strict. */
std::size_t plateau_index(const std::vector<BigInt>& seq) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] == seq[i + 1]) return i;
    return seq.size();
}

std::vector<BigInt> q_row(const MPoly& p, int t_deg) {
    std::vector<BigInt> row(static_cast<std::size_t>(p.max_q_degree()) + 1);
    for (int e = 0; e <= p.max_q_degree(); ++e)
        row[static_cast<std::size_t>(e)] = p.coeff(e, t_deg, 0);
    return row;
}

std::vector<BigInt> t_column(const MPoly& p, int q_deg) {
    std::vector<BigInt> col(static_cast<std::size_t>(p.max_t_degree()) + 1);
    for (int j = 0; j <= p.max_t_degree(); ++j)
        col[static_cast<std::size_t>(j)] = p.coeff(q_deg, j, 0);
    return col;
}

std::vector<BigInt> t1_sequence(const MPoly& p) {
    Assignment at;
    at.t = 1;
    MPoly s = specialize(p, at);
    std::vector<BigInt> seq(static_cast<std::size_t>(s.max_q_degree()) + 1);
    for (int e = 0; e <= s.max_q_degree(); ++e)
        seq[static_cast<std::size_t>(e)] = s.coeff(e, 0, 0);
    return seq;
}

ScanResult scan_double(int m, int n, const MPoly& p) {
    ScanResult res;
    res.conjecture_id = "double-unimodal";
    res.parameter = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    std::ostringstream peaks_q, peaks_t;
    for (int k = 0; k <= p.max_t_degree(); ++k) {
        auto row = q_row(p, k);
        if (!is_unimodal(row)) {
            res.holds = false;
            res.detail = "row t^" + std::to_string(k) + " rises at q^" +
                         std::to_string(violation_index(row)) +
                         " after a descent";
            return res;
        }
        if (k) peaks_q << ' ';
        peaks_q << peak_index(row);
    }
    for (int e = 0; e <= p.max_q_degree(); ++e) {
        auto col = t_column(p, e);
        if (!is_unimodal(col)) {
            res.holds = false;
            res.detail = "column q^" + std::to_string(e) + " rises at t^" +
                         std::to_string(violation_index(col)) +
                         " after a descent";
            return res;
        }
        if (e) peaks_t << ' ';
        peaks_t << peak_index(col);
    }
    res.detail =
        "q-row peaks " + peaks_q.str() + "; t-column peaks " + peaks_t.str();
    return res;
}

ScanResult scan_t1(int m, int n, const MPoly& p) {
    ScanResult res;
    res.conjecture_id = "unimodal-t1";
    res.parameter = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    auto seq = t1_sequence(p);
    if (is_unimodal(seq)) {
        std::size_t peak = peak_index(seq);
        res.detail = "peak at q^" + std::to_string(peak) + " = " +
                     seq[peak].get_str();
    } else {
        res.holds = false;
        res.detail = "rises at q^" + std::to_string(violation_index(seq)) +
                     " after a descent";
    }
    return res;
}

ScanResult scan_strict(int m, int n, const MPoly& p) {
    ScanResult res;
    res.conjecture_id = "strict";
    res.parameter = "m=" + std::to_string(m) + " n=" + std::to_string(n);
    std::ostringstream detail;

    auto seq = t1_sequence(p);
    if (is_strictly_unimodal(seq))
        detail << "t1 strict";
    else if (is_unimodal(seq))
        detail << "t1 plateau at q^" << plateau_index(seq);
    else
        detail << "t1 not unimodal";

    detail << "; columns ";
    std::string col_note = "strict";
    for (int e = 0; e <= p.max_q_degree() && col_note == "strict"; ++e) {
        auto col = t_column(p, e);
        if (!is_strictly_unimodal(col))
            col_note = "q^" + std::to_string(e) +
                       (is_unimodal(col) ? " plateau at t^" +
                                               std::to_string(
                                                   plateau_index(col))
                                         : " not unimodal");
    }
    detail << col_note << "; rows ";
    std::string row_note = "strict";
    for (int k = 0; k <= p.max_t_degree() && row_note == "strict"; ++k) {
        auto row = q_row(p, k);
        if (!is_strictly_unimodal(row))
            row_note = "t^" + std::to_string(k) +
                       (is_unimodal(row) ? " plateau at q^" +
                                               std::to_string(
                                                   plateau_index(row))
                                         : " not unimodal");
    }
    detail << row_note;
    res.detail = detail.str();
    return res;
}

}  // namespace

std::vector<ScanResult> scan_unimodality(UnimodalKind kind, int max_mn) {
    if (max_mn < 0) throw std::invalid_argument("max must be nonnegative");
    std::vector<ScanResult> out;
    for (int m = 0; m <= max_mn; ++m) {
        for (int n = 0; m + n <= max_mn; ++n) {
            MPoly p = ob_or_zero(m, n);
            switch (kind) {
                case UnimodalKind::double_qt:
                    out.push_back(scan_double(m, n, p));
                    break;
                case UnimodalKind::t1:
                    out.push_back(scan_t1(m, n, p));
                    break;
                case UnimodalKind::strict:
                    out.push_back(scan_strict(m, n, p));
                    break;
            }
        }
    }
    return out;
}

std::vector<ScanResult> scan_prellberg(int max_n, int trunc) {
    if (max_n < 1) throw std::invalid_argument("max must be at least 1");
    if (trunc < 1) throw std::invalid_argument("trunc must be at least 1");
    std::vector<ScanResult> out;
    for (int n = 1; n <= max_n; ++n) {
        MPoly num = (MPoly::one() - MPoly::q()) * poch_plus(MPoly::q(n), n);
        std::vector<BigInt> series(static_cast<std::size_t>(trunc) + 1);
        for (const auto& [e, c] : num.terms())
            if (e.q <= trunc) series[static_cast<std::size_t>(e.q)] = c;
        for (int j = 0; j < n; ++j) {
            int step = n + j;
            for (int i = step; i <= trunc; ++i)
                series[static_cast<std::size_t>(i)] +=
                    series[static_cast<std::size_t>(i - step)];
        }
        series[1] += 1;

        ScanResult res;
        res.conjecture_id = "prellberg";
        res.parameter = "n=" + std::to_string(n);
        res.detail = "nonnegative to q^" + std::to_string(trunc);
        for (int i = 0; i <= trunc; ++i) {
            if (series[static_cast<std::size_t>(i)] < 0) {
                res.holds = false;
                res.detail =
                    "coefficient of q^" + std::to_string(i) + " is " +
                    series[static_cast<std::size_t>(i)].get_str();
                break;
            }
        }
        out.push_back(res);
    }
    return out;
}

}  // namespace overqt
