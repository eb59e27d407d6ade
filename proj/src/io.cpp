#include "overqt/io.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace overqt {

namespace {

std::string plain_power(const char* var, int e) {
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

std::string latex_power(const char* var, int e) {
    if (e == 1) return var;
    return std::string(var) + "^{" + std::to_string(e) + "}";
}

std::string render(const MPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        BigInt a = abs(c);
        std::vector<std::string> factors;
        if (e.t != 0)
            factors.push_back(latex ? latex_power("t", e.t)
                                    : plain_power("t", e.t));
        if (e.u != 0)
            factors.push_back(latex ? latex_power("u", e.u)
                                    : plain_power("u", e.u));
        if (e.q != 0)
            factors.push_back(latex ? latex_power("q", e.q)
                                    : plain_power("q", e.q));
        if (factors.empty()) {
            out += a.get_str();
            continue;
        }
        std::string body;
        for (const auto& f : factors) {
            if (!body.empty() && !latex) body += "*";
            body += f;
        }
        if (a != 1)
            out += latex ? a.get_str() + body : a.get_str() + "*" + body;
        else
            out += body;
    }
    return out;
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("polynomial JSON term needs "
                                                "an integer field \"") +
                                    key + "\"");
    return j.at(key).get<int>();
}

void put_witness(Json& j, const std::string& witness) {
    if (!witness.empty()) j["witness"] = witness;
}

}  // namespace

std::string to_string(const MPoly& p) { return render(p, false); }

std::string to_latex(const MPoly& p) { return render(p, true); }

Json to_json(const MPoly& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["q"] = e.q;
        term["t"] = e.t;
        term["u"] = e.u;
        term["c"] = c.get_str();
        arr.push_back(std::move(term));
    }
    return arr;
}

MPoly mpoly_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial JSON must be an array");
    MPoly p;
    for (const Json& term : j) {
        int eq = int_field(term, "q");
        int et = int_field(term, "t");
        int eu = int_field(term, "u");
        if (!term.contains("c") || !term.at("c").is_string())
            throw std::invalid_argument(
                "polynomial JSON term needs a string field \"c\"");
        BigInt c;
        try {
            c = BigInt(term.at("c").get<std::string>());
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("polynomial JSON coefficient is not "
                                        "a decimal integer");
        }
        p += MPoly::monomial(c, eq, et, eu,
                             eq < 0 ? MPoly::Laurent::yes
                                    : MPoly::Laurent::no);
    }
    return p;
}

std::string to_string(const Overpartition& p) {
    std::string out;
    auto append = [&](const std::string& token) {
        if (!out.empty()) out += ",";
        out += token;
    };
    for (const auto& part : p.parts())
        append(std::to_string(part.value) + (part.overlined ? "~" : ""));
    for (int i = 0; i < p.zero_parts(); ++i) append("0");
    return out;
}

Overpartition overpartition_from_string(const std::string& text) {
    std::vector<OverPart> parts;
    int zeros = 0;
    int previous = -1;
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        pos = comma == std::string::npos ? text.size() + 1 : comma + 1;
        while (!token.empty() && token.front() == ' ') token.erase(0, 1);
        while (!token.empty() && token.back() == ' ') token.pop_back();
        if (token.empty()) {
            if (comma == std::string::npos && !any) break;  // empty input
            throw std::invalid_argument("bad overpartition text: empty entry");
        }
        any = true;
        bool overlined = token.back() == '~';
        if (overlined) token.pop_back();
        int value = 0;
        try {
            std::size_t used = 0;
            value = std::stoi(token, &used);
            if (used != token.size() || value < 0)
                throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad overpartition text: '" + token +
                                        "'");
        }
        if (previous >= 0 && value > previous)
            throw std::invalid_argument(
                "bad overpartition text: parts must be weakly decreasing");
        previous = value;
        if (value == 0) {
            if (overlined)
                throw std::invalid_argument(
                    "bad overpartition text: zero parts cannot be overlined");
            ++zeros;
        } else {
            parts.push_back({value, overlined});
        }
    }
    return Overpartition(std::move(parts), zeros);
}

std::string to_latex(const Overpartition& p) {
    if (p.empty()) return "\\varnothing";
    std::string out = "(";
    bool first = true;
    auto append = [&](const std::string& token) {
        if (!first) out += ",";
        first = false;
        out += token;
    };
    for (const auto& part : p.parts()) {
        std::string v = std::to_string(part.value);
        append(part.overlined ? "\\overline{" + v + "}" : v);
    }
    for (int i = 0; i < p.zero_parts(); ++i) append("0");
    return out + ")";
}

Json to_json(const Overpartition& p) {
    Json parts = Json::array();
    for (const auto& part : p.parts()) {
        Json item;
        item["v"] = part.value;
        item["o"] = part.overlined;
        parts.push_back(std::move(item));
    }
    Json j;
    j["parts"] = std::move(parts);
    j["zeros"] = p.zero_parts();
    return j;
}

Overpartition overpartition_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("parts") || !j.at("parts").is_array())
        throw std::invalid_argument(
            "overpartition JSON needs a \"parts\" array");
    std::vector<OverPart> parts;
    for (const Json& item : j.at("parts")) {
        int v = int_field(item, "v");
        if (!item.contains("o") || !item.at("o").is_boolean())
            throw std::invalid_argument(
                "overpartition JSON part needs a boolean field \"o\"");
        parts.push_back({v, item.at("o").get<bool>()});
    }
    int zeros = 0;
    if (j.contains("zeros")) zeros = int_field(j, "zeros");
    return Overpartition(std::move(parts), zeros);
}

Json to_json(const SignedOverpartition& x) {
    Json j;
    j["partition"] = to_json(x.partition);
    j["k"] = x.part_count();
    j["n"] = x.ambient;
    return j;
}

Json to_json(const InvolutionTrace& tr) {
    Json internals;
    internals["d"] = tr.internals.durfee_side;
    internals["pi"] = to_json(tr.internals.below);
    internals["mu"] = to_json(tr.internals.right);
    internals["s_pi"] = tr.internals.s_below;
    internals["s_mu"] = tr.internals.s_right;
    internals["s2_pi"] = tr.internals.s2_below;
    internals["s2_mu"] = tr.internals.s2_right;
    internals["chi_pi"] = tr.internals.chi_below;
    internals["chi_mu"] = tr.internals.chi_right;
    Json j;
    j["input"] = to_json(tr.input);
    j["output"] = to_json(tr.output);
    j["case"] = tr.case_label;
    j["internals"] = std::move(internals);
    return j;
}

Json to_json(const InvolutionReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["elements"] = rep.elements;
    j["signed_sum"] = to_string(rep.signed_sum);
    put_witness(j, rep.witness);
    return j;
}

Json to_json(const OverPair& p) {
    Json j;
    j["lambda"] = to_json(p.first);
    j["mu"] = to_json(p.second);
    return j;
}

Json to_json(const InjectionReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["shift"] = rep.shift;
    j["domain_size"] = rep.domain_size;
    j["random_pairs"] = rep.random_pairs;
    put_witness(j, rep.witness);
    return j;
}

Json to_json(const IdentityReport& rep) {
    Json j;
    j["identity"] = rep.identity_id;
    j["parameters"] = rep.parameters;
    j["status"] = rep.verified ? "verified" : "failed";
    if (!rep.detail.empty()) j["detail"] = rep.detail;
    put_witness(j, rep.witness);
    j["elapsed_seconds"] = rep.elapsed_seconds;
    return j;
}

Json to_json(const ScanResult& r) {
    Json j;
    j["conjecture"] = r.conjecture_id;
    j["parameter"] = r.parameter;
    j["holds"] = r.holds;
    j["detail"] = r.detail;
    return j;
}

Json to_json(const CrossCheckReport& rep) {
    Json j;
    j["pass"] = rep.pass;
    j["combinations_checked"] = rep.combinations_checked;
    put_witness(j, rep.witness);
    return j;
}

}  // namespace overqt
