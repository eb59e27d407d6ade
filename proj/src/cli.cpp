#include "overqt/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "overqt/conjectures.hpp"
#include "overqt/identities.hpp"
#include "overqt/injection.hpp"
#include "overqt/involution.hpp"
#include "overqt/io.hpp"
#include "overqt/overbinomial.hpp"

namespace overqt {

namespace {

void emit_poly(std::ostream& out, const MPoly& p, const std::string& format) {
    if (format == "json")
        out << to_json(p).dump() << "\n";
    else if (format == "latex")
        out << to_latex(p) << "\n";
    else
        out << to_string(p) << "\n";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) {
        quoted += ch;
        if (ch == '"') quoted += '"';
    }
    return quoted + "\"";
}

void emit_identity(std::ostream& out, const IdentityReport& rep, bool json) {
    if (json) {
        out << to_json(rep).dump(2) << "\n";
        return;
    }
    out << (rep.verified ? "verified" : "FAILED") << " " << rep.identity_id;
    if (!rep.parameters.empty()) out << " " << rep.parameters;
    if (rep.verified && !rep.detail.empty()) out << ": " << rep.detail;
    if (!rep.verified) out << ": " << rep.witness;
    out << "\n";
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with over-(q,t)-binomial coefficients",
                 "overqt"};
    app.require_subcommand(1);
    int rc = 0;

    /* compute */
    int cm = 0, cn = 0;
    std::string method = "pascal1";
    std::string cformat = "plain";
    auto* compute = app.add_subcommand(
        "compute", "evaluate B(m,n) as a polynomial in q and t");
    compute->add_option("m", cm, "bound on the largest part")
        ->required()
        ->check(CLI::NonNegativeNumber);
    compute->add_option("n", cn, "bound on the number of parts")
        ->required()
        ->check(CLI::NonNegativeNumber);
    compute
        ->add_option("--method", method,
                     "enumerate|formula|pascal1|pascal2|paths|hyper|phi21")
        ->capture_default_str();
    compute->add_option("--format", cformat, "plain|json|latex")
        ->check(CLI::IsMember({"plain", "json", "latex"}))
        ->capture_default_str();
    compute->callback([&] {
        emit_poly(out, ob_compute(cm, cn, ob_method_from_string(method)),
                  cformat);
    });

    /* coefficient */
    int km = 0, kn = 0, kk = 0;
    long kw = 0;
    auto* coefficient = app.add_subcommand(
        "coefficient", "coefficient of t^k q^w in B(m,n)");
    coefficient->add_option("m", km, "bound on the largest part")
        ->required()
        ->check(CLI::NonNegativeNumber);
    coefficient->add_option("n", kn, "bound on the number of parts")
        ->required()
        ->check(CLI::NonNegativeNumber);
    coefficient->add_option("k", kk, "overline count (t-degree)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    coefficient->add_option("w", kw, "weight (q-degree)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    coefficient->callback(
        [&] { out << ob_coefficient(km, kn, kk, kw).get_str() << "\n"; });

    /* verify */
    std::string verify_id;
    IdentityParams params;
    bool verify_json = false;
    auto* verify =
        app.add_subcommand("verify", "machine-check one identity");
    /* frees the name "h" for the index option below */
    verify->set_help_flag("--help", "print help");
    verify
        ->add_option("id", verify_id,
                     "identity id (dashes and underscores both accepted): "
                     "fin-qbinom, fin-qbi, fin-rogers-fine, fin-lebesgue, "
                     "prop41, prop42, thm43, phi21-rep, fin-theta, fine-cor, "
                     "multinomial-form, delannoy-alternating, qlog-general, "
                     "qlog-square, cor2, butler-r")
        ->required();
    verify->add_option("--n", params.n, "size parameter n");
    verify->add_option("--k", params.k, "index k");
    verify->add_option("--l", params.l, "index l");
    verify->add_option("--r", params.r, "offset r");
    verify->add_option("--m", params.m, "size parameter m");
    verify->add_option("--h", params.h, "index h");
    verify->add_option("--trunc", params.trunc,
                       "series truncation order (series identities only)");
    verify->add_flag("--json", verify_json, "emit the report as JSON");
    verify->callback([&] {
        IdentityReport rep = verify_identity(verify_id, params);
        emit_identity(out, rep, verify_json);
        rc = rep.verified ? 0 : 1;
    });

    /* involution */
    auto* involution = app.add_subcommand(
        "involution", "run or verify the bijective maps");
    involution->require_subcommand(1);

    int n5 = 0;
    std::string trace_text;
    bool phi5_json = false;
    auto* phi5 = involution->add_subcommand(
        "phi5", "sign-reversing involution on zero-padded overpartitions");
    phi5->add_option("--n", n5, "ambient size parameter")
        ->required()
        ->check(CLI::NonNegativeNumber);
    auto* trace_opt = phi5->add_option(
        "--trace", trace_text,
        "map one overpartition (e.g. \"5,5~,3,2,0\") and print the trace");
    phi5->add_flag("--json", phi5_json, "emit the report as JSON");
    phi5->callback([&] {
        if (trace_opt->count() > 0) {
            SignedOverpartition x{overpartition_from_string(trace_text), n5};
            out << to_json(apply_involution(x)).dump(2) << "\n";
            return;
        }
        InvolutionReport rep = verify_involution(n5);
        if (phi5_json) {
            out << to_json(rep).dump(2) << "\n";
        } else {
            out << (rep.pass ? "pass" : "FAIL") << " phi5 n=" << n5 << ": "
                << rep.elements << " elements, signed sum = "
                << to_string(rep.signed_sum);
            if (!rep.witness.empty()) out << "; " << rep.witness;
            out << "\n";
        }
        rc = rep.pass ? 0 : 1;
    });

    int n6 = 0, k6 = 0, l6 = 0;
    std::uint64_t seed6 = 20240901;
    bool phi6_json = false;
    auto* phi6 = involution->add_subcommand(
        "phi6", "injection between pairs of box-bounded overpartitions");
    phi6->add_option("--n", n6, "ambient size parameter")->required();
    phi6->add_option("--k", k6, "left box index")->required();
    phi6->add_option("--l", l6, "right box index")->required();
    phi6->add_option("--seed", seed6, "seed for the randomized involution "
                                      "checks")
        ->capture_default_str();
    phi6->add_flag("--json", phi6_json, "emit the report as JSON");
    phi6->callback([&] {
        InjectionReport rep = verify_pair_injection(n6, k6, l6, seed6);
        if (phi6_json) {
            out << to_json(rep).dump(2) << "\n";
        } else {
            out << (rep.pass ? "pass" : "FAIL") << " phi6 n=" << n6
                << " k=" << k6 << " l=" << l6 << ": " << rep.domain_size
                << " domain pairs, shift " << rep.shift << ", "
                << rep.random_pairs << " random pairs";
            if (!rep.witness.empty()) out << "; " << rep.witness;
            out << "\n";
        }
        rc = rep.pass ? 0 : 1;
    });

    /* scan */
    std::string scan_kind;
    int scan_max = 0;
    int scan_trunc = kDefaultPrellbergOrder;
    bool scan_json = false, scan_csv = false;
    auto* scan = app.add_subcommand(
        "scan", "sweep a conjectured property over a parameter range");
    scan->add_option("kind", scan_kind,
                     "double-unimodal|unimodal-t1|strict|prellberg")
        ->required()
        ->check(CLI::IsMember(
            {"double-unimodal", "unimodal-t1", "strict", "prellberg"}));
    scan->add_option("--max", scan_max,
                     "bound on m+n (unimodality) or n (prellberg)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    scan->add_option("--trunc", scan_trunc, "series order for prellberg")
        ->capture_default_str();
    auto* scan_json_flag =
        scan->add_flag("--json", scan_json, "emit results as JSON");
    scan->add_flag("--csv", scan_csv, "emit results as CSV")
        ->excludes(scan_json_flag);
    scan->callback([&] {
        std::vector<ScanResult> rows =
            scan_kind == "prellberg"
                ? scan_prellberg(scan_max, scan_trunc)
                : scan_unimodality(unimodal_kind_from_string(scan_kind),
                                   scan_max);
        if (scan_json) {
            Json arr = Json::array();
            for (const ScanResult& r : rows) arr.push_back(to_json(r));
            out << arr.dump(2) << "\n";
        } else if (scan_csv) {
            out << "conjecture,parameter,holds,detail\n";
            for (const ScanResult& r : rows)
                out << csv_field(r.conjecture_id) << ","
                    << csv_field(r.parameter) << ","
                    << (r.holds ? "true" : "false") << ","
                    << csv_field(r.detail) << "\n";
        } else {
            for (const ScanResult& r : rows) {
                out << r.conjecture_id << " " << r.parameter << ": "
                    << (r.holds ? "holds" : "FAILS");
                if (!r.detail.empty()) out << "; " << r.detail;
                out << "\n";
            }
        }
        for (const ScanResult& r : rows)
            if (!r.holds) rc = 1;
    });

    /* crosscheck */
    int xm = 6, xn = 6;
    bool cross_json = false;
    auto* crosscheck = app.add_subcommand(
        "crosscheck", "compare every computation method on a grid");
    crosscheck->add_option("--max-m", xm, "largest m")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    crosscheck->add_option("--max-n", xn, "largest n")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    crosscheck->add_flag("--json", cross_json, "emit the report as JSON");
    crosscheck->callback([&] {
        CrossCheckReport rep = cross_check(xm, xn);
        if (cross_json) {
            out << to_json(rep).dump(2) << "\n";
        } else {
            out << (rep.pass ? "pass" : "FAIL") << ": "
                << rep.combinations_checked << " combinations";
            if (!rep.witness.empty()) out << "; " << rep.witness;
            out << "\n";
        }
        rc = rep.pass ? 0 : 1;
    });

    /* table */
    int tm = 0, tn = 0;
    std::string tformat = "plain";
    auto* table = app.add_subcommand(
        "table", "coefficient table of B(m,n) by q-power");
    table->add_option("m", tm, "bound on the largest part")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table->add_option("n", tn, "bound on the number of parts")
        ->required()
        ->check(CLI::NonNegativeNumber);
    table->add_option("--format", tformat, "plain|json|latex")
        ->check(CLI::IsMember({"plain", "json", "latex"}))
        ->capture_default_str();
    table->callback([&] {
        MPoly b = ob_or_zero(tm, tn);
        Json jrows = Json::array();
        for (int e = 0; e <= tm * tn; ++e) {
            MPoly row = b.coeff_of_q(e);
            BigInt at_t1 = specialize_full(row, 1, 1);
            if (tformat == "json") {
                Json jr;
                jr["q"] = e;
                jr["poly"] = to_json(row);
                jr["t1"] = at_t1.get_str();
                jrows.push_back(std::move(jr));
            } else if (tformat == "latex") {
                out << "q^{" << e << "} & " << to_latex(row) << " & "
                    << at_t1.get_str() << " \\\\\n";
            } else {
                out << "q^" << e << ": " << to_string(row) << " | "
                    << at_t1.get_str() << "\n";
            }
        }
        if (tformat == "json") {
            Json j;
            j["m"] = tm;
            j["n"] = tn;
            j["rows"] = std::move(jrows);
            out << j.dump(2) << "\n";
        }
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace overqt
