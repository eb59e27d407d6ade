#pragma once

#include <string>

#include <json.hpp>

#include "overqt/conjectures.hpp"
#include "overqt/identities.hpp"
#include "overqt/injection.hpp"
#include "overqt/involution.hpp"
#include "overqt/mpoly.hpp"
#include "overqt/overbinomial.hpp"
#include "overqt/overpartition.hpp"

namespace overqt {

/* ordered_json keeps object keys in insertion order, so emitted documents
 * are stable byte for byte. */
using Json = nlohmann::ordered_json;

/* Canonical text form: terms ascending by (e_q, e_t, e_u), factors printed
 * in the order t, u, q and joined with '*', e.g. "1 + q + t*q". */
std::string to_string(const MPoly& p);
std::string to_latex(const MPoly& p);

/* Array of {"q": int, "t": int, "u": int, "c": "<decimal string>"} in the
 * same canonical term order. */
Json to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

/* Comma-separated values, '~' suffix for an overline, zero parts as literal
 * zeros: "5,5~,3,2,0".  The empty overpartition is the empty string. */
std::string to_string(const Overpartition& p);
Overpartition overpartition_from_string(const std::string& text);
std::string to_latex(const Overpartition& p);

Json to_json(const Overpartition& p);
Overpartition overpartition_from_json(const Json& j);

Json to_json(const SignedOverpartition& x);
Json to_json(const InvolutionTrace& tr);
Json to_json(const InvolutionReport& rep);
Json to_json(const OverPair& p);
Json to_json(const InjectionReport& rep);
Json to_json(const IdentityReport& rep);
Json to_json(const ScanResult& r);
Json to_json(const CrossCheckReport& rep);

}  // namespace overqt
