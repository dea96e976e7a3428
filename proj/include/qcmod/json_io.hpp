#pragma once

#include "qcmod/enumerator.hpp"
#include "qcmod/games.hpp"
#include "qcmod/verifier.hpp"

#include <json.hpp>

#include <string>
#include <variant>

namespace qcmod::json_io {

using nlohmann::json;

// Parsers throw InputError on malformed documents.

json to_json(const Rational &q);
Rational rational_from(const json &j);

json to_json(const GaussianRational &z);
GaussianRational gaussian_from(const json &j);

json to_json(const Cyclotomic &x);
Cyclotomic cyclotomic_from(const json &j);

json to_json(const Word &w);
Word word_from(const json &j, const GroupParams &params);

json to_json(const GroupParams &params);
GroupParams params_from(const json &j);

json to_json(const GaussianElement &x);
json to_json(const CyclotomicElement &x);

json to_json(const PartialTrace &tau);
json to_json(const CyclotomicTrace &tau);
/// Values are Gaussian objects or cyclotomic objects; a document with any
/// cyclotomic value yields a CyclotomicTrace.
std::variant<PartialTrace, CyclotomicTrace> trace_from(const json &j);
PartialTrace partial_trace_from(const json &j);

json to_json(const Correlation &p);
Correlation correlation_from(const json &j);

json to_json(const NonlocalGame &game);
NonlocalGame game_from(const json &j);

json to_json(const Candidate &c);

json to_json(const QcModulus &t);
QcModulus modulus_from(const json &j);

json to_json(const VerdictCertificate &c);
VerdictCertificate certificate_from(const json &j);

json to_json(const VerifyProgress &p);
VerifyProgress progress_from(const json &j);

json to_json(const ProbeResult &r);

/// Reads and parses a whole JSON file; throws InputError.
json read_file(const std::string &path);

} // namespace qcmod::json_io
