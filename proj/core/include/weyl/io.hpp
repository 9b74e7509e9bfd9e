#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "weyl/chow.hpp"
#include "weyl/classify.hpp"
#include "weyl/coxeter.hpp"
#include "weyl/cremona.hpp"
#include "weyl/reduction.hpp"

namespace weyl {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Integers are emitted as JSON numbers while they fit in 64 bits and as
// decimal strings beyond that; parsing accepts both.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

// Text form: "d;m1,m2,...,ms". Parsing also accepts surrounding
// parentheses and whitespace; printing uses the parenthesized form.
std::string to_text(const CurveClass& c);
std::string to_text(const DivisorClass& D);
CurveClass parse_curve(SpaceParams space, std::string_view text);
DivisorClass parse_divisor(SpaceParams space, std::string_view text);

// JSON form: {"r":3,"s":11,"d":7,"m":[4,1,...]}.
json to_json(const CurveClass& c);
json to_json(const DivisorClass& D);
CurveClass curve_from_json(const json& j);
DivisorClass divisor_from_json(const json& j);

// Index sets as 1-based arrays: {"I":[1,2,3,4]}.
json to_json(const IndexSet& I);
IndexSet index_set_from_json(SpaceParams space, const json& j);

// Weyl words as arrays of generator indices: [0,5,0].
json to_json(const WeylWord& word);
WeylWord weyl_word_from_json(const json& j);

std::string reason_token(WeylLineVerdict::Reason reason);
std::string lemma_token(CertificateData::Lemma lemma);

json to_json(const CertificateData& cert);
json to_json(const ReductionOutcome& outcome, bool include_trace);
json to_json(const WeylLineVerdict& verdict, bool include_trace);
json to_json(const SpiWitness& witness);

// Report fields: invariant_linear, invariant_quadratic, spi_witness
// (nullable), verdict, trace.
json to_json(const EquivalenceReport& report);

// Orbit summary: {"size":27,"complete":true,...}.
json orbit_summary_json(const OrbitResult& orbit);

}  // namespace weyl
