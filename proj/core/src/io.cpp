#include "weyl/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>
#include <utility>

namespace weyl {

namespace {

std::string_view strip(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

Int parse_int(std::string_view token) {
  token = strip(token);
  if (token.empty()) {
    throw std::invalid_argument("empty integer token");
  }
  // cpp_int's own parser does not take a leading '+'.
  const bool plus = token[0] == '+';
  std::size_t i = (plus || token[0] == '-') ? 1 : 0;
  if (i == token.size()) {
    throw std::invalid_argument("sign without digits");
  }
  for (std::size_t k = i; k < token.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(token[k]))) {
      throw std::invalid_argument("malformed integer token '" +
                                  std::string(token) + "'");
    }
  }
  return Int(std::string(plus ? token.substr(1) : token));
}

std::vector<Int> parse_body(SpaceParams space, std::string_view text, Int& degree) {
  text = strip(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = strip(text.substr(1, text.size() - 2));
  }
  const std::size_t semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("class literal needs the form 'd;m1,...,ms'");
  }
  degree = parse_int(text.substr(0, semi));

  std::vector<Int> m;
  std::string_view rest = text.substr(semi + 1);
  while (true) {
    const std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos) {
      m.push_back(parse_int(rest));
      break;
    }
    m.push_back(parse_int(rest.substr(0, comma)));
    rest = rest.substr(comma + 1);
  }
  if (static_cast<int>(m.size()) != space.s) {
    throw std::invalid_argument("class literal has " +
                                std::to_string(m.size()) +
                                " multiplicities, expected " +
                                std::to_string(space.s));
  }
  return m;
}

std::string body_text(const Int& d, const std::vector<Int>& m) {
  std::string out = "(" + d.str() + ";";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ",";
    out += m[i].str();
  }
  out += ")";
  return out;
}

json int_vector_json(const std::vector<Int>& values) {
  json out = json::array();
  for (const Int& v : values) out.push_back(int_to_json(v));
  return out;
}

std::vector<Int> int_vector_from_json(const json& j) {
  std::vector<Int> out;
  for (const json& v : j) out.push_back(int_from_json(v));
  return out;
}

}  // namespace

json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_integer()) {
    return Int(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    return parse_int(j.get<std::string>());
  }
  throw std::invalid_argument("expected an integer or a decimal string");
}

std::string to_text(const CurveClass& c) { return body_text(c.d, c.m); }

std::string to_text(const DivisorClass& D) { return body_text(D.d, D.m); }

CurveClass parse_curve(SpaceParams space, std::string_view text) {
  Int d;
  std::vector<Int> m = parse_body(space, text, d);
  return CurveClass(space, std::move(d), std::move(m));
}

DivisorClass parse_divisor(SpaceParams space, std::string_view text) {
  Int d;
  std::vector<Int> m = parse_body(space, text, d);
  return DivisorClass(space, std::move(d), std::move(m));
}

json to_json(const CurveClass& c) {
  return json{{"r", c.space.r},
              {"s", c.space.s},
              {"d", int_to_json(c.d)},
              {"m", int_vector_json(c.m)}};
}

json to_json(const DivisorClass& D) {
  return json{{"r", D.space.r},
              {"s", D.space.s},
              {"d", int_to_json(D.d)},
              {"m", int_vector_json(D.m)}};
}

CurveClass curve_from_json(const json& j) {
  return CurveClass(SpaceParams(j.at("r").get<int>(), j.at("s").get<int>()),
                    int_from_json(j.at("d")),
                    int_vector_from_json(j.at("m")));
}

DivisorClass divisor_from_json(const json& j) {
  return DivisorClass(SpaceParams(j.at("r").get<int>(), j.at("s").get<int>()),
                      int_from_json(j.at("d")),
                      int_vector_from_json(j.at("m")));
}

json to_json(const IndexSet& I) { return json{{"I", I.one_based()}}; }

IndexSet index_set_from_json(SpaceParams space, const json& j) {
  return IndexSet::from_one_based(space, j.at("I").get<std::vector<int>>());
}

json to_json(const WeylWord& word) { return json(word); }

WeylWord weyl_word_from_json(const json& j) {
  return j.get<std::vector<int>>();
}

std::string reason_token(WeylLineVerdict::Reason reason) {
  using Reason = WeylLineVerdict::Reason;
  switch (reason) {
    case Reason::None:
      return "none";
    case Reason::WrongLinearInvariant:
      return "wrong-linear-invariant";
    case Reason::WrongQuadraticInvariant:
      return "wrong-quadratic-invariant";
    case Reason::CremonaReducedAtDegreeAboveOne:
      return "cremona-reduced-at-degree>1";
    case Reason::ReachedDegreeOneWrongClass:
      return "reached-degree<=1-wrong-class";
    case Reason::DegreeNonPositive:
      return "degree-nonpositive";
  }
  throw std::logic_error("unknown verdict reason");
}

std::string lemma_token(CertificateData::Lemma lemma) {
  switch (lemma) {
    case CertificateData::Lemma::ExcessAtLeastFive:
      return "s>=r+5";
    case CertificateData::Lemma::ExcessFour:
      return "s=r+4,r>=5";
  }
  throw std::logic_error("unknown certificate lemma");
}

json to_json(const CertificateData& cert) {
  json out{{"lemma", lemma_token(cert.lemma)},
           {"class", to_json(cert.at)},
           {"head_sum", int_to_json(cert.head_sum)},
           {"tail_sum", int_to_json(cert.tail_sum)},
           {"t", int_to_json(cert.degree_drop)}};
  out["mixed_sum"] =
      cert.mixed_sum ? int_to_json(*cert.mixed_sum) : json(nullptr);
  return out;
}

json to_json(const ReductionOutcome& outcome, bool include_trace) {
  json out;
  out["schema_version"] = kSchemaVersion;
  switch (outcome.status) {
    case ReductionOutcome::Status::Reduced:
      out["outcome"] = "reduced";
      break;
    case ReductionOutcome::Status::NotInTitsCone:
      out["outcome"] = "not-in-tits-cone";
      break;
    case ReductionOutcome::Status::CapExceeded:
      out["outcome"] = "cap-exceeded";
      break;
  }
  out["final"] = to_json(outcome.final);
  out["steps"] = outcome.steps;
  out["certificate"] =
      outcome.certificate ? to_json(*outcome.certificate) : json(nullptr);
  if (include_trace) {
    json trace = json::array();
    for (const TraceStep& step : outcome.trace) {
      trace.push_back(json{{"class", to_json(step.cls)},
                           {"applied_phi", step.applied_phi}});
    }
    out["trace"] = std::move(trace);
  }
  return out;
}

json to_json(const WeylLineVerdict& verdict, bool include_trace) {
  json out;
  out["verdict"] = verdict.is_line ? "yes" : "no";
  out["reason"] =
      verdict.is_line ? json(nullptr) : json(reason_token(verdict.reason));
  if (include_trace) {
    json trace = json::array();
    for (const CurveClass& cls : verdict.trace) trace.push_back(to_json(cls));
    out["trace"] = std::move(trace);
  }
  return out;
}

json to_json(const SpiWitness& witness) {
  json word = json::array();
  for (const IndexSet& I : witness.word) word.push_back(I.one_based());
  return json{{"word", std::move(word)},
              {"k", witness.point + 1},
              {"value", int_to_json(witness.value)},
              {"degree_check", int_to_json(witness.degree_check)}};
}

json to_json(const EquivalenceReport& report) {
  json out;
  out["invariant_linear"] = int_to_json(report.invariant_linear);
  out["invariant_quadratic"] = int_to_json(report.invariant_quadratic);
  out["invariants_hold"] = report.invariants_hold;
  out["spi_witness"] =
      report.spi_witness ? to_json(*report.spi_witness) : json(nullptr);
  out["verdict"] = report.verdict.is_line ? "yes" : "no";
  out["reason"] = report.verdict.is_line
                      ? json(nullptr)
                      : json(reason_token(report.verdict.reason));
  json trace = json::array();
  for (const CurveClass& cls : report.verdict.trace) {
    trace.push_back(to_json(cls));
  }
  out["trace"] = std::move(trace);
  out["discrepancy_candidate"] = report.discrepancy_candidate;
  if (!report.note.empty()) out["note"] = report.note;
  return out;
}

json orbit_summary_json(const OrbitResult& orbit) {
  return json{{"size", int_to_json(orbit.size)},
              {"complete", orbit.complete},
              {"canonical_classes", orbit.canonical.size()},
              {"cap", orbit.cap}};
}

}  // namespace weyl
