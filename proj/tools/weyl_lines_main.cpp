// weyl-lines: exact classification of curve classes on blowups of
// projective space under the Weyl group of standard Cremona moves.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "weyl/chow.hpp"
#include "weyl/classify.hpp"
#include "weyl/coxeter.hpp"
#include "weyl/cremona.hpp"
#include "weyl/io.hpp"
#include "weyl/reduction.hpp"

namespace {

using weyl::json;

struct Options {
  int r = 3;
  int s = 7;
  std::string class_text;
  int i_level = -1;
  std::uint64_t step_cap = weyl::kDefaultStepCap;
  std::uint64_t depth_cap = weyl::SearchCaps{}.depth_cap;
  std::uint64_t breadth_cap = weyl::SearchCaps{}.breadth_cap;
  bool json_output = false;
  bool trace = false;
  bool strict = false;
  int jobs = 1;
  std::string output_path;
};

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

void add_space_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--r", opt.r, "Dimension of the ambient projective space")
      ->required();
  cmd->add_option("--s", opt.s, "Number of blown-up points")->required();
}

void add_class_option(CLI::App* cmd, Options& opt) {
  cmd->add_option("--class", opt.class_text,
                  "Curve class as 'd;m1,...,ms'")
      ->required();
}

void add_output_options(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json_output, "Emit JSON instead of text");
  cmd->add_option("-o,--output", opt.output_path,
                  "Write the result to a file instead of stdout");
}

void add_step_cap(CLI::App* cmd, Options& opt) {
  cmd->add_option("--step-cap", opt.step_cap,
                  "Maximum number of reduction/search steps")
      ->envname("WEYL_LINES_STEP_CAP")
      ->capture_default_str();
}

json caps_json(const Options& opt, bool steps, bool search) {
  json caps = json::object();
  if (steps) caps["step_cap"] = opt.step_cap;
  if (search) {
    caps["depth_cap"] = opt.depth_cap;
    caps["breadth_cap"] = opt.breadth_cap;
  }
  return caps;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream file(opt.output_path);
  if (!file) throw std::invalid_argument("cannot open " + opt.output_path);
  file << text << "\n";
}

int run_invariants(const Options& opt) {
  const weyl::SpaceParams space(opt.r, opt.s);
  const weyl::CurveClass c = weyl::parse_curve(space, opt.class_text);
  const weyl::CurveClass F = weyl::anticanonical_curve(space);

  const weyl::Int degree = weyl::bilinear_curve(F, c);
  const weyl::Int self = weyl::bilinear_curve(c, c);
  const weyl::Int vdim = weyl::virtual_dim(c);
  const auto level = weyl::numerical_i_level(c);
  const bool reduced = weyl::is_cremona_reduced(c);
  std::optional<bool> projection;
  if (level && *level >= -1 && *level <= 1) {
    projection = weyl::projection_inequality(c, static_cast<int>(*level));
  }

  if (opt.json_output) {
    json out{{"schema_version", weyl::kSchemaVersion},
             {"command", "invariants"},
             {"class", weyl::to_json(c)},
             {"pairing_with_f", weyl::int_to_json(degree)},
             {"self_pairing", weyl::int_to_json(self)},
             {"vdim", weyl::int_to_json(vdim)},
             {"i_level", level ? weyl::int_to_json(*level) : json(nullptr)},
             {"cremona_reduced", reduced},
             {"projection_inequality",
              projection ? json(*projection) : json(nullptr)}};
    emit(opt, out.dump());
    return kExitOk;
  }

  std::string text;
  text += "class: " + weyl::to_text(c) + "\n";
  text += "pairing with F: " + degree.str() + "\n";
  text += "self-pairing: " + self.str() + "\n";
  text += "virtual dimension: " + vdim.str() + "\n";
  text += "numerical level: " + (level ? level->str() : std::string("none")) + "\n";
  text += std::string("cremona reduced: ") + (reduced ? "yes" : "no") + "\n";
  if (projection) {
    text += "projection inequality (level " + level->str() + "): " +
            (*projection ? "holds" : "fails");
  } else {
    text += "projection inequality: not a numerical class in {-1,0,1}";
  }
  emit(opt, text);
  return kExitOk;
}

int run_reduce(const Options& opt) {
  const weyl::SpaceParams space(opt.r, opt.s);
  const weyl::CurveClass c = weyl::parse_curve(space, opt.class_text);
  const weyl::ReductionOutcome outcome = weyl::cremona_reduce(c, opt.step_cap);

  if (opt.json_output) {
    json out = weyl::to_json(outcome, opt.trace);
    out["command"] = "reduce";
    out["caps"] = caps_json(opt, true, false);
    emit(opt, out.dump());
  } else {
    std::string text;
    switch (outcome.status) {
      case weyl::ReductionOutcome::Status::Reduced:
        text = "outcome: reduced\nfinal: " + weyl::to_text(outcome.final);
        break;
      case weyl::ReductionOutcome::Status::NotInTitsCone:
        text = "outcome: not in the Tits cone (certificate: " +
               weyl::lemma_token(outcome.certificate->lemma) + ")\nat: " +
               weyl::to_text(outcome.certificate->at);
        break;
      case weyl::ReductionOutcome::Status::CapExceeded:
        text = "outcome: step cap exceeded\nlast: " +
               weyl::to_text(outcome.final);
        break;
    }
    text += "\nsteps: " + std::to_string(outcome.steps);
    if (opt.trace) {
      for (const weyl::TraceStep& step : outcome.trace) {
        text += "\n  " + weyl::to_text(step.cls) +
                (step.applied_phi ? "  -> phi" : "");
      }
    }
    emit(opt, text);
  }

  if (opt.strict &&
      outcome.status == weyl::ReductionOutcome::Status::CapExceeded) {
    return kExitCapExceeded;
  }
  return kExitOk;
}

int run_classify(const Options& opt) {
  const weyl::SpaceParams space(opt.r, opt.s);
  const weyl::CurveClass c = weyl::parse_curve(space, opt.class_text);
  const weyl::WeylLineVerdict verdict = weyl::is_weyl_line(c, opt.i_level);

  if (opt.json_output) {
    json out = weyl::to_json(verdict, opt.trace);
    out["schema_version"] = weyl::kSchemaVersion;
    out["command"] = "classify";
    out["i"] = opt.i_level;
    emit(opt, out.dump());
  } else {
    std::string text = std::string("verdict: ") +
                       (verdict.is_line ? "yes" : "no");
    if (!verdict.is_line) {
      text += " (" + weyl::reason_token(verdict.reason) + ")";
    }
    if (opt.trace) {
      for (const weyl::CurveClass& cls : verdict.trace) {
        text += "\n  " + weyl::to_text(cls);
      }
    }
    emit(opt, text);
  }
  return kExitOk;
}

int run_orbit(const Options& opt) {
  const weyl::SpaceParams space(opt.r, opt.s);
  const weyl::CurveClass c = weyl::parse_curve(space, opt.class_text);
  const weyl::OrbitResult orbit =
      weyl::orbit_enumerate(c, opt.step_cap, opt.jobs);

  // With an output path, the raw classes go there as JSON lines and the
  // summary stays on stdout.
  if (!opt.output_path.empty()) {
    std::ofstream file(opt.output_path);
    if (!file) throw std::invalid_argument("cannot open " + opt.output_path);
    for (const weyl::CurveClass& canonical : orbit.canonical) {
      for (const weyl::CurveClass& cls : weyl::expand_permutations(canonical)) {
        file << weyl::to_json(cls).dump() << "\n";
      }
    }
  }

  json summary = weyl::orbit_summary_json(orbit);
  if (opt.json_output) {
    summary["schema_version"] = weyl::kSchemaVersion;
    summary["command"] = "orbit";
    summary["caps"] = caps_json(opt, true, false);
    std::cout << summary.dump() << "\n";
  } else {
    std::cout << "orbit size " << orbit.size.str()
              << (orbit.complete ? " (complete)" : " (truncated)") << ", "
              << orbit.canonical.size() << " canonical classes\n";
  }

  if (opt.strict && !orbit.complete) return kExitCapExceeded;
  return kExitOk;
}

int run_rtable(const Options& opt) {
  const weyl::SpaceParams space(opt.r, opt.s);
  const weyl::CurveClass entry = weyl::r_table(space);
  if (opt.json_output) {
    json out{{"schema_version", weyl::kSchemaVersion},
             {"command", "rtable"},
             {"class", weyl::to_json(entry)}};
    emit(opt, out.dump());
  } else {
    emit(opt, weyl::to_text(entry));
  }
  return kExitOk;
}

int run_witness(const Options& opt) {
  const weyl::SpaceParams space(opt.r, opt.s);
  const weyl::CurveClass c = weyl::parse_curve(space, opt.class_text);
  const weyl::SearchCaps caps{opt.depth_cap, opt.breadth_cap};
  const auto witness = weyl::spi_witness_search(c, caps);

  if (opt.json_output) {
    json out{{"schema_version", weyl::kSchemaVersion},
             {"command", "witness"},
             {"witness", witness ? weyl::to_json(*witness) : json(nullptr)},
             {"caps", caps_json(opt, false, true)}};
    emit(opt, out.dump());
  } else if (witness) {
    std::string text = "witness found: k=" +
                       std::to_string(witness->point + 1) +
                       ", value=" + witness->value.str() +
                       ", degree=" + witness->degree_check.str() + ", word=";
    text += weyl::to_json(*witness)["word"].dump();
    emit(opt, text);
  } else {
    emit(opt, "no witness within depth " + std::to_string(opt.depth_cap) +
                  ", breadth " + std::to_string(opt.breadth_cap));
  }
  return kExitOk;
}

int run_report(const Options& opt) {
  const weyl::SpaceParams space(opt.r, opt.s);
  const weyl::CurveClass c = weyl::parse_curve(space, opt.class_text);
  const weyl::SearchCaps caps{opt.depth_cap, opt.breadth_cap};
  const weyl::EquivalenceReport report =
      weyl::equivalence2_report(c, opt.i_level, caps);

  json out = weyl::to_json(report);
  out["schema_version"] = weyl::kSchemaVersion;
  out["command"] = "report";
  out["i"] = opt.i_level;
  out["caps"] = caps_json(opt, false, true);
  if (opt.json_output) {
    emit(opt, out.dump());
  } else {
    std::string text = "invariants: " +
                       std::string(report.invariants_hold ? "hold" : "fail") +
                       " (linear " + report.invariant_linear.str() +
                       ", quadratic " + report.invariant_quadratic.str() +
                       ")";
    text += "\nwitness: " + std::string(report.spi_witness ? "found" : "none");
    text += "\nverdict: " + std::string(report.verdict.is_line ? "yes" : "no");
    if (report.discrepancy_candidate) {
      text += "\ndiscrepancy candidate: the bounded witness search may be "
              "too shallow";
    }
    if (!report.note.empty()) text += "\nnote: " + report.note;
    emit(opt, text);
  }
  return kExitOk;
}

int run_coxeter_check(const Options& opt) {
  const weyl::SpaceParams space(opt.r, opt.s);
  const weyl::CoxGraph graph(space);

  struct Check {
    std::string name;
    bool pass;
  };
  std::vector<Check> checks;

  bool relations = true;
  for (int i = 0; i < graph.size() && relations; ++i) {
    for (int j = 0; j < graph.size() && relations; ++j) {
      for (int b = 0; b < graph.size(); ++b) {
        const weyl::CoxVector x = weyl::basis_vector(graph, b);
        weyl::CoxVector lhs = x;
        weyl::CoxVector rhs = x;
        if (i == j) {
          lhs = reflect(graph, reflect(graph, x, i), i);
        } else if (!graph.adjacent(i, j)) {
          lhs = reflect(graph, reflect(graph, x, i), j);
          lhs = reflect(graph, reflect(graph, lhs, i), j);
        } else {
          lhs = reflect(graph, reflect(graph, reflect(graph, x, i), j), i);
          rhs = reflect(graph, reflect(graph, reflect(graph, x, j), i), j);
        }
        if (!(lhs == rhs)) {
          relations = false;
          break;
        }
      }
    }
  }
  checks.push_back({"generator relations", relations});

  bool gram = true;
  for (int i = 0; i < graph.size(); ++i) {
    for (int j = 0; j < graph.size(); ++j) {
      if (weyl::bilinear_div(weyl::beta(space, weyl::basis_vector(graph, i)),
                             weyl::beta(space, weyl::basis_vector(graph, j))) !=
          graph.form(i, j)) {
        gram = false;
      }
    }
  }
  checks.push_back({"divisor pairing realizes the graph form", gram});

  bool square = true;
  for (int g = 0; g < graph.size(); ++g) {
    for (int b = 0; b < graph.size(); ++b) {
      const weyl::DivisorClassQ via_reflection = weyl::beta(
          space, weyl::reflect(graph, weyl::basis_vector(graph, b), g));
      const weyl::DivisorClassQ via_geometry = weyl::to_rational(
          weyl::generator_action_div(space, g,
                                     weyl::chamber_basis_divisor(space, b)));
      if (!(via_reflection == via_geometry)) square = false;
    }
  }
  checks.push_back({"reflections match the geometric action", square});

  bool all_pass = true;
  for (const Check& check : checks) all_pass = all_pass && check.pass;

  if (opt.json_output) {
    json out{{"schema_version", weyl::kSchemaVersion},
             {"command", "coxeter-check"},
             {"r", opt.r},
             {"s", opt.s},
             {"weyl_finite", weyl::weyl_finite(space)},
             {"pass", all_pass}};
    json list = json::array();
    for (const Check& check : checks) {
      list.push_back({{"name", check.name}, {"pass", check.pass}});
    }
    out["checks"] = list;
    emit(opt, out.dump());
  } else {
    std::string text;
    for (const Check& check : checks) {
      text += std::string(check.pass ? "[pass] " : "[FAIL] ") + check.name + "\n";
    }
    text += std::string("Weyl group: ") +
            (weyl::weyl_finite(space) ? "finite" : "infinite") + "\n";
    text += all_pass ? "all checks passed" : "CHECKS FAILED";
    emit(opt, text);
  }
  return all_pass ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weyl/Cremona arithmetic for curve classes on blowups "
               "of projective r-space at s general points"};
  app.require_subcommand(1);

  Options opt;

  CLI::App* invariants = app.add_subcommand(
      "invariants", "Pairings, forms and predicates for one class");
  add_space_options(invariants, opt);
  add_class_option(invariants, opt);
  add_output_options(invariants, opt);

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Run the degree-reduction loop with certificates");
  add_space_options(reduce, opt);
  add_class_option(reduce, opt);
  add_output_options(reduce, opt);
  add_step_cap(reduce, opt);
  reduce->add_flag("--trace", opt.trace, "Include the full reduction trace");
  reduce->add_flag("--strict", opt.strict,
                   "Exit 3 when the step cap is exhausted");

  CLI::App* classify = app.add_subcommand(
      "classify", "Decide whether a class is an (i)-Weyl line");
  add_space_options(classify, opt);
  add_class_option(classify, opt);
  classify->add_option("--i", opt.i_level, "Level in {-1,0,1}")->required();
  add_output_options(classify, opt);
  classify->add_flag("--trace", opt.trace, "Include the reduction trace");

  CLI::App* orbit = app.add_subcommand(
      "orbit", "Enumerate the Weyl orbit of a class (raw class count)");
  add_space_options(orbit, opt);
  add_class_option(orbit, opt);
  add_output_options(orbit, opt);
  add_step_cap(orbit, opt);
  orbit->add_flag("--strict", opt.strict, "Exit 3 when truncated at the cap");
  orbit->add_option("--jobs", opt.jobs,
                    "Worker threads for the frontier expansion (results do "
                    "not depend on this)")
      ->capture_default_str();

  CLI::App* rtable = app.add_subcommand(
      "rtable", "Reduced representative of the line through two points");
  add_space_options(rtable, opt);
  add_output_options(rtable, opt);

  CLI::App* witness = app.add_subcommand(
      "witness", "Search for a strong projection inequality violation");
  add_space_options(witness, opt);
  add_class_option(witness, opt);
  add_output_options(witness, opt);
  witness->add_option("--depth-cap", opt.depth_cap, "Maximum word length")
      ->capture_default_str();
  witness->add_option("--breadth-cap", opt.breadth_cap,
                      "Maximum index sets tried per class")
      ->capture_default_str();

  CLI::App* report = app.add_subcommand(
      "report", "Numerical criteria vs. reduction verdict (r = 3)");
  add_space_options(report, opt);
  add_class_option(report, opt);
  report->add_option("--i", opt.i_level, "Level in {-1,0,1}")->required();
  add_output_options(report, opt);
  report->add_option("--depth-cap", opt.depth_cap, "Maximum word length")
      ->capture_default_str();
  report->add_option("--breadth-cap", opt.breadth_cap,
                     "Maximum index sets tried per class")
      ->capture_default_str();

  CLI::App* coxcheck = app.add_subcommand(
      "coxeter-check", "Verify the reflection representation against the "
                       "divisor action");
  add_space_options(coxcheck, opt);
  add_output_options(coxcheck, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (invariants->parsed()) return run_invariants(opt);
    if (reduce->parsed()) return run_reduce(opt);
    if (classify->parsed()) return run_classify(opt);
    if (orbit->parsed()) return run_orbit(opt);
    if (rtable->parsed()) return run_rtable(opt);
    if (witness->parsed()) return run_witness(opt);
    if (report->parsed()) return run_report(opt);
    if (coxcheck->parsed()) return run_coxeter_check(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
