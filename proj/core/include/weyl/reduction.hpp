#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weyl/chow.hpp"
#include "weyl/cremona.hpp"

namespace weyl {

/// Verified divergence certificate for the degree-reduction loop. Two
/// parameter ranges admit one: s >= r+5 with r >= 3, and s = r+4 with
/// r >= 5. In both, the recorded inequalities are preserved by a sort+phi
/// step while the degree strictly drops, so the loop can never stop.
struct CertificateData {
  enum class Lemma {
    ExcessAtLeastFive,  // r >= 3, s >= r+5
    ExcessFour,         // r >= 5, s = r+4
  };

  Lemma lemma;
  CurveClass at;  // sorted class at which the hypotheses first held
  Int head_sum;   // sum of the r+1 largest multiplicities (M_1)
  Int tail_sum;   // sum of the r+1 smallest multiplicities (M_{s-r})
  std::optional<Int> mixed_sum;  // ExcessFour only: m_1+m_2+m_3+m_7+...+m_{r+4}
  Int degree_drop;               // t = d - head_sum (negative here)
};

struct TraceStep {
  CurveClass cls;    // multiplicities sorted non-increasing
  bool applied_phi;  // whether a Cremona step followed this class
};

struct ReductionOutcome {
  enum class Status { Reduced, NotInTitsCone, CapExceeded };

  Status status;
  CurveClass final;  // reduced class / class where the certificate fired /
                     // last class before the cap
  std::vector<TraceStep> trace;
  std::optional<CertificateData> certificate;
  std::uint64_t steps = 0;  // number of Cremona steps performed
};

/// Check the divergence hypotheses on (a sorted copy of) the class. A
/// certificate proves the class is outside the Tits cone; absence proves
/// nothing.
std::optional<CertificateData> nontermination_certificate(const CurveClass& c);

inline constexpr std::uint64_t kDefaultStepCap = 10000;

/// The reduction loop: sort multiplicities, stop if Cremona reduced, stop
/// with a certificate if the divergence hypotheses hold, otherwise apply
/// phi to the r+1 largest multiplicities (which strictly lowers the degree)
/// and repeat. CapExceeded is reported distinctly from NotInTitsCone: the
/// certificates are sufficient conditions only, so running out of steps is
/// never evidence of divergence.
ReductionOutcome cremona_reduce(const CurveClass& c,
                                std::uint64_t step_cap = kDefaultStepCap);

/// The Cremona-reduced class (mod F) that the line through two points
/// reduces to, for r = 2 with any s, and for every finite-Weyl (r, s) with
/// r >= 3. Stored as literal rows and cross-checked against a fresh
/// reduction run on every call. Throws domain_error outside the covered
/// parameters.
CurveClass r_table(SpaceParams space);

struct OrbitResult {
  bool complete;
  std::vector<CurveClass> canonical;  // one representative per multiset, sorted
  Int size;                           // raw classes, i.e. all index assignments
  std::uint64_t cap;
};

/// Closure of the class under all phi_I and all index permutations, found
/// by BFS over sorted representatives. The reported size counts raw
/// classes: distinct (d; m) vectors including permuted multiplicities.
/// Stops with complete = false once the raw count passes the cap. The
/// result is deterministic and independent of the number of jobs.
OrbitResult orbit_enumerate(const CurveClass& c, std::uint64_t cap,
                            int jobs = 1);

/// Number of distinct rearrangements of the multiplicity vector.
Int arrangement_count(const CurveClass& c);

/// All distinct rearrangements, in lexicographic order of the multiplicity
/// vector. Intended for export; the count is arrangement_count(c).
std::vector<CurveClass> expand_permutations(const CurveClass& c);

}  // namespace weyl
