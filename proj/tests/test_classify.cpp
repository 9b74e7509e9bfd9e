#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "test_oracles.hpp"
#include "weyl/chow.hpp"
#include "weyl/classify.hpp"
#include "weyl/cremona.hpp"
#include "weyl/reduction.hpp"

using namespace weyl;

namespace {

CurveClass curve(int r, int s, Int d, std::vector<Int> m) {
  return CurveClass(SpaceParams(r, s), std::move(d), std::move(m));
}

const CurveClass kG = curve(3, 11, 7, {4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
const CurveClass kJ = curve(3, 11, 13, {4, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1});

// Recompute <sorted(c), w(h - e_k)> by actually applying the witness word,
// and deg(w^{-1}(sorted(c))) by applying it backwards. The word is stored
// in application order, so w acts by folding forward and w^{-1} by folding
// in reverse.
void verify_witness(const CurveClass& c, const SpiWitness& witness) {
  const CurveClass sorted = sort_desc(c).cls;
  std::vector<Int> m(c.space.s, Int(0));
  m[witness.point] = 1;
  CurveClass moved(c.space, Int(1), std::move(m));
  for (const IndexSet& I : witness.word) {
    moved = phi_curve(moved, I);
  }
  CHECK(bilinear_curve(sorted, moved) == witness.value);
  CHECK(witness.value < 1);

  CurveClass pulled = sorted;
  for (auto it = witness.word.rbegin(); it != witness.word.rend(); ++it) {
    pulled = phi_curve(pulled, *it);
  }
  CHECK(pulled.d == witness.degree_check);
  // Invariance: <w^{-1}(c), h - e_k> is the same offending value.
  CHECK(pulled.d - (c.space.r - 1) * pulled.m[witness.point] == witness.value);
  CHECK(witness.degree_check > 1);
}

}  // namespace

TEST_CASE("line targets") {
  CHECK(line_class(SpaceParams(3, 7), -1) ==
        curve(3, 7, 1, {1, 1, 0, 0, 0, 0, 0}));
  CHECK(line_class(SpaceParams(3, 7), 0) ==
        curve(3, 7, 1, {1, 0, 0, 0, 0, 0, 0}));
  CHECK(line_class(SpaceParams(3, 7), 1) ==
        curve(3, 7, 1, {0, 0, 0, 0, 0, 0, 0}));
}

TEST_CASE("Weyl line decision") {
  SUBCASE("a Cremona reduced class of higher degree is not a Weyl line") {
    const WeylLineVerdict verdict = is_weyl_line(kG, -1);
    CHECK_FALSE(verdict.is_line);
    CHECK(verdict.reason ==
          WeylLineVerdict::Reason::CremonaReducedAtDegreeAboveOne);
    REQUIRE(verdict.trace.size() == 1);
  }

  SUBCASE("one Cremona step exposes the reduced obstruction") {
    const WeylLineVerdict verdict = is_weyl_line(kJ, -1);
    CHECK_FALSE(verdict.is_line);
    CHECK(verdict.reason ==
          WeylLineVerdict::Reason::CremonaReducedAtDegreeAboveOne);
    REQUIRE(verdict.trace.size() == 2);
    CHECK(verdict.trace[0] == kJ);
    CHECK(verdict.trace[1] == sort_desc(phi_curve(
                                  kJ, IndexSet::first(kJ.space))).cls);
  }

  SUBCASE("the rational normal curve is a (-1)-Weyl line") {
    const WeylLineVerdict verdict =
        is_weyl_line(curve(3, 6, 3, {1, 1, 1, 1, 1, 1}), -1);
    CHECK(verdict.is_line);
    REQUIRE(verdict.trace.size() == 2);
    CHECK(verdict.trace.back() == line_class(SpaceParams(3, 6), -1));

    CHECK(is_weyl_line(curve(3, 11, 3,
                             {1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0}),
                       -1)
              .is_line);
  }

  SUBCASE("a twisted cubic through five points is a (0)-Weyl line") {
    const WeylLineVerdict verdict =
        is_weyl_line(curve(3, 7, 3, {1, 1, 1, 1, 1, 0, 0}), 0);
    CHECK(verdict.is_line);
    CHECK(verdict.trace.back() == line_class(SpaceParams(3, 7), 0));
  }

  SUBCASE("invariant prefilters") {
    // Wrong anticanonical degree for the requested level.
    const WeylLineVerdict linear =
        is_weyl_line(curve(3, 7, 1, {1, 0, 0, 0, 0, 0, 0}), -1);
    CHECK(linear.reason == WeylLineVerdict::Reason::WrongLinearInvariant);

    // Right anticanonical degree, wrong self-pairing.
    const WeylLineVerdict quadratic =
        is_weyl_line(curve(3, 8, 3, {2, 1, 1, 1, 1, 0, 0, 0}), -1);
    CHECK(quadratic.reason ==
          WeylLineVerdict::Reason::WrongQuadraticInvariant);
  }

  SUBCASE("degree one and degree zero inputs") {
    CHECK(is_weyl_line(line_class(SpaceParams(3, 7), -1), -1).is_line);
    const WeylLineVerdict zero =
        is_weyl_line(curve(3, 7, 0, std::vector<Int>(7, Int(0))), -1);
    CHECK(zero.reason == WeylLineVerdict::Reason::DegreeNonPositive);
  }

  SUBCASE("plane classes classify through the same loop") {
    // The conic through five points is a (-1)-Weyl line on the plane.
    const WeylLineVerdict conic =
        is_weyl_line(curve(2, 5, 2, {1, 1, 1, 1, 1}), -1);
    CHECK(conic.is_line);

    // Every effective member of the enumerated orbit classifies Yes.
    const OrbitResult orbit =
        orbit_enumerate(line_class(SpaceParams(2, 5), -1), 1000);
    REQUIRE(orbit.complete);
    for (const CurveClass& member : orbit.canonical) {
      if (member.d <= 0) continue;
      if (!std::all_of(member.m.begin(), member.m.end(),
                       [](const Int& v) { return v >= 0; })) {
        continue;
      }
      CHECK(is_weyl_line(member, -1).is_line);
    }
  }

  SUBCASE("precondition violations throw") {
    CHECK_THROWS_AS(is_weyl_line(kG, 2), std::invalid_argument);
    CHECK_THROWS_AS(
        is_weyl_line(curve(3, 7, 1, {-1, 1, 0, 0, 0, 0, 0}), -1),
        std::invalid_argument);
  }
}

TEST_CASE("decision agrees with orbit membership at small degree") {
  // Exhaustive over sorted non-negative classes with the level -1
  // invariants, compared against the enumerated orbit of the line class.
  for (int s = 6; s <= 7; ++s) {
    const SpaceParams space(3, s);
    const OrbitResult orbit =
        orbit_enumerate(line_class(space, -1), 100000);
    REQUIRE(orbit.complete);
    std::set<CurveClass, CurveOrder> members(orbit.canonical.begin(),
                                             orbit.canonical.end());

    int tested = 0;
    for (int d = 1; d <= 6; ++d) {
      // <F,c> = 0 forces sum m = 2d; <c,c> = -3 forces sum m^2 = (d^2+3)/2.
      if ((d * d + 3) % 2 != 0) continue;
      const Int target_sum = 2 * d;
      const Int target_sq = (d * d + 3) / 2;
      std::vector<Int> m(s, Int(0));
      std::function<void(int, Int, Int, Int)> enumerate =
          [&](int pos, Int remaining, Int remaining_sq, Int bound) {
            if (pos == s) {
              if (remaining == 0 && remaining_sq == 0) {
                const CurveClass c(space, Int(d), m);
                ++tested;
                CHECK(is_weyl_line(c, -1).is_line ==
                      (members.count(sort_desc(c).cls) == 1));
              }
              return;
            }
            for (Int v = std::min(bound, remaining); v >= 0; --v) {
              if (v * v > remaining_sq) continue;
              m[pos] = v;
              enumerate(pos + 1, remaining - v, remaining_sq - v * v, v);
            }
            m[pos] = 0;
          };
      enumerate(0, target_sum, target_sq, target_sum);
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("Noether inequality check") {
  CHECK(noether_check(kJ, -1) == NoetherResult{true, true});
  CHECK(noether_check(kG, -1).applicable == false);
  CHECK(noether_check(curve(3, 6, 3, {1, 1, 1, 1, 1, 1}), -1) ==
        NoetherResult{true, true});

  CHECK_THROWS_AS(noether_check(curve(2, 5, 3, {1, 1, 1, 1, 1}), -1),
                  std::invalid_argument);
  CHECK_THROWS_AS(noether_check(line_class(SpaceParams(3, 7), -1), -1),
                  std::invalid_argument);
}

TEST_CASE("strong projection inequality witnesses") {
  SUBCASE("an immediate violation needs no word at all") {
    const auto witness = spi_witness_search(kG, SearchCaps{});
    REQUIRE(witness.has_value());
    CHECK(witness->word.empty());
    CHECK(witness->point == 0);
    CHECK(witness->value == -1);
    CHECK(witness->degree_check == 7);
    verify_witness(kG, *witness);
  }

  SUBCASE("one Cremona move exposes the violation") {
    const auto witness = spi_witness_search(kJ, SearchCaps{});
    REQUIRE(witness.has_value());
    REQUIRE(witness->word.size() == 1);
    CHECK(witness->word[0] == IndexSet::first(kJ.space));
    CHECK(witness->point == 4);
    CHECK(witness->value == -1);
    CHECK(witness->degree_check == 7);
    verify_witness(kJ, *witness);
  }

  SUBCASE("a two-letter word pins down the application order") {
    const CurveClass c = curve(3, 8, 11, {2, 5, 1, 3, 1, 4, 2, 2});
    const auto witness = spi_witness_search(c, SearchCaps{3, 128});
    REQUIRE(witness.has_value());
    REQUIRE(witness->word.size() == 2);
    CHECK(witness->word[0] == IndexSet(c.space, {0, 1, 4, 6}));
    CHECK(witness->word[1] == IndexSet(c.space, {0, 1, 2, 3}));
    CHECK(witness->point == 5);
    CHECK(witness->value == -1);
    CHECK(witness->degree_check == 3);
    verify_witness(c, *witness);
  }

  SUBCASE("a Weyl line class yields no witness at any cap") {
    CHECK_FALSE(spi_witness_search(curve(3, 6, 3, {1, 1, 1, 1, 1, 1}),
                                   SearchCaps{6, 1000})
                    .has_value());
    CHECK_FALSE(spi_witness_search(line_class(SpaceParams(3, 6), -1),
                                   SearchCaps{6, 1000})
                    .has_value());
  }
}

TEST_CASE("witnesses are fatal to the verdict") {
  oracle::Rng rng(0x5eed0401);
  const SpaceParams space(3, 8);
  int found = 0;
  for (int trial = 0; trial < 4000 && found < 60; ++trial) {
    CurveClass c = rng.curve(space, 0, 3);
    if (c.d <= 0) continue;
    ++found;
    const auto witness = spi_witness_search(c, SearchCaps{2, 32});
    if (witness) {
      for (int i : {-1, 0, 1}) {
        CHECK_FALSE(is_weyl_line(c, i).is_line);
      }
    }
  }
  CHECK(found == 60);
}

TEST_CASE("equivalence report") {
  const SearchCaps caps{3, 64};

  SUBCASE("invariants alone are not sufficient") {
    const EquivalenceReport report = equivalence2_report(kJ, -1, caps);
    CHECK(report.invariants_hold);
    CHECK(report.spi_witness.has_value());
    CHECK_FALSE(report.verdict.is_line);
    CHECK_FALSE(report.discrepancy_candidate);
  }

  SUBCASE("a genuine Weyl line") {
    const EquivalenceReport report =
        equivalence2_report(curve(3, 6, 3, {1, 1, 1, 1, 1, 1}), -1, caps);
    CHECK(report.invariants_hold);
    CHECK_FALSE(report.spi_witness.has_value());
    CHECK(report.verdict.is_line);
    CHECK_FALSE(report.discrepancy_candidate);
  }

  SUBCASE("degree two never satisfies the conditions") {
    for (int i : {-1, 0, 1}) {
      const EquivalenceReport report =
          equivalence2_report(curve(3, 7, 2, {1, 1, 1, 0, 0, 0, 0}), i, caps);
      CHECK_FALSE(report.verdict.is_line);
      CHECK_FALSE(report.invariants_hold);
      CHECK_FALSE(report.note.empty());
    }
  }

  SUBCASE("domain errors") {
    CHECK_THROWS_AS(
        equivalence2_report(curve(2, 5, 3, {1, 1, 1, 1, 1}), -1, caps),
        std::invalid_argument);
    CHECK_THROWS_AS(
        equivalence2_report(line_class(SpaceParams(3, 7), -1), -1, caps),
        std::invalid_argument);
  }
}

TEST_CASE("Yes traces are monotone, effective and projection-compatible") {
  oracle::Rng rng(0x5eed0402);
  const SpaceParams space(3, 9);
  for (int i_level : {-1, 0, 1}) {
    int produced = 0;
    int attempts = 0;
    while (produced < 40 && attempts < 4000) {
      ++attempts;
      CurveClass c = line_class(space, i_level);
      const int length = rng.uniform(0, 6);
      for (int k = 0; k < length; ++k) {
        c = phi_curve(c, IndexSet(space, rng.index_subset(space)));
      }
      if (!std::all_of(c.m.begin(), c.m.end(),
                       [](const Int& v) { return v >= 0; })) {
        continue;
      }
      if (c.d <= 0) continue;
      ++produced;

      const WeylLineVerdict verdict = is_weyl_line(c, i_level);
      CHECK(verdict.is_line);
      for (std::size_t step = 0; step < verdict.trace.size(); ++step) {
        const CurveClass& cls = verdict.trace[step];
        CHECK(cls.d > 0);
        CHECK(std::all_of(cls.m.begin(), cls.m.end(),
                          [](const Int& v) { return v >= 0; }));
        if (cls.d > 1) CHECK(projection_inequality(cls, i_level));
        if (step + 1 < verdict.trace.size()) {
          CHECK(verdict.trace[step + 1].d < cls.d);
        }
      }
    }
    CHECK(produced == 40);
  }
}
