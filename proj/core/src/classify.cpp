#include "weyl/classify.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace weyl {

namespace {

void require_i_level(int i_level) {
  if (i_level < -1 || i_level > 1) {
    throw std::invalid_argument("the level must be -1, 0 or 1");
  }
}

bool all_nonnegative(const CurveClass& c) {
  return std::all_of(c.m.begin(), c.m.end(),
                     [](const Int& v) { return v >= 0; });
}

Int top_four_sum(const CurveClass& c) {
  std::vector<Int> copy = c.m;
  std::nth_element(copy.begin(), copy.begin() + 3, copy.end(),
                   std::greater<Int>());
  return copy[0] + copy[1] + copy[2] + copy[3];
}

// Index sets tried at a BFS node: the r+1 positions carrying the largest
// multiplicities first, then every other (r+1)-subset in lexicographic
// order.
std::vector<IndexSet> node_index_sets(const CurveClass& c,
                                      std::uint64_t breadth_cap) {
  const SpaceParams space = c.space;
  std::vector<IndexSet> out;
  if (breadth_cap == 0) return out;

  std::vector<int> order(space.s);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c.m[a] > c.m[b]; });
  std::vector<int> top(order.begin(), order.begin() + space.r + 1);
  const IndexSet top_set(space, std::move(top));
  out.push_back(top_set);

  std::vector<int> pick(space.r + 1);
  for (int i = 0; i <= space.r; ++i) pick[i] = i;
  for (;;) {
    if (out.size() >= breadth_cap) break;
    IndexSet candidate(space, pick);
    if (!(candidate == top_set)) out.push_back(std::move(candidate));
    int pos = space.r;
    while (pos >= 0 && pick[pos] == space.s - (space.r + 1) + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j <= space.r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

CurveClass line_class(SpaceParams space, int i_level) {
  require_i_level(i_level);
  std::vector<Int> m(space.s, Int(0));
  for (int k = 0; k < 1 - i_level; ++k) m[k] = 1;
  return CurveClass(space, Int(1), std::move(m));
}

WeylLineVerdict is_weyl_line(const CurveClass& input, int i_level) {
  require_i_level(i_level);
  if (!all_nonnegative(input)) {
    throw std::invalid_argument(
        "the decision procedure takes non-negative multiplicities");
  }
  const int r = input.space.r;
  using Reason = WeylLineVerdict::Reason;
  if (input.d <= 0) {
    return {false, Reason::DegreeNonPositive, {}};
  }

  const CurveClass F = anticanonical_curve(input.space);
  if (bilinear_curve(F, input) != 2 + i_level * (r - 1)) {
    return {false, Reason::WrongLinearInvariant, {}};
  }
  if (bilinear_curve(input, input) != 1 + (i_level - 1) * (r - 1)) {
    return {false, Reason::WrongQuadraticInvariant, {}};
  }

  const CurveClass target = line_class(input.space, i_level);
  std::vector<CurveClass> trace;
  CurveClass cur = input;
  for (;;) {
    cur = sort_desc(cur).cls;
    trace.push_back(cur);
    if (cur == target) return {true, Reason::None, std::move(trace)};
    if (cur.d <= 0) {
      return {false, Reason::DegreeNonPositive, std::move(trace)};
    }
    if (cur.d == 1) {
      return {false, Reason::ReachedDegreeOneWrongClass, std::move(trace)};
    }
    if (is_cremona_reduced(cur)) {
      return {false, Reason::CremonaReducedAtDegreeAboveOne, std::move(trace)};
    }
    cur = phi_curve(cur, IndexSet::first(cur.space));
  }
}

NoetherResult noether_check(const CurveClass& c, int i_level) {
  require_i_level(i_level);
  if (c.space.r != 3) {
    throw std::invalid_argument("the inequality is stated for r = 3");
  }
  if (c.d <= 1) {
    throw std::invalid_argument("the inequality needs degree > 1");
  }

  const CurveClass F = anticanonical_curve(c.space);
  const bool linear = bilinear_curve(c, F) == 2 * i_level + 2;
  const bool quadratic = bilinear_curve(c, c) <= 2 * i_level - 1;
  const bool bounded = std::all_of(c.m.begin(), c.m.end(), [&](const Int& mk) {
    return 2 * mk <= c.d - 1;
  });

  NoetherResult out{linear && quadratic && bounded, top_four_sum(c) > c.d};
  if (out.applicable && !out.conclusion && all_nonnegative(c)) {
    // This would contradict the degree-lowering theorem.
    throw std::logic_error(
        "hypotheses hold on a non-negative class but the four largest "
        "multiplicities do not exceed the degree");
  }
  return out;
}

std::optional<SpiWitness> spi_witness_search(const CurveClass& input,
                                             const SearchCaps& caps) {
  const SpaceParams space = input.space;
  const int r = space.r;
  const CurveClass start = sort_desc(input).cls;

  // <node, h - e_k> = d - (r-1) m_k; any value < 1 at a node of degree > 1
  // violates the inequality. The node is w^{-1}(start) for the path word,
  // so the reported word is the reversed path.
  auto violation = [&](const CurveClass& node,
                       const std::vector<IndexSet>& path)
      -> std::optional<SpiWitness> {
    if (node.d <= 1) return std::nullopt;
    for (int k = 0; k < space.s; ++k) {
      const Int value = node.d - (r - 1) * node.m[k];
      if (value < 1) {
        std::vector<IndexSet> word(path.rbegin(), path.rend());
        return SpiWitness{std::move(word), k, value, node.d};
      }
    }
    return std::nullopt;
  };

  if (auto found = violation(start, {})) return found;

  std::set<CurveClass, CurveOrder> visited{start};
  std::deque<std::pair<CurveClass, std::vector<IndexSet>>> frontier;
  frontier.emplace_back(start, std::vector<IndexSet>{});

  for (std::uint64_t depth = 1; depth <= caps.depth_cap; ++depth) {
    std::deque<std::pair<CurveClass, std::vector<IndexSet>>> next;
    for (const auto& [node, path] : frontier) {
      for (const IndexSet& I : node_index_sets(node, caps.breadth_cap)) {
        CurveClass child = phi_curve(node, I);
        if (!visited.insert(child).second) continue;
        std::vector<IndexSet> child_path = path;
        child_path.push_back(I);
        if (auto found = violation(child, child_path)) return found;
        next.emplace_back(std::move(child), std::move(child_path));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

EquivalenceReport equivalence2_report(const CurveClass& c, int i_level,
                                      const SearchCaps& caps) {
  require_i_level(i_level);
  if (c.space.r != 3) {
    throw std::invalid_argument("the equivalence report is stated for r = 3");
  }
  if (c.d <= 1) {
    throw std::invalid_argument("the equivalence report needs degree > 1");
  }
  if (!all_nonnegative(c)) {
    throw std::invalid_argument(
        "the equivalence report takes non-negative multiplicities");
  }

  EquivalenceReport report{bilinear_curve(c, anticanonical_curve(c.space)),
                           bilinear_curve(c, c),
                           false,
                           std::nullopt,
                           {},
                           false,
                           {}};
  report.invariants_hold = report.invariant_linear == 2 * i_level + 2 &&
                           report.invariant_quadratic == 2 * i_level - 1;
  report.spi_witness = spi_witness_search(c, caps);
  report.verdict = is_weyl_line(c, i_level);

  if (report.spi_witness && report.verdict.is_line) {
    throw std::logic_error(
        "a strong-projection-inequality witness cannot coexist with a Yes "
        "verdict");
  }
  report.discrepancy_candidate = report.invariants_hold &&
                                 !report.spi_witness &&
                                 !report.verdict.is_line;
  if (c.d == 2) {
    report.note =
        "no curve of degree 2 satisfies the numerical conditions at any "
        "level";
  }
  return report;
}

}  // namespace weyl
