#include "weyl/reduction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace weyl {

namespace {

// Sum of r+1 consecutive sorted multiplicities starting at 1-based index k.
Int window_sum(const CurveClass& c, int k) {
  Int sum = 0;
  for (int i = k - 1; i <= k - 1 + c.space.r; ++i) sum += c.m[i];
  return sum;
}

CurveClass line_through_two(SpaceParams space) {
  std::vector<Int> m(space.s, Int(0));
  m[0] = 1;
  m[1] = 1;
  return CurveClass(space, Int(1), std::move(m));
}

std::vector<IndexSet> all_index_sets(SpaceParams space) {
  std::vector<IndexSet> sets;
  std::vector<int> pick(space.r + 1);
  // Lexicographic (r+1)-subsets of {0,...,s-1}.
  for (int i = 0; i <= space.r; ++i) pick[i] = i;
  for (;;) {
    sets.emplace_back(space, pick);
    int pos = space.r;
    while (pos >= 0 && pick[pos] == space.s - (space.r + 1) + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int j = pos + 1; j <= space.r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return sets;
}

}  // namespace

std::optional<CertificateData> nontermination_certificate(const CurveClass& c0) {
  const int r = c0.space.r;
  const int s = c0.space.s;
  const CurveClass c = sort_desc(c0).cls;

  if (r >= 3 && s >= r + 5) {
    const Int head = window_sum(c, 1);
    const Int tail = window_sum(c, s - r);
    const Int t = c.d - head;
    const bool holds = c.d < head && c.m[s - 1] >= c.m[0] + t &&
                       2 * c.d <= head + tail;
    if (holds) {
      return CertificateData{CertificateData::Lemma::ExcessAtLeastFive, c,
                             head, tail, std::nullopt, t};
    }
    return std::nullopt;
  }

  if (r >= 5 && s == r + 4) {
    const Int head = window_sum(c, 1);
    const Int tail = window_sum(c, 4);
    const Int t = c.d - head;
    Int mixed = c.m[0] + c.m[1] + c.m[2];
    for (int i = 7; i <= r + 4; ++i) mixed += c.m[i - 1];
    const bool holds = c.d < head && c.m[0] + t <= c.m[s - 1] &&
                       c.d <= mixed && 2 * c.d <= head + tail;
    if (holds) {
      return CertificateData{CertificateData::Lemma::ExcessFour, c, head,
                             tail, mixed, t};
    }
  }
  return std::nullopt;
}

ReductionOutcome cremona_reduce(const CurveClass& input,
                                std::uint64_t step_cap) {
  ReductionOutcome out{ReductionOutcome::Status::Reduced,
                       sort_desc(input).cls,
                       {},
                       std::nullopt,
                       0};
  CurveClass cur = out.final;
  std::uint64_t steps = 0;
  for (;;) {
    if (is_cremona_reduced(cur)) {
      out.trace.push_back({cur, false});
      out.status = ReductionOutcome::Status::Reduced;
      out.final = cur;
      out.steps = steps;
      return out;
    }
    if (auto certificate = nontermination_certificate(cur)) {
      out.trace.push_back({cur, false});
      out.status = ReductionOutcome::Status::NotInTitsCone;
      out.final = cur;
      out.certificate = std::move(certificate);
      out.steps = steps;
      return out;
    }
    if (steps >= step_cap) {
      out.status = ReductionOutcome::Status::CapExceeded;
      out.final = cur;
      out.steps = steps;
      return out;
    }
    out.trace.push_back({cur, true});
    CurveClass next = phi_curve(cur, IndexSet::first(cur.space));
    if (next.d >= cur.d) {
      throw std::logic_error(
          "Cremona step failed to lower the degree of a non-reduced class");
    }
    cur = sort_desc(next).cls;
    ++steps;
  }
}

CurveClass r_table(SpaceParams space) {
  const int r = space.r;
  const int s = space.s;
  auto filled = [&](Int degree, std::vector<Int> m) {
    return CurveClass(space, std::move(degree), std::move(m));
  };

  std::optional<CurveClass> entry;
  if (r == 2) {
    // (0; 0^{s-1}, -1) for every s; the s = 3 row is the same shape.
    std::vector<Int> m(s, Int(0));
    m[s - 1] = -1;
    entry = filled(Int(0), std::move(m));
  } else if (s == r + 1) {
    std::vector<Int> m(s, Int(-1));
    m[0] = 0;
    m[1] = 0;
    entry = filled(Int(2 - r), std::move(m));
  } else if (s == r + 2) {
    std::vector<Int> m(s, Int(-1));
    m[0] = 0;
    m[1] = 0;
    m[2] = 0;
    entry = filled(Int(2 - r), std::move(m));
  } else if (s == r + 3) {
    if (r % 2 == 0) {
      const int k = r / 2;
      std::vector<Int> m(s, Int(1 - k));
      m[s - 1] = -k;
      entry = filled(Int((2 * k + 1) * (1 - k)), std::move(m));
    } else {
      const int k = (r - 1) / 2;
      std::vector<Int> m(s, Int(-k));
      entry = filled(Int(-2 * k * k - 2 * k + 1), std::move(m));
    }
  } else if (r == 3 && s == 7) {
    std::vector<Int> m(s, Int(-1));
    m[0] = 0;
    entry = filled(Int(-3), std::move(m));
  } else if (r == 4 && s == 8) {
    std::vector<Int> m(s, Int(-3));
    m[0] = -2;
    entry = filled(Int(-14), std::move(m));
  }

  if (!entry) {
    throw std::domain_error(
        "no reduced representative is tabulated for these parameters (the "
        "Weyl group is infinite and the line class does not reduce)");
  }

  // The tabulated row must match a fresh reduction of the line through
  // two points, mod F.
  const ReductionOutcome check =
      cremona_reduce(line_through_two(space), kDefaultStepCap);
  if (check.status != ReductionOutcome::Status::Reduced ||
      !mod_f_equal(check.final, *entry)) {
    throw std::logic_error("tabulated reduced class disagrees with reduction");
  }
  return *entry;
}

Int arrangement_count(const CurveClass& c) {
  // s! divided by the factorial of each repeat count.
  Int count = 1;
  for (int i = 2; i <= c.space.s; ++i) count *= i;
  std::vector<Int> sorted = c.m;
  std::sort(sorted.begin(), sorted.end());
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    Int factorial = 1;
    while (j < sorted.size() && sorted[j] == sorted[i]) {
      ++j;
      factorial *= static_cast<int>(j - i);
    }
    count /= factorial;
    i = j;
  }
  return count;
}

std::vector<CurveClass> expand_permutations(const CurveClass& c) {
  std::vector<Int> m = c.m;
  std::sort(m.begin(), m.end());
  std::vector<CurveClass> out;
  do {
    out.emplace_back(c.space, c.d, m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

OrbitResult orbit_enumerate(const CurveClass& input, std::uint64_t cap,
                            int jobs) {
  if (jobs < 1) jobs = 1;
  const SpaceParams space = input.space;
  const std::vector<IndexSet> sets = all_index_sets(space);

  std::set<CurveClass, CurveOrder> visited;
  std::vector<CurveClass> frontier;
  {
    CurveClass start = sort_desc(input).cls;
    visited.insert(start);
    frontier.push_back(std::move(start));
  }
  Int raw = arrangement_count(frontier.front());
  bool truncated = raw > cap;

  auto expand_range = [&sets](const std::vector<CurveClass>& nodes,
                              std::size_t begin, std::size_t end,
                              std::vector<CurveClass>& out) {
    for (std::size_t n = begin; n < end; ++n) {
      for (const IndexSet& I : sets) {
        out.push_back(sort_desc(phi_curve(nodes[n], I)).cls);
      }
    }
  };

  while (!frontier.empty() && !truncated) {
    std::vector<CurveClass> candidates;
    if (jobs == 1 || frontier.size() < 2) {
      expand_range(frontier, 0, frontier.size(), candidates);
    } else {
      // Deterministic: chunk outputs are concatenated in chunk order, so
      // the candidate sequence does not depend on scheduling.
      const std::size_t workers =
          std::min<std::size_t>(jobs, frontier.size());
      std::vector<std::vector<CurveClass>> chunk_out(workers);
      std::vector<std::thread> threads;
      threads.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = frontier.size() * w / workers;
        const std::size_t end = frontier.size() * (w + 1) / workers;
        threads.emplace_back(expand_range, std::cref(frontier), begin, end,
                             std::ref(chunk_out[w]));
      }
      for (auto& t : threads) t.join();
      for (auto& chunk : chunk_out) {
        candidates.insert(candidates.end(),
                          std::make_move_iterator(chunk.begin()),
                          std::make_move_iterator(chunk.end()));
      }
    }

    std::vector<CurveClass> next;
    for (CurveClass& candidate : candidates) {
      if (visited.insert(candidate).second) {
        raw += arrangement_count(candidate);
        next.push_back(std::move(candidate));
        if (raw > cap) {
          truncated = true;
          break;
        }
      }
    }
    frontier = std::move(next);
  }

  OrbitResult out{!truncated,
                  std::vector<CurveClass>(visited.begin(), visited.end()),
                  std::move(raw), cap};
  return out;
}

}  // namespace weyl
