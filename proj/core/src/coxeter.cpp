#include "weyl/coxeter.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace weyl {

namespace {

void require_vertex(const CoxGraph& graph, int i) {
  if (i < 0 || i >= graph.size()) {
    throw std::invalid_argument("graph vertex out of range");
  }
}

void require_length(std::size_t got, int expected, const char* what) {
  if (static_cast<int>(got) != expected) {
    throw std::invalid_argument(std::string(what) +
                                " has the wrong number of entries");
  }
}

}  // namespace

CoxGraph::CoxGraph(SpaceParams space) : space_(space) {
  if (space_.s < space_.r + 2) {
    throw std::invalid_argument(
        "the Coxeter graph needs s >= r+2; s = r+1 is handled by the "
        "cremona module directly");
  }
  neighbors_.resize(space_.s);
  for (int i = 1; i + 1 <= space_.s - 1; ++i) {
    neighbors_[i].push_back(i + 1);
    neighbors_[i + 1].push_back(i);
  }
  neighbors_[0].push_back(space_.r + 1);
  neighbors_[space_.r + 1].push_back(0);
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

bool CoxGraph::adjacent(int i, int j) const {
  require_vertex(*this, i);
  require_vertex(*this, j);
  const auto& list = neighbors_[i];
  return std::binary_search(list.begin(), list.end(), j);
}

const std::vector<int>& CoxGraph::neighbors(int i) const {
  require_vertex(*this, i);
  return neighbors_[i];
}

Rational CoxGraph::form(int i, int j) const {
  require_vertex(*this, i);
  require_vertex(*this, j);
  if (i == j) return Rational(1);
  if (adjacent(i, j)) return Rational(-1, 2);
  return Rational(0);
}

CoxVector basis_vector(const CoxGraph& graph, int i) {
  require_vertex(graph, i);
  CoxVector v{std::vector<Rational>(graph.size(), Rational(0))};
  v.coords[i] = 1;
  return v;
}

Rational b_form(const CoxGraph& graph, const CoxVector& u, const CoxVector& v) {
  require_length(u.coords.size(), graph.size(), "vector");
  require_length(v.coords.size(), graph.size(), "vector");
  Rational sum = 0;
  for (int i = 0; i < graph.size(); ++i) {
    if (u.coords[i] == 0) continue;
    sum += u.coords[i] * v.coords[i];
    for (int j : graph.neighbors(i)) {
      sum -= u.coords[i] * v.coords[j] / 2;
    }
  }
  return sum;
}

CoxVector reflect(const CoxGraph& graph, const CoxVector& v, int i) {
  require_vertex(graph, i);
  require_length(v.coords.size(), graph.size(), "vector");
  // sigma_i changes only the i-th coordinate:
  // v_i -> -v_i + sum of the neighboring coordinates.
  CoxVector out = v;
  Rational coefficient = -v.coords[i];
  for (int j : graph.neighbors(i)) coefficient += v.coords[j];
  out.coords[i] = coefficient;
  return out;
}

CoxFunctional reflect_dual(const CoxGraph& graph, const CoxFunctional& f,
                           int i) {
  require_vertex(graph, i);
  require_length(f.values.size(), graph.size(), "functional");
  CoxFunctional out = f;
  const Rational fi = f.values[i];
  out.values[i] = -fi;
  for (int j : graph.neighbors(i)) out.values[j] += fi;
  return out;
}

DivisorClassQ to_rational(const DivisorClass& D) {
  DivisorClassQ out{D.space, Rational(D.d), {}};
  out.m.reserve(D.m.size());
  for (const Int& v : D.m) out.m.emplace_back(v);
  return out;
}

Rational bilinear_div(const DivisorClassQ& a, const DivisorClassQ& b) {
  if (!(a.space == b.space)) {
    throw std::invalid_argument("classes live on different blowups");
  }
  Rational sum = Rational(1 - a.space.r) * a.d * b.d / 2;
  for (int i = 0; i < a.space.s; ++i) {
    sum += a.m[i] * b.m[i] / 2;
  }
  return sum;
}

DivisorClass chamber_basis_divisor(SpaceParams space, int i) {
  if (i < 0 || i >= space.s) {
    throw std::invalid_argument("basis index out of range");
  }
  std::vector<Int> m(space.s, Int(0));
  if (i == 0) {
    for (int k = 0; k <= space.r; ++k) m[k] = 1;
    return DivisorClass(space, Int(1), std::move(m));
  }
  // X_i = E_i - E_{i+1}, stored in the dH - sum m E convention.
  m[i - 1] = -1;
  m[i] = 1;
  return DivisorClass(space, Int(0), std::move(m));
}

DivisorClassQ beta(SpaceParams space, const CoxVector& v) {
  require_length(v.coords.size(), space.s, "vector");
  DivisorClassQ out{space, Rational(0),
                    std::vector<Rational>(space.s, Rational(0))};
  for (int i = 0; i < space.s; ++i) {
    if (v.coords[i] == 0) continue;
    const DivisorClass basis = chamber_basis_divisor(space, i);
    out.d += v.coords[i] * Rational(basis.d);
    for (int k = 0; k < space.s; ++k) {
      out.m[k] += v.coords[i] * Rational(basis.m[k]);
    }
  }
  return out;
}

DivisorClass generator_action_div(SpaceParams space, int generator,
                                  const DivisorClass& D) {
  if (!(D.space == space)) {
    throw std::invalid_argument("class lives on a different blowup");
  }
  if (generator < 0 || generator >= space.s) {
    throw std::invalid_argument("generator index out of range");
  }
  if (generator == 0) {
    return phi_div(D, IndexSet::first(space));
  }
  DivisorClass out = D;
  std::swap(out.m[generator - 1], out.m[generator]);
  return out;
}

std::vector<Int> chamber_pairings(const CurveClass& c) {
  std::vector<Int> out(c.space.s);
  Int head = 0;
  for (int i = 0; i <= c.space.r; ++i) head += c.m[i];
  out[0] = c.d - head;
  for (int i = 1; i <= c.space.s - 1; ++i) {
    out[i] = c.m[i - 1] - c.m[i];
  }
  return out;
}

std::optional<std::vector<int>> chamber_face(const CurveClass& c) {
  const std::vector<Int> pairings = chamber_pairings(c);
  std::vector<int> zeros;
  for (int i = 0; i < static_cast<int>(pairings.size()); ++i) {
    if (pairings[i] < 0) return std::nullopt;
    if (pairings[i] == 0) zeros.push_back(i);
  }
  return zeros;
}

CoxFunctional to_functional(const CurveClass& c) {
  CoxFunctional f;
  for (const Int& v : chamber_pairings(c)) f.values.emplace_back(v);
  return f;
}

TitsOutcome tits_reduce(const CoxGraph& graph, CoxFunctional f,
                        std::uint64_t step_cap) {
  require_length(f.values.size(), graph.size(), "functional");
  TitsOutcome out;
  std::uint64_t steps = 0;
  for (;;) {
    int negative = -1;
    for (int i = 0; i < graph.size(); ++i) {
      if (f.values[i] < 0) {
        negative = i;
        break;
      }
    }
    if (negative < 0) {
      out.reduced = true;
      out.functional = std::move(f);
      return out;
    }
    if (steps >= step_cap) {
      out.reduced = false;
      out.functional = std::move(f);
      return out;
    }
    f = reflect_dual(graph, f, negative);
    out.word.push_back(negative);
    ++steps;
  }
}

bool weyl_finite(SpaceParams space) {
  const std::int64_t r = space.r;
  const std::int64_t s = space.s;
  return (r + 1) * (r + 1) > s * (r - 1);
}

CurveClass psi_scaled(const DivisorClass& D) {
  return CurveClass(D.space, (D.space.r - 1) * D.d, D.m);
}

}  // namespace weyl
