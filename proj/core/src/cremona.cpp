#include "weyl/cremona.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace weyl {

namespace {

void require_space(const SpaceParams& class_space, const SpaceParams& set_space) {
  if (!(class_space == set_space)) {
    throw std::invalid_argument("index set belongs to a different blowup");
  }
}

// Sum of the r+1 largest entries.
Int top_sum(const std::vector<Int>& m, int count) {
  std::vector<Int> copy = m;
  std::nth_element(copy.begin(), copy.begin() + (count - 1), copy.end(),
                   std::greater<Int>());
  return std::accumulate(copy.begin(), copy.begin() + count, Int(0));
}

}  // namespace

IndexSet::IndexSet(SpaceParams space, std::vector<int> indices)
    : space_(space), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (static_cast<int>(indices_.size()) != space_.r + 1) {
    throw std::invalid_argument("index set must have exactly r+1 elements");
  }
  if (indices_.front() < 0 || indices_.back() >= space_.s) {
    throw std::invalid_argument("index out of range");
  }
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("index set has repeated elements");
  }
}

IndexSet IndexSet::first(SpaceParams space) {
  std::vector<int> indices(space.r + 1);
  std::iota(indices.begin(), indices.end(), 0);
  return IndexSet(space, std::move(indices));
}

IndexSet IndexSet::from_one_based(SpaceParams space, std::vector<int> indices) {
  for (int& i : indices) --i;
  return IndexSet(space, std::move(indices));
}

std::vector<int> IndexSet::one_based() const {
  std::vector<int> out = indices_;
  for (int& i : out) ++i;
  return out;
}

bool IndexSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

DivisorClass phi_div(const DivisorClass& D, const IndexSet& I) {
  require_space(D.space, I.space());
  Int sum = 0;
  for (int i : I.indices()) sum += D.m[i];
  const Int t = (D.space.r - 1) * D.d - sum;

  DivisorClass out = D;
  out.d += t;
  for (int i : I.indices()) out.m[i] += t;
  return out;
}

CurveClass phi_curve(const CurveClass& c, const IndexSet& I) {
  require_space(c.space, I.space());
  Int sum = 0;
  for (int i : I.indices()) sum += c.m[i];
  const Int t = c.d - sum;

  CurveClass out = c;
  out.d += (c.space.r - 1) * t;
  for (int i : I.indices()) out.m[i] += t;
  return out;
}

bool pairing_invariance_check(const DivisorClass& D, const CurveClass& c,
                              const IndexSet& I) {
  return pairing(D, c) == pairing(phi_div(D, I), phi_curve(c, I));
}

bool is_cremona_reduced(const CurveClass& c) {
  return c.d >= top_sum(c.m, c.space.r + 1);
}

bool is_cremona_reduced(const DivisorClass& D) {
  return (D.space.r - 1) * D.d >= top_sum(D.m, D.space.r + 1);
}

CurveClass project(const CurveClass& c, int point) {
  if (c.space.r < 3) {
    throw std::domain_error("projection needs r >= 3");
  }
  if (point < 0 || point >= c.space.s) {
    throw std::invalid_argument("projection center out of range");
  }
  std::vector<Int> m;
  m.reserve(c.space.s - 1);
  for (int i = 0; i < c.space.s; ++i) {
    if (i != point) m.push_back(c.m[i]);
  }
  return CurveClass(SpaceParams(c.space.r - 1, c.space.s - 1),
                    c.d - c.m[point], std::move(m));
}

bool projection_inequality(const CurveClass& c, int i_level) {
  const Int total = std::accumulate(c.m.begin(), c.m.end(), Int(0));
  // d + m_j <= (total - m_j) + i for every j.
  for (const Int& mj : c.m) {
    if (c.d + 2 * mj > total + i_level) return false;
  }
  return true;
}

bool projection_commutes_check(const CurveClass& c, const IndexSet& I,
                               int point) {
  if (!I.contains(point)) {
    throw std::invalid_argument("projection center must belong to the index set");
  }
  const CurveClass lhs = project(phi_curve(c, I), point);

  // Removing the center renumbers the points above it.
  std::vector<int> shifted;
  shifted.reserve(I.indices().size() - 1);
  for (int i : I.indices()) {
    if (i != point) shifted.push_back(i > point ? i - 1 : i);
  }
  const CurveClass projected = project(c, point);
  const CurveClass rhs =
      phi_curve(projected, IndexSet(projected.space, std::move(shifted)));
  return lhs == rhs;
}

}  // namespace weyl
