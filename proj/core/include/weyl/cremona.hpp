#pragma once

#include <vector>

#include "weyl/chow.hpp"

namespace weyl {

/// A set of exactly r+1 blown-up points, the center of a standard Cremona
/// transformation. Indices are held 0-based and sorted; the text and JSON
/// interfaces are 1-based.
class IndexSet {
 public:
  IndexSet(SpaceParams space, std::vector<int> indices);

  static IndexSet first(SpaceParams space);  // {0, 1, ..., r}
  static IndexSet from_one_based(SpaceParams space, std::vector<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  std::vector<int> one_based() const;
  bool contains(int index) const;
  SpaceParams space() const { return space_; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  SpaceParams space_;
  std::vector<int> indices_;
};

/// Cremona action on divisor classes: with t = (r-1)d - sum_{i in I} m_i,
/// the degree becomes d + t and every m_i with i in I becomes m_i + t.
/// An involution.
DivisorClass phi_div(const DivisorClass& D, const IndexSet& I);

/// Cremona action on curve classes: with t = d - sum_{i in I} m_i, the
/// degree becomes d + (r-1)t and every m_i with i in I becomes m_i + t.
/// An involution.
CurveClass phi_curve(const CurveClass& c, const IndexSet& I);

/// Property-test hook: the intersection pairing is invariant under the
/// simultaneous Cremona action on both gradings. Always true.
bool pairing_invariance_check(const DivisorClass& D, const CurveClass& c,
                              const IndexSet& I);

/// A curve class is Cremona reduced when d >= the sum of the r+1 largest
/// multiplicities, so no phi_I lowers its degree.
bool is_cremona_reduced(const CurveClass& c);

/// Divisor-side criterion: (r-1)d >= the sum of the r+1 largest
/// multiplicities.
bool is_cremona_reduced(const DivisorClass& D);

/// Projection from the given blown-up point, landing in the blowup of
/// projective (r-1)-space at the remaining s-1 points: degree drops by the
/// multiplicity at the center, which is removed from the vector.
/// Formal: the result may have non-positive degree. Requires r >= 3.
CurveClass project(const CurveClass& c, int point);

/// Projection inequality at level i: d + m_j <= (sum_{k != j} m_k) + i for
/// every j. For numerical (i)-classes this is equivalent to
/// d - (r-1) max_j(m_j) >= 1 and to <c, h - e_j> >= 1 for all j.
bool projection_inequality(const CurveClass& c, int i_level);

/// Property-test hook: projecting from a center point of I commutes with
/// the Cremona transformation, pi_p(phi_I(c)) = phi_{I \ {p}}(pi_p(c)).
/// Requires r >= 3 and p in I. Always true.
bool projection_commutes_check(const CurveClass& c, const IndexSet& I, int point);

}  // namespace weyl
