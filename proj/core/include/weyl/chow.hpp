#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace weyl {

// All arithmetic is exact. Degrees and multiplicities along divergent
// reduction traces grow without bound, so fixed-width integers are not an
// option anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parameters of the ambient space: the blowup of projective r-space at
/// s general points. Requires r >= 2 and s >= r+1.
struct SpaceParams {
  int r;
  int s;

  SpaceParams(int r, int s);

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

/// A curve class d*h - sum_i m[i]*e_i, with h the general line class and
/// e_i the line class inside the i-th exceptional divisor.
///
/// Multiplicities are stored as written in that expression, so the class
/// e_1 itself is stored as (0; -1, 0, ..., 0). Signs are unrestricted.
struct CurveClass {
  SpaceParams space;
  Int d;
  std::vector<Int> m;

  CurveClass(SpaceParams space, Int d, std::vector<Int> m);

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

/// A divisor class d*H - sum_i m[i]*E_i, same storage convention as
/// CurveClass on the dual grading (E_1 is stored as (0; -1, 0, ..., 0)).
struct DivisorClass {
  SpaceParams space;
  Int d;
  std::vector<Int> m;

  DivisorClass(SpaceParams space, Int d, std::vector<Int> m);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Strict weak order on curve classes (space, then degree, then
/// multiplicities); used for set keys in orbit searches.
struct CurveOrder {
  bool operator()(const CurveClass& a, const CurveClass& b) const;
};

/// A basis monomial of the Chow ring. Codimension j with 0 < j < r has
/// basis {h_j, e_{i,j}}; codimension 0 is spanned by the identity class and
/// codimension r by the point class (h_r and every e_{i,r} are the point
/// class). Anything of codimension > r collapses to the zero monomial.
class ChowMonomial {
 public:
  enum class Kind { Zero, Identity, Hyperplane, Exceptional, Point };

  static ChowMonomial zero(SpaceParams space);
  static ChowMonomial identity(SpaceParams space);
  static ChowMonomial point(SpaceParams space);
  static ChowMonomial hyperplane(SpaceParams space, int codim);
  static ChowMonomial exceptional(SpaceParams space, int point_index, int codim);

  Kind kind() const { return kind_; }
  int codim() const { return codim_; }
  int point_index() const;
  SpaceParams space() const { return space_; }

  friend bool operator==(const ChowMonomial&, const ChowMonomial&) = default;

 private:
  ChowMonomial(SpaceParams space, Kind kind, int codim, int point_index);

  SpaceParams space_;
  Kind kind_;
  int codim_;
  int point_;
};

/// Product of two monomials. sign is 0 exactly when the monomial is zero,
/// otherwise +1 or -1 (powers of exceptional classes alternate sign).
struct SignedMonomial {
  int sign;
  ChowMonomial mono;

  friend bool operator==(const SignedMonomial&, const SignedMonomial&) = default;
};

SignedMonomial chow_product(const ChowMonomial& a, const ChowMonomial& b);

/// The canonical class K = -(r+1)H + (r-1) sum_i E_i, stored as
/// (-(r+1); (-(r-1))^s).
DivisorClass canonical_class(SpaceParams space);

/// The anticanonical curve class F = (r+1)h - sum_i e_i, stored as
/// (r+1; 1^s). Fixed by every Cremona transformation.
CurveClass anticanonical_curve(SpaceParams space);

/// Both distinguished classes at once.
std::pair<DivisorClass, CurveClass> special_classes(SpaceParams space);

/// Intersection number (D . c), i.e. the coefficient of the point class in
/// the Chow product: d_D*d_c - sum_i m_D[i]*m_c[i].
Int pairing(const DivisorClass& D, const CurveClass& c);

/// Invariant quadratic form on curve classes: d^2 - (r-1) sum_i m_i^2.
Int q_curve(const CurveClass& c);

/// Invariant quadratic form on divisor classes: (r-1) d^2 - sum_i m_i^2.
Int q_div(const DivisorClass& D);

/// Bilinear form <a,b> = d_a*d_b - (r-1) sum m_a[i]*m_b[i] obtained by
/// polarizing q_curve; <c,c> = q_curve(c) and <F,c> is the anticanonical
/// degree of c.
Int bilinear_curve(const CurveClass& a, const CurveClass& b);

/// Bilinear form B1(a,b) = ((1-r)/2) d_a*d_b + (1/2) sum m_a[i]*m_b[i];
/// half-integer valued, so the result is an exact rational.
/// B1(x,x) = -q_div(x)/2.
Rational bilinear_div(const DivisorClass& a, const DivisorClass& b);

/// Expected dimension (r+1)(d+1) - (r-1) sum m_i - 4, which equals
/// (r-3) - (K . c).
Int virtual_dim(const CurveClass& c);

/// The level i solving <F,c> = 2 + i(r-1), if an integer solution exists.
/// The value is not clamped to {-1,0,1}; callers filter.
std::optional<Int> numerical_i_level(const CurveClass& c);

/// True iff b - a is an integer multiple of F.
bool mod_f_equal(const CurveClass& a, const CurveClass& b);

/// Result of sorting multiplicities into non-increasing order.
/// perm[input index] = output position; ties keep their original order.
struct SortedCurve {
  CurveClass cls;
  std::vector<int> perm;
};

SortedCurve sort_desc(const CurveClass& c);

}  // namespace weyl
