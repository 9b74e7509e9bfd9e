#include "weyl/chow.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace weyl {

namespace {

void require_same_space(const SpaceParams& a, const SpaceParams& b) {
  if (!(a == b)) {
    throw std::invalid_argument("classes live on different blowups");
  }
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  Int sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sum += a[i] * b[i];
  }
  return sum;
}

}  // namespace

SpaceParams::SpaceParams(int r_in, int s_in) : r(r_in), s(s_in) {
  if (r < 2) {
    throw std::invalid_argument("ambient dimension r must be at least 2");
  }
  if (s < r + 1) {
    throw std::invalid_argument("need at least r+1 blown-up points");
  }
}

CurveClass::CurveClass(SpaceParams space_in, Int d_in, std::vector<Int> m_in)
    : space(space_in), d(std::move(d_in)), m(std::move(m_in)) {
  if (static_cast<int>(m.size()) != space.s) {
    throw std::invalid_argument("multiplicity vector length must equal s");
  }
}

DivisorClass::DivisorClass(SpaceParams space_in, Int d_in, std::vector<Int> m_in)
    : space(space_in), d(std::move(d_in)), m(std::move(m_in)) {
  if (static_cast<int>(m.size()) != space.s) {
    throw std::invalid_argument("multiplicity vector length must equal s");
  }
}

bool CurveOrder::operator()(const CurveClass& a, const CurveClass& b) const {
  if (a.space.r != b.space.r) return a.space.r < b.space.r;
  if (a.space.s != b.space.s) return a.space.s < b.space.s;
  if (a.d != b.d) return a.d < b.d;
  return a.m < b.m;
}

ChowMonomial::ChowMonomial(SpaceParams space_in, Kind kind_in, int codim_in,
                           int point_in)
    : space_(space_in), kind_(kind_in), codim_(codim_in), point_(point_in) {}

ChowMonomial ChowMonomial::zero(SpaceParams space) {
  return ChowMonomial(space, Kind::Zero, 0, -1);
}

ChowMonomial ChowMonomial::identity(SpaceParams space) {
  return ChowMonomial(space, Kind::Identity, 0, -1);
}

ChowMonomial ChowMonomial::point(SpaceParams space) {
  return ChowMonomial(space, Kind::Point, space.r, -1);
}

ChowMonomial ChowMonomial::hyperplane(SpaceParams space, int codim) {
  if (codim < 0) {
    throw std::invalid_argument("codimension must be non-negative");
  }
  if (codim == 0) return identity(space);
  if (codim > space.r) return zero(space);
  if (codim == space.r) return point(space);
  return ChowMonomial(space, Kind::Hyperplane, codim, -1);
}

ChowMonomial ChowMonomial::exceptional(SpaceParams space, int point_index,
                                       int codim) {
  if (point_index < 0 || point_index >= space.s) {
    throw std::invalid_argument("point index out of range");
  }
  if (codim < 1) {
    throw std::invalid_argument("exceptional monomials have codimension >= 1");
  }
  if (codim > space.r) return zero(space);
  if (codim == space.r) return point(space);
  return ChowMonomial(space, Kind::Exceptional, codim, point_index);
}

int ChowMonomial::point_index() const {
  if (kind_ != Kind::Exceptional) {
    throw std::logic_error("only exceptional monomials carry a point index");
  }
  return point_;
}

SignedMonomial chow_product(const ChowMonomial& a, const ChowMonomial& b) {
  require_same_space(a.space(), b.space());
  const SpaceParams space = a.space();
  using Kind = ChowMonomial::Kind;

  const auto zero = SignedMonomial{0, ChowMonomial::zero(space)};
  if (a.kind() == Kind::Zero || b.kind() == Kind::Zero) return zero;
  if (a.kind() == Kind::Identity) return {1, b};
  if (b.kind() == Kind::Identity) return {1, a};

  // Total codimension beyond r vanishes; this covers every product with
  // the point class.
  if (a.codim() + b.codim() > space.r) return zero;

  if (a.kind() == Kind::Hyperplane && b.kind() == Kind::Hyperplane) {
    return {1, ChowMonomial::hyperplane(space, a.codim() + b.codim())};
  }
  if (a.kind() == Kind::Exceptional && b.kind() == Kind::Exceptional) {
    if (a.point_index() != b.point_index()) return zero;
    return {-1, ChowMonomial::exceptional(space, a.point_index(),
                                          a.codim() + b.codim())};
  }
  // Mixed hyperplane/exceptional products vanish.
  return zero;
}

DivisorClass canonical_class(SpaceParams space) {
  return DivisorClass(space, Int(-(space.r + 1)),
                      std::vector<Int>(space.s, Int(-(space.r - 1))));
}

CurveClass anticanonical_curve(SpaceParams space) {
  return CurveClass(space, Int(space.r + 1), std::vector<Int>(space.s, Int(1)));
}

std::pair<DivisorClass, CurveClass> special_classes(SpaceParams space) {
  return {canonical_class(space), anticanonical_curve(space)};
}

Int pairing(const DivisorClass& D, const CurveClass& c) {
  require_same_space(D.space, c.space);
  return D.d * c.d - dot(D.m, c.m);
}

Int q_curve(const CurveClass& c) {
  return c.d * c.d - (c.space.r - 1) * dot(c.m, c.m);
}

Int q_div(const DivisorClass& D) {
  return (D.space.r - 1) * D.d * D.d - dot(D.m, D.m);
}

Int bilinear_curve(const CurveClass& a, const CurveClass& b) {
  require_same_space(a.space, b.space);
  return a.d * b.d - (a.space.r - 1) * dot(a.m, b.m);
}

Rational bilinear_div(const DivisorClass& a, const DivisorClass& b) {
  require_same_space(a.space, b.space);
  const Int numerator = (1 - a.space.r) * a.d * b.d + dot(a.m, b.m);
  return Rational(numerator, Int(2));
}

Int virtual_dim(const CurveClass& c) {
  const int r = c.space.r;
  const Int msum = std::accumulate(c.m.begin(), c.m.end(), Int(0));
  return (r + 1) * (c.d + 1) - (r - 1) * msum - 4;
}

std::optional<Int> numerical_i_level(const CurveClass& c) {
  const Int degree = bilinear_curve(anticanonical_curve(c.space), c);
  const Int offset = degree - 2;
  if (offset % (c.space.r - 1) != 0) return std::nullopt;
  return offset / (c.space.r - 1);
}

bool mod_f_equal(const CurveClass& a, const CurveClass& b) {
  require_same_space(a.space, b.space);
  const Int diff = b.d - a.d;
  if (diff % (a.space.r + 1) != 0) return false;
  const Int k = diff / (a.space.r + 1);
  for (int i = 0; i < a.space.s; ++i) {
    if (b.m[i] - a.m[i] != k) return false;
  }
  return true;
}

SortedCurve sort_desc(const CurveClass& c) {
  const int s = c.space.s;
  std::vector<int> order(s);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return c.m[a] > c.m[b]; });

  std::vector<Int> sorted(s);
  std::vector<int> perm(s);
  for (int pos = 0; pos < s; ++pos) {
    sorted[pos] = c.m[order[pos]];
    perm[order[pos]] = pos;
  }
  return SortedCurve{CurveClass(c.space, c.d, std::move(sorted)),
                     std::move(perm)};
}

}  // namespace weyl
