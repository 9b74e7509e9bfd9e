#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "weyl/chow.hpp"
#include "weyl/cremona.hpp"

namespace weyl {

/*
 * The Coxeter graph attached to the blowup of P^r at s points is a tree of
 * three chains with a common endpoint: vertices are labelled 0..s-1 with
 * edges (i, i+1) for 1 <= i <= s-2 plus the edge (0, r+1),
 *
 *   (1) - (2) - ... - (r) - (r+1) - (r+2) - ... - (s-1)
 *                            |
 *                           (0)
 *
 * The associated Weyl group is generated by one reflection per vertex;
 * vertex 0 corresponds to the standard Cremona transformation and vertex
 * i >= 1 to the transposition of the points i, i+1.
 */
class CoxGraph {
 public:
  /// Requires s >= r+2. For s = r+1 the graph would lose the generator
  /// chain past the branch vertex; that case is served directly by the
  /// cremona module (permutations plus a single phi).
  explicit CoxGraph(SpaceParams space);

  SpaceParams space() const { return space_; }
  int size() const { return space_.s; }
  bool adjacent(int i, int j) const;
  const std::vector<int>& neighbors(int i) const;

  /// The symmetric bilinear form of the standard geometric representation:
  /// 1 on the diagonal, -1/2 on edges, 0 otherwise.
  Rational form(int i, int j) const;

 private:
  SpaceParams space_;
  std::vector<std::vector<int>> neighbors_;
};

/// Element of the representation space E, coordinates over the basis x_i.
struct CoxVector {
  std::vector<Rational> coords;

  friend bool operator==(const CoxVector&, const CoxVector&) = default;
};

/// Element of the dual space, stored by its values on the basis:
/// values[i] = f(x_i).
struct CoxFunctional {
  std::vector<Rational> values;

  friend bool operator==(const CoxFunctional&, const CoxFunctional&) = default;
};

/// A word in the Weyl group generators, stored in application order: the
/// first letter acts first. (Written as a product, the word reads
/// right-to-left; the stored order is the reverse of that notation.)
using WeylWord = std::vector<int>;

CoxVector basis_vector(const CoxGraph& graph, int i);

/// B extended bilinearly to arbitrary vectors.
Rational b_form(const CoxGraph& graph, const CoxVector& u, const CoxVector& v);

/// The reflection sigma_i(x) = x - 2 B(x, x_i) x_i. Involutive and
/// B-preserving.
CoxVector reflect(const CoxGraph& graph, const CoxVector& v, int i);

/// Induced action of sigma_i on the dual space: (sigma_i f)(x) = f(sigma_i x).
CoxFunctional reflect_dual(const CoxGraph& graph, const CoxFunctional& f, int i);

/// Divisor class with rational coefficients; target of the linear extension
/// of beta to the whole representation space.
struct DivisorClassQ {
  SpaceParams space;
  Rational d;
  std::vector<Rational> m;

  friend bool operator==(const DivisorClassQ&, const DivisorClassQ&) = default;
};

DivisorClassQ to_rational(const DivisorClass& D);
Rational bilinear_div(const DivisorClassQ& a, const DivisorClassQ& b);

/// The divisor class X_i matched to the i-th graph vertex:
/// X_0 = H - E_1 - ... - E_{r+1} and X_i = E_i - E_{i+1} for i >= 1.
/// Their span is the orthogonal complement of the canonical class, and the
/// B1 pairing restricted to it realizes the graph form.
DivisorClass chamber_basis_divisor(SpaceParams space, int i);

/// The basis isomorphism x_i -> X_i, extended linearly.
DivisorClassQ beta(SpaceParams space, const CoxVector& v);

/// Geometric action matched to generator i under beta: the standard Cremona
/// phi_{1..r+1} for i = 0, the transposition of points (i, i+1) for i >= 1.
DivisorClass generator_action_div(SpaceParams space, int generator,
                                  const DivisorClass& D);

/// Pairings of a curve class against the X_i basis:
/// entry 0 = d - (m_1 + ... + m_{r+1}), entry i = m_i - m_{i+1}.
/// Unchanged by adding multiples of F.
std::vector<Int> chamber_pairings(const CurveClass& c);

/// If all chamber pairings are >= 0, the face of the closed fundamental
/// chamber containing the class: the set of vertex indices with pairing 0.
/// Otherwise nullopt (the class lies outside the closed chamber).
std::optional<std::vector<int>> chamber_face(const CurveClass& c);

/// The functional on the representation space induced by a curve class via
/// the chamber pairings.
CoxFunctional to_functional(const CurveClass& c);

struct TitsOutcome {
  bool reduced;              // false: step cap exhausted first
  WeylWord word;             // generators applied, in application order
  CoxFunctional functional;  // final values (all >= 0 when reduced)
};

/// Drive a functional into the non-negative chamber by repeatedly applying
/// a generator on which it is negative (smallest index first, which makes
/// the trace deterministic). Terminates for functionals in the Tits cone;
/// the cap keeps everything else honest.
TitsOutcome tits_reduce(const CoxGraph& graph, CoxFunctional f,
                        std::uint64_t step_cap);

/// The Weyl group is finite exactly when (r+1)^2 > s(r-1), i.e. for
/// r=2, s<=8; r=3, s<=7; r=4, s<=8; r>=5, s<=r+3.
bool weyl_finite(SpaceParams space);

/// (r-1) times the grading swap H -> h, E_i -> e_i/(r-1), kept integral by
/// the scaling. Satisfies q_curve(psi_scaled(D)) = (r-1) q_div(D) and
/// commutes with every phi_I.
CurveClass psi_scaled(const DivisorClass& D);

}  // namespace weyl
