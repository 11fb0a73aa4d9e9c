#ifndef SEMITORIC_EXACTGEOM_HPP
#define SEMITORIC_EXACTGEOM_HPP

// Exact rational polyhedral primitives: an exact simplex LP (Bland's rule),
// a double-description conversion between vertex and facet descriptions,
// Hermite-based lattice bases and integer-point enumeration. No floating
// point anywhere.

#include "semitoric/linalg.hpp"

#include <vector>

namespace semitoric {

// ---------------------------------------------------------------------------
// Linear programming

enum class Relation { Le, Lt, Eq, Ge, Gt };

struct LinearConstraint {
  QVector normal;
  Relation relation = Relation::Le;
  Rational rhs;
};

/// maximize c.x subject to a_i.x (rel_i) b_i, x_j >= 0 unless free[j].
/// Strict relations are not allowed here.
struct LpProblem {
  QMatrix a;
  QVector b;
  std::vector<Relation> relations;
  QVector objective;
  std::vector<bool> free;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  QVector x;
  Rational value;
};

LpSolution maximize(const LpProblem& problem);

struct Feasibility {
  bool feasible = false;
  QVector witness;
  /// Common slack achieved on the strict constraints (1 after scaling for
  /// homogeneous systems, 0 when there are no strict constraints).
  Rational slack;
};

/// Exact feasibility of a mixed system over free variables in R^dim. Strict
/// constraints are handled by maximizing a shared slack t <= 1; when every
/// right-hand side is zero, the witness is rescaled so each strict
/// constraint holds with slack >= 1.
Feasibility lp_feasible(const std::vector<LinearConstraint>& constraints, Index dim);

bool satisfies(const LinearConstraint& c, const QVector& x);

// ---------------------------------------------------------------------------
// Polytopes

/// x -> linear * x + offset.
struct AffineMap {
  QMatrix linear;
  QVector offset;

  QVector operator()(const QVector& x) const { return linear * x + offset; }
};

/// normal . x <= rhs (or == rhs for equations).
struct Halfspace {
  QVector normal;
  Rational rhs;

  bool operator==(const Halfspace&) const = default;
};

/// Lattice basis (rows) of the affine span of integer points, anchored at
/// `base`: every integer point of the span is base + an integer
/// combination of the rows.
struct AffineLattice {
  ZVector base;
  ZMatrix basis;
};

struct LatticePolytope {
  Index ambient_dim = 0;
  /// Extreme points, lexicographically sorted.
  std::vector<QVector> vertices;
  /// Facet inequalities, valid together with `equations`.
  std::vector<Halfspace> hyperplanes;
  /// Affine hull.
  std::vector<Halfspace> equations;
  /// Basis of the direction lattice (affine span directions) cap Z^n.
  ZMatrix lattice_basis;

  Index dim() const;
  bool empty() const { return vertices.empty(); }
  bool contains(const QVector& x) const;
};

/// Polytopes of dimension above this only get a V-description.
inline constexpr Index kMaxFacetDimension = 12;

bool lex_less(const QVector& a, const QVector& b);
void sort_unique(std::vector<QVector>& points);

/// Extreme points, each certified by an exact LP: a point is extreme iff it
/// is not a convex combination of the other points. Sorted lexicographically.
std::vector<QVector> hull_vertices(const std::vector<QVector>& points);

/// Full description of conv(points): vertices, facets (dim <= 12), affine
/// hull and its lattice.
LatticePolytope polytope_from_vertices(const std::vector<QVector>& points);

/// {x : eq.normal.x == eq.rhs, ineq.normal.x <= ineq.rhs}; must be bounded.
LatticePolytope polytope_from_inequalities(Index ambient_dim,
                                           const std::vector<Halfspace>& equations,
                                           const std::vector<Halfspace>& inequalities);

LatticePolytope dilate(const LatticePolytope& p, const Rational& factor);

/// Extreme rays of the pointed cone {y : rows * y >= 0}, as primitive integer
/// vectors (double description method). Throws UnboundedError if the cone
/// has a lineality space.
std::vector<ZVector> extreme_rays(const QMatrix& rows);

AffineLattice affine_lattice_basis(const std::vector<QVector>& integer_points);

/// Integer points of a bounded polytope, lexicographically sorted.
std::vector<QVector> integer_points(const LatticePolytope& p);

/// Cells of the regular subdivision induced by lifting points[i] to height
/// heights[i]: index sets of the points lying on each upper face of the
/// lifted hull that projects full-dimensionally. Sorted.
std::vector<std::vector<std::size_t>> regular_subdivision_cells(
    const std::vector<QVector>& points, const std::vector<Rational>& heights);

}  // namespace semitoric

#endif  // SEMITORIC_EXACTGEOM_HPP
