#ifndef SEMITORIC_SUBDIVISION_HPP
#define SEMITORIC_SUBDIVISION_HPP

// Regular subdivisions of the order polytope O(P,<) induced by a weight
// w in the closed cone, where vertex v_a gets height w_a. Each staircase
// simplex O(P,≺) carries the unique affine map interpolating w on its
// vertices; simplices with the same map form one part O(P,<_i).
//
// Orientation: the pieces overestimate w at vertices outside their part,
// so the envelope is the pointwise minimum of the pieces (upper hull of
// the lifted vertices).

#include "semitoric/cone.hpp"

#include <cstdint>
#include <vector>

namespace semitoric {

struct Part {
  /// The stronger order <_i.
  Poset order;
  /// Affine piece x -> alpha . x + constant, constant = w_bottom.
  QVector alpha;
  Rational constant;
  std::vector<LinearExtension> simplices;
  /// Sorted lattice elements a with v_a a vertex of the part.
  std::vector<std::size_t> elements;

  Rational operator()(const QVector& x) const { return alpha.dot(x) + constant; }
};

struct Subdivision {
  std::vector<Part> parts;
  QVector weight;

  std::size_t size() const { return parts.size(); }
  /// Index of the part containing extension `ext` among its simplices.
  std::size_t part_of(const LinearExtension& ext) const;
};

/// Same parts (orders and element sets), regardless of weights.
bool same_parts(const Subdivision& x, const Subdivision& y);

/// Certifies the interpolation, the merge and the envelope property.
/// Throws NotInCone unless w lies in the closed cone.
Subdivision regular_subdivision(const MaxCone& cone, const QVector& w);
Subdivision regular_subdivision(const Lattice& lattice, const QVector& w);

/// Subdivision at the face's relative-interior sample. Also certifies that a
/// pair is tight on the face iff every two staircase simplices across it
/// land in the same part.
Subdivision face_subdivision(const MaxCone& cone, const Face& face);

/// `trials` distinct relative-interior samples (seeded perturbations of the
/// witness inside the face span) all give the same parts.
bool subdivision_invariance_check(const MaxCone& cone, const Face& face, int trials,
                                  std::uint64_t seed = 1);

struct AdjacencyGraph {
  std::vector<LinearExtension> extensions;
  /// Pairs (i, j), i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Adjacency of the staircase triangulation. Computed three ways (simplices
/// sharing a facet, adjacent transpositions, maximal chains differing in a
/// diamond pair) and certified equal.
AdjacencyGraph adjacency_graph(const Lattice& lattice);

/// conv{-alpha_i}. For Boolean lattices additionally certifies that -w is
/// submodular.
LatticePolytope generalized_permutahedron(const MaxCone& cone, const QVector& w);

}  // namespace semitoric

#endif  // SEMITORIC_SUBDIVISION_HPP
