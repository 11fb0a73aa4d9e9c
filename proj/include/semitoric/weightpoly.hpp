#ifndef SEMITORIC_WEIGHTPOLY_HPP
#define SEMITORIC_WEIGHTPOLY_HPP

// Weight polytopes of cone faces. For a face F with span U(F), the
// functionals e_a restricted to U(F) are written in the dual of the
// Hermite basis of U(F) cap Z^L, so lambda_a^F is column a of that basis.

#include "semitoric/subdivision.hpp"

#include <optional>
#include <vector>

namespace semitoric {

struct WeightPolytope {
  Face face;
  /// Rows: integer basis of U(F) cap Z^L.
  ZMatrix basis;
  /// points[a] = lambda_a^F in dual-basis coordinates.
  std::vector<QVector> points;
  LatticePolytope polytope;
};

/// Certifies: every lambda_a^F is a vertex, there are no other integer
/// points, and dim = dim F - 1.
WeightPolytope weight_polytope(const MaxCone& cone, const Face& face);

/// Matrix X of the dual inclusion U(F) in U(G): basis(F) = X * basis(G),
/// so lambda^F_a = X * lambda^G_a. Throws NotSubface unless
/// tight(G) is contained in tight(F).
ZMatrix projection_matrix(const MaxCone& cone, const Face& g, const Face& f);
QVector project(const MaxCone& cone, const Face& g, const Face& f, const QVector& point);

/// Affine map R^P -> U(F_0)^* with v_a -> lambda_a^{F_0}, F_0 the apex.
/// Certified injective, carrying Z^P onto the integer points of the affine
/// span of the apex weight polytope, and O(P,<) onto it.
AffineMap zeta(const MaxCone& cone);
/// Inverse of zeta on its image; nullopt off the image.
std::optional<QVector> zeta_inverse(const AffineMap& z, const QVector& y);

struct WeightFace {
  /// Lattice elements a whose lambda_a span the face, sorted.
  std::vector<std::size_t> elements;
  LatticePolytope polytope;
  /// Separating functional in dual coordinates: zero on the face, >= 1 at
  /// every other lambda_a (empty for the whole polytope).
  QVector functional;
};

/// Coordinate face of the full-face simplex on the maximal chain of `ext`.
WeightFace chain_simplex(const MaxCone& cone, const LinearExtension& ext);

/// One face per part of the face subdivision, certified by the functional
/// w'_a = piece_i(v_a) - w_a, of dimension |P|, and mapped by
/// zeta^{-1} o projection bijectively onto the vertices of the part.
std::vector<WeightFace> distinguished_faces(const MaxCone& cone, const Face& face);

struct NormalityResult {
  bool pass = true;
  /// First dilation factor with an integer point that is not a sum of k
  /// integer points of Q, or 0.
  int first_failure = 0;
  int checked_up_to = 1;
};

/// Integer points of kQ against k-fold sums of integer points of Q, k <= 4.
NormalityResult normality_probe(const LatticePolytope& q, int k_max);

}  // namespace semitoric

#endif  // SEMITORIC_WEIGHTPOLY_HPP
