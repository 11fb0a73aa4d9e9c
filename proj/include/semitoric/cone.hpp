#ifndef SEMITORIC_CONE_HPP
#define SEMITORIC_CONE_HPP

// The closed maximal Groebner cone of the Hibi ideal: one inequality
// w_meet + w_join - w_a - w_b >= 0 per diamond pair, and its faces keyed by
// their closed sets of tight pairs.

#include "semitoric/exactgeom.hpp"
#include "semitoric/lattice.hpp"

#include <string>
#include <vector>

namespace semitoric {

/// Sorted indices into MaxCone::pairs().
using TightSet = std::vector<std::size_t>;

struct Face {
  TightSet tight;
  Index dim = 0;
  /// Relative-interior point: tight pairs hold with equality, every other
  /// inequality with slack >= 1.
  QVector witness;

  bool operator==(const Face& other) const { return tight == other.tight; }
};

class MaxCone {
 public:
  MaxCone() = default;
  /// Builds the inequalities and certifies each one facet-defining.
  explicit MaxCone(Lattice lattice);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<DiamondPair>& pairs() const { return pairs_; }
  /// normal(i) . w >= 0 on the closed cone.
  const QVector& normal(std::size_t i) const { return normals_[i]; }
  std::size_t facet_count() const { return pairs_.size(); }
  Index ambient_dim() const { return static_cast<Index>(lattice_.size()); }

  /// Smallest closed tight set containing `forced`, with a witness.
  Face closure(const TightSet& forced) const;

  Face full_face() const;
  Face apex() const;

 private:
  Lattice lattice_;
  std::vector<DiamondPair> pairs_;
  std::vector<QVector> normals_;
};

MaxCone cone_K(const Lattice& lattice);

/// Face containing w in its relative interior. Throws NotInCone.
Face face_of(const MaxCone& cone, const QVector& w);

/// Rational basis (columns) of U(F) = {w : tight equalities}.
QMatrix span_of_face(const MaxCone& cone, const Face& face);
/// Hermite basis (rows) of U(F) cap Z^L.
ZMatrix integer_span_of_face(const MaxCone& cone, const Face& face);

QVector sample_relative_interior(const MaxCone& cone, const Face& face);

/// True iff dropping inequality i strictly enlarges the cone (LP witness
/// with normal(i).w < 0 and all others >= 0).
bool facet_is_irredundant(const MaxCone& cone, std::size_t i);

/// Breadth-first closure search from the full face: every face arises as
/// the closure of a face plus one more pair. Sorted by (|tight|, tight).
/// Throws TooLarge past 20 pairs or `max_candidates` closure computations.
std::vector<Face> enumerate_faces(const MaxCone& cone, std::size_t max_candidates = 200000);

/// "full", "apex" or "a/b;c/d" with element labels, pairs sorted.
std::string face_key(const MaxCone& cone, const Face& face);
/// Parses face_key output. Throws BadParams unless the listed pairs form a
/// closed tight set.
Face parse_face_key(const MaxCone& cone, const std::string& key);

}  // namespace semitoric

#endif  // SEMITORIC_CONE_HPP
