#ifndef SEMITORIC_LATTICE_HPP
#define SEMITORIC_LATTICE_HPP

#include "semitoric/poset.hpp"

#include <unordered_map>
#include <vector>

namespace semitoric {

/// Incomparable pair {a, b} whose join covers both (equivalently, both cover
/// the meet). Stored with a < b in element order.
struct DiamondPair {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t meet = 0;
  std::size_t join = 0;

  auto operator<=>(const DiamondPair&) const = default;
};

/// Finite distributive lattice, always realized as the order ideals of its
/// poset of join-irreducibles. Elements are indexed in canonical ideal order
/// (by size, then lexicographically), so index 0 is the bottom and the last
/// index is the top. Display labels are carried separately.
class Lattice {
 public:
  Lattice() = default;

  /// Builds the lattice on `ideals` (which must be exactly the order ideals of
  /// `ground`), labelled by `labels`. Reorders elements canonically.
  static Lattice from_ideals(Poset ground, std::vector<ElementSet> ideals,
                             std::vector<std::string> labels);

  std::size_t size() const { return ideals_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t a) const { return labels_[a]; }
  std::size_t index_of(const std::string& label) const;

  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  bool leq(std::size_t a, std::size_t b) const { return (ideals_[a] & ~ideals_[b]) == 0; }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  /// True iff `upper` covers `lower`.
  bool covers(std::size_t upper, std::size_t lower) const;

  /// Height |a| = |iota(a)|.
  int height(std::size_t a) const { return popcount(ideals_[a]); }
  std::size_t bottom() const { return 0; }
  std::size_t top() const { return size() - 1; }

  /// The poset P(L) of join-irreducibles.
  const Poset& poset() const { return poset_; }
  /// Birkhoff map iota: element -> order ideal of poset().
  ElementSet ideal(std::size_t a) const { return ideals_[a]; }
  const std::vector<ElementSet>& ideals() const { return ideals_; }
  std::size_t element_of(ElementSet ideal) const;
  bool contains_ideal(ElementSet ideal) const { return index_.count(ideal) != 0; }

  /// Indicator vector v_a in R^P.
  QVector vertex(std::size_t a) const;

 private:
  Poset poset_;
  std::vector<ElementSet> ideals_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::unordered_map<ElementSet, std::size_t> index_;
};

/// The lattice J(P) of order ideals with union and intersection.
Lattice birkhoff(const Poset& poset);

/// Validates the lattice axioms and distributivity of explicit tables
/// (join[a][b], meet[a][b]), then recovers P(L) and iota.
Lattice from_tables(std::vector<std::string> elements,
                    const std::vector<std::vector<std::size_t>>& join,
                    const std::vector<std::vector<std::size_t>>& meet);

/// Replaces the ground poset by an isomorphic copy: `iota[a]` is the ideal
/// of `ground` to attach to element a. Validates that iota is a lattice
/// isomorphism onto the ideals of `ground`.
Lattice rebase(const Lattice& lattice, Poset ground, const std::vector<ElementSet>& iota);

std::vector<DiamondPair> diamond_pairs(const Lattice& lattice);

/// Maximal chains of L paired with linear extensions of P(L):
/// chains[i] = iota^{-1}(prefixes of extensions[i]).
struct MaximalChains {
  std::vector<std::vector<std::size_t>> chains;
  std::vector<LinearExtension> extensions;
};
MaximalChains maximal_chains(const Lattice& lattice);

/// The sublattice M = iota^{-1}(J(P, stronger)), sorted element indices.
std::vector<std::size_t> sublattice_for_order(const Lattice& lattice, const Poset& stronger);

Lattice boolean_lattice(std::size_t n);
/// Chain lattice with `n` elements (ground poset a chain of n-1 elements).
Lattice chain_lattice(std::size_t n);

bool isomorphic(const Lattice& a, const Lattice& b);

std::string ideal_label(const Poset& poset, ElementSet ideal);

}  // namespace semitoric

#endif  // SEMITORIC_LATTICE_HPP
