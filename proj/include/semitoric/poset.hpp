#ifndef SEMITORIC_POSET_HPP
#define SEMITORIC_POSET_HPP

#include "semitoric/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semitoric {

using BoolMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Finite poset on opaque string labels. `less(i, j)` is the strict order,
/// stored transitively closed. Immutable after construction.
class Poset {
 public:
  Poset() = default;

  /// Validates `lt` as irreflexive and transitive (hence antisymmetric).
  Poset(std::vector<std::string> labels, BoolMatrix lt);

  /// Transitive closure of `covers` (pairs (lower, upper)).
  static Poset from_cover_relations(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& covers);

  static Poset antichain(std::vector<std::string> labels);
  static Poset chain(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t index_of(const std::string& label) const;

  bool less(std::size_t i, std::size_t j) const { return lt_(static_cast<Index>(i), static_cast<Index>(j)); }
  const BoolMatrix& relation() const { return lt_; }

  /// Hasse diagram edges (i, j) with i covered by j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const;

  bool is_ideal(ElementSet s) const;
  /// Principal ideal {j : j <= i}.
  ElementSet principal_ideal(std::size_t i) const;
  ElementSet all() const;

  bool operator==(const Poset& other) const {
    return labels_ == other.labels_ && lt_ == other.lt_;
  }

 private:
  std::vector<std::string> labels_;
  BoolMatrix lt_;
};

/// A linear order p_1 < ... < p_n on the ground set, as element indices.
struct LinearExtension {
  std::vector<std::size_t> order;

  /// The total order as a Poset on the ground set of `ground`.
  Poset as_poset(const Poset& ground) const;
  /// Ideals {p_1..p_i}, i = 0..n.
  std::vector<ElementSet> prefixes() const;

  auto operator<=>(const LinearExtension&) const = default;
};

/// Lazy enumeration of linear extensions in lexicographic order of the
/// element-index tuples.
class LinearExtensionStream {
 public:
  explicit LinearExtensionStream(const Poset& poset);
  std::optional<LinearExtension> next();

 private:
  bool available(std::size_t e) const;
  bool fill_from(std::size_t depth_start_candidate);

  const Poset* poset_;
  std::vector<std::size_t> prefix_;
  ElementSet used_ = 0;
  bool started_ = false;
  bool finished_ = false;
};

std::vector<LinearExtension> linear_extensions(const Poset& poset);

/// Strict total order used for all element subsets: by size, then
/// lexicographically on sorted index lists.
bool canonical_less(ElementSet a, ElementSet b);

/// All order ideals in canonical order.
std::vector<ElementSet> order_ideals(const Poset& poset);

/// True iff every relation of `weak` holds in `strong`.
bool is_stronger(const Poset& strong, const Poset& weak);

Poset intersect_orders(const std::vector<Poset>& orders);

/// An order-isomorphism P -> Q as an index map, if one exists (brute force
/// with pruning; desk-scale posets only).
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& p, const Poset& q);

std::vector<std::size_t> elements_of(ElementSet s);
int popcount(ElementSet s);

}  // namespace semitoric

#endif  // SEMITORIC_POSET_HPP
