#ifndef SEMITORIC_FLAGGT_HPP
#define SEMITORIC_FLAGGT_HPP

// Grassmannian and flag lattices on index tuples a_{i_1..i_k}, the
// triangular Gelfand-Tsetlin poset, marked order polytopes and the GT
// specialization of the order-polytope subdivisions.

#include "semitoric/subdivision.hpp"

#include <map>
#include <string>
#include <vector>

namespace semitoric {

using IndexTuple = std::vector<int>;

/// "a13", or "a1.3" when n > 9.
std::string tuple_label(const IndexTuple& t, int n);
IndexTuple parse_tuple_label(const std::string& label);

/// k-subsets of [n] ordered componentwise.
Lattice grassmann_lattice(int k, int n);
/// Nonempty proper subsets of [n]; a_I <= a_J iff |I| >= |J| and
/// i_j <= j_j on the first |J| indices.
Lattice flag_lattice(int n);

struct GtPosets {
  int n = 0;
  /// Full triangle {p_rs : 1 <= r <= s <= n}, sorted by (r, s); p_11 is first
  /// and p_nn last, so tilde index = bar index - 1.
  Poset bar;
  /// The triangle without p_11 and p_nn.
  Poset tilde;
  std::vector<std::pair<int, int>> coords;
  /// flag_lattice(n) rebased onto `tilde` through the explicit map phi.
  Lattice lattice;

  std::size_t bar_index(int r, int s) const;
  /// Bar indices of the marked diagonal p_11, ..., p_nn.
  std::vector<std::size_t> diagonal() const;
  /// 0/1 vector of lattice element a on the full triangle.
  QVector bar_vertex(std::size_t a) const;
  /// Number of indices of lattice element a.
  int index_count(std::size_t a) const;
};

GtPosets gt_poset_iso(int n);

struct MarkedPoset {
  Poset base;
  std::vector<std::size_t> marked;
  std::vector<Rational> values;
};

/// Triangle with diagonal p_rr marked by scale * (n - r) / (n - 1).
MarkedPoset gt_marking(const GtPosets& gt, const Rational& scale = 1);
/// Marking of the k-index summand: p_ss -> 1 if s <= n - k, else 0.
MarkedPoset summand_marking(const GtPosets& gt, int k);

/// {x : x_p = value_p on marked p, x_p >= x_q whenever p < q in `order`}.
/// `order` is a poset on the base labels, stronger than the base order.
LatticePolytope marked_order_polytope(const MarkedPoset& mp, const Poset& order);

/// Extends an order on the reduced triangle to the full one with p_11 at
/// the bottom and p_nn at the top.
Poset extend_to_bar(const GtPosets& gt, const Poset& order_on_tilde);

struct GtVertex {
  QVector point;
  /// summands[k - 1] is the k-index lattice element a with
  /// (n - 1) * v^k = v_a, and point = sum_k v^k.
  std::vector<std::size_t> summands;
};

/// Splits a point of the GT polytope with coordinates in Z/(n-1) along its
/// threshold ideals J_r = {p : x_p >= (n - r)/(n - 1)}, a chain of lattice
/// elements with one k-index element per k.
GtVertex threshold_decomposition(const GtPosets& gt, const QVector& point);

/// Vertices of the GT polytope with their Minkowski decompositions.
/// Vertex enumeration by double description; for n <= 4 also compared with
/// the LP hull of the integer points of the (n - 1)-fold dilation.
std::vector<GtVertex> gt_vertices(const GtPosets& gt);

/// All points of the GT polytope in (Z/(n-1))^P-bar, decomposed. n <= 4.
std::vector<GtVertex> gt_grid_points(const GtPosets& gt);

/// c(w)_v = sum_k w at the k-th summand of v.
QVector lift_c(const GtPosets& gt, const std::vector<GtVertex>& points, const QVector& w);

struct GtPart {
  /// <_i on the reduced triangle.
  Poset order;
  LatticePolytope polytope;
  /// Indices into the GT vertex list lying in the part.
  std::vector<std::size_t> vertices;
  /// Indices into the grid point list lying in the part.
  std::vector<std::size_t> grid;
};

struct GtSubdivision {
  Subdivision ambient;
  std::vector<GtPart> parts;
  std::vector<GtVertex> vertices;
  /// c(w)_v / (n - 1) per GT vertex.
  std::vector<Rational> heights;
  std::vector<GtVertex> grid;
  std::vector<Rational> grid_heights;
  /// Cells of the regular subdivision lifted from the GT vertices alone
  /// (vertex index sets).
  std::vector<std::vector<std::size_t>> vertex_cells;
  /// True iff those cells are exactly the parts. Reported, not certified:
  /// a section part may have a vertex that is not a GT vertex.
  bool vertex_envelope_agrees = false;
};

/// Sections of the ambient parts of the face subdivision by the marking
/// hyperplanes. Certifies: every part is nonempty, full-dimensional and has
/// its vertices on the grid; the ambient envelope f satisfies
/// f(x) = c(w)_x / (n - 1) at every grid point (in particular at every GT
/// vertex); the regular subdivision of the grid points lifted by
/// c(w) / (n - 1) has exactly the parts as cells (n <= 4).
GtSubdivision gt_subdivision(const GtPosets& gt, const MaxCone& cone, const Face& face);

/// (d_1, ..., d_{n-1}): elements strictly between p_kk and p_{k+1,k+1} in
/// the extension. Certifies the part polytope is lattice-isomorphic (after
/// scaling by n - 1) to the product of unit simplices of these dimensions.
std::vector<int> component_shape(const GtPosets& gt, const LinearExtension& ext);

struct Census {
  std::vector<LinearExtension> extensions;
  std::vector<std::vector<int>> shapes;
  /// Shape sorted decreasingly, e.g. "P3xP2xP1" -> count.
  std::map<std::string, int> counts;
};
Census gt_census(const GtPosets& gt);
std::string shape_name(std::vector<int> shape);

/// Integer points of O_{M,(n-1)mu} equal the sums of integer points of the
/// summand polytopes.
bool minkowski_identity_check(const GtPosets& gt);

}  // namespace semitoric

#endif  // SEMITORIC_FLAGGT_HPP
