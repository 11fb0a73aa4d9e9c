#include "semitoric/subdivision.hpp"
#include "semitoric/flaggt.hpp"

#include <gtest/gtest.h>

#include <set>

namespace semitoric {
namespace {

QVector vec(std::initializer_list<long> xs) {
  QVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

std::vector<std::vector<std::size_t>> part_elements(const Subdivision& s) {
  std::vector<std::vector<std::size_t>> out;
  for (const Part& p : s.parts) out.push_back(p.elements);
  std::sort(out.begin(), out.end());
  return out;
}

// Oracle: cells of the lifted order-polytope vertices, independent of the
// extension bookkeeping.
std::vector<std::vector<std::size_t>> lifted_cells(const Lattice& l, const QVector& w) {
  std::vector<QVector> pts;
  std::vector<Rational> heights;
  for (std::size_t a = 0; a < l.size(); ++a) {
    pts.push_back(l.vertex(a));
    heights.push_back(w(static_cast<Index>(a)));
  }
  return regular_subdivision_cells(pts, heights);
}

TEST(SubdivisionTest, SquareExamples) {
  const Lattice l = boolean_lattice(2);
  const Subdivision whole = regular_subdivision(l, vec({0, 0, 0, 0}));
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole.parts[0].order, l.poset());
  EXPECT_EQ(whole.parts[0].simplices.size(), 2u);

  const Subdivision split = regular_subdivision(l, vec({0, -1, -1, 0}));
  ASSERT_EQ(split.size(), 2u);
  std::set<std::vector<Rational>> alphas;
  for (const Part& p : split.parts) {
    EXPECT_EQ(p.elements.size(), 3u);
    EXPECT_EQ(p.simplices.size(), 1u);
    alphas.insert({p.alpha(0), p.alpha(1)});
  }
  EXPECT_EQ(alphas, (std::set<std::vector<Rational>>{{-1, 1}, {1, -1}}));
  EXPECT_THROW(regular_subdivision(l, vec({0, 1, 1, 0})), Error);
}

TEST(SubdivisionTest, ChainIsOneSimplex) {
  const Lattice l = chain_lattice(4);
  const Subdivision s = regular_subdivision(l, vec({3, -1, 4, 1}));
  EXPECT_EQ(s.size(), 1u);
}

TEST(SubdivisionTest, ExtremalFaces) {
  for (std::size_t n : {2, 3}) {
    const MaxCone cone(boolean_lattice(n));
    const Subdivision full = face_subdivision(cone, cone.full_face());
    EXPECT_EQ(full.size(), n == 2 ? 2u : 6u);
    for (const Part& p : full.parts) EXPECT_EQ(p.simplices.size(), 1u);
    const Subdivision apex = face_subdivision(cone, cone.apex());
    ASSERT_EQ(apex.size(), 1u);
    EXPECT_EQ(apex.parts[0].order, cone.lattice().poset());
    EXPECT_EQ(apex.parts[0].elements.size(), cone.lattice().size());
  }
}

TEST(SubdivisionTest, PartsMatchLiftedCells) {
  for (const Lattice& l : {boolean_lattice(2), boolean_lattice(3), grassmann_lattice(2, 4), flag_lattice(3)}) {
    const MaxCone cone(l);
    for (const Face& f : enumerate_faces(cone)) {
      const Subdivision s = face_subdivision(cone, f);
      EXPECT_EQ(part_elements(s), lifted_cells(l, s.weight));
      std::size_t simplices = 0;
      for (const Part& p : s.parts) {
        simplices += p.simplices.size();
        EXPECT_TRUE(is_stronger(p.order, l.poset()));
        EXPECT_EQ(p.elements, sublattice_for_order(l, p.order));
      }
      EXPECT_EQ(simplices, linear_extensions(l.poset()).size());
    }
  }
}

TEST(SubdivisionTest, DistinctFacesGiveDistinctSubdivisions) {
  for (std::size_t n : {2, 3}) {
    const MaxCone cone(boolean_lattice(n));
    const auto faces = enumerate_faces(cone);
    std::vector<Subdivision> subs;
    for (const Face& f : faces) subs.push_back(face_subdivision(cone, f));
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j) EXPECT_FALSE(same_parts(subs[i], subs[j]));
  }
}

TEST(SubdivisionTest, InvariantOnFaces) {
  const MaxCone square(boolean_lattice(2));
  EXPECT_TRUE(subdivision_invariance_check(square, square.apex(), 3));
  EXPECT_TRUE(subdivision_invariance_check(square, square.full_face(), 3));
  const MaxCone cube(boolean_lattice(3));
  for (const Face& f : enumerate_faces(cube)) EXPECT_TRUE(subdivision_invariance_check(cube, f, 5, 7));
}

// Oracle: linear extensions as permutations, adjacent iff they differ by one
// adjacent transposition.
std::size_t transposition_edges(const std::vector<LinearExtension>& exts) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < exts.size(); ++i)
    for (std::size_t j = i + 1; j < exts.size(); ++j) {
      const auto& x = exts[i].order;
      const auto& y = exts[j].order;
      std::vector<std::size_t> diff;
      for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] != y[k]) diff.push_back(k);
      count += diff.size() == 2 && diff[1] == diff[0] + 1;
    }
  return count;
}

TEST(SubdivisionTest, AdjacencyGraphs) {
  EXPECT_EQ(adjacency_graph(boolean_lattice(2)).edges.size(), 1u);
  EXPECT_TRUE(adjacency_graph(chain_lattice(5)).edges.empty());
  const auto cube = adjacency_graph(boolean_lattice(3));
  ASSERT_EQ(cube.extensions.size(), 6u);
  EXPECT_EQ(cube.edges.size(), 6u);
  std::vector<int> degree(6, 0);
  for (const auto& [a, b] : cube.edges) {
    ++degree[a];
    ++degree[b];
  }
  EXPECT_EQ(degree, std::vector<int>(6, 2));
  for (const Lattice& l : {grassmann_lattice(2, 4), flag_lattice(3), flag_lattice(4), boolean_lattice(4)}) {
    const auto g = adjacency_graph(l);
    EXPECT_EQ(g.edges.size(), transposition_edges(g.extensions));
  }
}

TEST(SubdivisionTest, PermutahedronSquare) {
  const MaxCone cone(boolean_lattice(2));
  const LatticePolytope point = generalized_permutahedron(cone, vec({0, 0, 0, 0}));
  ASSERT_EQ(point.vertices.size(), 1u);
  EXPECT_EQ(point.vertices[0], vec({0, 0}));
  const LatticePolytope seg = generalized_permutahedron(cone, vec({0, -1, -1, 0}));
  EXPECT_EQ(seg.vertices, (std::vector<QVector>{vec({-1, 1}), vec({1, -1})}));
}

TEST(SubdivisionTest, PermutahedronCubeIsHexagon) {
  const MaxCone cone(boolean_lattice(3));
  const LatticePolytope hex = generalized_permutahedron(cone, cone.full_face().witness);
  EXPECT_EQ(hex.vertices.size(), 6u);
  EXPECT_EQ(hex.dim(), 2);
  // Base polytope of a submodular function lies in sum x = f(top) - f(bottom).
  for (const auto& v : hex.vertices) EXPECT_EQ(v.sum(), hex.vertices[0].sum());
}

}  // namespace
}  // namespace semitoric
