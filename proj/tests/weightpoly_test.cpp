#include "semitoric/weightpoly.hpp"
#include "semitoric/flaggt.hpp"

#include <gtest/gtest.h>

#include <random>

namespace semitoric {
namespace {

std::vector<Lattice> test_lattices() {
  return {boolean_lattice(2), boolean_lattice(3), flag_lattice(3), grassmann_lattice(2, 4), chain_lattice(3)};
}

QVector vec(std::initializer_list<long> xs) {
  QVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = Rational(x);
  return v;
}

TEST(WeightPolytopeTest, FullFaceIsStandardSimplex) {
  for (const Lattice& l : test_lattices()) {
    const MaxCone cone(l);
    const WeightPolytope wp = weight_polytope(cone, cone.full_face());
    const Index n = static_cast<Index>(l.size());
    EXPECT_EQ(wp.polytope.dim(), n - 1);
    for (Index a = 0; a < n; ++a) {
      QVector e = QVector::Zero(n);
      e(a) = 1;
      EXPECT_EQ(wp.points[static_cast<std::size_t>(a)], e);
    }
  }
}

TEST(WeightPolytopeTest, SquareApex) {
  const MaxCone cone(boolean_lattice(2));
  const WeightPolytope wp = weight_polytope(cone, cone.apex());
  EXPECT_EQ(wp.polytope.vertices.size(), 4u);
  EXPECT_EQ(wp.polytope.dim(), 2);
  EXPECT_EQ(integer_points(wp.polytope).size(), 4u);
  EXPECT_EQ(wp.polytope.hyperplanes.size(), 4u);
}

TEST(WeightPolytopeTest, InvariantsOnAllFaces) {
  for (const Lattice& l : test_lattices()) {
    const MaxCone cone(l);
    for (const Face& f : enumerate_faces(cone)) {
      const WeightPolytope wp = weight_polytope(cone, f);
      EXPECT_EQ(wp.polytope.vertices.size(), l.size());
      EXPECT_EQ(integer_points(wp.polytope).size(), l.size());
      EXPECT_EQ(wp.polytope.dim(), f.dim - 1);
    }
  }
}

TEST(ProjectionTest, IdentityAndSquare) {
  const MaxCone cone(boolean_lattice(2));
  const Face full = cone.full_face(), apex = cone.apex();
  EXPECT_EQ(projection_matrix(cone, apex, apex), ZMatrix::Identity(3, 3));
  const WeightPolytope k = weight_polytope(cone, full), f0 = weight_polytope(cone, apex);
  for (std::size_t a = 0; a < 4; ++a) EXPECT_EQ(project(cone, full, apex, k.points[a]), f0.points[a]);
  EXPECT_THROW(projection_matrix(cone, apex, full), Error);
}

TEST(ProjectionTest, FunctorialityAndImages) {
  for (const Lattice& l : {boolean_lattice(3), flag_lattice(3)}) {
    const MaxCone cone(l);
    const auto faces = enumerate_faces(cone);
    std::vector<WeightPolytope> wps;
    for (const Face& f : faces) wps.push_back(weight_polytope(cone, f));
    const Face apex = cone.apex();
    const QMatrix k_to_apex = to_rational(projection_matrix(cone, cone.full_face(), apex));
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const QMatrix via = to_rational(projection_matrix(cone, faces[i], apex)) *
                          to_rational(projection_matrix(cone, cone.full_face(), faces[i]));
      EXPECT_EQ(via, k_to_apex);
      for (std::size_t j = 0; j < faces.size(); ++j) {
        const bool sub = std::includes(faces[j].tight.begin(), faces[j].tight.end(), faces[i].tight.begin(),
                                       faces[i].tight.end());
        if (!sub) {
          EXPECT_THROW(projection_matrix(cone, faces[i], faces[j]), Error);
          continue;
        }
        const QMatrix x = to_rational(projection_matrix(cone, faces[i], faces[j]));
        std::vector<QVector> images;
        for (const auto& v : wps[i].polytope.vertices) images.push_back(x * v);
        EXPECT_EQ(hull_vertices(images), wps[j].polytope.vertices);
      }
    }
  }
}

TEST(ZetaTest, Examples) {
  for (const Lattice& l : test_lattices()) {
    const MaxCone cone(l);
    const AffineMap z = zeta(cone);
    const WeightPolytope apex = weight_polytope(cone, cone.apex());
    for (std::size_t a = 0; a < l.size(); ++a) {
      EXPECT_EQ(z(l.vertex(a)), apex.points[a]);
      EXPECT_EQ(*zeta_inverse(z, apex.points[a]), l.vertex(a));
    }
  }
  const MaxCone square(boolean_lattice(2));
  const AffineMap z = zeta(square);
  EXPECT_EQ(z.linear.rows(), 3);
  EXPECT_EQ(z.linear.cols(), 2);
  EXPECT_FALSE(zeta_inverse(z, z.offset + QVector::Ones(3) * Rational(1, 3)).has_value() &&
               rank(z.linear) < 2);
}

TEST(ChainSimplexTest, Examples) {
  const MaxCone chain(chain_lattice(4));
  const auto whole = chain_simplex(chain, linear_extensions(chain.lattice().poset()).front());
  EXPECT_EQ(whole.elements, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(whole.polytope.dim(), 3);

  const Lattice b2 = boolean_lattice(2);
  const MaxCone square(b2);
  const auto ext = linear_extensions(b2.poset()).front();
  ASSERT_EQ(ext.order, (std::vector<std::size_t>{0, 1}));
  const auto first = chain_simplex(square, ext);
  EXPECT_EQ(first.elements, (std::vector<std::size_t>{b2.index_of("{}"), b2.index_of("{1}"), b2.index_of("{1,2}")}));

  const MaxCone flag(flag_lattice(3));
  for (const auto& e : linear_extensions(flag.lattice().poset())) {
    const auto s = chain_simplex(flag, e);
    EXPECT_EQ(s.elements.size(), 5u);
    EXPECT_EQ(s.polytope.dim(), 4);
  }
}

TEST(DistinguishedFacesTest, Extremal) {
  for (const Lattice& l : test_lattices()) {
    const MaxCone cone(l);
    const auto apex = distinguished_faces(cone, cone.apex());
    ASSERT_EQ(apex.size(), 1u);
    EXPECT_EQ(apex[0].elements.size(), l.size());
    EXPECT_EQ(apex[0].functional.size(), 0);

    const auto full = distinguished_faces(cone, cone.full_face());
    std::vector<std::vector<std::size_t>> got, chains;
    for (const auto& f : full) got.push_back(f.elements);
    for (const auto& e : linear_extensions(l.poset())) chains.push_back(chain_simplex(cone, e).elements);
    std::sort(got.begin(), got.end());
    std::sort(chains.begin(), chains.end());
    EXPECT_EQ(got, chains);
  }
}

TEST(DistinguishedFacesTest, SquareTriangles) {
  const MaxCone cone(boolean_lattice(2));
  const auto faces = distinguished_faces(cone, cone.full_face());
  ASSERT_EQ(faces.size(), 2u);
  std::vector<std::size_t> shared;
  std::set_intersection(faces[0].elements.begin(), faces[0].elements.end(), faces[1].elements.begin(),
                        faces[1].elements.end(), std::back_inserter(shared));
  EXPECT_EQ(shared, (std::vector<std::size_t>{0, 3}));
  for (const auto& f : faces) EXPECT_EQ(f.polytope.vertices.size(), 3u);
}

TEST(DistinguishedFacesTest, AllFacesPartition) {
  for (const Lattice& l : {boolean_lattice(3), flag_lattice(3), grassmann_lattice(2, 4)}) {
    const MaxCone cone(l);
    for (const Face& f : enumerate_faces(cone)) {
      const auto faces = distinguished_faces(cone, f);
      const WeightPolytope wp = weight_polytope(cone, f);
      EXPECT_EQ(faces.size(), face_subdivision(cone, f).size());
      for (const auto& d : faces) {
        if (d.functional.size() == 0) continue;
        for (std::size_t a = 0; a < l.size(); ++a) {
          const Rational v = d.functional.dot(wp.points[a]);
          const bool in = std::binary_search(d.elements.begin(), d.elements.end(), a);
          EXPECT_TRUE(in ? v == 0 : v >= 1);
        }
      }
    }
  }
}

std::vector<QVector> order_polytope_vertices(const Poset& p) {
  std::vector<QVector> out;
  for (ElementSet s : order_ideals(p)) {
    QVector v = QVector::Zero(static_cast<Index>(p.size()));
    for (std::size_t e : elements_of(s)) v(static_cast<Index>(e)) = 1;
    out.push_back(v);
  }
  return out;
}

TEST(NormalityTest, OrderPolytopesAndSimplex) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<std::string> labels{"a", "b", "c", "d"};
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (rng() % 2) covers.emplace_back(labels[i], labels[j]);
    const Poset p = Poset::from_cover_relations(labels, covers);
    const auto r = normality_probe(polytope_from_vertices(order_polytope_vertices(p)), 3);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.checked_up_to, 3);
  }
  const auto simplex = polytope_from_vertices({vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  EXPECT_TRUE(normality_probe(simplex, 4).pass);
  EXPECT_THROW(normality_probe(simplex, 5), Error);
}

TEST(NormalityTest, DetectsReeveTetrahedron) {
  const auto reeve = polytope_from_vertices({vec({0, 0, 0}), vec({1, 0, 0}), vec({0, 1, 0}), vec({1, 1, 2})});
  const auto r = normality_probe(reeve, 3);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.first_failure, 2);
}

TEST(NormalityTest, WeightPolytopesOfSmallLattices) {
  for (const Lattice& l : {boolean_lattice(2), boolean_lattice(3)}) {
    const MaxCone cone(l);
    for (const Face& f : enumerate_faces(cone)) {
      const auto r = normality_probe(weight_polytope(cone, f).polytope, 3);
      EXPECT_TRUE(r.pass) << face_key(cone, f);
    }
  }
}

}  // namespace
}  // namespace semitoric
