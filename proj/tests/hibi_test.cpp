#include "semitoric/hibi.hpp"
#include "semitoric/flaggt.hpp"
#include "semitoric/subdivision.hpp"

#include <gtest/gtest.h>

#include <random>

namespace semitoric {
namespace {

Monomial mono(const Lattice& l, std::initializer_list<const char*> labels) {
  std::vector<std::size_t> f;
  for (const char* s : labels) f.push_back(l.index_of(s));
  return Monomial::from_factors(l.size(), f);
}

Poset grid2x2() {
  return Poset::from_cover_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

// Brute force: standard monomials of degree l by testing every monomial.
std::size_t brute_standard(const Lattice& l, int degree) {
  std::size_t c = 0;
  for (const Monomial& m : monomials_of_degree(l.size(), degree)) c += is_standard(l, m);
  return c;
}

TEST(HibiGeneratorsTest, Examples) {
  EXPECT_TRUE(hibi_generators(chain_lattice(4)).empty());
  const Lattice b2 = boolean_lattice(2);
  const auto g = hibi_generators(b2);
  ASSERT_EQ(g.size(), 1u);
  Polynomial expected;
  expected.add(mono(b2, {"{1}", "{2}"}), 1);
  expected.add(mono(b2, {"{}", "{1,2}"}), -1);
  EXPECT_EQ(g[0], expected);
  EXPECT_EQ(to_text(b2, g[0]), "-1 * X[{}] * X[{1,2}] + 1 * X[{1}] * X[{2}]");

  const Lattice f3 = flag_lattice(3);
  const auto h = hibi_generators(f3);
  ASSERT_EQ(h.size(), 1u);
  Polynomial flag;
  flag.add(mono(f3, {"a1", "a23"}), 1);
  flag.add(mono(f3, {"a2", "a13"}), -1);
  EXPECT_EQ(h[0], flag);
}

TEST(StraightenTest, Examples) {
  const Lattice b2 = boolean_lattice(2);
  EXPECT_EQ(straighten(b2, mono(b2, {"{1}", "{2}"})), mono(b2, {"{}", "{1,2}"}));
  const Monomial standard = mono(b2, {"{}", "{1}", "{1}", "{1,2}"});
  EXPECT_EQ(straighten(b2, standard), standard);
  const Lattice g = grassmann_lattice(2, 4);
  EXPECT_EQ(straighten(g, mono(g, {"a14", "a23"})), mono(g, {"a13", "a24"}));
}

TEST(StraightenTest, RandomMonomials) {
  std::mt19937 rng(2024);
  for (const Lattice& l : {boolean_lattice(3), flag_lattice(3)}) {
    // Oracle: the unique multichain with each degree and exponent sum, by
    // enumeration.
    std::map<std::pair<int, std::vector<int>>, Monomial> chain_of_sum;
    for (int d = 0; d <= 5; ++d)
      for (const Monomial& m : monomials_of_degree(l.size(), d))
        if (is_standard(l, m)) ASSERT_TRUE(chain_of_sum.emplace(std::pair{d, exponent_sum(l, m)}, m).second);
    std::uniform_int_distribution<std::size_t> element(0, l.size() - 1);
    std::uniform_int_distribution<int> degree(0, 5);
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<std::size_t> f(static_cast<std::size_t>(degree(rng)));
      for (auto& a : f) a = element(rng);
      const Monomial m = Monomial::from_factors(l.size(), f);
      const Monomial s = straighten(l, m);
      ASSERT_TRUE(is_standard(l, s));
      ASSERT_EQ(s.degree(), m.degree());
      ASSERT_EQ(exponent_sum(l, s), exponent_sum(l, m));
      ASSERT_EQ(s, chain_of_sum.at(std::pair{m.degree(), exponent_sum(l, m)}));
    }
  }
}

TEST(StandardMonomialTest, Counts) {
  for (const Lattice& l : {boolean_lattice(2), boolean_lattice(3), flag_lattice(3), grassmann_lattice(2, 4)}) {
    EXPECT_EQ(standard_monomial_count(l, 0), 1);
    EXPECT_EQ(standard_monomial_count(l, 1), Integer(l.size()));
    for (int d = 2; d <= 4; ++d) EXPECT_EQ(standard_monomial_count(l, d), Integer(brute_standard(l, d)));
  }
  EXPECT_EQ(standard_monomial_count(boolean_lattice(2), 2), 9);
  EXPECT_EQ(standard_monomial_count(chain_lattice(3), 2), 6);
  EXPECT_THROW(standard_monomial_count(boolean_lattice(2), 7), Error);
  EXPECT_THROW(standard_monomial_count(flag_lattice(4), 2), Error);
}

TEST(IdealDimTest, Examples) {
  EXPECT_EQ(ideal_dim(hibi_generators(boolean_lattice(2)), 2), 1u);
  EXPECT_EQ(ideal_dim({}, 3), 0u);
  EXPECT_EQ(ideal_dim(hibi_generators(boolean_lattice(2)), 1), 0u);
  // Every Hibi binomial has its own incomparable monomial, so the nine
  // binomials of the cube are independent: 36 - 27 standard monomials.
  const Lattice b3 = boolean_lattice(3);
  EXPECT_EQ(ideal_dim(hibi_generators(b3), 2), 9u);
  EXPECT_EQ(graded_dimension(8, 2) - Integer(brute_standard(b3, 2)), 9);
}

TEST(IdealDimTest, HilbertFunction) {
  // Standard monomials are a basis of the quotient.
  for (const Lattice& l : {boolean_lattice(3), flag_lattice(3), grassmann_lattice(2, 4), Lattice(birkhoff(grid2x2()))}) {
    const auto g = hibi_generators(l);
    for (int d = 0; d <= 3; ++d)
      EXPECT_EQ(Integer(ideal_dim(g, d)), graded_dimension(l.size(), d) - Integer(brute_standard(l, d)));
  }
}

TEST(InitialIdealTest, Examples) {
  const Lattice b2 = boolean_lattice(2);
  const auto g = hibi_generators(b2);
  QVector w(4);
  w << 0, -1, -1, 0;
  const InitialIdeal split = initial_ideal_dim(g, w, 2);
  ASSERT_EQ(split.dim, 1u);
  Polynomial expected;
  expected.add(mono(b2, {"{1}", "{2}"}), 1);
  EXPECT_EQ(split.forms[0], expected);

  const InitialIdeal tie = initial_ideal_dim(g, QVector::Zero(4), 2);
  ASSERT_EQ(tie.dim, 1u);
  EXPECT_EQ(tie.forms[0].terms.size(), 2u);

  const Lattice b3 = boolean_lattice(3);
  const auto g3 = hibi_generators(b3);
  const InitialIdeal uniform = initial_ideal_dim(g3, QVector::Constant(8, Rational(5)), 3);
  EXPECT_EQ(uniform.dim, ideal_dim(g3, 3));
  EXPECT_EQ(ideal_dim(uniform.forms, 3), uniform.dim);
}

TEST(InitialIdealTest, InteriorWeightGivesMonomialIdeal) {
  const MaxCone cone(boolean_lattice(3));
  const auto g = hibi_generators(cone.lattice());
  const InitialIdeal init = initial_ideal_dim(g, cone.full_face().witness, 3);
  // Forms may tie two non-standard monomials, but only non-standard
  // monomials occur, and there are exactly as many forms as such monomials.
  for (const auto& f : init.forms)
    for (const auto& [m, c] : f.terms) EXPECT_FALSE(is_standard(cone.lattice(), m));
  EXPECT_EQ(Integer(init.dim), graded_dimension(8, 3) - standard_monomial_count(cone.lattice(), 3));
}

TEST(ComponentIdealTest, Examples) {
  const Lattice b2 = boolean_lattice(2);
  const auto whole = component_ideal(b2, b2.poset());
  EXPECT_EQ(whole, hibi_generators(b2));
  const Poset chain = Poset::from_cover_relations(b2.poset().labels(), {{"1", "2"}});
  const auto c = component_ideal(b2, chain);
  ASSERT_EQ(c.size(), 1u);
  Polynomial x2;
  x2.add(mono(b2, {"{2}"}), 1);
  EXPECT_EQ(c[0], x2);

  const Lattice grid = birkhoff(grid2x2());
  const auto ext = linear_extensions(grid.poset()).front();
  const auto gi = component_ideal(grid, ext.as_poset(grid.poset()));
  ASSERT_EQ(gi.size(), 1u);
  EXPECT_EQ(gi[0].terms.begin()->first.degree(), 1);
  EXPECT_THROW(component_ideal(boolean_lattice(2), Poset::antichain({"x", "y"})), Error);
}

TEST(IntersectionDimTest, Examples) {
  const Lattice b2 = boolean_lattice(2);
  std::vector<Poset> lins;
  for (const auto& e : linear_extensions(b2.poset())) lins.push_back(e.as_poset(b2.poset()));
  EXPECT_EQ(intersection_dim(b2, lins, 2), 1);
  const auto s = signature_count(b2, lins, 2);
  EXPECT_EQ(s.dim_r, 10);
  EXPECT_EQ(s.signatures, 9u);
  EXPECT_TRUE(s.samesum);
  EXPECT_EQ(intersection_dim(b2, {b2.poset()}, 2), 1);
}

TEST(IntersectionDimTest, WholeOrderIsHibiIdeal) {
  for (const Lattice& l : {boolean_lattice(3), flag_lattice(3), grassmann_lattice(2, 4)})
    for (int d = 0; d <= 3; ++d)
      EXPECT_EQ(intersection_dim(l, {l.poset()}, d), Integer(ideal_dim(hibi_generators(l), d)));
}

// Oracle for the signature rank: compare with the rank of the full
// evaluation matrix (rows = monomials, columns = (part, exponent sum)).
TEST(IntersectionDimTest, SignatureRankMatchesEvaluationRank) {
  const MaxCone cone(boolean_lattice(3));
  const Lattice& l = cone.lattice();
  for (const Face& f : enumerate_faces(cone)) {
    std::vector<Poset> orders;
    for (const Part& p : face_subdivision(cone, f).parts) orders.push_back(p.order);
    std::vector<std::vector<std::size_t>> members;
    for (const auto& o : orders) members.push_back(sublattice_for_order(l, o));
    const int d = 2;
    const auto mons = monomials_of_degree(l.size(), d);
    std::map<std::pair<std::size_t, std::vector<int>>, Index> column;
    std::vector<std::vector<std::pair<std::size_t, std::vector<int>>>> images;
    for (const auto& m : mons) {
      images.emplace_back();
      for (std::size_t i = 0; i < members.size(); ++i) {
        bool in = true;
        for (std::size_t a : m.factors())
          in = in && std::binary_search(members[i].begin(), members[i].end(), a);
        if (!in) continue;
        auto key = std::pair{i, exponent_sum(l, m)};
        column.emplace(key, static_cast<Index>(column.size()));
        images.back().push_back(key);
      }
    }
    QMatrix eval = QMatrix::Zero(static_cast<Index>(mons.size()), static_cast<Index>(column.size()));
    for (std::size_t r = 0; r < mons.size(); ++r)
      for (const auto& key : images[r]) eval(static_cast<Index>(r), column.at(key)) = 1;
    EXPECT_EQ(intersection_dim(l, orders, d), graded_dimension(l.size(), d) - Integer(rank(eval)));
  }
}

TEST(DegenerationTest, SmallGrid) {
  for (const Lattice& l : {boolean_lattice(2), flag_lattice(3), grassmann_lattice(2, 4)}) {
    const MaxCone cone(l);
    for (const Face& f : enumerate_faces(cone))
      for (int d = 0; d <= 3; ++d) {
        const DegenerationRow row = degeneration_row(cone, f, d);
        EXPECT_TRUE(row.pass) << to_csv(row);
      }
  }
}

TEST(DegenerationTest, Csv) {
  const MaxCone cone(boolean_lattice(2));
  const DegenerationRow row = degeneration_row(cone, cone.full_face(), 2);
  EXPECT_EQ(to_csv(row), "full,2,10,1,1,9,true");
  const DegenerationRow apex = degeneration_row(cone, cone.apex(), 2);
  EXPECT_EQ(to_csv(apex), "apex,2,10,1,1,9,true");
  DegenerationRow quoted = apex;
  quoted.face = "{1,2}/{1,3}";
  EXPECT_EQ(to_csv(quoted), "\"{1,2}/{1,3}\",2,10,1,1,9,true");
  EXPECT_EQ(degeneration_csv_header(), "face_key,l,dimR,dim_in,dim_cap,standard_count,pass");
}

}  // namespace
}  // namespace semitoric
