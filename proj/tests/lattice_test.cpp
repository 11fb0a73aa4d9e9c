#include "semitoric/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

namespace semitoric {
namespace {

Poset grid2x2() {
  return Poset::from_cover_relations({"a", "b", "c", "d"},
                                     {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

Poset random_poset(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 3 == 0) covers.emplace_back(labels[i], labels[j]);
  return Poset::from_cover_relations(labels, covers);
}

using Table = std::vector<std::vector<std::size_t>>;

void tables_of(const Lattice& l, Table& join, Table& meet) {
  join.assign(l.size(), std::vector<std::size_t>(l.size()));
  meet = join;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      join[a][b] = l.join(a, b);
      meet[a][b] = l.meet(a, b);
    }
}

// Oracle: same-height incomparable pairs whose join has height one more.
std::size_t brute_diamonds(const Lattice& l) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      if (l.leq(a, b) || l.leq(b, a)) continue;
      if (popcount(l.ideal(a)) != popcount(l.ideal(b))) continue;
      if (popcount(l.ideal(l.join(a, b))) == popcount(l.ideal(a)) + 1) ++count;
    }
  return count;
}

TEST(LatticeTest, Birkhoff) {
  const Lattice b2 = boolean_lattice(2);
  EXPECT_EQ(b2.size(), 4U);
  EXPECT_EQ(b2.label(0), "{}");
  EXPECT_EQ(b2.label(3), "{1,2}");
  EXPECT_EQ(chain_lattice(4).size(), 4U);
  const Lattice g = birkhoff(grid2x2());
  EXPECT_EQ(g.size(), 6U);
}

TEST(LatticeTest, HeightAndIdealSizes) {
  for (unsigned seed = 0; seed < 10; ++seed) {
    const Lattice l = birkhoff(random_poset(2 + seed % 4, seed));
    // Maximal chains have |P| + 1 elements.
    for (const auto& c : maximal_chains(l).chains) {
      EXPECT_EQ(c.size(), l.poset().size() + 1);
      for (std::size_t i = 0; i < c.size(); ++i) EXPECT_EQ(l.height(c[i]), static_cast<int>(i));
    }
  }
}

TEST(LatticeTest, FromTablesBoolean) {
  Table join, meet;
  const Lattice b2 = boolean_lattice(2);
  tables_of(b2, join, meet);
  const Lattice back = from_tables(b2.labels(), join, meet);
  EXPECT_EQ(back.poset().size(), 2U);
  EXPECT_FALSE(back.poset().less(0, 1));
  EXPECT_FALSE(back.poset().less(1, 0));
}

TEST(LatticeTest, FromTablesDiamondM3IsNotDistributive) {
  // 0 < x, y, z < 1.
  const std::vector<std::string> e = {"0", "x", "y", "z", "1"};
  Table join(5, std::vector<std::size_t>(5)), meet = join;
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      if (a == b) join[a][b] = meet[a][b] = a;
      else if (a == 0 || b == 0) { join[a][b] = a + b; meet[a][b] = 0; }
      else if (a == 4 || b == 4) { join[a][b] = 4; meet[a][b] = a == 4 ? b : a; }
      else { join[a][b] = 4; meet[a][b] = 0; }
    }
  try {
    from_tables(e, join, meet);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotDistributive);
  }
}

TEST(LatticeTest, FromTablesRejectsNonLattice) {
  Table join = {{0, 1}, {0, 1}};
  Table meet = {{0, 0}, {0, 1}};
  try {
    from_tables({"a", "b"}, join, meet);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotALattice);
  }
}

TEST(LatticeTest, FromTablesRoundTrip) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    const Poset p = random_poset(1 + seed % 5, seed + 50);
    const Lattice l = birkhoff(p);
    Table join, meet;
    tables_of(l, join, meet);
    const Lattice back = from_tables(l.labels(), join, meet);
    EXPECT_TRUE(find_isomorphism(back.poset(), p).has_value()) << "seed " << seed;
    EXPECT_TRUE(isomorphic(back, l));
  }
}

TEST(LatticeTest, FromTablesGridPoset) {
  const Lattice g = birkhoff(grid2x2());
  Table join, meet;
  tables_of(g, join, meet);
  const Lattice back = from_tables(g.labels(), join, meet);
  EXPECT_TRUE(find_isomorphism(back.poset(), grid2x2()).has_value());
}

TEST(LatticeTest, DiamondPairs) {
  const Lattice b2 = boolean_lattice(2);
  const auto d = diamond_pairs(b2);
  ASSERT_EQ(d.size(), 1U);
  EXPECT_EQ(b2.label(d[0].a), "{1}");
  EXPECT_EQ(b2.label(d[0].b), "{2}");
  EXPECT_EQ(diamond_pairs(boolean_lattice(3)).size(), 6U);
  EXPECT_EQ(diamond_pairs(chain_lattice(5)).size(), 0U);
  for (unsigned seed = 0; seed < 20; ++seed) {
    const Lattice l = birkhoff(random_poset(2 + seed % 5, seed + 7));
    EXPECT_EQ(diamond_pairs(l).size(), brute_diamonds(l));
    for (const auto& p : diamond_pairs(l)) {
      EXPECT_EQ(l.vertex(p.a) + l.vertex(p.b), l.vertex(p.meet) + l.vertex(p.join));
      EXPECT_TRUE(l.covers(p.a, p.meet) && l.covers(p.b, p.meet));
    }
  }
}

TEST(LatticeTest, JoinOfIrreducibles) {
  const Lattice l = birkhoff(random_poset(5, 3));
  for (std::size_t a = 0; a < l.size(); ++a) {
    std::size_t acc = l.bottom();
    for (std::size_t p : elements_of(l.ideal(a))) acc = l.join(acc, l.element_of(l.poset().principal_ideal(p)));
    EXPECT_EQ(acc, a);
  }
}

TEST(LatticeTest, MaximalChains) {
  const auto b2 = maximal_chains(boolean_lattice(2));
  EXPECT_EQ(b2.chains.size(), 2U);
  EXPECT_EQ(maximal_chains(chain_lattice(4)).chains.size(), 1U);
}

TEST(LatticeTest, Sublattice) {
  const Lattice b2 = boolean_lattice(2);
  EXPECT_EQ(sublattice_for_order(b2, b2.poset()).size(), 4U);
  const Poset chain = Poset::chain({"1", "2"});
  const auto m = sublattice_for_order(b2, chain);
  ASSERT_EQ(m.size(), 3U);
  EXPECT_EQ(b2.label(m[0]), "{}");
  EXPECT_EQ(b2.label(m[1]), "{1}");
  EXPECT_EQ(b2.label(m[2]), "{1,2}");
  const Lattice g = birkhoff(grid2x2());
  const auto ext = linear_extensions(grid2x2()).front();
  EXPECT_EQ(sublattice_for_order(g, ext.as_poset(grid2x2())).size(), 5U);
  const BoolMatrix flipped = ext.as_poset(grid2x2()).relation().transpose();
  try {
    sublattice_for_order(g, Poset(grid2x2().labels(), flipped));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::NotStronger);
  }
}

TEST(LatticeTest, SublatticeIsClosed) {
  const Poset p = random_poset(5, 11);
  const Lattice l = birkhoff(p);
  for (const auto& ext : linear_extensions(p)) {
    const auto m = sublattice_for_order(l, ext.as_poset(p));
    for (std::size_t a : m)
      for (std::size_t b : m) {
        EXPECT_TRUE(std::binary_search(m.begin(), m.end(), l.join(a, b)));
        EXPECT_TRUE(std::binary_search(m.begin(), m.end(), l.meet(a, b)));
      }
  }
}

}  // namespace
}  // namespace semitoric
