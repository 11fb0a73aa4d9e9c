// Acceptance suite: one PASS/FAIL line per criterion, with wall time and
// limit. Exits nonzero if any criterion fails, except those named with
// --known-red, which are still printed as FAIL.

#include "semitoric/io.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

namespace semitoric {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct NamedLattice {
  std::string name;
  Lattice lattice;
};

std::vector<NamedLattice> lattices(std::initializer_list<std::string> names) {
  std::vector<NamedLattice> out;
  for (const auto& n : names) {
    if (n == "B2") out.push_back({n, boolean_lattice(2)});
    if (n == "B3") out.push_back({n, boolean_lattice(3)});
    if (n == "gr24") out.push_back({n, grassmann_lattice(2, 4)});
    if (n == "flag3") out.push_back({n, flag_lattice(3)});
    if (n == "flag4") out.push_back({n, flag_lattice(4)});
  }
  return out;
}

Outcome census() {
  const GtPosets gt = gt_poset_iso(4);
  const Json j = to_json(gt_census(gt), gt);
  const std::map<std::string, int> expected{{"P3xP2xP1", 8}, {"P2xP2xP2", 2}, {"P4xP1xP1", 2}};
  const auto counts = j["counts"].get<std::map<std::string, int>>();
  std::ostringstream d;
  d << j["component_count"] << " components " << j["counts"].dump();
  return {j["component_count"] == 12 && counts == expected, d.str()};
}

Outcome cone_minimality() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& [name, l] : lattices({"B2", "B3", "gr24", "flag3", "flag4"})) {
    const MaxCone cone(l);
    std::size_t certified = 0;
    for (std::size_t i = 0; i < cone.facet_count(); ++i) certified += facet_is_irredundant(cone, i);
    const std::size_t diamonds = diamond_pairs(l).size();
    ok &= certified == diamonds && cone.facet_count() == diamonds;
    d << name << " " << certified << "/" << diamonds << "  ";
  }
  return {ok, d.str()};
}

Outcome degeneration_grid() {
  bool ok = true;
  std::size_t rows = 0, passed = 0;
  std::ostringstream d;
  for (const auto& [name, l] : lattices({"B2", "B3", "gr24", "flag3"})) {
    const MaxCone cone(l);
    const auto faces = enumerate_faces(cone);
    for (const Face& f : faces) {
      for (int deg = 1; deg <= 3; ++deg) {
        const DegenerationRow r = degeneration_row(cone, f, deg);
        const bool row_ok = r.pass && Integer(r.dim_initial) == r.dim_intersection &&
                            r.dim_intersection == r.dim_r - r.standard_count && r.contained;
        ++rows;
        passed += row_ok;
        ok &= row_ok;
        if (!row_ok) d << "[" << name << " " << r.face << " l=" << deg << " failed] ";
      }
    }
    d << name << " " << faces.size() << " faces  ";
  }
  d << passed << "/" << rows << " rows";
  return {ok, d.str()};
}

Outcome subdivision_bijection() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& [name, l] : lattices({"B2", "B3"})) {
    const MaxCone cone(l);
    const auto faces = enumerate_faces(cone);
    std::vector<Subdivision> subs;
    for (const Face& f : faces) subs.push_back(face_subdivision(cone, f));
    bool distinct = true;
    for (std::size_t i = 0; i < subs.size(); ++i)
      for (std::size_t j = i + 1; j < subs.size(); ++j) distinct &= !same_parts(subs[i], subs[j]);

    const Subdivision full = face_subdivision(cone, cone.full_face());
    const std::size_t extensions = linear_extensions(l.poset()).size();
    bool staircase = full.size() == extensions;
    for (const Part& p : full.parts) staircase &= p.simplices.size() == 1 && p.elements.size() == l.poset().size() + 1;

    const Subdivision apex = face_subdivision(cone, cone.apex());
    const bool single = apex.size() == 1 && apex.parts[0].order == l.poset() && apex.parts[0].elements.size() == l.size();
    ok &= distinct && staircase && single;
    d << name << ": " << faces.size() << " faces distinct=" << distinct << " full=" << full.size() << "/" << extensions
      << " apex parts=" << apex.size() << "  ";
  }
  return {ok, d.str()};
}

Outcome weight_polytopes() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& [name, l] : lattices({"B2", "B3", "flag3"})) {
    const MaxCone cone(l);
    const auto faces = enumerate_faces(cone);
    const Index size = static_cast<Index>(l.size());
    for (const Face& f : faces) {
      const WeightPolytope wp = weight_polytope(cone, f);
      ok &= wp.polytope.vertices.size() == l.size() && integer_points(wp.polytope).size() == l.size();
      ok &= wp.polytope.dim() == f.dim - 1;
      const Subdivision sub = face_subdivision(cone, f);
      std::set<std::vector<std::size_t>> parts, images;
      for (const Part& p : sub.parts) parts.insert(p.elements);
      const auto dist = distinguished_faces(cone, f);
      for (const auto& df : dist) images.insert(df.elements);
      ok &= dist.size() == sub.size() && images == parts;
    }
    const WeightPolytope simplex = weight_polytope(cone, cone.full_face());
    bool standard = true;
    for (Index a = 0; a < size; ++a) {
      QVector e = QVector::Zero(size);
      e(a) = 1;
      standard &= simplex.points[static_cast<std::size_t>(a)] == e;
    }
    const AffineMap z = zeta(cone);
    const WeightPolytope apex = weight_polytope(cone, cone.apex());
    bool onto = true;
    std::vector<QVector> images;
    for (std::size_t a = 0; a < l.size(); ++a) {
      images.push_back(z(l.vertex(a)));
      onto &= images.back() == apex.points[a];
    }
    onto &= hull_vertices(images) == apex.polytope.vertices;
    ok &= standard && onto;
    d << name << " " << faces.size() << " faces  ";
  }
  return {ok, d.str()};
}

Outcome gt_consistency() {
  bool literal = true;
  std::ostringstream d;
  for (int n : {3, 4}) {
    const GtPosets gt = gt_poset_iso(n);
    const MaxCone cone(gt.lattice);
    const auto faces = enumerate_faces(cone);
    std::size_t agree = 0, vertices = 0, grid = 0;
    std::string first_disagreeing;
    for (const Face& f : faces) {
      // Throws unless the per-vertex identity and the grid-point envelope
      // certificates hold.
      const GtSubdivision s = gt_subdivision(gt, cone, f);
      vertices = s.vertices.size();
      grid = s.grid.size();
      agree += s.vertex_envelope_agrees;
      if (!s.vertex_envelope_agrees && first_disagreeing.empty()) first_disagreeing = face_key(cone, f);
    }
    literal &= agree == faces.size();
    d << "n=" << n << ": identity at " << vertices << " vertices and section = grid envelope (" << grid
      << " points) on " << faces.size() << " faces; vertex-set envelope matches on " << agree << "/" << faces.size();
    if (!first_disagreeing.empty()) d << " (first mismatch: " << first_disagreeing << ")";
    d << "  ";
  }
  return {literal, d.str()};
}

Outcome properties() {
  bool ok = true;
  std::ostringstream d;
  std::mt19937_64 rng(20261014);
  for (const auto& [name, l] : lattices({"B3", "flag3"})) {
    std::uniform_int_distribution<int> degree(1, 5);
    std::uniform_int_distribution<std::size_t> element(0, l.size() - 1);
    int good = 0;
    for (int t = 0; t < 10000; ++t) {
      const int deg = degree(rng);
      std::vector<std::size_t> factors;
      for (int k = 0; k < deg; ++k) factors.push_back(element(rng));
      const Monomial m = Monomial::from_factors(l.size(), factors);
      const Monomial s = straighten(l, m);
      const auto f = s.factors();
      bool chain = true;
      for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j) chain &= l.comparable(f[i], f[j]);
      good += s.degree() == deg && exponent_sum(l, s) == exponent_sum(l, m) && chain;
    }
    ok &= good == 10000;
    d << "straighten " << name << " " << good << "/10000  ";
  }
  for (const auto& [name, l] : lattices({"B2", "B3", "gr24", "flag3", "flag4"})) {
    const AdjacencyGraph g = adjacency_graph(l);  // certifies the three characterizations agree
    d << name << " " << g.edges.size() << " edges  ";
  }
  ok &= adjacency_graph(boolean_lattice(3)).edges.size() == 6;

  const MaxCone cube(boolean_lattice(3));
  const QVector w = cube.full_face().witness;
  bool submodular = true;
  const Lattice& l = cube.lattice();
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      const auto at = [&](std::size_t x) { return -w(static_cast<Index>(x)); };
      submodular &= at(a) + at(b) >= at(l.join(a, b)) + at(l.meet(a, b));
    }
  const LatticePolytope perm = generalized_permutahedron(cube, w);
  ok &= submodular && perm.vertices.size() == 6;
  d << "B3 permutahedron " << perm.vertices.size() << " vertices, -w submodular=" << submodular;
  return {ok, d.str()};
}

}  // namespace
}  // namespace semitoric

int main(int argc, char** argv) {
  using namespace semitoric;
  std::set<int> known_red;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--known-red") == 0 && i + 1 < argc) known_red.insert(std::atoi(argv[++i]));
  }
  struct Criterion {
    int id;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{{1, 10, census},           {2, 30, cone_minimality},
                                        {3, 300, degeneration_grid}, {4, 60, subdivision_bijection},
                                        {5, 120, weight_polytopes},  {6, 120, gt_consistency},
                                        {7, 300, properties}};
  int unexpected = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.limit);
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << " (" << timing << ") " << o.detail
              << (!pass && known_red.count(c.id) ? " [known red]" : "") << std::endl;
    if (!pass && !known_red.count(c.id)) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
