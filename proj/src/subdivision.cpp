#include "semitoric/subdivision.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace semitoric {

namespace {

struct LexLess {
  bool operator()(const QVector& a, const QVector& b) const { return lex_less(a, b); }
};

std::vector<std::size_t> chain_of(const Lattice& l, const LinearExtension& ext) {
  std::vector<std::size_t> chain;
  for (ElementSet s : ext.prefixes()) chain.push_back(l.element_of(s));
  return chain;
}

}  // namespace

std::size_t Subdivision::part_of(const LinearExtension& ext) const {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (std::binary_search(parts[i].simplices.begin(), parts[i].simplices.end(), ext)) return i;
  }
  throw Error(ErrorKind::BadParams, "extension not found in any part");
}

bool same_parts(const Subdivision& x, const Subdivision& y) {
  if (x.size() != y.size()) return false;
  auto key = [](const Subdivision& s) {
    std::set<std::vector<std::size_t>> out;
    for (const auto& p : s.parts) out.insert(p.elements);
    return out;
  };
  if (key(x) != key(y)) return false;
  for (const auto& p : x.parts) {
    auto it = std::find_if(y.parts.begin(), y.parts.end(),
                           [&](const Part& q) { return q.elements == p.elements; });
    if (!(it->order == p.order)) return false;
  }
  return true;
}

Subdivision regular_subdivision(const MaxCone& cone, const QVector& w) {
  face_of(cone, w);  // NotInCone check
  const Lattice& l = cone.lattice();
  const Poset& poset = l.poset();
  const Index n = static_cast<Index>(poset.size());
  const Rational base = w(static_cast<Index>(l.bottom()));

  Subdivision sub;
  sub.weight = w;
  std::map<QVector, std::size_t, LexLess> by_alpha;
  LinearExtensionStream stream(poset);
  while (auto ext = stream.next()) {
    const auto chain = chain_of(l, *ext);
    QVector alpha(n);
    for (std::size_t i = 0; i < ext->order.size(); ++i) {
      alpha(static_cast<Index>(ext->order[i])) =
          w(static_cast<Index>(chain[i + 1])) - w(static_cast<Index>(chain[i]));
    }
    auto [it, inserted] = by_alpha.emplace(alpha, sub.parts.size());
    if (inserted) {
      Part p;
      p.alpha = alpha;
      p.constant = base;
      sub.parts.push_back(std::move(p));
    }
    sub.parts[it->second].simplices.push_back(std::move(*ext));
  }

  for (Part& p : sub.parts) {
    std::vector<Poset> orders;
    std::set<std::size_t> union_of_chains;
    for (const auto& ext : p.simplices) {
      orders.push_back(ext.as_poset(poset));
      for (std::size_t a : chain_of(l, ext)) union_of_chains.insert(a);
    }
    p.order = intersect_orders(orders);
    p.elements = sublattice_for_order(l, p.order);
    certify(std::vector<std::size_t>(union_of_chains.begin(), union_of_chains.end()) == p.elements,
            "merged simplices do not cover exactly the vertices of O(P,<_i)");
    for (std::size_t a = 0; a < l.size(); ++a) {
      const Rational value = p(l.vertex(a));
      const Rational wa = w(static_cast<Index>(a));
      if (std::binary_search(p.elements.begin(), p.elements.end(), a)) {
        certify(value == wa, "affine piece does not interpolate w on its part");
      } else {
        certify(value > wa, "affine piece does not overestimate w off its part");
      }
    }
  }
  return sub;
}

Subdivision regular_subdivision(const Lattice& lattice, const QVector& w) {
  return regular_subdivision(MaxCone(lattice), w);
}

Subdivision face_subdivision(const MaxCone& cone, const Face& face) {
  Subdivision sub = regular_subdivision(cone, sample_relative_interior(cone, face));
  const Lattice& l = cone.lattice();
  std::map<LinearExtension, std::size_t> part;
  for (std::size_t i = 0; i < sub.parts.size(); ++i)
    for (const auto& e : sub.parts[i].simplices) part[e] = i;
  for (std::size_t d = 0; d < cone.facet_count(); ++d) {
    const auto& pr = cone.pairs()[d];
    const bool tight = std::binary_search(face.tight.begin(), face.tight.end(), d);
    std::size_t crossings = 0;
    for (const auto& [ext, i] : part) {
      const auto chain = chain_of(l, ext);
      const std::size_t h = static_cast<std::size_t>(l.height(pr.meet));
      if (h + 2 >= chain.size() || chain[h] != pr.meet || chain[h + 1] != pr.a || chain[h + 2] != pr.join) continue;
      LinearExtension other = ext;
      std::swap(other.order[h], other.order[h + 1]);
      certify(chain_of(l, other)[h + 1] == pr.b, "swapped chain does not pass through the partner");
      certify((part.at(other) == i) == tight, "tightness of a pair disagrees with the merge across it");
      ++crossings;
    }
    certify(crossings > 0, "diamond pair without adjacent staircase simplices");
  }
  return sub;
}

bool subdivision_invariance_check(const MaxCone& cone, const Face& face, int trials, std::uint64_t seed) {
  if (trials < 2) throw Error(ErrorKind::BadParams, "at least two trials required");
  const QVector w0 = sample_relative_interior(cone, face);
  const Subdivision reference = regular_subdivision(cone, w0);
  const QMatrix span = span_of_face(cone, face);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<QVector> samples{w0};
  int attempts = 0;
  while (static_cast<int>(samples.size()) < trials) {
    if (++attempts > 100 * trials) throw Error(ErrorKind::BadParams, "could not draw distinct samples");
    QVector u = QVector::Zero(cone.ambient_dim());
    for (Index j = 0; j < span.cols(); ++j) u += Rational(coef(rng)) * span.col(j);
    Rational worst = 0;
    for (std::size_t d = 0; d < cone.facet_count(); ++d) worst = std::max(worst, abs(cone.normal(d).dot(u)));
    const Rational scale = 1 + static_cast<int>(rng() % 3);
    const QVector w = scale * w0 + u / (worst + 1);
    if (std::any_of(samples.begin(), samples.end(), [&](const QVector& s) { return s == w; })) continue;
    if (!(face_of(cone, w) == face)) return false;
    if (!same_parts(regular_subdivision(cone, w), reference)) return false;
    samples.push_back(w);
  }
  return true;
}

AdjacencyGraph adjacency_graph(const Lattice& l) {
  AdjacencyGraph g;
  g.extensions = linear_extensions(l.poset());
  const std::size_t m = g.extensions.size();
  const std::size_t n = l.poset().size();
  std::vector<std::vector<std::size_t>> chains;
  for (const auto& e : g.extensions) {
    auto c = chain_of(l, e);
    std::sort(c.begin(), c.end());
    chains.push_back(std::move(c));
  }
  std::set<std::pair<std::size_t, std::size_t>> diamonds;
  for (const auto& d : diamond_pairs(l)) diamonds.insert({d.a, d.b});

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<std::size_t> common, diff;
      std::set_intersection(chains[i].begin(), chains[i].end(), chains[j].begin(), chains[j].end(),
                            std::back_inserter(common));
      std::set_symmetric_difference(chains[i].begin(), chains[i].end(), chains[j].begin(), chains[j].end(),
                                    std::back_inserter(diff));
      const bool facet = common.size() == n;
      const auto& x = g.extensions[i].order;
      const auto& y = g.extensions[j].order;
      std::vector<std::size_t> mismatch;
      for (std::size_t k = 0; k < n; ++k)
        if (x[k] != y[k]) mismatch.push_back(k);
      const bool transposition = mismatch.size() == 2 && mismatch[1] == mismatch[0] + 1 &&
                                 x[mismatch[0]] == y[mismatch[1]] && x[mismatch[1]] == y[mismatch[0]];
      bool diamond = false;
      if (diff.size() == 2) {
        const auto key = std::minmax(diff[0], diff[1]);
        diamond = diamonds.count({key.first, key.second}) != 0;
      }
      certify(facet == transposition && transposition == diamond,
              "adjacency characterizations disagree");
      if (facet) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

LatticePolytope generalized_permutahedron(const MaxCone& cone, const QVector& w) {
  const Subdivision sub = regular_subdivision(cone, w);
  const Lattice& l = cone.lattice();
  if (l.poset().relation().count() == 0) {
    for (std::size_t a = 0; a < l.size(); ++a)
      for (std::size_t b = 0; b < l.size(); ++b) {
        const Rational lhs = -w(static_cast<Index>(a)) - w(static_cast<Index>(b));
        const Rational rhs = -w(static_cast<Index>(l.meet(a, b))) - w(static_cast<Index>(l.join(a, b)));
        certify(lhs >= rhs, "-w is not submodular");
      }
  }
  std::vector<QVector> points;
  for (const auto& p : sub.parts) {
    certify(p.constant == w(static_cast<Index>(l.bottom())), "piece constant differs from w at the bottom");
    points.push_back(-p.alpha);
  }
  return polytope_from_vertices(points);
}

}  // namespace semitoric
