#include "semitoric/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace semitoric {

std::string ideal_label(const Poset& poset, ElementSet ideal) {
  std::string out = "{";
  bool first = true;
  for (std::size_t e : elements_of(ideal)) {
    if (!first) out += ",";
    out += poset.label(e);
    first = false;
  }
  return out + "}";
}

Lattice Lattice::from_ideals(Poset ground, std::vector<ElementSet> ideals,
                             std::vector<std::string> labels) {
  if (ideals.size() != labels.size()) {
    throw Error(ErrorKind::BadParams, "one label per ideal required");
  }
  std::vector<std::size_t> perm(ideals.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t x, std::size_t y) { return canonical_less(ideals[x], ideals[y]); });

  Lattice l;
  l.poset_ = std::move(ground);
  for (std::size_t i : perm) {
    l.ideals_.push_back(ideals[i]);
    l.labels_.push_back(labels[i]);
  }
  for (std::size_t a = 0; a < l.ideals_.size(); ++a) {
    if (!l.poset_.is_ideal(l.ideals_[a])) {
      throw Error(ErrorKind::BadParams, "element " + l.labels_[a] + " is not an order ideal");
    }
    if (!l.index_.emplace(l.ideals_[a], a).second) {
      throw Error(ErrorKind::BadParams, "repeated ideal for " + l.labels_[a]);
    }
  }
  {
    std::set<std::string> seen(l.labels_.begin(), l.labels_.end());
    if (seen.size() != l.labels_.size()) throw Error(ErrorKind::DuplicateLabel, "duplicate lattice labels");
  }
  if (l.ideals_ != order_ideals(l.poset_)) {
    throw Error(ErrorKind::BadParams, "elements are not exactly the order ideals of the ground poset");
  }
  const std::size_t n = l.size();
  l.join_.resize(n * n);
  l.meet_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      l.join_[a * n + b] = l.index_.at(l.ideals_[a] | l.ideals_[b]);
      l.meet_[a * n + b] = l.index_.at(l.ideals_[a] & l.ideals_[b]);
    }
  }
  return l;
}

std::size_t Lattice::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::UnknownLabel, "unknown lattice element " + label);
  return static_cast<std::size_t>(it - labels_.begin());
}

bool Lattice::covers(std::size_t upper, std::size_t lower) const {
  return upper != lower && leq(lower, upper) && height(upper) == height(lower) + 1;
}

std::size_t Lattice::element_of(ElementSet ideal) const {
  auto it = index_.find(ideal);
  if (it == index_.end()) throw Error(ErrorKind::BadParams, "not an order ideal of the ground poset");
  return it->second;
}

QVector Lattice::vertex(std::size_t a) const {
  QVector v = QVector::Zero(static_cast<Index>(poset_.size()));
  for (std::size_t p : elements_of(ideals_[a])) v(static_cast<Index>(p)) = 1;
  return v;
}

Lattice birkhoff(const Poset& poset) {
  auto ideals = order_ideals(poset);
  std::vector<std::string> labels;
  labels.reserve(ideals.size());
  for (ElementSet s : ideals) labels.push_back(ideal_label(poset, s));
  return Lattice::from_ideals(poset, std::move(ideals), std::move(labels));
}

Lattice from_tables(std::vector<std::string> elements,
                    const std::vector<std::vector<std::size_t>>& join,
                    const std::vector<std::vector<std::size_t>>& meet) {
  const std::size_t n = elements.size();
  if (n == 0) throw Error(ErrorKind::NotALattice, "empty element list");
  if (join.size() != n || meet.size() != n) throw Error(ErrorKind::NotALattice, "tables are not total");
  for (std::size_t a = 0; a < n; ++a) {
    if (join[a].size() != n || meet[a].size() != n) throw Error(ErrorKind::NotALattice, "tables are not total");
    for (std::size_t b = 0; b < n; ++b) {
      if (join[a][b] >= n || meet[a][b] >= n) throw Error(ErrorKind::NotALattice, "table entry out of range");
    }
  }
  const auto& e = elements;
  auto fail = [&](const std::string& law, std::size_t a, std::size_t b) {
    throw Error(ErrorKind::NotALattice, law + " fails at (" + e[a] + ", " + e[b] + ")");
  };
  for (std::size_t a = 0; a < n; ++a) {
    if (join[a][a] != a || meet[a][a] != a) fail("idempotence", a, a);
    for (std::size_t b = 0; b < n; ++b) {
      if (join[a][b] != join[b][a] || meet[a][b] != meet[b][a]) fail("commutativity", a, b);
      if (join[a][meet[a][b]] != a || meet[a][join[a][b]] != a) fail("absorption", a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (join[join[a][b]][c] != join[a][join[b][c]]) fail("join associativity", a, b);
        if (meet[meet[a][b]][c] != meet[a][meet[b][c]]) fail("meet associativity", a, b);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]) {
          throw Error(ErrorKind::NotDistributive,
                      "distributivity fails for (" + e[a] + ", " + e[b] + ", " + e[c] + ")");
        }

  auto leq = [&](std::size_t a, std::size_t b) { return join[a][b] == b; };
  auto lt = [&](std::size_t a, std::size_t b) { return a != b && leq(a, b); };
  auto covers = [&](std::size_t hi, std::size_t lo) {
    if (!lt(lo, hi)) return false;
    for (std::size_t c = 0; c < n; ++c)
      if (lt(lo, c) && lt(c, hi)) return false;
    return true;
  };

  // Join-irreducibles: elements covering exactly one element.
  std::vector<std::size_t> irreducible;
  for (std::size_t a = 0; a < n; ++a) {
    int count = 0;
    for (std::size_t b = 0; b < n; ++b) count += covers(a, b);
    if (count == 1) irreducible.push_back(a);
  }
  if (irreducible.size() > kMaxPosetSize) throw Error(ErrorKind::TooLarge, "too many join-irreducibles");
  const Index m = static_cast<Index>(irreducible.size());
  BoolMatrix rel = BoolMatrix::Constant(m, m, false);
  std::vector<std::string> plabels;
  for (Index i = 0; i < m; ++i) {
    plabels.push_back(e[irreducible[i]]);
    for (Index j = 0; j < m; ++j) rel(i, j) = lt(irreducible[i], irreducible[j]);
  }
  Poset ground(std::move(plabels), std::move(rel));

  std::vector<ElementSet> iota(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (Index i = 0; i < m; ++i)
      if (leq(irreducible[i], a)) iota[a] |= ElementSet{1} << i;

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      certify(iota[join[a][b]] == (iota[a] | iota[b]), "iota does not carry joins to unions");
      certify(iota[meet[a][b]] == (iota[a] & iota[b]), "iota does not carry meets to intersections");
    }
  }
  return Lattice::from_ideals(std::move(ground), std::move(iota), std::move(elements));
}

Lattice rebase(const Lattice& lattice, Poset ground, const std::vector<ElementSet>& iota) {
  if (iota.size() != lattice.size()) throw Error(ErrorKind::BadParams, "one ideal per element required");
  for (std::size_t a = 0; a < lattice.size(); ++a) {
    if (!ground.is_ideal(iota[a])) {
      throw Error(ErrorKind::CertificationFailed, "image of " + lattice.label(a) + " is not an ideal");
    }
    for (std::size_t b = 0; b < lattice.size(); ++b) {
      certify(iota[lattice.join(a, b)] == (iota[a] | iota[b]), "rebase map does not preserve joins");
      certify(iota[lattice.meet(a, b)] == (iota[a] & iota[b]), "rebase map does not preserve meets");
    }
  }
  // from_ideals verifies the image is exactly J(ground).
  return Lattice::from_ideals(std::move(ground), iota, lattice.labels());
}

std::vector<DiamondPair> diamond_pairs(const Lattice& l) {
  std::vector<DiamondPair> out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    for (std::size_t b = a + 1; b < l.size(); ++b) {
      if (l.comparable(a, b)) continue;
      const std::size_t j = l.join(a, b);
      if (l.covers(j, a) && l.covers(j, b)) out.push_back({a, b, l.meet(a, b), j});
    }
  }
  return out;
}

MaximalChains maximal_chains(const Lattice& l) {
  MaximalChains out;
  out.extensions = linear_extensions(l.poset());
  for (const auto& ext : out.extensions) {
    std::vector<std::size_t> chain;
    for (ElementSet s : ext.prefixes()) chain.push_back(l.element_of(s));
    out.chains.push_back(std::move(chain));
  }
  return out;
}

std::vector<std::size_t> sublattice_for_order(const Lattice& l, const Poset& stronger) {
  if (!is_stronger(stronger, l.poset())) {
    throw Error(ErrorKind::NotStronger, "order is not stronger than the lattice poset");
  }
  std::vector<std::size_t> out;
  for (ElementSet s : order_ideals(stronger)) out.push_back(l.element_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

Lattice boolean_lattice(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return birkhoff(Poset::antichain(std::move(labels)));
}

Lattice chain_lattice(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadParams, "chain lattice needs at least one element");
  std::vector<std::string> labels;
  for (std::size_t i = 1; i < n; ++i) labels.push_back(std::to_string(i));
  return birkhoff(Poset::chain(std::move(labels)));
}

bool isomorphic(const Lattice& a, const Lattice& b) {
  return a.size() == b.size() && find_isomorphism(a.poset(), b.poset()).has_value();
}

}  // namespace semitoric
