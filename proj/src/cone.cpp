#include "semitoric/cone.hpp"

#include "semitoric/parallel.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace semitoric {

MaxCone::MaxCone(Lattice lattice) : lattice_(std::move(lattice)) {
  pairs_ = diamond_pairs(lattice_);
  const Index n = ambient_dim();
  for (const auto& p : pairs_) {
    QVector v = QVector::Zero(n);
    v(static_cast<Index>(p.meet)) += 1;
    v(static_cast<Index>(p.join)) += 1;
    v(static_cast<Index>(p.a)) -= 1;
    v(static_cast<Index>(p.b)) -= 1;
    normals_.push_back(std::move(v));
  }
  // Facet certificate: {i} is closed, i.e. the hyperplane of pair i meets
  // the cone in a point where every other inequality is slack.
  const auto ok = parallel_map(pairs_.size(), [&](std::size_t i) {
    return closure({i}).tight == TightSet{i};
  });
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    certify(ok[i], "inequality of pair " + lattice_.label(pairs_[i].a) + "/" +
                       lattice_.label(pairs_[i].b) + " is not facet-defining");
  }
}

Face MaxCone::closure(const TightSet& forced) const {
  const Index n = ambient_dim();
  std::vector<bool> in_forced(pairs_.size(), false);
  for (std::size_t i : forced) {
    if (i >= pairs_.size()) throw Error(ErrorKind::BadParams, "pair index out of range");
    in_forced[i] = true;
  }
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (!in_forced[i]) open.push_back(i);
  const Index s = static_cast<Index>(open.size());
  const Index rows = static_cast<Index>(pairs_.size()) + s;
  // Variables (w, s): equalities on forced pairs, normal.w - s_i >= 0 and
  // s_i <= 1 on the others; maximize sum s_i.
  LpProblem pr;
  pr.a = QMatrix::Zero(rows, n + s);
  pr.b = QVector::Zero(rows);
  pr.objective = QVector::Zero(n + s);
  pr.free.assign(static_cast<std::size_t>(n), true);
  pr.free.resize(static_cast<std::size_t>(n + s), false);
  Index r = 0;
  for (std::size_t i : forced) {
    pr.a.row(r).head(n) = normals_[i].transpose();
    pr.relations.push_back(Relation::Eq);
    ++r;
  }
  for (Index k = 0; k < s; ++k) {
    pr.a.row(r).head(n) = normals_[open[static_cast<std::size_t>(k)]].transpose();
    pr.a(r, n + k) = -1;
    pr.relations.push_back(Relation::Ge);
    ++r;
    pr.a(r, n + k) = 1;
    pr.b(r) = 1;
    pr.relations.push_back(Relation::Le);
    ++r;
    pr.objective(n + k) = 1;
  }
  pr.a.conservativeResize(r, Eigen::NoChange);
  pr.b.conservativeResize(r);
  const LpSolution sol = maximize(pr);
  certify(sol.status == LpStatus::Optimal, "closure LP did not reach an optimum");

  Face f;
  f.witness = sol.x.head(n);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const Rational v = normals_[i].dot(f.witness);
    certify(v >= 0, "closure witness leaves the cone");
    if (v == 0) {
      f.tight.push_back(i);
    } else {
      certify(v >= 1, "closure witness slack below 1");
    }
  }
  for (std::size_t i : forced) certify(normals_[i].dot(f.witness) == 0, "forced pair not tight");
  QMatrix eq(static_cast<Index>(f.tight.size()), n);
  for (std::size_t k = 0; k < f.tight.size(); ++k) eq.row(static_cast<Index>(k)) = normals_[f.tight[k]].transpose();
  f.dim = n - rank(eq);
  return f;
}

Face MaxCone::full_face() const { return closure({}); }

Face MaxCone::apex() const {
  TightSet all(pairs_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return closure(all);
}

MaxCone cone_K(const Lattice& lattice) { return MaxCone(lattice); }

Face face_of(const MaxCone& cone, const QVector& w) {
  if (w.size() != cone.ambient_dim()) throw Error(ErrorKind::BadParams, "weight has wrong length");
  Face f;
  f.witness = w;
  for (std::size_t i = 0; i < cone.facet_count(); ++i) {
    const Rational v = cone.normal(i).dot(w);
    if (v < 0) {
      const auto& p = cone.pairs()[i];
      throw Error(ErrorKind::NotInCone, "diamond inequality violated at " + cone.lattice().label(p.a) +
                                            "/" + cone.lattice().label(p.b));
    }
    if (v == 0) f.tight.push_back(i);
  }
  QMatrix eq(static_cast<Index>(f.tight.size()), cone.ambient_dim());
  for (std::size_t k = 0; k < f.tight.size(); ++k) eq.row(static_cast<Index>(k)) = cone.normal(f.tight[k]).transpose();
  f.dim = cone.ambient_dim() - rank(eq);
  return f;
}

namespace {

QMatrix tight_equations(const MaxCone& cone, const Face& face) {
  QMatrix eq(static_cast<Index>(face.tight.size()), cone.ambient_dim());
  for (std::size_t k = 0; k < face.tight.size(); ++k) eq.row(static_cast<Index>(k)) = cone.normal(face.tight[k]).transpose();
  return eq;
}

}  // namespace

QMatrix span_of_face(const MaxCone& cone, const Face& face) {
  const QMatrix eq = tight_equations(cone, face);
  if (eq.rows() == 0) return QMatrix::Identity(cone.ambient_dim(), cone.ambient_dim());
  return kernel(eq);
}

ZMatrix integer_span_of_face(const MaxCone& cone, const Face& face) {
  return integer_kernel(tight_equations(cone, face), cone.ambient_dim());
}

QVector sample_relative_interior(const MaxCone& cone, const Face& face) {
  if (face.witness.size() == cone.ambient_dim()) return face.witness;
  return cone.closure(face.tight).witness;
}

bool facet_is_irredundant(const MaxCone& cone, std::size_t i) {
  std::vector<LinearConstraint> cons;
  for (std::size_t j = 0; j < cone.facet_count(); ++j) {
    cons.push_back({cone.normal(j), j == i ? Relation::Lt : Relation::Ge, 0});
  }
  const Feasibility f = lp_feasible(cons, cone.ambient_dim());
  if (!f.feasible) return false;
  for (const auto& c : cons) certify(satisfies(c, f.witness), "irredundancy witness fails substitution");
  return true;
}

std::vector<Face> enumerate_faces(const MaxCone& cone, std::size_t max_candidates) {
  if (cone.facet_count() > 20) throw Error(ErrorKind::TooLarge, "face enumeration is limited to 20 diamond pairs");
  std::set<TightSet> seen;
  std::vector<Face> faces;
  std::vector<Face> frontier{cone.full_face()};
  seen.insert(frontier.front().tight);
  std::size_t candidates = 1;
  while (!frontier.empty()) {
    std::vector<TightSet> requests;
    std::set<TightSet> requested;
    for (const Face& f : frontier) {
      for (std::size_t i = 0; i < cone.facet_count(); ++i) {
        if (std::binary_search(f.tight.begin(), f.tight.end(), i)) continue;
        TightSet t = f.tight;
        t.insert(std::upper_bound(t.begin(), t.end(), i), i);
        if (requested.insert(t).second) requests.push_back(std::move(t));
      }
    }
    candidates += requests.size();
    if (candidates > max_candidates) throw Error(ErrorKind::TooLarge, "face enumeration exceeded the candidate cap");
    auto closed = parallel_map(requests.size(), [&](std::size_t k) { return cone.closure(requests[k]); });
    for (Face& f : frontier) faces.push_back(std::move(f));
    frontier.clear();
    for (Face& g : closed) {
      if (seen.insert(g.tight).second) frontier.push_back(std::move(g));
    }
  }
  std::sort(faces.begin(), faces.end(), [](const Face& x, const Face& y) {
    if (x.tight.size() != y.tight.size()) return x.tight.size() < y.tight.size();
    return x.tight < y.tight;
  });
  return faces;
}

std::string face_key(const MaxCone& cone, const Face& face) {
  if (face.tight.empty()) return "full";
  if (face.tight.size() == cone.facet_count()) return "apex";
  std::string out;
  for (std::size_t i : face.tight) {
    if (!out.empty()) out += ";";
    const auto& p = cone.pairs()[i];
    out += cone.lattice().label(p.a) + "/" + cone.lattice().label(p.b);
  }
  return out;
}

Face parse_face_key(const MaxCone& cone, const std::string& key) {
  if (key == "full") return cone.full_face();
  if (key == "apex") return cone.apex();
  TightSet t;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto slash = item.find('/');
    if (slash == std::string::npos) throw Error(ErrorKind::ParseError, "face key item without '/': " + item);
    std::size_t a = cone.lattice().index_of(item.substr(0, slash));
    std::size_t b = cone.lattice().index_of(item.substr(slash + 1));
    if (a > b) std::swap(a, b);
    bool found = false;
    for (std::size_t i = 0; i < cone.facet_count(); ++i) {
      if (cone.pairs()[i].a == a && cone.pairs()[i].b == b) {
        t.push_back(i);
        found = true;
      }
    }
    if (!found) throw Error(ErrorKind::BadParams, "not a diamond pair: " + item);
  }
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  Face f = cone.closure(t);
  if (f.tight != t) throw Error(ErrorKind::BadParams, "pairs do not form a closed face key: " + key);
  return f;
}

}  // namespace semitoric
