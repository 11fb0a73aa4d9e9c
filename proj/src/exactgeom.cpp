#include "semitoric/exactgeom.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

namespace semitoric {

// ---------------------------------------------------------------------------
// Simplex

namespace {

// Tableau rows 0..m-1 are constraints, row m is the objective (reduced
// costs); the last column is the right-hand side.
void pivot(QMatrix& t, Index r, Index c) {
  const Rational inv = Rational(1) / t(r, c);
  const Index cols = t.cols();
  if (inv != 1) {
    for (Index j = 0; j < cols; ++j)
      if (t(r, j) != 0) t(r, j) *= inv;
  }
  for (Index i = 0; i < t.rows(); ++i) {
    if (i == r || t(i, c) == 0) continue;
    const Rational f = t(i, c);
    for (Index j = 0; j < cols; ++j)
      if (t(r, j) != 0) t(i, j) -= f * t(r, j);
  }
}

// Bland's rule. Returns false when the objective is unbounded.
bool run_simplex(QMatrix& t, std::vector<Index>& basis, Index allowed_cols) {
  const Index m = static_cast<Index>(basis.size());
  const Index rhs = t.cols() - 1;
  while (true) {
    Index enter = -1;
    for (Index j = 0; j < allowed_cols; ++j) {
      if (t(m, j) < 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;
    Index leave = -1;
    Rational best;
    for (Index i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      const Rational ratio = t(i, rhs) / t(i, enter);
      if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return false;
    pivot(t, leave, enter);
    basis[static_cast<std::size_t>(leave)] = enter;
  }
}

void price_out(QMatrix& t, const std::vector<Index>& basis) {
  const Index m = static_cast<Index>(basis.size());
  for (Index i = 0; i < m; ++i) {
    const Rational f = t(m, basis[static_cast<std::size_t>(i)]);
    if (f == 0) continue;
    for (Index j = 0; j < t.cols(); ++j)
      if (t(i, j) != 0) t(m, j) -= f * t(i, j);
  }
}

}  // namespace

LpSolution maximize(const LpProblem& pr) {
  const Index m = pr.a.rows();
  const Index n = pr.a.cols();
  if (pr.b.size() != m || static_cast<Index>(pr.relations.size()) != m || pr.objective.size() != n) {
    throw Error(ErrorKind::BadParams, "inconsistent LP dimensions");
  }
  std::vector<bool> free = pr.free;
  free.resize(static_cast<std::size_t>(n), false);

  // Column layout: structural (+ negative parts of free variables), slacks,
  // artificials.
  std::vector<Index> pos(static_cast<std::size_t>(n)), neg(static_cast<std::size_t>(n), -1);
  Index cols = 0;
  for (Index j = 0; j < n; ++j) {
    pos[static_cast<std::size_t>(j)] = cols++;
    if (free[static_cast<std::size_t>(j)]) neg[static_cast<std::size_t>(j)] = cols++;
  }
  const Index structural = cols;
  std::vector<Relation> rel = pr.relations;
  std::vector<int> sign(static_cast<std::size_t>(m), 1);
  Index slacks = 0;
  Index artificials = 0;
  for (Index i = 0; i < m; ++i) {
    auto& r = rel[static_cast<std::size_t>(i)];
    if (r == Relation::Lt || r == Relation::Gt) throw Error(ErrorKind::BadParams, "strict relation in LP");
    if (pr.b(i) < 0) {
      sign[static_cast<std::size_t>(i)] = -1;
      if (r == Relation::Le) r = Relation::Ge;
      else if (r == Relation::Ge) r = Relation::Le;
    }
    if (r != Relation::Eq) ++slacks;
    if (r != Relation::Le) ++artificials;
  }
  const Index nonart = structural + slacks;
  const Index total = nonart + artificials;
  QMatrix t = QMatrix::Zero(m + 1, total + 1);
  std::vector<Index> basis(static_cast<std::size_t>(m));
  Index next_slack = structural;
  Index next_art = nonart;
  for (Index i = 0; i < m; ++i) {
    const Rational s(sign[static_cast<std::size_t>(i)]);
    for (Index j = 0; j < n; ++j) {
      if (pr.a(i, j) == 0) continue;
      t(i, pos[static_cast<std::size_t>(j)]) = s * pr.a(i, j);
      if (neg[static_cast<std::size_t>(j)] >= 0) t(i, neg[static_cast<std::size_t>(j)]) = -s * pr.a(i, j);
    }
    t(i, total) = s * pr.b(i);
    const Relation r = rel[static_cast<std::size_t>(i)];
    if (r == Relation::Le) {
      t(i, next_slack) = 1;
      basis[static_cast<std::size_t>(i)] = next_slack++;
    } else {
      if (r == Relation::Ge) t(i, next_slack++) = -1;
      t(i, next_art) = 1;
      basis[static_cast<std::size_t>(i)] = next_art++;
    }
  }

  LpSolution out;
  std::vector<bool> keep(static_cast<std::size_t>(m), true);
  if (artificials > 0) {
    for (Index j = nonart; j < total; ++j) t(m, j) = 1;
    price_out(t, basis);
    run_simplex(t, basis, total);
    if (t(m, total) < 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    for (Index i = 0; i < m; ++i) {
      if (basis[static_cast<std::size_t>(i)] < nonart) continue;
      Index col = -1;
      for (Index j = 0; j < nonart; ++j) {
        if (t(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col < 0) {
        keep[static_cast<std::size_t>(i)] = false;
      } else {
        pivot(t, i, col);
        basis[static_cast<std::size_t>(i)] = col;
      }
    }
  }
  // Drop artificial columns and redundant rows.
  std::vector<Index> rows;
  for (Index i = 0; i < m; ++i)
    if (keep[static_cast<std::size_t>(i)]) rows.push_back(i);
  const Index mm = static_cast<Index>(rows.size());
  QMatrix t2 = QMatrix::Zero(mm + 1, nonart + 1);
  std::vector<Index> basis2;
  for (Index k = 0; k < mm; ++k) {
    t2.row(k).head(nonart) = t.row(rows[static_cast<std::size_t>(k)]).head(nonart);
    t2(k, nonart) = t(rows[static_cast<std::size_t>(k)], total);
    basis2.push_back(basis[static_cast<std::size_t>(rows[static_cast<std::size_t>(k)])]);
  }
  for (Index j = 0; j < n; ++j) {
    t2(mm, pos[static_cast<std::size_t>(j)]) = -pr.objective(j);
    if (neg[static_cast<std::size_t>(j)] >= 0) t2(mm, neg[static_cast<std::size_t>(j)]) = pr.objective(j);
  }
  price_out(t2, basis2);
  if (!run_simplex(t2, basis2, nonart)) {
    out.status = LpStatus::Unbounded;
    return out;
  }
  QVector col_values = QVector::Zero(nonart);
  for (Index k = 0; k < mm; ++k) col_values(basis2[static_cast<std::size_t>(k)]) = t2(k, nonart);
  out.x = QVector::Zero(n);
  for (Index j = 0; j < n; ++j) {
    out.x(j) = col_values(pos[static_cast<std::size_t>(j)]);
    if (neg[static_cast<std::size_t>(j)] >= 0) out.x(j) -= col_values(neg[static_cast<std::size_t>(j)]);
  }
  out.value = t2(mm, nonart);
  out.status = LpStatus::Optimal;
  return out;
}

bool satisfies(const LinearConstraint& c, const QVector& x) {
  const Rational v = c.normal.dot(x);
  switch (c.relation) {
    case Relation::Le: return v <= c.rhs;
    case Relation::Lt: return v < c.rhs;
    case Relation::Eq: return v == c.rhs;
    case Relation::Ge: return v >= c.rhs;
    case Relation::Gt: return v > c.rhs;
  }
  return false;
}

Feasibility lp_feasible(const std::vector<LinearConstraint>& constraints, Index dim) {
  bool strict = false;
  bool homogeneous = true;
  for (const auto& c : constraints) {
    if (c.normal.size() != dim) throw Error(ErrorKind::BadParams, "constraint has wrong dimension");
    strict = strict || c.relation == Relation::Lt || c.relation == Relation::Gt;
    homogeneous = homogeneous && c.rhs == 0;
  }
  const Index vars = dim + (strict ? 1 : 0);
  const Index rows = static_cast<Index>(constraints.size()) + (strict ? 1 : 0);
  LpProblem pr;
  pr.a = QMatrix::Zero(rows, vars);
  pr.b = QVector::Zero(rows);
  pr.objective = QVector::Zero(vars);
  pr.free.assign(static_cast<std::size_t>(vars), true);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& c = constraints[i];
    const Index r = static_cast<Index>(i);
    pr.a.row(r).head(dim) = c.normal.transpose();
    pr.b(r) = c.rhs;
    switch (c.relation) {
      case Relation::Lt:
        pr.a(r, dim) = 1;
        pr.relations.push_back(Relation::Le);
        break;
      case Relation::Gt:
        pr.a(r, dim) = -1;
        pr.relations.push_back(Relation::Ge);
        break;
      default:
        pr.relations.push_back(c.relation);
    }
  }
  if (strict) {
    pr.free[static_cast<std::size_t>(dim)] = false;
    pr.a(rows - 1, dim) = 1;
    pr.b(rows - 1) = 1;
    pr.relations.push_back(Relation::Le);
    pr.objective(dim) = 1;
  }
  const LpSolution sol = maximize(pr);
  Feasibility out;
  if (sol.status != LpStatus::Optimal) return out;
  out.witness = sol.x.head(dim);
  if (strict) {
    const Rational t = sol.x(dim);
    if (t <= 0) return out;
    if (homogeneous) {
      out.witness /= t;
      out.slack = 1;
    } else {
      out.slack = t;
    }
  }
  out.feasible = true;
  return out;
}

// ---------------------------------------------------------------------------
// Double description

namespace {

class Bits {
 public:
  explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  ZVector v;
  Bits zero;
};

void make_primitive(ZVector& v) {
  Integer g(0);
  for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, abs(v(i)));
  if (g > 1)
    for (Index i = 0; i < v.size(); ++i) v(i) /= g;
}

bool zlex_less(const ZVector& a, const ZVector& b) {
  for (Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

}  // namespace

std::vector<ZVector> extreme_rays(const QMatrix& rows_q) {
  const Index m = rows_q.rows();
  const Index d = rows_q.cols();
  if (d == 0) return {};
  if (rank(rows_q) < d) throw Error(ErrorKind::UnboundedError, "cone has a lineality space");
  ZMatrix a(m, d);
  for (Index i = 0; i < m; ++i) a.row(i) = primitive(rows_q.row(i).transpose()).transpose();

  // Start from d independent rows: the cone they cut out is simplicial.
  std::vector<Index> chosen;
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  QMatrix acc(0, d);
  for (Index i = 0; i < m && static_cast<Index>(chosen.size()) < d; ++i) {
    QMatrix trial(acc.rows() + 1, d);
    trial.topRows(acc.rows()) = acc;
    trial.row(acc.rows()) = rows_q.row(i);
    if (rank(trial) > acc.rows()) {
      acc = trial;
      chosen.push_back(i);
      used[static_cast<std::size_t>(i)] = true;
    }
  }
  std::vector<Ray> rays;
  const QMatrix identity = QMatrix::Identity(d, d);
  for (Index k = 0; k < d; ++k) {
    const auto col = solve(acc, identity.col(k));
    Ray r{primitive(*col), Bits(static_cast<std::size_t>(m))};
    for (Index j = 0; j < d; ++j)
      if (j != k) r.zero.set(static_cast<std::size_t>(chosen[static_cast<std::size_t>(j)]));
    rays.push_back(std::move(r));
  }

  for (Index i = 0; i < m; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    std::vector<Integer> val(rays.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      val[k] = a.row(i).dot(rays[k].v);
      if (val[k] > 0) plus.push_back(k);
      else if (val[k] < 0) minus.push_back(k);
      else zero.push_back(k);
    }
    if (minus.empty()) {
      for (std::size_t k : zero) rays[k].zero.set(static_cast<std::size_t>(i));
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t k : plus) next.push_back(rays[k]);
    for (std::size_t k : zero) {
      next.push_back(rays[k]);
      next.back().zero.set(static_cast<std::size_t>(i));
    }
    for (std::size_t p : plus) {
      for (std::size_t q : minus) {
        const Bits common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < static_cast<std::size_t>(d)) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray nr{ZVector(val[p] * rays[q].v - val[q] * rays[p].v), common};
        make_primitive(nr.v);
        nr.zero.set(static_cast<std::size_t>(i));
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }
  std::vector<ZVector> out;
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end(), zlex_less);
  return out;
}

// ---------------------------------------------------------------------------
// Polytopes

bool lex_less(const QVector& a, const QVector& b) {
  for (Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

void sort_unique(std::vector<QVector>& points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(),
                           [](const QVector& x, const QVector& y) { return x == y; }),
               points.end());
}

std::vector<QVector> hull_vertices(const std::vector<QVector>& input) {
  std::vector<QVector> pts = input;
  sort_unique(pts);
  if (pts.size() <= 1) return pts;
  const Index n = pts.front().size();
  std::vector<QVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Index others = static_cast<Index>(pts.size()) - 1;
    LpProblem pr;
    pr.a = QMatrix::Zero(n + 1, others);
    pr.b = QVector::Zero(n + 1);
    Index c = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k == i) continue;
      pr.a.col(c).head(n) = pts[k];
      pr.a(n, c) = 1;
      ++c;
    }
    pr.b.head(n) = pts[i];
    pr.b(n) = 1;
    pr.relations.assign(static_cast<std::size_t>(n + 1), Relation::Eq);
    pr.objective = QVector::Zero(others);
    pr.free.assign(static_cast<std::size_t>(others), false);
    if (maximize(pr).status == LpStatus::Infeasible) out.push_back(pts[i]);
  }
  return out;
}

Index LatticePolytope::dim() const {
  if (vertices.empty()) return -1;
  return ambient_dim - static_cast<Index>(equations.size());
}

bool LatticePolytope::contains(const QVector& x) const {
  if (vertices.empty() || x.size() != ambient_dim) return false;
  for (const auto& e : equations)
    if (e.normal.dot(x) != e.rhs) return false;
  if (dim() <= kMaxFacetDimension) {
    for (const auto& h : hyperplanes)
      if (h.normal.dot(x) > h.rhs) return false;
    return true;
  }
  const Index k = static_cast<Index>(vertices.size());
  LpProblem pr;
  pr.a = QMatrix::Zero(ambient_dim + 1, k);
  for (Index c = 0; c < k; ++c) {
    pr.a.col(c).head(ambient_dim) = vertices[static_cast<std::size_t>(c)];
    pr.a(ambient_dim, c) = 1;
  }
  pr.b = QVector::Zero(ambient_dim + 1);
  pr.b.head(ambient_dim) = x;
  pr.b(ambient_dim) = 1;
  pr.relations.assign(static_cast<std::size_t>(ambient_dim + 1), Relation::Eq);
  pr.objective = QVector::Zero(k);
  pr.free.assign(static_cast<std::size_t>(k), false);
  return maximize(pr).status == LpStatus::Optimal;
}

namespace {

struct AffineHull {
  QVector base;
  std::vector<Index> pivots;  // coordinates parametrizing the hull
  std::vector<Halfspace> equations;
};

AffineHull affine_hull(const std::vector<QVector>& pts) {
  AffineHull h;
  h.base = pts.front();
  const Index n = h.base.size();
  QMatrix diff(static_cast<Index>(pts.size()) - 1, n);
  for (std::size_t i = 1; i < pts.size(); ++i) diff.row(static_cast<Index>(i) - 1) = (pts[i] - h.base).transpose();
  QMatrix work = diff;
  h.pivots = reduce_rows(work);
  const QMatrix ker = kernel(diff);  // columns c with diff * c = 0
  if (ker.cols() > 0) {
    const QMatrix canon = row_space(QMatrix(ker.transpose()));
    for (Index r = 0; r < canon.rows(); ++r) {
      const QVector normal = to_rational(primitive(canon.row(r).transpose()));
      h.equations.push_back({normal, normal.dot(h.base)});
    }
  }
  return h;
}

bool halfspace_less(const Halfspace& x, const Halfspace& y) {
  if (x.normal != y.normal) return lex_less(x.normal, y.normal);
  return x.rhs < y.rhs;
}

QVector project(const QVector& x, const std::vector<Index>& coords) {
  QVector y(static_cast<Index>(coords.size()));
  for (std::size_t k = 0; k < coords.size(); ++k) y(static_cast<Index>(k)) = x(coords[k]);
  return y;
}

}  // namespace

LatticePolytope polytope_from_vertices(const std::vector<QVector>& input) {
  std::vector<QVector> pts = input;
  sort_unique(pts);
  LatticePolytope p;
  if (pts.empty()) return p;
  p.ambient_dim = pts.front().size();
  for (const auto& x : pts)
    if (x.size() != p.ambient_dim) throw Error(ErrorKind::BadParams, "points of mixed dimension");
  const AffineHull hull = affine_hull(pts);
  p.equations = hull.equations;
  {
    QMatrix normals(static_cast<Index>(p.equations.size()), p.ambient_dim);
    for (std::size_t r = 0; r < p.equations.size(); ++r)
      normals.row(static_cast<Index>(r)) = p.equations[r].normal.transpose();
    p.lattice_basis = integer_kernel(normals, p.ambient_dim);
  }
  const Index d = static_cast<Index>(hull.pivots.size());
  if (d == 0) {
    p.vertices = pts;
    return p;
  }
  if (d > kMaxFacetDimension) {
    p.vertices = hull_vertices(pts);
    return p;
  }
  QMatrix lifted(static_cast<Index>(pts.size()), d + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    lifted.row(static_cast<Index>(i)).head(d) = project(pts[i], hull.pivots).transpose();
    lifted(static_cast<Index>(i), d) = 1;
  }
  // Rays (c, c0) of {c.y + c0 >= 0 on all points} are the facets.
  for (const ZVector& ray : extreme_rays(lifted)) {
    Halfspace h;
    h.normal = QVector::Zero(p.ambient_dim);
    for (Index k = 0; k < d; ++k) h.normal(hull.pivots[static_cast<std::size_t>(k)]) = Rational(-ray(k));
    h.rhs = Rational(ray(d));
    p.hyperplanes.push_back(std::move(h));
  }
  std::sort(p.hyperplanes.begin(), p.hyperplanes.end(), halfspace_less);
  for (const auto& x : pts) {
    std::vector<QVector> tight;
    for (const auto& h : p.hyperplanes)
      if (h.normal.dot(x) == h.rhs) tight.push_back(project(h.normal, hull.pivots));
    if (static_cast<Index>(tight.size()) < d) continue;
    QMatrix t(static_cast<Index>(tight.size()), d);
    for (std::size_t r = 0; r < tight.size(); ++r) t.row(static_cast<Index>(r)) = tight[r].transpose();
    if (rank(t) == d) p.vertices.push_back(x);
  }
  return p;
}

LatticePolytope polytope_from_inequalities(Index n, const std::vector<Halfspace>& equations,
                                           const std::vector<Halfspace>& inequalities) {
  std::vector<LinearConstraint> cons;
  for (const auto& e : equations) cons.push_back({e.normal, Relation::Eq, e.rhs});
  for (const auto& h : inequalities) cons.push_back({h.normal, Relation::Le, h.rhs});
  LatticePolytope empty;
  empty.ambient_dim = n;
  if (!lp_feasible(cons, n).feasible) return empty;

  QMatrix e(static_cast<Index>(equations.size()), n);
  QVector rhs(static_cast<Index>(equations.size()));
  for (std::size_t i = 0; i < equations.size(); ++i) {
    e.row(static_cast<Index>(i)) = equations[i].normal.transpose();
    rhs(static_cast<Index>(i)) = equations[i].rhs;
  }
  const QVector x0 = equations.empty() ? QVector(QVector::Zero(n)) : *solve(e, rhs);
  const QMatrix dirs = equations.empty() ? QMatrix(QMatrix::Identity(n, n)) : kernel(e);
  const Index k = dirs.cols();
  if (k == 0) return polytope_from_vertices({x0});
  // Homogenize: (t, s) with s >= 0 and (b - a.x0) s - (a N) t >= 0.
  QMatrix rows(static_cast<Index>(inequalities.size()) + 1, k + 1);
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    const auto& h = inequalities[i];
    rows.row(static_cast<Index>(i)).head(k) = -(h.normal.transpose() * dirs);
    rows(static_cast<Index>(i), k) = h.rhs - h.normal.dot(x0);
  }
  rows.row(rows.rows() - 1).setZero();
  rows(rows.rows() - 1, k) = 1;
  std::vector<QVector> points;
  for (const ZVector& ray : extreme_rays(rows)) {
    if (ray(k) == 0) throw Error(ErrorKind::UnboundedError, "inequalities define an unbounded region");
    const QVector t = to_rational(ray.head(k)) / Rational(ray(k));
    points.push_back(x0 + dirs * t);
  }
  return polytope_from_vertices(points);
}

LatticePolytope dilate(const LatticePolytope& p, const Rational& factor) {
  if (factor <= 0) throw Error(ErrorKind::BadParams, "dilation factor must be positive");
  LatticePolytope q = p;
  for (auto& v : q.vertices) v *= factor;
  for (auto& h : q.hyperplanes) h.rhs *= factor;
  for (auto& h : q.equations) h.rhs *= factor;
  return q;
}

AffineLattice affine_lattice_basis(const std::vector<QVector>& pts) {
  if (pts.empty()) throw Error(ErrorKind::BadParams, "no points");
  AffineLattice out;
  const QMatrix base(pts.front());
  out.base = to_integer(base).col(0);
  const AffineHull hull = affine_hull(pts);
  QMatrix normals(static_cast<Index>(hull.equations.size()), out.base.size());
  for (std::size_t r = 0; r < hull.equations.size(); ++r)
    normals.row(static_cast<Index>(r)) = hull.equations[r].normal.transpose();
  out.basis = integer_kernel(normals, out.base.size());
  return out;
}

namespace {

std::int64_t to_i64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::TooLarge, "coefficient overflow in lattice point enumeration");
  }
  return z.convert_to<std::int64_t>();
}

Integer floor_q(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return f;
}

Integer ceil_q(const Rational& q) { return -floor_q(-q); }

// sum(coef_j x_j) <= bound (or == bound times divisibility, see below).
struct IntRow {
  std::vector<std::int64_t> coef;
  std::int64_t bound = 0;
};

IntRow integerize(const QVector& coef, const Rational& bound) {
  Integer l(1);
  for (Index j = 0; j < coef.size(); ++j) {
    const Integer d = denominator(coef(j));
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  {
    const Integer d = denominator(bound);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  IntRow r;
  for (Index j = 0; j < coef.size(); ++j) r.coef.push_back(to_i64(numerator(coef(j) * Rational(l))));
  r.bound = to_i64(numerator(bound * Rational(l)));
  return r;
}

}  // namespace

std::vector<QVector> integer_points(const LatticePolytope& p) {
  if (p.empty()) return {};
  const Index n = p.ambient_dim;
  if (p.dim() > kMaxFacetDimension) throw Error(ErrorKind::TooLarge, "polytope dimension too large");
  if (p.dim() == 0) {
    const QVector& v = p.vertices.front();
    for (Index i = 0; i < n; ++i)
      if (!is_integer(v(i))) return {};
    return {v};
  }
  // Parametrize the affine hull by free coordinates: dependent coordinate r
  // equals rhs'_r - sum_j E'_{r j} x_j after reduction.
  const Index m = static_cast<Index>(p.equations.size());
  QMatrix aug(m, n + 1);
  for (Index r = 0; r < m; ++r) {
    aug.row(r).head(n) = p.equations[static_cast<std::size_t>(r)].normal.transpose();
    aug(r, n) = p.equations[static_cast<std::size_t>(r)].rhs;
  }
  const auto pivots = reduce_rows(aug);
  std::vector<bool> dependent(static_cast<std::size_t>(n), false);
  for (Index c : pivots) dependent[static_cast<std::size_t>(c)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < n; ++c)
    if (!dependent[static_cast<std::size_t>(c)]) free.push_back(c);
  const Index f = static_cast<Index>(free.size());

  // Affine expression of every ambient coordinate in the free ones.
  QMatrix lin = QMatrix::Zero(n, f);
  QVector off = QVector::Zero(n);
  for (Index k = 0; k < f; ++k) lin(free[static_cast<std::size_t>(k)], k) = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const Index c = pivots[r];
    off(c) = aug(static_cast<Index>(r), n);
    for (Index k = 0; k < f; ++k) lin(c, k) = -aug(static_cast<Index>(r), free[static_cast<std::size_t>(k)]);
  }
  std::vector<IntRow> ineq;
  for (const auto& h : p.hyperplanes) {
    const QVector c = lin.transpose() * h.normal;
    ineq.push_back(integerize(c, h.rhs - h.normal.dot(off)));
  }
  // Divisibility of dependent coordinates: l * x_c = l * off_c + l * lin_c . x.
  struct Divisibility {
    IntRow row;
    std::int64_t modulus;
  };
  std::vector<Divisibility> divs;
  for (Index c : pivots) {
    IntRow row = integerize(lin.row(c).transpose(), -off(c));
    // row: L*lin.x <= -L*off stores scaled values; recover the scale.
    Integer l(1);
    for (Index k = 0; k < f; ++k) {
      const Integer d = denominator(lin(c, k));
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    {
      const Integer d = denominator(off(c));
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    if (l != 1) divs.push_back({row, to_i64(l)});
  }
  std::vector<std::int64_t> lo(static_cast<std::size_t>(f)), hi(static_cast<std::size_t>(f));
  double box = 1;
  for (Index k = 0; k < f; ++k) {
    Rational mn = p.vertices.front()(free[static_cast<std::size_t>(k)]);
    Rational mx = mn;
    for (const auto& v : p.vertices) {
      mn = std::min(mn, v(free[static_cast<std::size_t>(k)]));
      mx = std::max(mx, v(free[static_cast<std::size_t>(k)]));
    }
    lo[static_cast<std::size_t>(k)] = to_i64(ceil_q(mn));
    hi[static_cast<std::size_t>(k)] = to_i64(floor_q(mx));
    if (hi[static_cast<std::size_t>(k)] < lo[static_cast<std::size_t>(k)]) return {};
    box *= static_cast<double>(hi[static_cast<std::size_t>(k)] - lo[static_cast<std::size_t>(k)] + 1);
  }
  if (box > 5e7) throw Error(ErrorKind::TooLarge, "lattice point search box too large");

  std::vector<QVector> out;
  std::vector<std::int64_t> x = lo;
  auto dot = [&](const IntRow& r) {
    __int128 s = 0;
    for (Index k = 0; k < f; ++k) s += static_cast<__int128>(r.coef[static_cast<std::size_t>(k)]) * x[static_cast<std::size_t>(k)];
    return s;
  };
  while (true) {
    bool ok = true;
    for (const auto& r : ineq) {
      if (dot(r) > r.bound) {
        ok = false;
        break;
      }
    }
    for (std::size_t i = 0; ok && i < divs.size(); ++i) {
      // L*x_c = L*off_c + L*lin.x = -(bound) + dot.
      const __int128 v = dot(divs[i].row) - divs[i].row.bound;
      if (v % divs[i].modulus != 0) ok = false;
    }
    if (ok) {
      QVector free_vals(f);
      for (Index k = 0; k < f; ++k) free_vals(k) = Rational(x[static_cast<std::size_t>(k)]);
      out.push_back(off + lin * free_vals);
    }
    Index k = 0;
    for (; k < f; ++k) {
      if (x[static_cast<std::size_t>(k)] < hi[static_cast<std::size_t>(k)]) {
        ++x[static_cast<std::size_t>(k)];
        break;
      }
      x[static_cast<std::size_t>(k)] = lo[static_cast<std::size_t>(k)];
    }
    if (k == f) break;
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::vector<std::vector<std::size_t>> regular_subdivision_cells(
    const std::vector<QVector>& points, const std::vector<Rational>& heights) {
  if (points.size() != heights.size()) throw Error(ErrorKind::BadParams, "one height per point required");
  if (points.empty()) return {};
  const Index n = points.front().size();
  std::vector<QVector> lifted;
  for (std::size_t i = 0; i < points.size(); ++i) {
    QVector y(n + 1);
    y.head(n) = points[i];
    y(n) = heights[i];
    lifted.push_back(std::move(y));
  }
  const AffineHull base = affine_hull(points);
  const AffineHull hull = affine_hull(lifted);
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), 0);
  if (hull.pivots.size() == base.pivots.size()) return {all};
  // The height coordinate is the last pivot of the lifted hull.
  const Index d = static_cast<Index>(hull.pivots.size());
  if (d > kMaxFacetDimension + 1) throw Error(ErrorKind::TooLarge, "subdivision dimension too large");
  QMatrix rows(static_cast<Index>(lifted.size()), d + 1);
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    rows.row(static_cast<Index>(i)).head(d) = project(lifted[i], hull.pivots).transpose();
    rows(static_cast<Index>(i), d) = 1;
  }
  std::vector<std::vector<std::size_t>> cells;
  for (const ZVector& ray : extreme_rays(rows)) {
    // c.y + c0 >= 0; upper faces have the lifted hull below: c_height < 0.
    if (ray(d - 1) >= 0) continue;
    std::vector<std::size_t> cell;
    for (std::size_t i = 0; i < lifted.size(); ++i) {
      Rational exact = Rational(ray(d));
      for (Index k = 0; k < d; ++k) exact += Rational(ray(k)) * rows(static_cast<Index>(i), k);
      if (exact == 0) cell.push_back(i);
    }
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace semitoric
