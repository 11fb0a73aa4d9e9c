#include "semitoric/flaggt.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace semitoric {

namespace {

struct LexLess {
  bool operator()(const QVector& a, const QVector& b) const { return lex_less(a, b); }
};
using PointSet = std::set<QVector, LexLess>;

Lattice lattice_on_tuples(const std::vector<IndexTuple>& tuples, int n,
                          const std::function<std::pair<IndexTuple, IndexTuple>(const IndexTuple&,
                                                                                const IndexTuple&)>& ops) {
  std::map<IndexTuple, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    index[tuples[i]] = i;
    labels.push_back(tuple_label(tuples[i], n));
  }
  const std::size_t m = tuples.size();
  std::vector<std::vector<std::size_t>> join(m, std::vector<std::size_t>(m)), meet = join;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto [j, mt] = ops(tuples[a], tuples[b]);
      join[a][b] = index.at(j);
      meet[a][b] = index.at(mt);
    }
  return from_tables(std::move(labels), join, meet);
}

void subsets(int n, int k, int start, IndexTuple& cur, std::vector<IndexTuple>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::string p_label(int r, int s, int n) {
  if (n > 9) return "p" + std::to_string(r) + "." + std::to_string(s);
  return "p" + std::to_string(r) + std::to_string(s);
}

}  // namespace

std::string tuple_label(const IndexTuple& t, int n) {
  std::string out = "a";
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (n > 9 && j > 0) out += ".";
    out += std::to_string(t[j]);
  }
  return out;
}

IndexTuple parse_tuple_label(const std::string& label) {
  if (label.size() < 2 || label[0] != 'a') throw Error(ErrorKind::ParseError, "not an index label: " + label);
  IndexTuple t;
  const std::string body = label.substr(1);
  if (body.find('.') != std::string::npos) {
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto dot = body.find('.', start);
      t.push_back(std::stoi(body.substr(start, dot - start)));
      if (dot == std::string::npos) break;
      start = dot + 1;
    }
  } else {
    for (char c : body) {
      if (c < '0' || c > '9') throw Error(ErrorKind::ParseError, "not an index label: " + label);
      t.push_back(c - '0');
    }
  }
  return t;
}

Lattice grassmann_lattice(int k, int n) {
  if (k < 1 || k > n - 1) throw Error(ErrorKind::BadParams, "grassmann lattice needs 1 <= k <= n-1");
  std::vector<IndexTuple> tuples;
  IndexTuple cur;
  subsets(n, k, 1, cur, tuples);
  return lattice_on_tuples(tuples, n, [](const IndexTuple& x, const IndexTuple& y) {
    IndexTuple j(x.size()), m(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      j[i] = std::max(x[i], y[i]);
      m[i] = std::min(x[i], y[i]);
    }
    return std::pair{j, m};
  });
}

Lattice flag_lattice(int n) {
  if (n < 2) throw Error(ErrorKind::BadParams, "flag lattice needs n >= 2");
  if (n > 7) throw Error(ErrorKind::TooLarge, "flag lattice limited to n <= 7");
  std::vector<IndexTuple> tuples;
  for (int k = 1; k < n; ++k) {
    IndexTuple cur;
    subsets(n, k, 1, cur, tuples);
  }
  return lattice_on_tuples(tuples, n, [](const IndexTuple& x0, const IndexTuple& y0) {
    const IndexTuple& x = x0.size() >= y0.size() ? x0 : y0;  // longer
    const IndexTuple& y = x0.size() >= y0.size() ? y0 : x0;
    IndexTuple j(y.size()), m = x;
    for (std::size_t i = 0; i < y.size(); ++i) {
      j[i] = std::max(x[i], y[i]);
      m[i] = std::min(x[i], y[i]);
    }
    return std::pair{j, m};
  });
}

std::size_t GtPosets::bar_index(int r, int s) const {
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] == std::pair{r, s}) return i;
  throw Error(ErrorKind::BadParams, "no triangle element p" + std::to_string(r) + "," + std::to_string(s));
}

std::vector<std::size_t> GtPosets::diagonal() const {
  std::vector<std::size_t> out;
  for (int r = 1; r <= n; ++r) out.push_back(bar_index(r, r));
  return out;
}

QVector GtPosets::bar_vertex(std::size_t a) const {
  QVector v = QVector::Zero(static_cast<Index>(bar.size()));
  v(0) = 1;
  for (std::size_t p : elements_of(lattice.ideal(a))) v(static_cast<Index>(p + 1)) = 1;
  return v;
}

int GtPosets::index_count(std::size_t a) const {
  return static_cast<int>(parse_tuple_label(lattice.label(a)).size());
}

GtPosets gt_poset_iso(int n) {
  if (n < 2) throw Error(ErrorKind::BadParams, "GT poset needs n >= 2");
  if (n > 7) throw Error(ErrorKind::TooLarge, "GT poset limited to n <= 7");
  GtPosets gt;
  gt.n = n;
  std::vector<std::string> labels;
  for (int r = 1; r <= n; ++r)
    for (int s = r; s <= n; ++s) {
      gt.coords.emplace_back(r, s);
      labels.push_back(p_label(r, s, n));
    }
  const Index m = static_cast<Index>(labels.size());
  BoolMatrix lt = BoolMatrix::Constant(m, m, false);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      const auto [r, s] = gt.coords[static_cast<std::size_t>(i)];
      const auto [u, v] = gt.coords[static_cast<std::size_t>(j)];
      lt(i, j) = i != j && r <= u && s <= v;
    }
  gt.bar = Poset(labels, lt);
  gt.tilde = Poset(std::vector<std::string>(labels.begin() + 1, labels.end() - 1), lt.block(1, 1, m - 2, m - 2));

  const Lattice flag = flag_lattice(n);
  std::vector<ElementSet> iota;
  for (std::size_t a = 0; a < flag.size(); ++a) {
    const IndexTuple t = parse_tuple_label(flag.label(a));
    const int k = static_cast<int>(t.size());
    ElementSet s = 0;
    auto add = [&](int r, int c) {
      const std::size_t b = gt.bar_index(r, c);
      if (b == 0 || b + 1 == gt.coords.size()) return;
      s |= ElementSet{1} << (b - 1);
    };
    for (int j = 1; j <= k; ++j)
      for (int r = 1; r <= t[static_cast<std::size_t>(j - 1)] - j; ++r) add(r, n - j + 1);
    for (const auto& [r, c] : gt.coords)
      if (c < n - k + 1) add(r, c);
    iota.push_back(s);
  }
  gt.lattice = rebase(flag, gt.tilde, iota);
  return gt;
}

MarkedPoset gt_marking(const GtPosets& gt, const Rational& scale) {
  MarkedPoset mp;
  mp.base = gt.bar;
  mp.marked = gt.diagonal();
  for (int r = 1; r <= gt.n; ++r) mp.values.push_back(scale * Rational(gt.n - r, gt.n - 1));
  return mp;
}

MarkedPoset summand_marking(const GtPosets& gt, int k) {
  if (k < 1 || k > gt.n - 1) throw Error(ErrorKind::BadParams, "summand index out of range");
  MarkedPoset mp;
  mp.base = gt.bar;
  mp.marked = gt.diagonal();
  for (int s = 1; s <= gt.n; ++s) mp.values.push_back(s <= gt.n - k ? 1 : 0);
  return mp;
}

LatticePolytope marked_order_polytope(const MarkedPoset& mp, const Poset& order) {
  if (!is_stronger(order, mp.base)) throw Error(ErrorKind::NotStronger, "order is not stronger than the base order");
  if (mp.marked.size() != mp.values.size()) throw Error(ErrorKind::BadParams, "one value per marked element");
  const std::size_t m = mp.base.size();
  std::vector<bool> is_marked(m, false);
  for (std::size_t p : mp.marked) is_marked[p] = true;
  for (std::size_t p = 0; p < m; ++p) {
    bool minimal = true, maximal = true;
    for (std::size_t q = 0; q < m; ++q) {
      if (mp.base.less(q, p)) minimal = false;
      if (mp.base.less(p, q)) maximal = false;
    }
    if ((minimal || maximal) && !is_marked[p]) {
      throw Error(ErrorKind::BadParams, "extremal element " + mp.base.label(p) + " is not marked");
    }
  }
  for (std::size_t i = 0; i < mp.marked.size(); ++i)
    for (std::size_t j = 0; j < mp.marked.size(); ++j)
      if (mp.base.less(mp.marked[i], mp.marked[j]) && mp.values[i] < mp.values[j]) {
        throw Error(ErrorKind::BadParams, "marking increases along the order");
      }
  const std::size_t free = m - mp.marked.size();
  if (static_cast<Index>(free) > kMaxFacetDimension) throw Error(ErrorKind::TooLarge, "marked polytope too large");
  const Index d = static_cast<Index>(m);
  std::vector<Halfspace> eq, ineq;
  for (std::size_t i = 0; i < mp.marked.size(); ++i) {
    QVector e = QVector::Zero(d);
    e(static_cast<Index>(mp.marked[i])) = 1;
    eq.push_back({e, mp.values[i]});
  }
  for (const auto& [p, q] : order.cover_pairs()) {
    QVector h = QVector::Zero(d);
    h(static_cast<Index>(q)) = 1;
    h(static_cast<Index>(p)) = -1;
    ineq.push_back({h, 0});
  }
  return polytope_from_inequalities(d, eq, ineq);
}

Poset extend_to_bar(const GtPosets& gt, const Poset& order) {
  if (order.labels() != gt.tilde.labels()) throw Error(ErrorKind::GroundSetMismatch, "order is not on the GT poset");
  const Index m = static_cast<Index>(gt.bar.size());
  BoolMatrix lt = BoolMatrix::Constant(m, m, false);
  for (Index j = 1; j < m; ++j) lt(0, j) = true;
  for (Index i = 0; i + 1 < m; ++i) lt(i, m - 1) = true;
  lt.block(1, 1, m - 2, m - 2) = order.relation();
  return Poset(gt.bar.labels(), lt);
}

GtVertex threshold_decomposition(const GtPosets& gt, const QVector& point) {
  const int n = gt.n;
  GtVertex g;
  g.point = point;
  g.summands.assign(static_cast<std::size_t>(n - 1), 0);
  QVector sum = QVector::Zero(point.size());
  for (int r = 1; r <= n - 1; ++r) {
    const Rational threshold(n - r, n - 1);
    ElementSet j = 0;
    for (std::size_t p = 0; p < gt.tilde.size(); ++p)
      if (point(static_cast<Index>(p + 1)) >= threshold) j |= ElementSet{1} << p;
    certify(gt.tilde.is_ideal(j), "threshold set is not an order ideal");
    const std::size_t a = gt.lattice.element_of(j);
    const int k = gt.index_count(a);
    certify(k == n - r, "threshold ideal has an unexpected number of indices");
    g.summands[static_cast<std::size_t>(k - 1)] = a;
    sum += gt.bar_vertex(a);
  }
  certify(sum == Rational(n - 1) * point, "point is not the sum of its threshold summands");
  return g;
}

std::vector<GtVertex> gt_vertices(const GtPosets& gt) {
  const int n = gt.n;
  if (n > 5) throw Error(ErrorKind::TooLarge, "GT vertices limited to n <= 5");
  const LatticePolytope poly = marked_order_polytope(gt_marking(gt), gt.bar);
  std::vector<GtVertex> out;
  for (const QVector& v : poly.vertices) out.push_back(threshold_decomposition(gt, v));
  if (n <= 4) {
    auto hull = hull_vertices(integer_points(dilate(poly, n - 1)));
    for (auto& h : hull) h /= Rational(n - 1);
    std::sort(hull.begin(), hull.end(), lex_less);
    certify(hull == poly.vertices, "GT vertices disagree with the LP hull of the dilation's integer points");
  }
  return out;
}

std::vector<GtVertex> gt_grid_points(const GtPosets& gt) {
  const int n = gt.n;
  if (n > 4) throw Error(ErrorKind::TooLarge, "GT grid points limited to n <= 4");
  const LatticePolytope poly = marked_order_polytope(gt_marking(gt, n - 1), gt.bar);
  std::vector<GtVertex> out;
  for (QVector x : integer_points(poly)) {
    x /= Rational(n - 1);
    out.push_back(threshold_decomposition(gt, x));
  }
  return out;
}

QVector lift_c(const GtPosets& gt, const std::vector<GtVertex>& points, const QVector& w) {
  if (w.size() != static_cast<Index>(gt.lattice.size())) throw Error(ErrorKind::BadParams, "weight has wrong length");
  QVector c = QVector::Zero(static_cast<Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t a : points[i].summands) c(static_cast<Index>(i)) += w(static_cast<Index>(a));
  return c;
}

namespace {

std::vector<std::size_t> members(const LatticePolytope& poly, const std::vector<GtVertex>& points) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (poly.contains(points[i].point)) out.push_back(i);
  return out;
}

std::vector<Rational> envelope_heights(const GtPosets& gt, const Subdivision& ambient,
                                       const std::vector<GtVertex>& points) {
  const QVector c = lift_c(gt, points, ambient.weight);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const QVector x = points[i].point.segment(1, static_cast<Index>(gt.tilde.size()));
    Rational f = ambient.parts.front()(x);
    for (const Part& p : ambient.parts) f = std::min(f, p(x));
    const Rational h = c(static_cast<Index>(i)) / Rational(gt.n - 1);
    certify(f == h, "envelope value differs from c(w)/(n-1)");
    out.push_back(h);
  }
  return out;
}

std::vector<QVector> point_list(const std::vector<GtVertex>& points) {
  std::vector<QVector> out;
  for (const auto& p : points) out.push_back(p.point);
  return out;
}

}  // namespace

GtSubdivision gt_subdivision(const GtPosets& gt, const MaxCone& cone, const Face& face) {
  const int n = gt.n;
  if (n > 5) throw Error(ErrorKind::TooLarge, "GT subdivision limited to n <= 5");
  if (!(cone.lattice().poset() == gt.tilde)) {
    throw Error(ErrorKind::GroundSetMismatch, "cone is not built on the GT-rebased flag lattice");
  }
  GtSubdivision out;
  out.ambient = face_subdivision(cone, face);
  out.vertices = gt_vertices(gt);
  if (n <= 4) out.grid = gt_grid_points(gt);
  const MarkedPoset mp = gt_marking(gt);
  const Index full_dim = marked_order_polytope(mp, gt.bar).dim();

  for (const Part& part : out.ambient.parts) {
    GtPart g;
    g.order = part.order;
    g.polytope = marked_order_polytope(mp, extend_to_bar(gt, part.order));
    certify(!g.polytope.empty() && g.polytope.dim() == full_dim, "section part is not full-dimensional");
    for (const auto& v : g.polytope.vertices)
      for (Index i = 0; i < v.size(); ++i)
        certify(is_integer(v(i) * Rational(n - 1)), "section part vertex is off the grid");
    g.vertices = members(g.polytope, out.vertices);
    g.grid = members(g.polytope, out.grid);
    out.parts.push_back(std::move(g));
  }
  out.heights = envelope_heights(gt, out.ambient, out.vertices);
  out.grid_heights = envelope_heights(gt, out.ambient, out.grid);

  std::vector<std::vector<std::size_t>> by_vertices, by_grid;
  bool parts_spanned_by_vertices = true;
  for (const auto& g : out.parts) {
    by_vertices.push_back(g.vertices);
    by_grid.push_back(g.grid);
    for (const auto& v : g.polytope.vertices) {
      parts_spanned_by_vertices = parts_spanned_by_vertices &&
          std::any_of(out.vertices.begin(), out.vertices.end(), [&](const GtVertex& u) { return u.point == v; });
    }
  }
  std::sort(by_vertices.begin(), by_vertices.end());
  std::sort(by_grid.begin(), by_grid.end());
  out.vertex_cells = regular_subdivision_cells(point_list(out.vertices), out.heights);
  out.vertex_envelope_agrees = parts_spanned_by_vertices && out.vertex_cells == by_vertices;
  if (n <= 4) {
    certify(regular_subdivision_cells(point_list(out.grid), out.grid_heights) == by_grid,
            "regular subdivision of the grid points differs from the sections");
  }
  return out;
}

std::vector<int> component_shape(const GtPosets& gt, const LinearExtension& ext) {
  const int n = gt.n;
  std::vector<std::size_t> seq{0};
  for (std::size_t p : ext.order) seq.push_back(p + 1);
  seq.push_back(gt.bar.size() - 1);
  std::vector<std::size_t> pos(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = i;
  const auto diag = gt.diagonal();
  std::vector<int> shape;
  int total = 0;
  for (int k = 0; k + 1 < n; ++k) {
    certify(pos[diag[static_cast<std::size_t>(k)]] < pos[diag[static_cast<std::size_t>(k + 1)]],
            "extension does not order the diagonal");
    shape.push_back(static_cast<int>(pos[diag[static_cast<std::size_t>(k + 1)]] - pos[diag[static_cast<std::size_t>(k)]]) - 1);
    total += shape.back();
  }
  certify(total == n * (n - 1) / 2, "shape dimensions do not sum to n(n-1)/2");

  // (n-1) * O_{M,mu}(extension): on block k the coordinates z_1 >= ... >= z_d
  // lie in [0,1] after shifting; consecutive differences give one-hot
  // vectors of the unit simplex, a unimodular change of coordinates.
  const Poset chain = extend_to_bar(gt, ext.as_poset(gt.tilde));
  const LatticePolytope poly = dilate(marked_order_polytope(gt_marking(gt), chain), n - 1);
  std::size_t expected = 1;
  for (int d : shape) expected *= static_cast<std::size_t>(d + 1);
  certify(poly.vertices.size() == expected, "vertex count differs from the product of simplices");
  std::set<std::vector<int>> images;
  for (const auto& v : poly.vertices) {
    std::vector<int> image;
    for (int k = 0; k + 1 < n; ++k) {
      const Rational low = v(static_cast<Index>(diag[static_cast<std::size_t>(k + 1)]));
      Rational prev = v(static_cast<Index>(diag[static_cast<std::size_t>(k)])) - low;
      certify(prev == 1, "block bounds are not one unit apart");
      int hot = 0;
      for (std::size_t i = pos[diag[static_cast<std::size_t>(k)]] + 1; i < pos[diag[static_cast<std::size_t>(k + 1)]]; ++i) {
        const Rational z = v(static_cast<Index>(seq[i])) - low;
        certify(z == 0 || z == 1, "block coordinate is not 0/1");
        hot += prev != z;
        prev = z;
      }
      hot += prev != 0;
      certify(hot == 1, "block image is not a unit-simplex vertex");
      for (std::size_t i = pos[diag[static_cast<std::size_t>(k)]] + 1; i < pos[diag[static_cast<std::size_t>(k + 1)]]; ++i)
        image.push_back(static_cast<int>(numerator(v(static_cast<Index>(seq[i])) - low).convert_to<long>()));
    }
    images.insert(image);
  }
  certify(images.size() == expected, "product-of-simplices map is not injective on vertices");
  return shape;
}

std::string shape_name(std::vector<int> shape) {
  std::sort(shape.rbegin(), shape.rend());
  std::string out;
  for (int d : shape) {
    if (!out.empty()) out += "x";
    out += "P" + std::to_string(d);
  }
  return out;
}

Census gt_census(const GtPosets& gt) {
  Census c;
  c.extensions = linear_extensions(gt.tilde);
  for (const auto& e : c.extensions) {
    c.shapes.push_back(component_shape(gt, e));
    ++c.counts[shape_name(c.shapes.back())];
  }
  return c;
}

bool minkowski_identity_check(const GtPosets& gt) {
  const int n = gt.n;
  PointSet sums{QVector(QVector::Zero(static_cast<Index>(gt.bar.size())))};
  for (int k = 1; k <= n - 1; ++k) {
    const LatticePolytope summand = marked_order_polytope(summand_marking(gt, k), gt.bar);
    const auto pts = integer_points(summand);
    std::vector<QVector> expected;
    for (std::size_t a = 0; a < gt.lattice.size(); ++a)
      if (gt.index_count(a) == k) expected.push_back(gt.bar_vertex(a));
    std::sort(expected.begin(), expected.end(), lex_less);
    if (pts != expected || summand.vertices != expected) return false;
    PointSet next;
    for (const auto& s : sums)
      for (const auto& p : pts) next.insert(s + p);
    sums = std::move(next);
  }
  const auto target = integer_points(marked_order_polytope(gt_marking(gt, n - 1), gt.bar));
  return std::vector<QVector>(sums.begin(), sums.end()) == target;
}

}  // namespace semitoric
