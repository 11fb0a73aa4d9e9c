#include "semitoric/weightpoly.hpp"

#include <algorithm>
#include <set>

namespace semitoric {

namespace {

struct LexLess {
  bool operator()(const QVector& a, const QVector& b) const { return lex_less(a, b); }
};

QVector column(const ZMatrix& m, Index c) {
  QVector v(m.rows());
  for (Index r = 0; r < m.rows(); ++r) v(r) = Rational(m(r, c));
  return v;
}

// Coordinates c with basis^T c = x, for x in the row span.
QVector dual_coordinates(const ZMatrix& basis, const QVector& x) {
  const QMatrix bt = to_rational(basis).transpose();
  const auto c = solve(bt, x);
  certify(c.has_value(), "vector is not in the span of the face");
  return *c;
}

}  // namespace

WeightPolytope weight_polytope(const MaxCone& cone, const Face& face) {
  WeightPolytope wp;
  wp.face = face;
  wp.basis = integer_span_of_face(cone, face);
  certify(wp.basis.rows() == face.dim, "face lattice has the wrong rank");
  for (Index a = 0; a < wp.basis.cols(); ++a) wp.points.push_back(column(wp.basis, a));
  wp.polytope = polytope_from_vertices(wp.points);

  std::vector<QVector> sorted = wp.points;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  certify(sorted == wp.polytope.vertices, "some lambda_a is not a vertex of the weight polytope");
  certify(integer_points(wp.polytope) == sorted, "weight polytope has extra integer points");
  certify(wp.polytope.dim() == face.dim - 1, "weight polytope has the wrong dimension");
  return wp;
}

ZMatrix projection_matrix(const MaxCone& cone, const Face& g, const Face& f) {
  if (!std::includes(f.tight.begin(), f.tight.end(), g.tight.begin(), g.tight.end())) {
    throw Error(ErrorKind::NotSubface, "target face is not a face of the source face");
  }
  const ZMatrix bg = integer_span_of_face(cone, g);
  const ZMatrix bf = integer_span_of_face(cone, f);
  const QMatrix bgt = to_rational(bg).transpose();
  QMatrix x(bf.rows(), bg.rows());
  for (Index i = 0; i < bf.rows(); ++i) {
    const auto row = solve(bgt, to_rational(bf).row(i).transpose());
    certify(row.has_value(), "face span is not contained in the larger span");
    x.row(i) = row->transpose();
  }
  certify(to_rational(bf) == x * to_rational(bg), "projection matrix does not reproduce the basis");
  return to_integer(x);
}

QVector project(const MaxCone& cone, const Face& g, const Face& f, const QVector& point) {
  const ZMatrix x = projection_matrix(cone, g, f);
  if (point.size() != x.cols()) throw Error(ErrorKind::BadParams, "point has wrong dimension");
  return to_rational(x) * point;
}

AffineMap zeta(const MaxCone& cone) {
  const Lattice& l = cone.lattice();
  const Index p = static_cast<Index>(l.poset().size());
  const WeightPolytope apex = weight_polytope(cone, cone.apex());
  const Index d = apex.basis.rows();
  QMatrix a(p + 1, static_cast<Index>(l.size()));
  for (std::size_t e = 0; e < l.size(); ++e) {
    a.col(static_cast<Index>(e)).head(p) = l.vertex(e);
    a(p, static_cast<Index>(e)) = 1;
  }
  const QMatrix at = a.transpose();
  const QMatrix b = to_rational(apex.basis);
  QMatrix m(d, p + 1);
  for (Index r = 0; r < d; ++r) {
    const auto row = solve(at, b.row(r).transpose());
    certify(row.has_value(), "apex functionals are not affine on the vertices");
    m.row(r) = row->transpose();
  }
  certify(m * a == b, "zeta does not send v_a to lambda_a");
  AffineMap z{m.leftCols(p), m.col(p)};
  certify(rank(z.linear) == p, "zeta is degenerate");
  // Z^P onto the integer points of the affine span.
  const ZMatrix linear = to_integer(z.linear);
  to_integer(z.offset);
  if (p > 0) {
    certify(hermite_rows(ZMatrix(linear.transpose())) == hermite_rows(apex.polytope.lattice_basis),
            "zeta does not identify the integer lattices");
  }
  std::vector<QVector> images;
  for (std::size_t e = 0; e < l.size(); ++e) images.push_back(z(l.vertex(e)));
  std::sort(images.begin(), images.end(), lex_less);
  certify(images == apex.polytope.vertices, "zeta does not carry the order polytope onto the apex polytope");
  return z;
}

std::optional<QVector> zeta_inverse(const AffineMap& z, const QVector& y) {
  const QVector rhs = y - z.offset;
  auto x = solve(z.linear, rhs);
  if (!x || z.linear * *x != rhs) return std::nullopt;
  return x;
}

WeightFace chain_simplex(const MaxCone& cone, const LinearExtension& ext) {
  const Lattice& l = cone.lattice();
  WeightFace out;
  for (ElementSet s : ext.prefixes()) out.elements.push_back(l.element_of(s));
  std::sort(out.elements.begin(), out.elements.end());
  const Index n = static_cast<Index>(l.size());
  std::vector<QVector> pts;
  for (std::size_t a : out.elements) {
    QVector e = QVector::Zero(n);
    e(static_cast<Index>(a)) = 1;
    pts.push_back(e);
  }
  out.polytope = polytope_from_vertices(pts);
  out.functional = QVector::Ones(n);
  for (std::size_t a : out.elements) out.functional(static_cast<Index>(a)) = 0;
  return out;
}

std::vector<WeightFace> distinguished_faces(const MaxCone& cone, const Face& face) {
  const Lattice& l = cone.lattice();
  const Index p = static_cast<Index>(l.poset().size());
  const WeightPolytope wp = weight_polytope(cone, face);
  const Subdivision sub = face_subdivision(cone, face);
  const QMatrix to_apex = to_rational(projection_matrix(cone, face, cone.apex()));
  const AffineMap z = zeta(cone);

  std::vector<WeightFace> out;
  for (const Part& part : sub.parts) {
    WeightFace wf;
    wf.elements = part.elements;
    std::vector<bool> in(l.size(), false);
    for (std::size_t a : part.elements) in[a] = true;

    QVector sep(static_cast<Index>(l.size()));
    for (std::size_t a = 0; a < l.size(); ++a) sep(static_cast<Index>(a)) = part(l.vertex(a)) - sub.weight(static_cast<Index>(a));
    for (std::size_t t : face.tight) certify(cone.normal(t).dot(sep) == 0, "separating weight leaves the face span");
    Rational least = 0;
    for (std::size_t a = 0; a < l.size(); ++a) {
      const Rational v = sep(static_cast<Index>(a));
      certify(in[a] ? v == 0 : v > 0, "separating weight does not cut out the part");
      if (!in[a] && (least == 0 || v < least)) least = v;
    }
    if (least > 0) {
      wf.functional = dual_coordinates(wp.basis, sep / least);
      for (std::size_t a = 0; a < l.size(); ++a) {
        certify(wf.functional.dot(wp.points[a]) == sep(static_cast<Index>(a)) / least,
                "functional disagrees with the separating weight");
      }
    }

    std::vector<QVector> pts;
    for (std::size_t a : part.elements) pts.push_back(wp.points[a]);
    wf.polytope = polytope_from_vertices(pts);
    certify(wf.polytope.dim() == p, "distinguished face has the wrong dimension");

    std::set<ElementSet> images;
    for (std::size_t a : part.elements) {
      const auto x = zeta_inverse(z, to_apex * wp.points[a]);
      certify(x.has_value(), "projected point is off the image of zeta");
      ElementSet s = 0;
      for (Index i = 0; i < p; ++i) {
        certify((*x)(i) == 0 || (*x)(i) == 1, "projected point is not a 0/1 vector");
        if ((*x)(i) == 1) s |= ElementSet{1} << i;
      }
      images.insert(s);
    }
    const auto ideals = order_ideals(part.order);
    certify(images.size() == part.elements.size() && images == std::set<ElementSet>(ideals.begin(), ideals.end()),
            "distinguished face does not map onto the part's vertices");
    out.push_back(std::move(wf));
  }
  return out;
}

NormalityResult normality_probe(const LatticePolytope& q, int k_max) {
  if (k_max > 4) throw Error(ErrorKind::TooLarge, "normality probe limited to k <= 4");
  if (k_max < 1) throw Error(ErrorKind::BadParams, "k_max must be positive");
  NormalityResult out;
  const auto pts = integer_points(q);
  std::set<QVector, LexLess> sums(pts.begin(), pts.end());
  for (int k = 2; k <= k_max; ++k) {
    std::set<QVector, LexLess> next;
    for (const auto& s : sums)
      for (const auto& x : pts) next.insert(s + x);
    sums = std::move(next);
    for (const auto& y : integer_points(dilate(q, k))) {
      if (!sums.count(y)) {
        out.pass = false;
        out.first_failure = k;
        return out;
      }
    }
    out.checked_up_to = k;
  }
  return out;
}

}  // namespace semitoric
