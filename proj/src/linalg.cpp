#include "semitoric/linalg.hpp"

#include <numeric>

namespace semitoric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleError: return "CycleError";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::GroundSetMismatch: return "GroundSetMismatch";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotStronger: return "NotStronger";
    case ErrorKind::NotInCone: return "NotInCone";
    case ErrorKind::NotSubface: return "NotSubface";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnboundedError: return "UnboundedError";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IOError: return "IOError";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

void add_row_multiple(ZMatrix& m, Index target, Index source, const Integer& factor) {
  if (factor == 0) return;
  for (Index j = 0; j < m.cols(); ++j) m(target, j) -= factor * m(source, j);
}

}  // namespace

ZMatrix hermite_rows(const ZMatrix& m, ZMatrix* transform) {
  ZMatrix h = m;
  ZMatrix u = ZMatrix::Identity(m.rows(), m.rows());
  Index row = 0;
  for (Index col = 0; col < h.cols() && row < h.rows(); ++col) {
    // Euclid on column `col` among rows >= row until a single nonzero remains.
    while (true) {
      Index best = -1;
      for (Index i = row; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (best < 0 || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best < 0) break;
      if (best != row) {
        h.row(best).swap(h.row(row));
        u.row(best).swap(u.row(row));
      }
      bool done = true;
      for (Index i = row + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        const Integer q = h(i, col) / h(row, col);
        add_row_multiple(h, i, row, q);
        add_row_multiple(u, i, row, q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      h.row(row) = -h.row(row);
      u.row(row) = -u.row(row);
    }
    for (Index i = 0; i < row; ++i) {
      const Integer q = floor_div(h(i, col), h(row, col));
      add_row_multiple(h, i, row, q);
      add_row_multiple(u, i, row, q);
    }
    ++row;
  }
  if (transform != nullptr) *transform = std::move(u);
  return h;
}

ZVector primitive(const QVector& v) {
  Integer lcm_den(1);
  for (Index i = 0; i < v.size(); ++i) {
    const Integer d = denominator(v(i));
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  ZVector out(v.size());
  Integer g(0);
  for (Index i = 0; i < v.size(); ++i) {
    out(i) = numerator(v(i)) * (lcm_den / denominator(v(i)));
    g = boost::multiprecision::gcd(g, abs(out(i)));
  }
  if (g > 1) {
    for (Index i = 0; i < out.size(); ++i) out(i) /= g;
  }
  return out;
}

ZMatrix integer_kernel(const QMatrix& equations, Index n) {
  if (equations.rows() == 0) {
    return ZMatrix::Identity(n, n);
  }
  // U * N^T = H; rows of U facing zero rows of H span ker(N) over Z.
  ZMatrix nt(n, equations.rows());
  for (Index r = 0; r < equations.rows(); ++r) {
    const ZVector row = primitive(equations.row(r).transpose());
    nt.col(r) = row;
  }
  ZMatrix u;
  const ZMatrix h = hermite_rows(nt, &u);
  std::vector<Index> zero_rows;
  for (Index i = 0; i < h.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < h.cols(); ++j) {
      if (h(i, j) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) zero_rows.push_back(i);
  }
  ZMatrix basis(static_cast<Index>(zero_rows.size()), n);
  for (std::size_t k = 0; k < zero_rows.size(); ++k) {
    basis.row(static_cast<Index>(k)) = u.row(zero_rows[k]);
  }
  return hermite_rows(basis);
}

QMatrix to_rational(const ZMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

ZMatrix to_integer(const QMatrix& m) {
  ZMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!is_integer(m(i, j))) {
        throw Error(ErrorKind::BadParams, "non-integral entry " + to_string(m(i, j)));
      }
      out(i, j) = numerator(m(i, j));
    }
  }
  return out;
}

}  // namespace semitoric
