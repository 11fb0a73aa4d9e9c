#include "semitoric/hibi.hpp"

#include "semitoric/parallel.hpp"
#include "semitoric/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace semitoric {

Monomial Monomial::from_factors(std::size_t variables, const std::vector<std::size_t>& factors) {
  Monomial m(variables);
  for (std::size_t a : factors) {
    if (a >= variables) throw Error(ErrorKind::BadParams, "factor out of range");
    ++m.exponents[a];
  }
  return m;
}

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

std::vector<std::size_t> Monomial::factors() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < exponents.size(); ++a)
    for (int e = 0; e < exponents[a]; ++e) out.push_back(a);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.exponents.size() != exponents.size()) throw Error(ErrorKind::BadParams, "variable count mismatch");
  Monomial m = *this;
  for (std::size_t a = 0; a < exponents.size(); ++a) m.exponents[a] += other.exponents[a];
  return m;
}

bool Monomial::operator<(const Monomial& other) const {
  const int d = degree(), e = other.degree();
  if (d != e) return d < e;
  return std::lexicographical_compare(exponents.begin(), exponents.end(), other.exponents.begin(),
                                      other.exponents.end());
}

void Polynomial::add(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

std::string to_text(const Lattice& lattice, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += to_string(it->second);
    for (std::size_t a = 0; a < it->first.exponents.size(); ++a) {
      const int e = it->first.exponents[a];
      if (e == 0) continue;
      out += " * X[" + lattice.label(a) + "]";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

void check_size(std::size_t variables, int l) {
  if (variables > kMaxHibiElements) throw Error(ErrorKind::TooLarge, "polynomial rings limited to 12 variables");
  if (l < 0) throw Error(ErrorKind::BadParams, "degree must be nonnegative");
  if (l > kMaxHibiDegree) throw Error(ErrorKind::TooLarge, "degree limited to 6");
}

std::size_t variable_count(const std::vector<Polynomial>& generators) {
  for (const auto& g : generators)
    if (!g.is_zero()) return g.terms.begin()->first.exponents.size();
  return 0;
}

int homogeneous_degree(const Polynomial& g) {
  const int d = g.terms.begin()->first.degree();
  for (const auto& [m, c] : g.terms)
    if (m.degree() != d) throw Error(ErrorKind::BadParams, "generator is not homogeneous");
  return d;
}

using SparseRow = std::map<std::size_t, Rational>;

// Leading-term echelon form; rows of `rows_by_pivot` have distinct minimal
// columns.
class Echelon {
 public:
  bool insert(SparseRow row) {
    while (!row.empty()) {
      const std::size_t lead = row.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        pivots_.emplace(lead, std::move(row));
        return true;
      }
      const Rational factor = row.begin()->second / it->second.begin()->second;
      for (const auto& [col, c] : it->second) {
        auto [pos, inserted] = row.emplace(col, -factor * c);
        if (!inserted) {
          pos->second -= factor * c;
          if (pos->second == 0) row.erase(pos);
        }
      }
    }
    return false;
  }
  std::size_t rank() const { return pivots_.size(); }
  const std::map<std::size_t, SparseRow>& rows() const { return pivots_; }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

// Rows spanning the degree-l piece, with columns given by `column_of`.
template <typename ColumnOf>
Echelon graded_piece(const std::vector<Polynomial>& generators, std::size_t variables, int l,
                     ColumnOf column_of) {
  Echelon e;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    const int d = homogeneous_degree(g);
    if (d > l) continue;
    for (const Monomial& m : monomials_of_degree(variables, l - d)) {
      SparseRow row;
      for (const auto& [t, c] : g.terms) row[column_of(t * m)] += c;
      std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
      e.insert(std::move(row));
    }
  }
  return e;
}

std::vector<std::vector<bool>> part_members(const Lattice& lattice, const std::vector<Poset>& orders) {
  std::vector<std::vector<bool>> out;
  for (const Poset& order : orders) {
    std::vector<bool> in(lattice.size(), false);
    for (std::size_t a : sublattice_for_order(lattice, order)) in[a] = true;
    out.push_back(std::move(in));
  }
  return out;
}

bool all_factors_in(const Monomial& m, const std::vector<bool>& members) {
  for (std::size_t a = 0; a < m.exponents.size(); ++a)
    if (m.exponents[a] > 0 && !members[a]) return false;
  return true;
}

}  // namespace

std::vector<Polynomial> hibi_generators(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  std::vector<Polynomial> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (lattice.comparable(a, b)) continue;
      Polynomial p;
      p.add(Monomial::from_factors(n, {a, b}), 1);
      p.add(Monomial::from_factors(n, {lattice.join(a, b), lattice.meet(a, b)}), -1);
      out.push_back(std::move(p));
    }
  return out;
}

bool is_standard(const Lattice& lattice, const Monomial& m) {
  const auto f = m.factors();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (!lattice.comparable(f[i], f[j])) return false;
  return true;
}

std::vector<int> exponent_sum(const Lattice& lattice, const Monomial& m) {
  std::vector<int> out(lattice.poset().size(), 0);
  for (std::size_t a = 0; a < m.exponents.size(); ++a)
    for (std::size_t p : elements_of(lattice.ideal(a))) out[p] += m.exponents[a];
  return out;
}

Monomial straighten(const Lattice& lattice, const Monomial& m) {
  if (m.exponents.size() != lattice.size()) throw Error(ErrorKind::BadParams, "monomial has wrong variable count");
  std::vector<std::size_t> f = m.factors();
  auto energy = [&] {
    long s = 0;
    for (std::size_t a : f) s += static_cast<long>(lattice.height(a)) * lattice.height(a);
    return s;
  };
  auto incomparable = [&] {
    std::size_t c = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) c += !lattice.comparable(f[i], f[j]);
    return c;
  };
  const auto sum = exponent_sum(lattice, m);
  long e = energy();
  std::size_t bad = incomparable();
  while (bad > 0) {
    bool replaced = false;
    for (std::size_t i = 0; i < f.size() && !replaced; ++i)
      for (std::size_t j = i + 1; j < f.size() && !replaced; ++j)
        if (!lattice.comparable(f[i], f[j])) {
          const std::size_t lo = lattice.meet(f[i], f[j]), hi = lattice.join(f[i], f[j]);
          f[i] = lo;
          f[j] = hi;
          replaced = true;
        }
    const long e2 = energy();
    const std::size_t bad2 = incomparable();
    certify(e2 > e, "straightening step did not raise the squared heights");
    certify(bad2 < bad, "straightening step did not reduce incomparable pairs");
    e = e2;
    bad = bad2;
  }
  Monomial out = Monomial::from_factors(lattice.size(), f);
  certify(exponent_sum(lattice, out) == sum, "straightening changed the exponent sum");
  return out;
}

std::vector<Monomial> monomials_of_degree(std::size_t variables, int l) {
  std::vector<Monomial> out;
  if (l < 0) return out;
  if (variables == 0) {
    if (l == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(variables);
  std::function<void(std::size_t, int)> rec = [&](std::size_t a, int left) {
    if (a + 1 == variables) {
      cur.exponents[a] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur.exponents[a] = e;
      rec(a + 1, left - e);
    }
    cur.exponents[a] = 0;
  };
  rec(0, l);
  std::sort(out.begin(), out.end());
  return out;
}

Integer graded_dimension(std::size_t variables, int l) {
  // binom(variables + l - 1, l)
  Integer r = 1;
  for (int i = 1; i <= l; ++i) r = r * Integer(variables + static_cast<std::size_t>(i) - 1) / i;
  return r;
}

Integer standard_monomial_count(const Lattice& lattice, int l) {
  const std::size_t n = lattice.size();
  check_size(n, l);
  if (l == 0) return 1;
  // chains[a] = multichains of the current length ending in a.
  std::vector<Integer> chains(n, 1);
  for (int k = 2; k <= l; ++k) {
    std::vector<Integer> next(n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (lattice.leq(b, a)) next[a] += chains[b];
    chains = std::move(next);
  }
  Integer total = 0;
  for (const auto& c : chains) total += c;

  std::set<std::vector<int>> sums;
  for (const Monomial& m : monomials_of_degree(n, l)) sums.insert(exponent_sum(lattice, m));
  certify(total == Integer(sums.size()), "multichain count differs from the number of exponent sums");
  return total;
}

std::size_t ideal_dim(const std::vector<Polynomial>& generators, int l) {
  const std::size_t n = variable_count(generators);
  if (n == 0) return 0;
  check_size(n, l);
  std::map<Monomial, std::size_t> column;
  for (const Monomial& m : monomials_of_degree(n, l)) column.emplace(m, column.size());
  return graded_piece(generators, n, l, [&](const Monomial& m) { return column.at(m); }).rank();
}

InitialIdeal initial_ideal_dim(const std::vector<Polynomial>& generators, const QVector& w, int l) {
  InitialIdeal out;
  const std::size_t n = variable_count(generators);
  if (n == 0) return out;
  check_size(n, l);
  if (w.size() != static_cast<Index>(n)) throw Error(ErrorKind::BadParams, "weight has wrong length");
  std::vector<Monomial> basis = monomials_of_degree(n, l);
  auto weight = [&](const Monomial& m) {
    Rational s = 0;
    for (std::size_t a = 0; a < n; ++a) s += m.exponents[a] * w(static_cast<Index>(a));
    return s;
  };
  std::vector<Rational> weights;
  for (const auto& m : basis) weights.push_back(weight(m));
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return weights[x] < weights[y]; });
  std::map<Monomial, std::size_t> column;
  for (std::size_t pos = 0; pos < order.size(); ++pos) column.emplace(basis[order[pos]], pos);

  const Echelon e = graded_piece(generators, n, l, [&](const Monomial& m) { return column.at(m); });
  out.dim = e.rank();
  for (const auto& [lead, row] : e.rows()) {
    const Rational lowest = weights[order[lead]];
    Polynomial form;
    for (const auto& [col, c] : row)
      if (weights[order[col]] == lowest) form.add(basis[order[col]], c);
    out.forms.push_back(std::move(form));
  }
  return out;
}

std::vector<Polynomial> component_ideal(const Lattice& lattice, const Poset& order) {
  const auto members = sublattice_for_order(lattice, order);
  std::vector<bool> in(lattice.size(), false);
  for (std::size_t a : members) in[a] = true;
  const std::size_t n = lattice.size();
  std::vector<Polynomial> out;
  for (std::size_t a = 0; a < n; ++a) {
    if (in[a]) continue;
    Polynomial p;
    p.add(Monomial::from_factors(n, {a}), 1);
    out.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::size_t a = members[i], b = members[j];
      if (lattice.comparable(a, b)) continue;
      Polynomial p;
      p.add(Monomial::from_factors(n, {a, b}), 1);
      p.add(Monomial::from_factors(n, {lattice.join(a, b), lattice.meet(a, b)}), -1);
      out.push_back(std::move(p));
    }
  return out;
}

SignatureCount signature_count(const Lattice& lattice, const std::vector<Poset>& orders, int l) {
  const std::size_t n = lattice.size();
  check_size(n, l);
  if (orders.size() > 64) throw Error(ErrorKind::TooLarge, "at most 64 components");
  const auto members = part_members(lattice, orders);
  std::map<std::vector<int>, std::set<std::uint64_t>> by_sum;
  for (const Monomial& m : monomials_of_degree(n, l)) {
    std::uint64_t parts = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (all_factors_in(m, members[i])) parts |= std::uint64_t{1} << i;
    if (parts != 0) by_sum[exponent_sum(lattice, m)].insert(parts);
  }
  SignatureCount out;
  out.dim_r = graded_dimension(n, l);
  out.exponent_sums = by_sum.size();
  out.samesum = true;
  for (const auto& [sum, sets] : by_sum) {
    out.signatures += sets.size();
    out.samesum = out.samesum && sets.size() == 1;
  }
  return out;
}

Integer intersection_dim(const Lattice& lattice, const std::vector<Poset>& orders, int l) {
  const SignatureCount s = signature_count(lattice, orders, l);
  certify(s.samesum, "an exponent sum occurs with two different part sets");
  return s.dim_r - Integer(s.signatures);
}

bool in_component_kernels(const Lattice& lattice, const std::vector<Poset>& orders, const Polynomial& p) {
  for (const auto& members : part_members(lattice, orders)) {
    std::map<std::vector<int>, Rational> image;
    for (const auto& [m, c] : p.terms)
      if (all_factors_in(m, members)) image[exponent_sum(lattice, m)] += c;
    for (const auto& [sum, c] : image)
      if (c != 0) return false;
  }
  return true;
}

DegenerationRow degeneration_row(const MaxCone& cone, const Face& face, int l) {
  const Lattice& lattice = cone.lattice();
  const Subdivision sub = face_subdivision(cone, face);
  std::vector<Poset> orders;
  for (const Part& p : sub.parts) orders.push_back(p.order);
  DegenerationRow row;
  row.face = face_key(cone, face);
  row.degree = l;
  row.dim_r = graded_dimension(lattice.size(), l);
  const InitialIdeal init = initial_ideal_dim(hibi_generators(lattice), sub.weight, l);
  row.dim_initial = init.dim;
  row.contained = std::all_of(init.forms.begin(), init.forms.end(),
                              [&](const Polynomial& f) { return in_component_kernels(lattice, orders, f); });
  row.dim_intersection = intersection_dim(lattice, orders, l);
  row.standard_count = standard_monomial_count(lattice, l);
  row.pass = row.contained && Integer(row.dim_initial) == row.dim_intersection &&
             row.dim_intersection == row.dim_r - row.standard_count;
  return row;
}

std::string degeneration_csv_header() { return "face_key,l,dimR,dim_in,dim_cap,standard_count,pass"; }

std::string to_csv(const DegenerationRow& row) {
  std::string key = row.face;
  if (key.find_first_of(",\"") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : key) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    key = quoted + "\"";
  }
  return key + "," + std::to_string(row.degree) + "," + row.dim_r.str() + "," + std::to_string(row.dim_initial) +
         "," + row.dim_intersection.str() + "," + row.standard_count.str() + "," + (row.pass ? "true" : "false");
}

}  // namespace semitoric
