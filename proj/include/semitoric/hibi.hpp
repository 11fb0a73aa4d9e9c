#ifndef SEMITORIC_HIBI_HPP
#define SEMITORIC_HIBI_HPP

// Polynomials in the variables X_a (one per lattice element), Hibi
// binomials, straightening to standard monomials, and degree-truncated
// linear algebra for ideals and initial ideals. Nothing here computes a
// Groebner basis: every ideal is handled one graded piece at a time.

#include "semitoric/cone.hpp"

#include <map>
#include <string>
#include <vector>

namespace semitoric {

/// Exponent vector indexed by lattice element.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::size_t variables) : exponents(variables, 0) {}
  static Monomial from_factors(std::size_t variables, const std::vector<std::size_t>& factors);

  int degree() const;
  /// Factors with repetition, ascending.
  std::vector<std::size_t> factors() const;
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;
  /// Graded lexicographic with X_0 > X_1 > ...: lower degree is smaller,
  /// then the smaller exponent at the first differing variable.
  bool operator<(const Monomial& other) const;
};

struct Polynomial {
  std::map<Monomial, Rational> terms;

  void add(const Monomial& m, const Rational& c);
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Polynomial&) const = default;
};

/// "c * X[a]^e * X[b] + ..." with lattice labels; "0" for the zero polynomial.
std::string to_text(const Lattice& lattice, const Polynomial& p);

/// Hard caps on the degree-truncated computations.
inline constexpr std::size_t kMaxHibiElements = 12;
inline constexpr int kMaxHibiDegree = 6;

/// X_a X_b - X_{a join b} X_{a meet b}, one per incomparable pair (a < b).
std::vector<Polynomial> hibi_generators(const Lattice& lattice);

/// The standard monomial with the same exponent sum. Each step replaces
/// the first incomparable factor pair by its meet and join; every step is
/// certified to raise the sum of squared heights and to lower the number of
/// incomparable factor pairs.
Monomial straighten(const Lattice& lattice, const Monomial& m);

bool is_standard(const Lattice& lattice, const Monomial& m);
/// Sum of v_a over the factors.
std::vector<int> exponent_sum(const Lattice& lattice, const Monomial& m);

/// All monomials of degree l in `variables` variables, ascending.
std::vector<Monomial> monomials_of_degree(std::size_t variables, int l);
/// dim R_l = binom(variables + l - 1, l).
Integer graded_dimension(std::size_t variables, int l);

/// Multichains a_1 <= ... <= a_l, counted by dynamic programming and
/// certified equal to the number of distinct exponent sums of degree l.
Integer standard_monomial_count(const Lattice& lattice, int l);

/// dim of the degree-l piece of the ideal generated by `generators`.
std::size_t ideal_dim(const std::vector<Polynomial>& generators, int l);

struct InitialIdeal {
  std::size_t dim = 0;
  /// Initial forms of an echelon basis of I_l.
  std::vector<Polynomial> forms;
};

/// in_w of the degree-l piece: terms of minimal w-weight. The basis of I_l
/// is echelonized with columns ordered by weight, then graded lex.
InitialIdeal initial_ideal_dim(const std::vector<Polynomial>& generators, const QVector& w, int l);

/// Hibi binomials of the sublattice of `order` plus the variables X_c of the
/// elements outside it.
std::vector<Polynomial> component_ideal(const Lattice& lattice, const Poset& order);

struct SignatureCount {
  Integer dim_r;
  /// Distinct (exponent sum, set of parts containing all factors) pairs
  /// with a nonempty set.
  std::size_t signatures = 0;
  /// Distinct exponent sums among those.
  std::size_t exponent_sums = 0;
  /// Every exponent sum occurs with a single part set.
  bool samesum = false;
};

SignatureCount signature_count(const Lattice& lattice, const std::vector<Poset>& orders, int l);

/// dim (cap_i I_i)_l = dim R_l - rank of the evaluation map, where the
/// rank is the number of distinct signatures. Certifies the samesum
/// property, which makes the signature count equal to the true rank.
Integer intersection_dim(const Lattice& lattice, const std::vector<Poset>& orders, int l);

/// True iff p maps to zero under every component evaluation
/// X_a -> t_i z^{v_a} (a in the part sublattice), X_a -> 0 otherwise.
bool in_component_kernels(const Lattice& lattice, const std::vector<Poset>& orders, const Polynomial& p);

struct DegenerationRow {
  std::string face;
  int degree = 0;
  Integer dim_r;
  std::size_t dim_initial = 0;
  Integer dim_intersection;
  Integer standard_count;
  bool contained = false;
  bool pass = false;
};

/// One cell of the degeneration certificate for face F and degree l:
/// dim in_w(I^h)_l, dim (cap I_i)_l and dim R_l - #standard monomials must
/// agree, and every initial form must lie in every component kernel.
DegenerationRow degeneration_row(const MaxCone& cone, const Face& face, int l);

std::string degeneration_csv_header();
std::string to_csv(const DegenerationRow& row);

}  // namespace semitoric

#endif  // SEMITORIC_HIBI_HPP
