#ifndef SEMITORIC_TYPES_HPP
#define SEMITORIC_TYPES_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semitoric {

// Expression templates are disabled so that `auto` and Eigen's own
// expression machinery never capture dangling GMP temporaries.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;
using ZMatrix = Matrix<Integer>;
using ZVector = Vector<Integer>;

/// Subset of poset elements, bit i set iff element i is present.
using ElementSet = std::uint64_t;
inline constexpr std::size_t kMaxPosetSize = 64;

enum class ErrorKind {
  CycleError,
  UnknownLabel,
  DuplicateLabel,
  GroundSetMismatch,
  NotALattice,
  NotDistributive,
  NotStronger,
  NotInCone,
  NotSubface,
  TooLarge,
  UnboundedError,
  BadParams,
  ParseError,
  IOError,
  CertificationFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Throws CertificationFailed with `what` unless `ok`.
inline void certify(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::CertificationFailed, what);
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::string to_string(const Rational& q);

}  // namespace semitoric

#endif  // SEMITORIC_TYPES_HPP
