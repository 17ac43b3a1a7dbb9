#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qdio {

// Exact scalar tower. All arithmetic in this project is exact; doubles appear
// only in the growth classifier and the analytic reference bound.
using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorKind {
  DimensionMismatch,
  SingularMatrix,
  DegenerateBasis,
  ZeroVector,
  DomainError,
  ParseError,
  UnsupportedDegree,
  NotACenter,
  SpectralMismatch,
  DegenerateTransform,
  InternalInconsistency,
  AlreadyDiagonal,
  NoIntegerTransform,
  BudgetExceeded,
  NoSolutionsInBox,
  DegeneratePair,
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

inline Rat make_rat(Int num, Int den) {
  if (den == 0) fail(ErrorKind::DomainError, "rational with zero denominator");
  Rat r(std::move(num), std::move(den));
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// Exact integer value of an integral rational.
inline Int to_int(const Rat& r) {
  if (!is_integral(r)) fail(ErrorKind::DomainError, "rational " + r.get_str() + " is not an integer");
  return r.get_num();
}

inline std::string to_string(const Int& v) { return v.get_str(); }
inline std::string to_string(const Rat& v) { return v.get_str(); }

// r with r*r == x when x is a perfect square, nothing otherwise.
// Negative input is a domain error.
inline std::optional<Int> integer_sqrt(const Int& x) {
  if (x < 0) fail(ErrorKind::DomainError, "integer_sqrt of negative value " + x.get_str());
  if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

// Whether a rational is the square of a rational (numerator and denominator
// of the canonical form must both be perfect squares).
inline std::optional<Rat> rational_sqrt(const Rat& s) {
  if (s < 0) return std::nullopt;
  auto num = integer_sqrt(s.get_num());
  if (!num) return std::nullopt;
  auto den = integer_sqrt(s.get_den());
  if (!den) return std::nullopt;
  return make_rat(*num, *den);
}

}  // namespace qdio
