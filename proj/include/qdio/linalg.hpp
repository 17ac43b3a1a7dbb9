#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qdio/numeric.hpp"

namespace qdio {

class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : e_(n, Rat(0)) {}
  Vec(std::initializer_list<Rat> xs) : e_(xs) {}
  explicit Vec(std::vector<Rat> xs) : e_(std::move(xs)) {}

  std::size_t size() const { return e_.size(); }
  Rat& operator[](std::size_t i) { return e_[i]; }
  const Rat& operator[](std::size_t i) const { return e_[i]; }

  bool operator==(const Vec& o) const { return e_ == o.e_; }
  bool operator!=(const Vec& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_integral() const;

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

 private:
  std::vector<Rat> e_;
};

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rat& s, const Vec& a);
Rat dot(const Vec& a, const Vec& b);

// Lexicographic order, used for canonical solution-set sorting.
bool lex_less(const Vec& a, const Vec& b);

class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat from_columns(const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;

  Mat transposed() const;
  bool is_symmetric() const;
  bool is_integral() const;
  Rat trace() const;

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& x);
Mat operator*(const Rat& s, const Mat& a);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rat det_exact(const Mat& m);

/// Exact unique solution of m*x = rhs. Throws SingularMatrix when det(m) = 0.
Vec solve_linear(const Mat& m, const Vec& rhs);

/// Exact rational basis of the kernel; empty for full column rank.
std::vector<Vec> nullspace_basis(const Mat& m);

/// Unnormalized Gram-Schmidt over exact rationals: pairwise-orthogonal
/// vectors with the same span, no square roots taken.
std::vector<Vec> gram_schmidt_exact(const std::vector<Vec>& vs);

/// The unique integer vector with coprime entries and positive first nonzero
/// entry pointing in the same direction as v.
Vec primitive_scale(const Vec& v);

/// Inverse of a square matrix; throws SingularMatrix when not invertible.
Mat inverse(const Mat& m);

}  // namespace qdio
