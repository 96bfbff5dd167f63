// Copyright 2026 The rotorkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "rotorkit/error.hpp"

namespace rotorkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;

Int floor_div(const Int& a, const Int& b);

/// Nearest-integer quotient: |a - q b| <= |b| / 2. Keeps Euclidean
/// elimination remainders shrinking geometrically for either divisor sign.
Int rounded_div(const Int& a, const Int& b);

/// Floor of an exact rational.
Int rat_floor(const Rat& r);

/// An angle stored as an exact number of turns (angle = 2*pi*turns), always
/// reduced into [0, 1). Addition, negation and integer scaling stay exact.
class ExactAngle {
 public:
  ExactAngle() : turns_(0) {}
  explicit ExactAngle(Rat turns) : turns_(std::move(turns)) { reduce(); }

  static ExactAngle from_fraction(const Int& num, const Int& den);
  static ExactAngle zero() { return ExactAngle(); }
  /// The angle pi, i.e. half a turn.
  static ExactAngle half() { return ExactAngle(Rat(1, 2)); }

  const Rat& turns() const { return turns_; }
  bool is_zero() const { return turns_ == 0; }

  ExactAngle operator+(const ExactAngle& o) const { return ExactAngle(turns_ + o.turns_); }
  ExactAngle operator-(const ExactAngle& o) const { return ExactAngle(turns_ - o.turns_); }
  ExactAngle operator-() const { return ExactAngle(-turns_); }
  ExactAngle times(const Int& k) const { return ExactAngle(turns_ * Rat(k)); }
  /// Exact division of the turn fraction, used for fundamental logical angles 2*pi/d.
  ExactAngle divided_by(const Int& k) const;

  bool operator==(const ExactAngle& o) const { return turns_ == o.turns_; }
  bool operator!=(const ExactAngle& o) const { return turns_ != o.turns_; }

  double radians() const;
  std::string to_string() const;

 private:
  void reduce();
  Rat turns_;
};

using AngleVec = std::vector<ExactAngle>;

/// Dense matrix over arbitrary-precision integers. Sized for desk-scale exact
/// linear algebra, not for large systems.
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMat(std::size_t rows, std::size_t cols, std::vector<Int> data);

  static IntMat identity(std::size_t n);
  static IntMat zero(std::size_t rows, std::size_t cols) { return IntMat(rows, cols); }
  static IntMat from_rows(const std::vector<IntVec>& rows);
  static IntMat diagonal(const IntVec& d);
  static IntMat column(const IntVec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  std::vector<IntVec> row_vectors() const;

  IntMat transpose() const;
  IntMat operator*(const IntMat& o) const;
  IntMat operator+(const IntMat& o) const;
  IntMat operator-() const;
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[i] += c * row[k]
  void add_row(std::size_t i, std::size_t k, const Int& c);
  /// col[j] += c * col[k]
  void add_col(std::size_t j, std::size_t k, const Int& c);
  void scale_row(std::size_t i, const Int& c);
  void scale_col(std::size_t j, const Int& c);

  Int max_abs() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

IntVec mat_vec(const IntMat& m, const IntVec& v);
AngleVec mat_vec(const IntMat& m, const AngleVec& v);

/// Exact determinant via fraction-free (Bareiss) elimination.
Int det(const IntMat& m);

bool is_unimodular(const IntMat& m);

/// Exact inverse of a unimodular integer matrix; throws on |det| != 1.
IntMat inverse_unimodular(const IntMat& m);

/// Symmetric matrix of exact angles; the additive part of a rotor symplectic
/// element. Entries stay reduced into [0, 1) turns.
class AngleMat {
 public:
  AngleMat() : n_(0) {}
  explicit AngleMat(std::size_t n) : n_(n), data_(n * n) {}

  static AngleMat zero(std::size_t n) { return AngleMat(n); }

  std::size_t size() const { return n_; }

  ExactAngle& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const ExactAngle& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Symmetric set: writes both (i, j) and (j, i).
  void set_sym(std::size_t i, std::size_t j, const ExactAngle& a);

  bool is_zero() const;
  bool is_symmetric() const;

  AngleMat operator+(const AngleMat& o) const;
  AngleMat operator-() const;
  bool operator==(const AngleMat& o) const { return n_ == o.n_ && data_ == o.data_; }

  /// B^T * C * B with integer B; exact, result reduced mod one turn.
  AngleMat congruence(const IntMat& b) const;

  /// C * v for an integer vector v.
  AngleVec apply(const IntVec& v) const;

 private:
  std::size_t n_;
  std::vector<ExactAngle> data_;
};

Int parse_int(const std::string& s);
std::string to_string(const Int& v);

}  // namespace rotorkit
