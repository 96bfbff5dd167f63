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

#include "rotorkit/exact.hpp"

#include <cmath>
#include <numbers>

namespace rotorkit {

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

Int rounded_div(const Int& a, const Int& b) {
  if (b == 0) throw_invalid("rounded_div: division by zero");
  Int q = floor_div(a, b);
  Int r = a - q * b;
  if (b > 0) {
    if (2 * r > b) ++q;
  } else {
    if (2 * r < b) ++q;
  }
  return q;
}

Int rat_floor(const Rat& r) {
  return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

ExactAngle ExactAngle::from_fraction(const Int& num, const Int& den) {
  if (den == 0) throw_invalid("ExactAngle: zero denominator");
  return ExactAngle(Rat(num, den));
}

ExactAngle ExactAngle::divided_by(const Int& k) const {
  if (k == 0) throw_invalid("ExactAngle: division by zero");
  return ExactAngle(turns_ / Rat(k));
}

void ExactAngle::reduce() {
  turns_ -= Rat(rat_floor(turns_));
}

double ExactAngle::radians() const {
  const double num = static_cast<double>(boost::multiprecision::numerator(turns_));
  const double den = static_cast<double>(boost::multiprecision::denominator(turns_));
  return 2.0 * std::numbers::pi * (num / den);
}

std::string ExactAngle::to_string() const {
  return boost::multiprecision::numerator(turns_).str() + "/" +
         boost::multiprecision::denominator(turns_).str();
}

IntMat::IntMat(std::size_t rows, std::size_t cols, std::vector<Int> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw_invalid("IntMat: data size mismatch");
}

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  const std::size_t cols = rows[0].size();
  IntMat m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw_invalid("IntMat: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMat IntMat::diagonal(const IntVec& d) {
  IntMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

IntMat IntMat::column(const IntVec& v) {
  IntMat m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
  return m;
}

IntVec IntMat::row(std::size_t i) const {
  IntVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntVec IntMat::col(std::size_t j) const {
  IntVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

std::vector<IntVec> IntMat::row_vectors() const {
  std::vector<IntVec> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = row(i);
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols_ != o.rows_) throw_invalid("IntMat: dimension mismatch in product");
  IntMat out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

IntMat IntMat::operator+(const IntMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw_invalid("IntMat: dimension mismatch in sum");
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

IntMat IntMat::operator-() const {
  IntMat out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

bool IntMat::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMat::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

void IntMat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::add_row(std::size_t i, std::size_t k, const Int& c) {
  if (c == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) += c * at(k, j);
}

void IntMat::add_col(std::size_t j, std::size_t k, const Int& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) += c * at(i, k);
}

void IntMat::scale_row(std::size_t i, const Int& c) {
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) *= c;
}

void IntMat::scale_col(std::size_t j, const Int& c) {
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) *= c;
}

Int IntMat::max_abs() const {
  Int m = 0;
  for (const auto& v : data_) {
    Int a = abs(v);
    if (a > m) m = a;
  }
  return m;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
  if (m.cols() != v.size()) throw_invalid("mat_vec: dimension mismatch");
  IntVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

AngleVec mat_vec(const IntMat& m, const AngleVec& v) {
  if (m.cols() != v.size()) throw_invalid("mat_vec: dimension mismatch");
  AngleVec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += Rat(m.at(i, j)) * v[j].turns();
    out[i] = ExactAngle(acc);
  }
  return out;
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw_invalid("det: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

bool is_unimodular(const IntMat& m) {
  if (m.rows() != m.cols()) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

IntMat inverse_unimodular(const IntMat& m) {
  if (m.rows() != m.cols()) throw_invalid("inverse: matrix must be square");
  const std::size_t n = m.rows();
  // Exact Gauss-Jordan over rationals, then integrality check.
  std::vector<Rat> a(n * n), inv(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i * n + j] = Rat(m.at(i, j));
      inv[i * n + j] = (i == j) ? 1 : 0;
    }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k] == 0) ++p;
    if (p == n) throw_math("inverse: matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[p * n + j], a[k * n + j]);
        std::swap(inv[p * n + j], inv[k * n + j]);
      }
    const Rat piv = a[k * n + k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k * n + j] /= piv;
      inv[k * n + j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i * n + k] == 0) continue;
      const Rat f = a[i * n + k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[k * n + j];
        inv[i * n + j] -= f * inv[k * n + j];
      }
    }
  }
  IntMat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& v = inv[i * n + j];
      if (boost::multiprecision::denominator(v) != 1)
        throw_math("inverse: matrix is not unimodular");
      out.at(i, j) = boost::multiprecision::numerator(v);
    }
  return out;
}

void AngleMat::set_sym(std::size_t i, std::size_t j, const ExactAngle& a) {
  at(i, j) = a;
  at(j, i) = a;
}

bool AngleMat::is_zero() const {
  for (const auto& a : data_)
    if (!a.is_zero()) return false;
  return true;
}

bool AngleMat::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (!(at(i, j) == at(j, i))) return false;
  return true;
}

AngleMat AngleMat::operator+(const AngleMat& o) const {
  if (n_ != o.n_) throw_invalid("AngleMat: dimension mismatch");
  AngleMat out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
  return out;
}

AngleMat AngleMat::operator-() const {
  AngleMat out(n_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
  return out;
}

AngleMat AngleMat::congruence(const IntMat& b) const {
  if (b.rows() != n_) throw_invalid("AngleMat: congruence dimension mismatch");
  const std::size_t m = b.cols();
  AngleMat out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Rat acc = 0;
      for (std::size_t p = 0; p < n_; ++p) {
        if (b.at(p, i) == 0) continue;
        for (std::size_t q = 0; q < n_; ++q) {
          if (b.at(q, j) == 0) continue;
          acc += Rat(b.at(p, i) * b.at(q, j)) * at(p, q).turns();
        }
      }
      out.set_sym(i, j, ExactAngle(acc));
    }
  return out;
}

AngleVec AngleMat::apply(const IntVec& v) const {
  if (v.size() != n_) throw_invalid("AngleMat: apply dimension mismatch");
  AngleVec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < n_; ++j) acc += Rat(v[j]) * at(i, j).turns();
    out[i] = ExactAngle(acc);
  }
  return out;
}

Int parse_int(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw_invalid("not an integer: '" + s + "'");
  }
}

std::string to_string(const Int& v) { return v.str(); }

}  // namespace rotorkit
