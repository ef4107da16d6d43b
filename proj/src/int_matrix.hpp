#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "mod2.hpp"

namespace crosscap {

using Integer = mpz_class;

// Square matrix of arbitrary-precision integers. at(r, c) (0-based) is the
// coefficient of generator r in the image of generator c.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int size);  // zero matrix
  static IntMatrix identity(int size);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int size() const noexcept { return size_; }
  Integer& at(int r, int c) { return data_[index(r, c)]; }
  const Integer& at(int r, int c) const { return data_[index(r, c)]; }

  std::vector<Integer> column(int c) const;
  std::vector<Integer> row(int r) const;
  std::vector<Integer> apply(const std::vector<Integer>& v) const;

  bool is_identity() const;
  Mod2Matrix reduce_mod2() const;
  std::vector<std::vector<std::string>> to_strings() const;
  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.size_ == b.size_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int r, int c) const;

  int size_ = 0;
  std::vector<Integer> data_;  // row-major
};

// Fraction-free (Bareiss) determinant; exact.
Integer determinant(const IntMatrix& m);

bool is_odd(const Integer& x);

}  // namespace crosscap
