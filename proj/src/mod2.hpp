#pragma once

// Linear algebra over F2 for the mod-2 homology of a closed non-orientable
// surface, in the basis of crosscap classes alpha_1..alpha_n. In that basis
// the intersection form is the standard inner product.
//
// Indices exposed by this header are 1-based.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace crosscap {

class Mod2Vector {
 public:
  explicit Mod2Vector(int dim);
  // 0/1 entries, coords[0] is coordinate 1.
  static Mod2Vector from_bits(std::initializer_list<int> coords);
  static Mod2Vector from_bits(const std::vector<int>& coords);
  static Mod2Vector unit(int dim, int i);
  static Mod2Vector ones(int dim);

  int dim() const noexcept { return dim_; }
  bool get(int i) const;
  void set(int i, bool value);
  void flip(int i);

  int weight() const noexcept;
  bool is_zero() const noexcept;
  std::vector<int> support() const;

  Mod2Vector& operator+=(const Mod2Vector& other);
  friend Mod2Vector operator+(Mod2Vector a, const Mod2Vector& b) { return a += b; }
  friend bool operator==(const Mod2Vector& a, const Mod2Vector& b) = default;

  std::string to_string() const;

  // Word-level access for matrix kernels.
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

 private:
  void check_index(int i) const;

  int dim_;
  std::vector<std::uint64_t> words_;
};

bool inner_product(const Mod2Vector& u, const Mod2Vector& v);

// Column j holds the image of e_j.
class Mod2Matrix {
 public:
  explicit Mod2Matrix(int dim);  // zero matrix
  static Mod2Matrix identity(int dim);
  static Mod2Matrix from_columns(std::vector<Mod2Vector> columns);
  // rows[r][c] in {0,1}; row-major literal for tests and parsing.
  static Mod2Matrix from_rows(const std::vector<std::vector<int>>& rows);

  int dim() const noexcept { return dim_; }
  bool get(int row, int col) const { return column(col).get(row); }
  void set(int row, int col, bool value) { cols_.at(col - 1).set(row, value); }
  const Mod2Vector& column(int j) const { return cols_.at(j - 1); }
  void set_column(int j, Mod2Vector v);

  Mod2Matrix transpose() const;
  bool is_identity() const;

  // Row-major bit key; unique per matrix for dim <= 8.
  std::uint64_t key() const;

  friend Mod2Matrix operator*(const Mod2Matrix& a, const Mod2Matrix& b);
  friend Mod2Vector operator*(const Mod2Matrix& a, const Mod2Vector& v);
  friend bool operator==(const Mod2Matrix& a, const Mod2Matrix& b) = default;

  std::string to_string() const;

 private:
  int dim_;
  std::vector<Mod2Vector> cols_;
};

// True iff M^T M = I.
bool is_orthogonal(const Mod2Matrix& m);

// True iff M^T G M = G for a symmetric Gram matrix G.
bool preserves_form(const Mod2Matrix& m, const Mod2Matrix& gram);

// The involution R(i_1..i_2k): e_{i_j} -> sum of the other support vectors,
// every other basis vector fixed. Equivalently v -> v + (v.g) g where g is
// the support indicator.
class TwistGenerator {
 public:
  // Support must be strictly increasing, even-sized, >= 2, indices >= 1.
  explicit TwistGenerator(std::vector<int> support);

  const std::vector<int>& support() const noexcept { return support_; }
  int max_index() const noexcept { return support_.back(); }
  Mod2Vector gamma(int dim) const;

  friend bool operator==(const TwistGenerator&, const TwistGenerator&) = default;

  std::string to_string() const;

 private:
  std::vector<int> support_;
};

Mod2Matrix twist_matrix(const TwistGenerator& g, int dim);

// v + (v.gamma) gamma; gamma must have even, nonzero weight.
Mod2Vector apply_transvection(const Mod2Vector& v, const Mod2Vector& gamma);

// All valid twist generators for a given dimension, ordered by support size
// and then lexicographically.
std::vector<TwistGenerator> all_twist_generators(int dim);

}  // namespace crosscap
