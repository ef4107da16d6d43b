#include "int_matrix.hpp"

#include <sstream>
#include <utility>

#include "error.hpp"

namespace crosscap {

IntMatrix::IntMatrix(int size) : size_(size) {
  if (size < 1) throw Error(ErrorCode::InvalidArgument, "matrix size must be >= 1");
  data_.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), Integer(0));
}

IntMatrix IntMatrix::identity(int size) {
  IntMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(rows[r].size()) != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    for (int c = 0; c < n; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Integer>> big;
  big.reserve(rows.size());
  for (const auto& row : rows) big.emplace_back(row.begin(), row.end());
  return from_rows(big);
}

std::size_t IntMatrix::index(int r, int c) const {
  if (r < 0 || r >= size_ || c < 0 || c >= size_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(c);
}

std::vector<Integer> IntMatrix::column(int c) const {
  std::vector<Integer> out(static_cast<std::size_t>(size_));
  for (int r = 0; r < size_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<Integer> IntMatrix::row(int r) const {
  std::vector<Integer> out(static_cast<std::size_t>(size_));
  for (int c = 0; c < size_; ++c) out[c] = at(r, c);
  return out;
}

std::vector<Integer> IntMatrix::apply(const std::vector<Integer>& v) const {
  if (static_cast<int>(v.size()) != size_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<Integer> out(v.size(), Integer(0));
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c)
      if (v[c] != 0) out[r] += at(r, c) * v[c];
  return out;
}

bool IntMatrix::is_identity() const { return *this == identity(size_); }

bool is_odd(const Integer& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

Mod2Matrix IntMatrix::reduce_mod2() const {
  Mod2Matrix out(size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c)
      if (is_odd(at(r, c))) out.set(r + 1, c + 1, true);
  return out;
}

std::vector<std::vector<std::string>> IntMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(static_cast<std::size_t>(size_));
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) out[r].push_back(at(r, c).get_str());
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < size_; ++r) {
    os << (r ? ",[" : "[");
    for (int c = 0; c < size_; ++c) os << (c ? "," : "") << at(r, c).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  const int n = a.size();
  IntMatrix out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const Integer& ark = a.at(r, k);
      if (ark == 0) continue;
      for (int c = 0; c < n; ++c) out.at(r, c) += ark * b.at(k, c);
    }
  return out;
}

Integer determinant(const IntMatrix& m) {
  const int n = m.size();
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a.at(k, k) == 0) {
      int p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Integer t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = std::move(t);
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

}  // namespace crosscap
