#include "mod2.hpp"

#include <bit>
#include <sstream>

#include "error.hpp"

namespace crosscap {

namespace {

constexpr int kWordBits = 64;

std::size_t word_count(int dim) { return static_cast<std::size_t>((dim + kWordBits - 1) / kWordBits); }

void require_dim(int dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "dimension must be >= 1, got " + std::to_string(dim));
}

}  // namespace

Mod2Vector::Mod2Vector(int dim) : dim_(dim) {
  require_dim(dim);
  words_.assign(word_count(dim), 0);
}

Mod2Vector Mod2Vector::from_bits(std::initializer_list<int> coords) {
  return from_bits(std::vector<int>(coords));
}

Mod2Vector Mod2Vector::from_bits(const std::vector<int>& coords) {
  Mod2Vector v(static_cast<int>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] != 0 && coords[i] != 1) throw Error(ErrorCode::InvalidArgument, "bit entries must be 0 or 1");
    if (coords[i]) v.set(static_cast<int>(i) + 1, true);
  }
  return v;
}

Mod2Vector Mod2Vector::unit(int dim, int i) {
  Mod2Vector v(dim);
  v.set(i, true);
  return v;
}

Mod2Vector Mod2Vector::ones(int dim) {
  Mod2Vector v(dim);
  for (int i = 1; i <= dim; ++i) v.set(i, true);
  return v;
}

void Mod2Vector::check_index(int i) const {
  if (i < 1 || i > dim_)
    throw Error(ErrorCode::IndexOutOfRange,
                "coordinate " + std::to_string(i) + " out of range 1.." + std::to_string(dim_));
}

bool Mod2Vector::get(int i) const {
  check_index(i);
  const int k = i - 1;
  return (words_[k / kWordBits] >> (k % kWordBits)) & 1U;
}

void Mod2Vector::set(int i, bool value) {
  check_index(i);
  const int k = i - 1;
  const std::uint64_t mask = std::uint64_t{1} << (k % kWordBits);
  if (value)
    words_[k / kWordBits] |= mask;
  else
    words_[k / kWordBits] &= ~mask;
}

void Mod2Vector::flip(int i) {
  check_index(i);
  const int k = i - 1;
  words_[k / kWordBits] ^= std::uint64_t{1} << (k % kWordBits);
}

int Mod2Vector::weight() const noexcept {
  int w = 0;
  for (auto word : words_) w += std::popcount(word);
  return w;
}

bool Mod2Vector::is_zero() const noexcept {
  for (auto word : words_)
    if (word) return false;
  return true;
}

std::vector<int> Mod2Vector::support() const {
  std::vector<int> out;
  for (int i = 1; i <= dim_; ++i)
    if (get(i)) out.push_back(i);
  return out;
}

Mod2Vector& Mod2Vector::operator+=(const Mod2Vector& other) {
  if (other.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::string Mod2Vector::to_string() const {
  std::string s = "(";
  for (int i = 1; i <= dim_; ++i) {
    if (i > 1) s += ',';
    s += get(i) ? '1' : '0';
  }
  return s + ")";
}

bool inner_product(const Mod2Vector& u, const Mod2Vector& v) {
  if (u.dim() != v.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "inner product of vectors of dims " + std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
  int parity = 0;
  for (std::size_t w = 0; w < u.words().size(); ++w) parity ^= std::popcount(u.words()[w] & v.words()[w]) & 1;
  return parity != 0;
}

Mod2Matrix::Mod2Matrix(int dim) : dim_(dim) {
  require_dim(dim);
  cols_.assign(static_cast<std::size_t>(dim), Mod2Vector(dim));
}

Mod2Matrix Mod2Matrix::identity(int dim) {
  Mod2Matrix m(dim);
  for (int j = 1; j <= dim; ++j) m.set(j, j, true);
  return m;
}

Mod2Matrix Mod2Matrix::from_columns(std::vector<Mod2Vector> columns) {
  const int dim = static_cast<int>(columns.size());
  Mod2Matrix m(dim);
  for (int j = 1; j <= dim; ++j) m.set_column(j, std::move(columns[j - 1]));
  return m;
}

Mod2Matrix Mod2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int dim = static_cast<int>(rows.size());
  Mod2Matrix m(dim);
  for (int r = 1; r <= dim; ++r) {
    if (static_cast<int>(rows[r - 1].size()) != dim) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    for (int c = 1; c <= dim; ++c) {
      const int bit = rows[r - 1][c - 1];
      if (bit != 0 && bit != 1) throw Error(ErrorCode::InvalidArgument, "bit entries must be 0 or 1");
      m.set(r, c, bit == 1);
    }
  }
  return m;
}

void Mod2Matrix::set_column(int j, Mod2Vector v) {
  if (v.dim() != dim_) throw Error(ErrorCode::DimensionMismatch, "column dimension differs from matrix dimension");
  cols_.at(j - 1) = std::move(v);
}

Mod2Matrix Mod2Matrix::transpose() const {
  Mod2Matrix t(dim_);
  for (int r = 1; r <= dim_; ++r)
    for (int c = 1; c <= dim_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

bool Mod2Matrix::is_identity() const { return *this == identity(dim_); }

std::uint64_t Mod2Matrix::key() const {
  if (dim_ > 8) throw Error(ErrorCode::ResourceLimit, "bit keys are limited to dim <= 8");
  std::uint64_t k = 0;
  int bit = 0;
  for (int r = 1; r <= dim_; ++r)
    for (int c = 1; c <= dim_; ++c, ++bit)
      if (get(r, c)) k |= std::uint64_t{1} << bit;
  return k;
}

Mod2Vector operator*(const Mod2Matrix& a, const Mod2Vector& v) {
  if (a.dim() != v.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector dimension mismatch");
  Mod2Vector out(a.dim());
  for (int j = 1; j <= a.dim(); ++j)
    if (v.get(j)) out += a.column(j);
  return out;
}

Mod2Matrix operator*(const Mod2Matrix& a, const Mod2Matrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix-matrix dimension mismatch");
  Mod2Matrix out(a.dim());
  for (int j = 1; j <= a.dim(); ++j) out.set_column(j, a * b.column(j));
  return out;
}

std::string Mod2Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 1; r <= dim_; ++r) {
    if (r > 1) os << ',';
    os << '[';
    for (int c = 1; c <= dim_; ++c) os << (c > 1 ? "," : "") << (get(r, c) ? 1 : 0);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_orthogonal(const Mod2Matrix& m) {
  for (int i = 1; i <= m.dim(); ++i) {
    if (m.column(i).weight() % 2 != 1) return false;
    for (int j = i + 1; j <= m.dim(); ++j)
      if (inner_product(m.column(i), m.column(j))) return false;
  }
  return true;
}

bool preserves_form(const Mod2Matrix& m, const Mod2Matrix& gram) {
  if (m.dim() != gram.dim()) throw Error(ErrorCode::DimensionMismatch, "Gram matrix dimension mismatch");
  const Mod2Matrix gm = gram * m;
  for (int i = 1; i <= m.dim(); ++i)
    for (int j = 1; j <= m.dim(); ++j)
      if (inner_product(m.column(i), gm.column(j)) != gram.get(i, j)) return false;
  return true;
}

TwistGenerator::TwistGenerator(std::vector<int> support) : support_(std::move(support)) {
  if (support_.size() < 2 || support_.size() % 2 != 0)
    throw Error(ErrorCode::BadTwistSupport,
                "twist support must have even size >= 2, got " + std::to_string(support_.size()));
  if (support_.front() < 1) throw Error(ErrorCode::IndexOutOfRange, "twist support indices are 1-based");
  for (std::size_t k = 1; k < support_.size(); ++k)
    if (support_[k] <= support_[k - 1])
      throw Error(ErrorCode::BadTwistSupport, "twist support must be strictly increasing");
}

Mod2Vector TwistGenerator::gamma(int dim) const {
  if (max_index() > dim)
    throw Error(ErrorCode::IndexOutOfRange,
                "twist support index " + std::to_string(max_index()) + " exceeds dimension " + std::to_string(dim));
  Mod2Vector g(dim);
  for (int i : support_) g.set(i, true);
  return g;
}

std::string TwistGenerator::to_string() const {
  std::string s = "R(";
  for (std::size_t k = 0; k < support_.size(); ++k) s += (k ? "," : "") + std::to_string(support_[k]);
  return s + ")";
}

Mod2Matrix twist_matrix(const TwistGenerator& g, int dim) {
  const Mod2Vector gamma = g.gamma(dim);
  Mod2Matrix m = Mod2Matrix::identity(dim);
  for (int i : g.support()) m.set_column(i, gamma + Mod2Vector::unit(dim, i));
  return m;
}

Mod2Vector apply_transvection(const Mod2Vector& v, const Mod2Vector& gamma) {
  if (gamma.is_zero() || gamma.weight() % 2 != 0)
    throw Error(ErrorCode::BadTwistSupport, "transvection vector must have even nonzero weight");
  if (inner_product(v, gamma)) return v + gamma;
  return v;
}

std::vector<TwistGenerator> all_twist_generators(int dim) {
  require_dim(dim);
  if (dim > 24) throw Error(ErrorCode::ResourceLimit, "too many twist generators to list for dim " + std::to_string(dim));
  std::vector<TwistGenerator> out;
  for (int size = 2; size <= dim; size += 2) {
    // Lexicographic k-subsets of 1..dim.
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) idx[k] = k + 1;
    while (true) {
      out.emplace_back(idx);
      int k = size - 1;
      while (k >= 0 && idx[k] == dim - size + k + 1) --k;
      if (k < 0) break;
      ++idx[k];
      for (int t = k + 1; t < size; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return out;
}

}  // namespace crosscap
