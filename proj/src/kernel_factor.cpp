#include "kernel_factor.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "error.hpp"

namespace crosscap {

MoveWord SlideWord::as_moves() const { return MoveWord(moves.begin(), moves.end()); }

namespace {

using Slides = std::vector<CrosscapSlide>;

MoveWord to_move_word(const Slides& s) { return MoveWord(s.begin(), s.end()); }

void check_budget(std::size_t used, const Integer& extra, std::size_t limit) {
  if (extra > Integer(static_cast<unsigned long>(limit)) ||
      used + extra.get_ui() > limit)
    throw Error(ErrorCode::ResourceLimit,
                "kernel factorization exceeds the move limit of " + std::to_string(limit));
}

// ---------------------------------------------------------------------------
// Row-by-row descent with right moves only.

class RowDescent {
 public:
  RowDescent(const IntMatrix& a, std::size_t limit) : b_(a), n_(a.size()), limit_(limit) {}

  void run() {
    if (n_ > 1) reduce_first_row();
    for (int i = 2; i <= n_; ++i) reduce_row(i);
    check_invariant(b_.is_identity(), "row descent did not reach the identity");
  }

  // The applied moves reversed multiply to the input.
  Slides word() const { return Slides(applied_.rbegin(), applied_.rend()); }
  Trace take_trace() { return std::move(trace_); }

 private:
  const Integer& at(int r, int c) const { return b_.at(r - 1, c - 1); }

  Integer complexity(int row, int lo, int hi) const {
    Integer s = 0;
    for (int c = lo; c <= hi; ++c) s += abs(at(row, c));
    return s;
  }

  bool row_is_unit(int row) const {
    for (int c = 1; c <= n_; ++c)
      if (at(row, c) != (c == row ? 1 : 0)) return false;
    return true;
  }

  // Postcomposes e_ij and returns the window complexity after the move.
  Integer apply(int i, int j, const char* phase, int row, int lo, int hi) {
    check_budget(applied_.size(), 1, limit_);
    const Integer before = complexity(row, lo, hi);
    for (int r = 0; r < n_; ++r) {
      b_.at(r, i - 1) += 2 * b_.at(r, j - 1);
      b_.at(r, j - 1) = -b_.at(r, j - 1);
    }
    applied_.push_back({i, j});
    Integer after = complexity(row, lo, hi);
    trace_.push_back({phase, row, Side::Right, {CrosscapSlide{i, j}}, before.get_str(), after.get_str()});
    check_state(row);
    return after;
  }

  void check_state(int active_row) const {
    for (int r = 1; r <= n_; ++r) {
      Integer sum = 0;
      for (int c = 1; c <= n_; ++c) {
        sum += at(r, c);
        check_invariant(is_odd(at(r, c)) == (r == c), "working matrix left the mod-2 kernel");
      }
      check_invariant(sum == 1, "working matrix lost the row-sum condition");
    }
    for (int r = 1; r < active_row; ++r)
      check_invariant(row_is_unit(r), "an already reduced row changed");
  }

  void reduce_first_row() {
    while (!row_is_unit(1)) {
      // a_11 is odd, the rest even, and the row sums to 1, so unless the row
      // is e_1 some entry has the opposite sign to a_11.
      int j = 0;
      for (int t = 2; t <= n_ && j == 0; ++t)
        if (at(1, t) != 0 && sgn(at(1, t)) != sgn(at(1, 1))) j = t;
      check_invariant(j != 0, "row 1 has no entry of opposite sign");
      const Integer before = complexity(1, 1, n_);
      const Integer after = abs(at(1, 1)) > abs(at(1, j)) ? apply(1, j, "row1", 1, 1, n_)
                                                          : apply(j, 1, "row1", 1, 1, n_);
      check_invariant(after < before, "C1 did not decrease");
    }
  }

  // e_1k flips a_ik and only touches the head of row i.
  void normalize_signs(int i) {
    for (int k = i; k <= n_; ++k) {
      const bool wrong = k == i ? at(i, k) < 0 : at(i, k) > 0;
      if (!wrong) continue;
      const Integer before = complexity(i, i, n_);
      const Integer after = apply(1, k, "sign", i, i, n_);
      check_invariant(after == before, "sign normalization changed Ci");
    }
  }

  void reduce_row(int i) {
    while (true) {
      normalize_signs(i);
      int j = 0;
      for (int t = i + 1; t <= n_ && j == 0; ++t)
        if (at(i, t) != 0) j = t;
      if (j == 0) break;
      const Integer before = complexity(i, i, n_);
      const Integer after = at(i, i) > abs(at(i, j)) ? apply(i, j, "reduce", i, i, n_)
                                                     : apply(j, i, "reduce", i, i, n_);
      check_invariant(after < before, "Ci did not decrease");
    }
    check_invariant(abs(at(i, i)) == 1, "diagonal entry is not a unit after clearing the row tail");

    while (true) {
      int j = 0;
      bool any = false;
      for (int t = 1; t < i; ++t) {
        if (at(i, t) == 0) continue;
        any = true;
        if (j == 0 && sgn(at(i, t)) != sgn(at(i, i))) j = t;
      }
      if (!any) break;
      check_invariant(j != 0, "row head has no entry of opposite sign to the diagonal");
      const Integer before = complexity(i, 1, i);
      const Integer after = apply(j, i, "lower", i, 1, i);
      check_invariant(after + 2 == before, "C'i did not drop by 2");
    }
    check_invariant(row_is_unit(i), "row is not a unit vector after reduction");
  }

  IntMatrix b_;
  int n_;
  std::size_t limit_;
  Slides applied_;
  Trace trace_;
};

// ---------------------------------------------------------------------------
// Reduction in the basis e_k = alpha_k (k < n), e_n = alpha_1 + ... + alpha_n.
// There a kernel element is [[Q, 0], [p^T, 1]] with Q = I mod 2 and p even.
// In those coordinates e_nj negates e_j, e_ij e_nj adds 2 e_j to the image of
// e_i (i, j < n), and e_in composed with a product of those shifts p.

struct Choice {
  Integer k;
  Integer value;  // objective at k
};

// Nonzero integer k minimizing sum_r |x_r + 2 k y_r|. The objective is convex
// and piecewise linear, so the optimum sits next to a breakpoint.
std::optional<Choice> best_multiplier(const std::vector<const Integer*>& x,
                                      const std::vector<const Integer*>& y) {
  std::optional<Choice> best;
  Integer k;
  Integer v;
  Integer t;
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (*y[r] == 0) continue;
    Integer den = 2 * *y[r];
    Integer num = -*x[r];
    Integer base;
    mpz_fdiv_q(base.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    for (int d = 0; d < 2; ++d) {
      k = base + d;
      if (k == 0) continue;
      v = 0;
      for (std::size_t s = 0; s < x.size(); ++s) {
        t = *x[s] + 2 * k * *y[s];
        v += abs(t);
      }
      if (!best || v < best->value || (v == best->value && abs(k) < abs(best->k)))
        best = Choice{k, v};
    }
  }
  return best;
}

class Reduced {
  static constexpr unsigned long kDirectMultiplier = 8;

 public:
  Reduced(const IntMatrix& a, std::size_t limit)
      : n_(a.size()), m_(a.size() - 1), q_(a.size() - 1), p_(a.size() - 1), active_(a.size() - 1, true),
        limit_(limit) {
    for (int j = 0; j < m_; ++j) {
      p_[j] = a.at(m_, j);
      for (int k = 0; k < m_; ++k) q_.at(k, j) = a.at(k, j) - a.at(m_, j);
    }
  }

  void run() {
    while (true) {
      descend();
      const int i = first_unsettled();
      if (i < 0) break;
      sweep(i);
    }
    for (int j = 0; j < m_; ++j)
      if (q_.at(j, j) < 0) {
        const Integer c = q_complexity();
        right_flip(j);
        record("sign", 0, Side::Right, flip_word(j), c, q_complexity());
      }
    check_invariant(q_.is_identity(), "congruence block did not reach the identity");
    translate();
    shift();
  }

  // left moves, then the right moves in reverse
  Slides word() const {
    Slides w = left_;
    w.insert(w.end(), right_.rbegin(), right_.rend());
    return w;
  }
  Trace take_trace() { return std::move(trace_); }

 private:
  // 1-based alpha index of the 0-based e index a (a < m).
  static int alpha(int a) { return a + 1; }

  // Word for the transvection adding 2k e_j to the image of e_i. Large k
  // goes through the commutator [X(l,j,a), X(i,l,b)] = X(i,j,2ab) with a
  // third index l, which needs about sqrt(k) moves instead of k.
  Slides x_word(int i, int j, const Integer& k) const {
    Slides w;
    append_x(w, i, j, k);
    return w;
  }

  void append_x(Slides& w, int i, int j, const Integer& k) const {
    const Integer reps = abs(k);
    if (m_ >= 3 && reps > kDirectMultiplier) {
      int l = 0;
      while (l == i || l == j) ++l;
      Integer half = reps / 2;
      Integer a;
      mpz_sqrt(a.get_mpz_t(), half.get_mpz_t());
      const Integer b = k / (2 * a);  // truncates toward zero
      const Integer r = k - 2 * a * b;
      append_x(w, l, j, a);
      append_x(w, i, l, b);
      append_x(w, l, j, -a);
      append_x(w, i, l, -b);
      append_x(w, i, j, r);
      return;
    }
    check_budget(left_.size() + right_.size() + w.size(), 2 * reps, limit_);
    const CrosscapSlide first{alpha(i), alpha(j)};
    const CrosscapSlide second{n_, alpha(j)};
    for (unsigned long r = 0; r < reps.get_ui(); ++r) {
      if (k > 0) {
        w.push_back(first);
        w.push_back(second);
      } else {
        w.push_back(second);
        w.push_back(first);
      }
    }
  }

  Slides flip_word(int j) const {
    check_budget(left_.size() + right_.size(), 1, limit_);
    return {CrosscapSlide{n_, alpha(j)}};
  }

  // Word for the translation p_i += 2 dir.
  Slides shift_word(int i, int dir) const {
    check_budget(left_.size() + right_.size(), 2 * m_, limit_);
    Slides w{CrosscapSlide{alpha(i), n_}};
    for (int k = 0; k < m_; ++k) {
      if (k == i) continue;
      w.push_back({alpha(i), alpha(k)});
      w.push_back({n_, alpha(k)});
    }
    w.push_back({n_, alpha(i)});
    if (dir > 0) std::reverse(w.begin(), w.end());
    return w;
  }

  // col i += 2k col j, and the matching change of p
  void right_x(int i, int j, const Integer& k) {
    for (int r = 0; r < m_; ++r) q_.at(r, i) += 2 * k * q_.at(r, j);
    p_[i] += 2 * k * p_[j];
  }
  // row j += 2k row i
  void left_x(int i, int j, const Integer& k) {
    for (int c = 0; c < m_; ++c) q_.at(j, c) += 2 * k * q_.at(i, c);
  }
  void right_flip(int j) {
    for (int r = 0; r < m_; ++r) q_.at(r, j) = -q_.at(r, j);
    p_[j] = -p_[j];
  }

  void record(const char* phase, int row, Side side, const Slides& w, const Integer& before,
              const Integer& after) {
    if (side == Side::Right)
      right_.insert(right_.end(), w.begin(), w.end());
    else
      left_.insert(left_.end(), w.rbegin(), w.rend());
    trace_.push_back({phase, row, side, to_move_word(w), before.get_str(), after.get_str()});
    check_state();
  }

  void check_state() const {
    for (int r = 0; r < m_; ++r) {
      check_invariant(!is_odd(p_[r]), "translation part became odd");
      for (int c = 0; c < m_; ++c)
        check_invariant(is_odd(q_.at(r, c)) == (r == c), "working matrix left the mod-2 kernel");
    }
  }

  Integer q_complexity() const {
    Integer s = 0;
    for (int r = 0; r < m_; ++r)
      for (int c = 0; c < m_; ++c) s += abs(q_.at(r, c));
    return s;
  }

  Integer p_complexity() const {
    Integer s = 0;
    for (const auto& v : p_) s += abs(v);
    return s;
  }

  struct Candidate {
    Side side = Side::Right;
    int i = 0;
    int j = 0;
    Integer k;
    Integer delta;
  };

  // Greedy descent of sum |q_rc| + sum |p_c| over row and column
  // transvections between active indices, each with its best multiplier.
  void descend() {
    const Integer zero = 0;
    std::vector<const Integer*> x(m_ + 1);
    std::vector<const Integer*> y(m_ + 1);
    while (true) {
      std::optional<Candidate> best;
      auto consider = [&](Side side, int i, int j, const Choice& c, const Integer& old) {
        Integer delta = c.value - old;
        if (delta >= 0) return;
        if (!best || delta < best->delta || (delta == best->delta && abs(c.k) < abs(best->k)))
          best = Candidate{side, i, j, c.k, std::move(delta)};
      };
      for (int i = 0; i < m_; ++i) {
        if (!active_[i]) continue;
        for (int j = 0; j < m_; ++j) {
          if (j == i || !active_[j]) continue;
          // column i += 2k column j, which also moves p_i
          Integer old = abs(p_[i]);
          x[m_] = &p_[i];
          y[m_] = &p_[j];
          for (int r = 0; r < m_; ++r) {
            x[r] = &q_.at(r, i);
            y[r] = &q_.at(r, j);
            old += abs(q_.at(r, i));
          }
          if (auto c = best_multiplier(x, y)) consider(Side::Right, i, j, *c, old);
          // row j += 2k row i
          old = 0;
          for (int c = 0; c < m_; ++c) {
            x[c] = &q_.at(j, c);
            y[c] = &q_.at(i, c);
            old += abs(q_.at(j, c));
          }
          x[m_] = &zero;
          y[m_] = &zero;
          if (auto c = best_multiplier(x, y)) consider(Side::Left, i, j, *c, old);
        }
      }
      if (!best) return;
      const Integer before = q_complexity() + p_complexity();
      const Slides w = x_word(best->i, best->j, best->k);
      if (best->side == Side::Right)
        right_x(best->i, best->j, best->k);
      else
        left_x(best->i, best->j, best->k);
      const Integer after = q_complexity() + p_complexity();
      check_invariant(after < before, "descent step did not lower the complexity");
      record("descent", 0, best->side, w, before, after);
    }
  }

  // Smallest active index whose row or column is not yet a signed unit
  // vector, or -1 when the active block is diagonal.
  int first_unsettled() const {
    for (int i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      for (int t = 0; t < m_; ++t)
        if (t != i && (q_.at(i, t) != 0 || q_.at(t, i) != 0)) return i;
    }
    return -1;
  }

  Integer row_complexity(int i) const {
    Integer s = 0;
    for (int c = 0; c < m_; ++c) s += abs(q_.at(i, c));
    return s;
  }

  Integer column_off_diagonal(int i) const {
    Integer s = 0;
    for (int r = 0; r < m_; ++r)
      if (r != i) s += abs(q_.at(r, i));
    return s;
  }

  // k with |a + 2kb| smallest; |a + 2kb| <= |b|.
  static Integer nearest(const Integer& a, const Integer& b) {
    Integer num = -a;
    Integer den = 2 * b;
    Integer base;
    mpz_fdiv_q(base.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer next = base + 1;
    return abs(a + 2 * base * b) <= abs(a + 2 * next * b) ? base : next;
  }

  // Reduction step on a list of entries: the pair (target, source) whose
  // best multiplier k gives the largest drop of |target| per unit of |k|.
  struct Step {
    int target = -1;
    int source = -1;
    Integer k;
  };
  static std::optional<Step> euclid_step(const std::vector<const Integer*>& v) {
    std::optional<Step> best;
    Integer best_drop;
    for (int t = 0; t < static_cast<int>(v.size()); ++t) {
      if (!v[t] || *v[t] == 0) continue;
      for (int s = 0; s < static_cast<int>(v.size()); ++s) {
        if (s == t || !v[s] || *v[s] == 0 || abs(*v[s]) >= abs(*v[t])) continue;
        Integer k = nearest(*v[t], *v[s]);
        Integer drop = abs(*v[t]) - abs(*v[t] + 2 * k * *v[s]);
        if (drop <= 0) continue;
        // drop / |k| > best_drop / |best k|
        if (!best || drop * abs(best->k) > best_drop * abs(k)) {
          best = Step{t, s, std::move(k)};
          best_drop = std::move(drop);
        }
      }
    }
    return best;
  }

  // Euclid on row i with column moves, then on column i with row moves,
  // after which index i is settled for good.
  void sweep(int i) {
    const int row = i + 1;
    std::vector<const Integer*> v(m_);
    while (row_complexity(i) != abs(q_.at(i, i))) {
      for (int t = 0; t < m_; ++t) v[t] = active_[t] ? &q_.at(i, t) : nullptr;
      const auto pick = euclid_step(v);
      check_invariant(pick.has_value(), "row sweep found no reducing pair");
      const auto& [target, source, k] = *pick;
      const Integer before = row_complexity(i);
      const Slides w = x_word(target, source, k);
      right_x(target, source, k);
      const Integer after = row_complexity(i);
      check_invariant(after < before, "row sweep did not lower the row complexity");
      record("sweep", row, Side::Right, w, before, after);
    }
    // The row is now q_ii e_i, and the determinant forces q_ii = +-1.
    check_invariant(abs(q_.at(i, i)) == 1 && row_complexity(i) == 1, "row is not a unit vector after the sweep");
    if (q_.at(i, i) < 0) {
      const Integer c = row_complexity(i);
      right_flip(i);
      record("sign", row, Side::Right, flip_word(i), c, row_complexity(i));
    }
    while (column_off_diagonal(i) != 0) {
      for (int r = 0; r < m_; ++r) v[r] = active_[r] ? &q_.at(r, i) : nullptr;
      const auto pick = euclid_step(v);
      check_invariant(pick.has_value(), "column clearing found no reducing pair");
      const auto& [target, source, k] = *pick;
      const Integer before = column_off_diagonal(i);
      const Slides w = x_word(source, target, k);
      left_x(source, target, k);
      const Integer after = column_off_diagonal(i);
      check_invariant(after < before, "column clearing did not lower the complexity");
      record("clear", row, Side::Left, w, before, after);
    }
    active_[i] = false;
  }

  // Conjugating the translation by a transvection runs Euclid on p. Equal
  // magnitudes cannot reduce each other, so one of them takes a unit shift.
  void translate() {
    std::vector<const Integer*> v(m_);
    while (true) {
      int nonzero = 0;
      for (int t = 0; t < m_; ++t) {
        v[t] = &p_[t];
        nonzero += p_[t] != 0;
      }
      if (nonzero < 2) return;
      const auto pick = euclid_step(v);
      if (!pick) {
        int t = 0;
        while (p_[t] == 0) ++t;
        unit_shift(t);
        continue;
      }
      const auto& [bi, bj, bk] = *pick;
      const Integer before = p_complexity();
      const Slides w = x_word(bi, bj, bk);
      right_x(bi, bj, bk);
      const Integer after = p_complexity();
      check_invariant(after < before, "translation step did not lower the complexity");
      record("translate", 0, Side::Right, w, before, after);
      const Slides undo = x_word(bi, bj, -bk);
      left_x(bi, bj, -bk);
      record("restore", 0, Side::Left, undo, after, p_complexity());
      check_invariant(q_.is_identity(), "conjugation did not restore the congruence block");
    }
  }

  void unit_shift(int i) {
    const int dir = p_[i] > 0 ? -1 : 1;
    const Integer before = p_complexity();
    const Slides w = shift_word(i, dir);
    p_[i] += 2 * dir;
    const Integer after = p_complexity();
    record("shift", 0, Side::Right, w, before, after);
  }

  void shift() {
    for (int i = 0; i < m_; ++i)
      while (p_[i] != 0) unit_shift(i);
  }

  int n_;
  int m_;
  IntMatrix q_;
  std::vector<Integer> p_;
  std::vector<bool> active_;
  std::size_t limit_;
  Slides left_;
  Slides right_;  // application order
  Trace trace_;
};

}  // namespace

KernelFactorization factor_kernel(const ClosedAutomorphism& a, const KernelOptions& options) {
  const ClosedAutomorphism checked = validate_closed(a.matrix, a.crosscaps);
  if (!reduce_mod2(checked).is_identity())
    throw Error(ErrorCode::NotKernel, "automorphism is not the identity mod 2");
  const int n = checked.crosscaps;

  KernelFactorization out;
  out.word.signature = {n, 0};
  if (options.strategy == KernelStrategy::RowDescent) {
    RowDescent r(checked.matrix, options.move_limit);
    r.run();
    out.word.moves = r.word();
    out.trace = r.take_trace();
  } else if (n > 1) {
    Reduced r(checked.matrix, options.move_limit);
    r.run();
    out.word.moves = r.word();
    out.trace = r.take_trace();
  }
  check_invariant(word_product(out.word.as_moves(), out.word.signature) == checked.matrix,
                  "kernel word does not reproduce the input");
  return out;
}

}  // namespace crosscap
