#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace khom {

using Rat = mpq_class;

// Sparse matrix over Q with row-major storage: each row keeps its nonzero
// entries sorted by column. All stored entries are nonzero and in bounds.
class RationalMatrix {
 public:
  using Entry = std::pair<std::size_t, Rat>;  // (column, value)

  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), row_(rows) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.row_[i].push_back({i, Rat(1)});
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::size_t nonzero_count() const {
    std::size_t n = 0;
    for (const auto& r : row_) n += r.size();
    return n;
  }

  bool is_zero() const { return nonzero_count() == 0; }

  const std::vector<Entry>& row(std::size_t i) const {
    if (i >= rows_) throw std::invalid_argument("matrix index out of range");
    return row_[i];
  }

  Rat get(std::size_t i, std::size_t j) const {
    check_bounds(i, j);
    const auto& r = row_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, entry_less);
    return (it != r.end() && it->first == j) ? it->second : Rat(0);
  }

  void set(std::size_t i, std::size_t j, const Rat& v) {
    check_bounds(i, j);
    auto& r = row_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, entry_less);
    if (it != r.end() && it->first == j) {
      if (v == 0)
        r.erase(it);
      else
        it->second = v;
    } else if (v != 0) {
      r.insert(it, {j, v});
    }
  }

  void add(std::size_t i, std::size_t j, const Rat& v) {
    if (v == 0) return;
    check_bounds(i, j);
    auto& r = row_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, entry_less);
    if (it != r.end() && it->first == j) {
      it->second += v;
      if (it->second == 0) r.erase(it);
    } else {
      r.insert(it, {j, v});
    }
  }

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product: shape mismatch");
    RationalMatrix c(a.rows_, b.cols_);
    std::vector<Rat> acc(b.cols_, Rat(0));
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      touched.clear();
      for (const auto& [k, av] : a.row_[i]) {
        for (const auto& [j, bv] : b.row_[k]) {
          if (acc[j] == 0) touched.push_back(j);
          acc[j] += av * bv;
        }
      }
      std::sort(touched.begin(), touched.end());
      for (std::size_t j : touched) {
        if (acc[j] != 0) c.row_[i].push_back({j, acc[j]});
        acc[j] = 0;
      }
    }
    return c;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.row_ == b.row_;
  }

  // Submatrix on the given row/column index lists (reindexed densely in the
  // order given). Column indices must be strictly increasing.
  RationalMatrix submatrix(const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) const {
    std::vector<std::size_t> col_pos(cols_, std::numeric_limits<std::size_t>::max());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= cols_) throw std::invalid_argument("submatrix: column out of range");
      col_pos[cols[j]] = j;
    }
    RationalMatrix s(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] >= rows_) throw std::invalid_argument("submatrix: row out of range");
      for (const auto& [j, v] : row_[rows[i]]) {
        if (col_pos[j] != std::numeric_limits<std::size_t>::max())
          s.row_[i].push_back({col_pos[j], v});
      }
      std::sort(s.row_[i].begin(), s.row_[i].end(), entry_col_less);
    }
    return s;
  }

  RationalMatrix transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (const auto& [j, v] : row_[i]) t.row_[j].push_back({i, v});
    return t;
  }

  // Rank over Q by fraction-free (Bareiss) elimination. Rows are first
  // scaled to integers; pivots are chosen by a Markowitz sparsity score.
  // The one-step division by the previous pivot is exact because every
  // intermediate entry is a minor of the scaled matrix.
  std::size_t rank() const {
    using IntRow = std::vector<std::pair<std::size_t, mpz_class>>;
    std::vector<IntRow> work;
    work.reserve(rows_);
    for (const auto& r : row_) {
      if (r.empty()) continue;
      mpz_class scale = 1;
      for (const auto& [j, v] : r) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den().get_mpz_t());
      IntRow ir;
      ir.reserve(r.size());
      for (const auto& [j, v] : r) ir.push_back({j, mpz_class(v.get_num() * (scale / v.get_den()))});
      work.push_back(std::move(ir));
    }

    std::vector<char> alive(work.size(), 1);
    std::vector<std::size_t> col_count(cols_, 0);
    mpz_class prev = 1;
    std::size_t rank = 0;

    for (;;) {
      std::fill(col_count.begin(), col_count.end(), 0);
      std::size_t live = 0;
      for (std::size_t i = 0; i < work.size(); ++i)
        if (alive[i]) {
          ++live;
          for (const auto& [j, v] : work[i]) ++col_count[j];
        }
      if (live == 0) break;

      // Markowitz: minimize (row fill - 1) * (column fill - 1).
      std::size_t best_row = work.size();
      std::size_t best_col = 0;
      unsigned long long best_score = std::numeric_limits<unsigned long long>::max();
      for (std::size_t i = 0; i < work.size(); ++i) {
        if (!alive[i]) continue;
        for (const auto& [j, v] : work[i]) {
          unsigned long long score =
              static_cast<unsigned long long>(work[i].size() - 1) *
              static_cast<unsigned long long>(col_count[j] - 1);
          if (score < best_score ||
              (score == best_score &&
               (i < best_row || (i == best_row && j < best_col)))) {
            best_score = score;
            best_row = i;
            best_col = j;
          }
        }
      }

      const IntRow pivot_row = std::move(work[best_row]);
      alive[best_row] = 0;
      work[best_row].clear();
      ++rank;
      mpz_class p = 0;
      for (const auto& [j, v] : pivot_row)
        if (j == best_col) p = v;
      assert(p != 0);

      for (std::size_t i = 0; i < work.size(); ++i) {
        if (!alive[i]) continue;
        mpz_class c = 0;
        for (const auto& [j, v] : work[i])
          if (j == best_col) {
            c = v;
            break;
          }
        IntRow next;
        next.reserve(work[i].size() + pivot_row.size());
        auto a = work[i].begin(), ae = work[i].end();
        auto b = pivot_row.begin(), be = pivot_row.end();
        mpz_class val;
        while (a != ae || b != be) {
          std::size_t j;
          if (b == be || (a != ae && a->first < b->first)) {
            j = a->first;
            val = p * a->second;
            ++a;
          } else if (a == ae || b->first < a->first) {
            j = b->first;
            val = -c * b->second;
            ++b;
          } else {
            j = a->first;
            val = p * a->second - c * b->second;
            ++a;
            ++b;
          }
          if (j == best_col || val == 0) continue;
          mpz_class q;
          mpz_divexact(q.get_mpz_t(), val.get_mpz_t(), prev.get_mpz_t());
          next.push_back({j, std::move(q)});
          val = 0;
        }
        work[i] = std::move(next);
        if (work[i].empty()) alive[i] = 0;
      }
      prev = p;
    }
    return rank;
  }

 private:
  static bool entry_less(const Entry& e, std::size_t j) { return e.first < j; }
  static bool entry_col_less(const Entry& a, const Entry& b) {
    return a.first < b.first;
  }

  void check_bounds(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_)
      throw std::invalid_argument("matrix index out of range");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::vector<Entry>> row_;
};

}  // namespace khom
