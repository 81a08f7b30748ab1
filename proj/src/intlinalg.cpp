#include "satoh/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace satoh {

void IntMatrix::set(int r, int c, Int v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("IntMatrix::set index");
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = std::move(v);
}

Int IntMatrix::get(int r, int c) const {
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Int(0) : it->second;
}

void IntMatrix::set_row(int r, std::map<int, Int> row) {
  for (auto it = row.begin(); it != row.end();) {
    if (it->second == 0)
      it = row.erase(it);
    else
      ++it;
  }
  data_[r] = std::move(row);
}

IntMatrix LatticeBasis::as_matrix() const {
  IntMatrix m(rank(), ambient_dim);
  for (int i = 0; i < rank(); ++i) m.set_row(i, rows[i]);
  return m;
}

namespace {

using SparseRow = std::map<int, Int>;

// row -= q * other
void axpy(SparseRow& row, const Int& q, const SparseRow& other) {
  if (q == 0) return;
  for (const auto& [c, v] : other) {
    auto it = row.find(c);
    if (it == row.end()) {
      row.emplace(c, -q * v);
    } else {
      it->second -= q * v;
      if (it->second == 0) row.erase(it);
    }
  }
}

void negate(SparseRow& row) {
  for (auto& [c, v] : row) v = -v;
}

int lead_col(const SparseRow& row) {
  return row.empty() ? -1 : row.begin()->first;
}

// In-place row-HNF of `rows` (entries in columns < ncols are the matrix
// proper; columns >= ncols, if any, carry transformation bookkeeping and
// never serve as pivots).  Returns (pivot rows in order, zero-A-part rows).
std::pair<std::vector<SparseRow>, std::vector<SparseRow>> row_reduce(
    std::vector<SparseRow> rows, int ncols) {
  std::vector<SparseRow> pivots;
  std::vector<SparseRow> zeroes;
  // active rows; process columns in increasing order
  std::vector<SparseRow*> active;
  active.reserve(rows.size());
  for (auto& r : rows) active.push_back(&r);

  for (int col = 0; col < ncols && !active.empty(); ++col) {
    // Repeatedly pick the row with the smallest |entry| in this column and
    // reduce the others until at most one remains.
    for (;;) {
      SparseRow* best = nullptr;
      int nhit = 0;
      for (auto* r : active) {
        auto it = r->find(col);
        if (it == r->end()) continue;
        if (it->first != lead_col(*r))
          throw std::logic_error("row_reduce: entry left of lead");
        ++nhit;
        // smallest |value| wins; earlier row kept on ties
        if (!best || mpz_cmpabs(it->second.get_mpz_t(),
                                best->at(col).get_mpz_t()) < 0)
          best = r;
      }
      if (nhit == 0) break;
      if (nhit == 1) {
        // lone pivot: normalize sign, retire the row
        if (best->at(col) < 0) negate(*best);
        pivots.push_back(std::move(*best));
        active.erase(std::find(active.begin(), active.end(), best));
        break;
      }
      const Int& p = best->at(col);
      for (auto* r : active) {
        if (r == best) continue;
        auto it = r->find(col);
        if (it == r->end()) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), p.get_mpz_t());
        axpy(*r, q, *best);
      }
    }
    // drop rows that became zero in the A-part
    for (auto it = active.begin(); it != active.end();) {
      int lc = lead_col(**it);
      if (lc == -1 || lc >= ncols) {
        zeroes.push_back(std::move(**it));
        it = active.erase(it);
      } else {
        ++it;
      }
    }
  }
  for (auto* r : active) {
    int lc = lead_col(*r);
    if (lc == -1 || lc >= ncols)
      zeroes.push_back(std::move(*r));
    else
      throw std::logic_error("row_reduce: unprocessed pivot");
  }
  // reduce entries above each pivot, in ascending pivot-column order so a
  // later pass cannot disturb an already reduced column
  for (size_t i = 0; i < pivots.size(); ++i) {
    int c = lead_col(pivots[i]);
    const Int& p = pivots[i].at(c);
    for (size_t j = 0; j < i; ++j) {
      auto it = pivots[j].find(c);
      if (it == pivots[j].end()) continue;
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), it->second.get_mpz_t(), p.get_mpz_t());
      axpy(pivots[j], q, pivots[i]);
    }
  }
  return {std::move(pivots), std::move(zeroes)};
}

}  // namespace

LatticeBasis hnf(const IntMatrix& m) {
  std::vector<SparseRow> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) rows.push_back(m.row(i));
  auto [pivots, zeroes] = row_reduce(std::move(rows), m.cols());
  (void)zeroes;
  LatticeBasis b;
  b.ambient_dim = m.cols();
  b.rows = std::move(pivots);
  return b;
}

bool lattice_member(const LatticeBasis& b, const std::vector<Int>& v) {
  if (static_cast<int>(v.size()) != b.ambient_dim)
    throw std::invalid_argument("lattice_member: dimension mismatch");
  SparseRow r;
  for (int i = 0; i < b.ambient_dim; ++i)
    if (v[i] != 0) r[i] = v[i];
  for (const auto& row : b.rows) {
    int c = lead_col(row);
    auto it = r.find(c);
    if (it == r.end()) continue;
    const Int& p = row.at(c);
    if (it->second % p != 0) return false;
    Int q = it->second / p;
    axpy(r, q, row);
  }
  return r.empty();
}

LatticeBasis kernel_lattice(const IntMatrix& m) {
  const int n = m.cols();
  std::vector<SparseRow> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    rows[i] = m.row(i);
    rows[i][n + i] = 1;  // bookkeeping column
  }
  auto [pivots, zeroes] = row_reduce(std::move(rows), n);
  (void)pivots;
  // zero A-part rows: bookkeeping part spans the left kernel
  std::vector<SparseRow> kernel;
  kernel.reserve(zeroes.size());
  for (auto& z : zeroes) {
    SparseRow k;
    for (auto& [c, v] : z) k[c - n] = std::move(v);
    kernel.push_back(std::move(k));
  }
  auto [kp, kz] = row_reduce(std::move(kernel), m.rows());
  if (!kz.empty()) throw std::logic_error("kernel_lattice: dependent rows");
  LatticeBasis b;
  b.ambient_dim = m.rows();
  b.rows = std::move(kp);
  return b;
}

int rational_rank(const IntMatrix& m) {
  // sparse fraction-free elimination; fine at oracle scale
  std::vector<SparseRow> rows;
  for (int i = 0; i < m.rows(); ++i)
    if (!m.row(i).empty()) rows.push_back(m.row(i));
  int rank = 0;
  while (!rows.empty()) {
    // pick pivot row with the lowest leading column
    size_t pi = 0;
    for (size_t i = 1; i < rows.size(); ++i)
      if (lead_col(rows[i]) < lead_col(rows[pi])) pi = i;
    SparseRow piv = std::move(rows[pi]);
    rows.erase(rows.begin() + pi);
    int c = lead_col(piv);
    const Int a = piv.at(c);
    ++rank;
    for (auto it = rows.begin(); it != rows.end();) {
      auto hit = it->find(c);
      if (hit != it->end()) {
        Int b = hit->second;
        for (auto& [cc, vv] : *it) vv *= a;
        axpy(*it, b, piv);
        // divide by content to limit growth
        Int g = 0;
        for (auto& [cc, vv] : *it) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), vv.get_mpz_t());
        if (g > 1)
          for (auto& [cc, vv] : *it) vv /= g;
      }
      if (it->empty())
        it = rows.erase(it);
      else
        ++it;
    }
  }
  return rank;
}

}  // namespace satoh
