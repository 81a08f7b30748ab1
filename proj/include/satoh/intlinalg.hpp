#pragma once

#include <map>
#include <utility>
#include <vector>

#include "satoh/basics.hpp"

namespace satoh {

// Sparse integer matrix, row-major.  All stored entries are nonzero.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, Int v);
  Int get(int r, int c) const;

  // Sparse row as sorted (col, value) pairs.
  const std::map<int, Int>& row(int r) const { return data_[r]; }
  void set_row(int r, std::map<int, Int> row);

 private:
  int rows_, cols_;
  std::vector<std::map<int, Int>> data_;
};

// Basis of a sublattice of Z^n in row-style Hermite normal form: pivots
// positive, entries above each pivot reduced into [0, pivot), pivot columns
// strictly increasing.
struct LatticeBasis {
  int ambient_dim = 0;
  std::vector<std::map<int, Int>> rows;  // HNF rows, sparse

  int rank() const { return static_cast<int>(rows.size()); }
  IntMatrix as_matrix() const;
};

// Row-lattice Hermite normal form.  Deterministic: pivot in the lowest
// unprocessed column, smallest absolute value first.
LatticeBasis hnf(const IntMatrix& m);

// True iff v is an integer combination of the basis rows.
// Throws std::invalid_argument on dimension mismatch.
bool lattice_member(const LatticeBasis& b, const std::vector<Int>& v);

// Basis of the left kernel lattice {x in Z^rows : x * m = 0}.
LatticeBasis kernel_lattice(const IntMatrix& m);

// Rank of m over Q (fraction-free Gaussian elimination).
int rational_rank(const IntMatrix& m);

}  // namespace satoh
