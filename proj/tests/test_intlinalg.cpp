#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "satoh/intlinalg.hpp"

using namespace satoh;

namespace {

IntMatrix make(int r, int c, std::initializer_list<std::initializer_list<long>> vals) {
  IntMatrix m(r, c);
  int i = 0;
  for (auto& row : vals) {
    int j = 0;
    for (long v : row) m.set(i, j++, v);
    ++i;
  }
  return m;
}

std::vector<Int> vec(std::initializer_list<long> vals) {
  std::vector<Int> v;
  for (long x : vals) v.emplace_back(x);
  return v;
}

IntMatrix random_matrix(std::mt19937_64& rng, int r, int c) {
  IntMatrix m(r, c);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (entry(rng) > 2) m.set(i, j, entry(rng));
  return m;
}

bool same_basis(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient_dim != b.ambient_dim || a.rank() != b.rank()) return false;
  return a.rows == b.rows;
}

}  // namespace

TEST_CASE("hnf of small examples") {
  auto h = hnf(make(2, 2, {{2, 4}, {0, 3}}));
  CHECK(h.rank() == 2);
  CHECK(h.as_matrix().get(0, 0) == 2);
  CHECK(h.as_matrix().get(0, 1) == 1);
  CHECK(h.as_matrix().get(1, 0) == 0);
  CHECK(h.as_matrix().get(1, 1) == 3);

  auto id = hnf(make(3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK(id.rank() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(id.as_matrix().get(i, j) == (i == j ? 1 : 0));

  auto zero = hnf(IntMatrix(4, 5));
  CHECK(zero.rank() == 0);
  CHECK(zero.ambient_dim == 5);
}

TEST_CASE("hnf with dependent and negative rows") {
  // rows span the same lattice as {(1,2),(0,5)}
  auto h = hnf(make(3, 2, {{1, 2}, {2, -1}, {3, 1}}));
  CHECK(h.rank() == 2);
  CHECK(h.as_matrix().get(0, 0) == 1);
  CHECK(h.as_matrix().get(1, 1) == 5);
  // above-pivot entries reduced into [0, pivot)
  CHECK(h.as_matrix().get(0, 1) >= 0);
  CHECK(h.as_matrix().get(0, 1) < 5);
}

TEST_CASE("lattice membership") {
  auto h = hnf(make(2, 2, {{2, 0}, {0, 3}}));
  CHECK(lattice_member(h, vec({4, -3})));
  CHECK(lattice_member(h, vec({0, 0})));
  CHECK_FALSE(lattice_member(h, vec({1, 0})));
  CHECK_FALSE(lattice_member(h, vec({2, 2})));
  CHECK_THROWS_AS(lattice_member(h, vec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("kernel of column vector") {
  // m = [[1], [-1]]: left kernel is spanned by (1, 1)
  auto k = kernel_lattice(make(2, 1, {{1}, {-1}}));
  CHECK(k.ambient_dim == 2);
  CHECK(k.rank() == 1);
  CHECK(k.as_matrix().get(0, 0) == 1);
  CHECK(k.as_matrix().get(0, 1) == 1);
}

TEST_CASE("kernel of injective and zero maps") {
  auto inj = kernel_lattice(make(2, 2, {{1, 0}, {0, 1}}));
  CHECK(inj.rank() == 0);

  auto zero = kernel_lattice(IntMatrix(3, 2));
  CHECK(zero.rank() == 3);
  // identity basis
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(zero.as_matrix().get(i, j) == (i == j ? 1 : 0));
}

TEST_CASE("kernel vectors annihilate the matrix, saturated") {
  // m has a 2-dimensional left kernel; x*m computed by hand for basis rows
  auto m = make(4, 2, {{1, 1}, {2, 2}, {3, 5}, {1, 3}});
  auto k = kernel_lattice(m);
  CHECK(k.rank() == 2);
  for (const auto& row : k.rows) {
    for (int j = 0; j < m.cols(); ++j) {
      Int dot = 0;
      for (const auto& [i, v] : row) dot += v * m.get(i, j);
      CHECK(dot == 0);
    }
  }
  // (2,-1,0,0) kills m and must be in the kernel lattice (saturation)
  CHECK(lattice_member(k, vec({2, -1, 0, 0})));
}

TEST_CASE("hnf is idempotent and preserves membership (random)") {
  std::mt19937_64 rng(20260825);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_matrix(rng, 5, 4);
    auto h = hnf(m);
    CHECK(same_basis(h, hnf(h.as_matrix())));
    // every original row belongs to the lattice
    for (int i = 0; i < m.rows(); ++i) {
      std::vector<Int> v(m.cols(), 0);
      for (const auto& [c, x] : m.row(i)) v[c] = x;
      CHECK(lattice_member(h, v));
    }
    // random integer combinations of basis rows are members
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Int> comb(m.cols(), 0);
    for (const auto& row : h.rows) {
      int c = coeff(rng);
      for (const auto& [j, x] : row) comb[j] += c * x;
    }
    CHECK(lattice_member(h, comb));
  }
}

TEST_CASE("hnf rank equals rational rank (random)") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = random_matrix(rng, 6, 5);
    CHECK(hnf(m).rank() == rational_rank(m));
    // rank-nullity over Q for the left action
    CHECK(kernel_lattice(m).rank() == m.rows() - rational_rank(m));
  }
}

TEST_CASE("kernel rows annihilate random matrices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(rng, 5, 6);
    auto k = kernel_lattice(m);
    for (const auto& row : k.rows) {
      for (int j = 0; j < m.cols(); ++j) {
        Int dot = 0;
        for (const auto& [i, v] : row) dot += v * m.get(i, j);
        CHECK(dot == 0);
      }
    }
  }
}
