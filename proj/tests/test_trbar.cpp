#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "satoh/aut.hpp"
#include "satoh/trbar.hpp"

using namespace satoh;

namespace {

const Letter A1 = letter_a(0), B1 = letter_b(0);
const Letter A2 = letter_a(1), B2 = letter_b(1);
const Letter A3 = letter_a(2);

RootedTree lf(Letter x) { return RootedTree::leaf(x); }
RootedTree nd(RootedTree l, RootedTree r) {
  return RootedTree::node(std::move(l), std::move(r));
}

Word wd(std::initializer_list<Letter> ls) {
  Word w;
  for (Letter x : ls) w.push_back(static_cast<char>(x));
  return w;
}

// the half-symmetric four-leaf diagram 1/2 ((x,y) - (x,y))
TreeSum half_square(int genus, Letter x, Letter y) {
  return tree_sum_single(genus, nd(lf(x), lf(y)), nd(lf(x), lf(y)), 1, true);
}

RootedTree random_tree(std::mt19937_64& rng, int letters, int leaves) {
  if (leaves == 1)
    return lf(static_cast<Letter>(rng() % letters));
  int l = 1 + static_cast<int>(rng() % (leaves - 1));
  return nd(random_tree(rng, letters, l), random_tree(rng, letters, leaves - l));
}

// random tree sum of fixed degree (leaf count = degree + 2 per term)
TreeSum random_tree_sum(std::mt19937_64& rng, int genus, int degree,
                        int max_terms, int letters = 0) {
  if (letters == 0) letters = 2 * genus;
  TreeSum ts;
  ts.genus = genus;
  int nterms = 1 + static_cast<int>(rng() % max_terms);
  for (int i = 0; i < nterms; ++i) {
    TreeTerm t;
    t.coeff = 1 + static_cast<int>(rng() % 3);
    int leaves_l = 1 + static_cast<int>(rng() % (degree + 1));
    t.lhs = random_tree(rng, letters, leaves_l);
    t.rhs = random_tree(rng, letters, degree + 2 - leaves_l);
    ts.terms.push_back(std::move(t));
  }
  ts.normalize();
  return ts;
}

bool cbar_equiv(const CyclicClass& x, const CyclicClass& y, int k, int g) {
  CyclicClass d = x;
  d -= y;
  if (d.is_zero()) return true;
  return lattice_member(cbar_lattice(k, g),
                        cyclic_coordinates(d, necklace_basis(k, g)));
}

bool cbar_zero(const CyclicClass& x, int k, int g) {
  return cbar_equiv(x, CyclicClass(g, k), k, g);
}

const FreeAutomorphism& golden_lift() {
  static FreeAutomorphism f =
      parse_automorphism("[K a1 a2, K3 b1 a1 a2] [K a2 a1, K3 b2 a2 a1]", 2);
  return f;
}

// letter substitution with sign, extended to trees, tree sums, necklaces
struct SpMap {
  Letter img[4];
  int sgn[4];
};

SpMap sp_sigma_swap12() {  // (a1,b1) <-> (a2,b2)
  SpMap m;
  m.img[A1] = A2; m.img[B1] = B2; m.img[A2] = A1; m.img[B2] = B1;
  m.sgn[A1] = m.sgn[B1] = m.sgn[A2] = m.sgn[B2] = 1;
  return m;
}

SpMap sp_rho() {  // a_i -> b_i, b_i -> -a_i
  SpMap m;
  m.img[A1] = B1; m.img[B1] = A1; m.img[A2] = B2; m.img[B2] = A2;
  m.sgn[A1] = m.sgn[A2] = 1;
  m.sgn[B1] = m.sgn[B2] = -1;
  return m;
}

std::pair<int, RootedTree> sp_tree(const SpMap& m, const RootedTree& t) {
  if (t.is_leaf()) return {m.sgn[t.label], lf(m.img[t.label])};
  auto [sl, l] = sp_tree(m, t.left());
  auto [sr, r] = sp_tree(m, t.right());
  return {sl * sr, nd(std::move(l), std::move(r))};
}

TreeSum sp_tree_sum(const SpMap& m, const TreeSum& ts) {
  TreeSum out;
  out.genus = ts.genus;
  for (const auto& term : ts.terms) {
    auto [sl, l] = sp_tree(m, term.lhs);
    auto [sr, r] = sp_tree(m, term.rhs);
    Int c = term.coeff * sl * sr;
    if (term.half) c = term.coeff;  // the sign enters once per copy, squared
    out.terms.push_back(TreeTerm{c, term.half, std::move(l), std::move(r)});
  }
  out.normalize();
  return out;
}

CyclicClass sp_cyclic(const SpMap& m, const CyclicClass& c) {
  CyclicClass out(c.genus, c.degree);
  for (const auto& [w, coef] : c.terms) {
    Word img;
    int s = 1;
    for (char ch : w) {
      Letter x = static_cast<Letter>(ch);
      img.push_back(static_cast<char>(m.img[x]));
      s *= m.sgn[x];
    }
    out.add(img, coef * s);
  }
  return out;
}

}  // namespace

TEST_CASE("golden example: half ladder on a symplectic pair vanishes") {
  auto ob = trbar_formula(half_square(2, A1, B1), ReduceMode::none);
  CHECK(ob.representative.is_zero());
  CHECK(ob.degree == 3);
}

TEST_CASE("golden example: half ladder on (a1,a2)") {
  auto ts = half_square(2, A1, A2);
  auto ob = trbar_formula(ts, ReduceMode::none);
  CyclicClass expect(2, 3);
  expect.add(wd({A2, A2, A1}), 1);
  expect.add(wd({A1, A1, A2}), 1);
  CHECK(ob.representative == expect);
  CHECK_FALSE(trbar_formula(ts, ReduceMode::cbar).zero);
  CHECK_FALSE(trbar_formula(ts, ReduceMode::mir).zero);
}

TEST_CASE("golden example: whole four-leaf tree at genus 3") {
  auto ts = tree_sum_single(3, nd(lf(A1), lf(A3)), nd(lf(A2), lf(B1)));
  auto ob = trbar_formula(ts, ReduceMode::none);
  CyclicClass expect(3, 3);
  expect.add(wd({A3, A2, A2}), -1);
  expect.add(wd({A2, A3, A3}), -1);
  CHECK(ob.representative == expect);
}

TEST_CASE("empty tree sum maps to zero") {
  TreeSum ts;
  ts.genus = 2;
  auto ob = trbar_formula(ts, ReduceMode::none);
  CHECK(ob.zero);
}

TEST_CASE("precondition errors") {
  // a trace-free degree-4 input at too small a genus
  RootedTree u = nd(nd(lf(A1), lf(A2)), lf(A1));
  TreeSum tall = tree_sum_single(2, u, u, 1, true);
  CHECK_THROWS_WITH_AS(trbar_formula(tall, ReduceMode::none),
                       "genus too small", std::domain_error);

  // find a degree-3 tree sum with nonzero trace
  std::mt19937_64 rng(71);
  bool found = false;
  for (int i = 0; i < 50 && !found; ++i) {
    auto ts = random_tree_sum(rng, 2, 3, 2);
    if (!satoh_trace(eta(ts)).is_zero()) {
      CHECK_THROWS_WITH_AS(trbar_formula(ts, ReduceMode::none),
                           "not trace-free", std::domain_error);
      found = true;
    }
  }
  CHECK(found);

  CHECK_THROWS_AS(tr_as(random_tree_sum(rng, 2, 1, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(trbar_direct(golden_lift(), 6, ReduceMode::none),
                  std::invalid_argument);  // degree cap
  CHECK_THROWS_WITH_AS(trbar_direct(parse_automorphism("K a1 a2", 2), 2,
                                    ReduceMode::none),
                       "not in A_k", std::domain_error);
}

TEST_CASE("direct route: identity automorphism") {
  auto ob = trbar_direct(FreeAutomorphism::identity(2), 2, ReduceMode::cbar);
  CHECK(ob.zero);
  CHECK(ob.representative.is_zero());
}

TEST_CASE("direct route golden value and route agreement") {
  auto ob = trbar_direct(golden_lift(), 2, ReduceMode::cbar);
  CyclicClass expect(2, 3);
  expect.add(wd({A2, A1, A1}), 1);
  expect.add(wd({A2, A2, A1}), -1);
  CHECK(ob.representative == expect);
  CHECK_FALSE(ob.zero);

  // same obstruction class as the tree-sum route, modulo the trace lattice
  auto formula = trbar_formula(half_square(2, A1, A2), ReduceMode::none);
  CHECK(cbar_equiv(ob.representative, formula.representative, 3, 2));
  CHECK_FALSE(cbar_zero(ob.representative, 3, 2));
}

TEST_CASE("direct route: squared lift is killed (2-torsion)") {
  auto f2 = aut_compose(golden_lift(), golden_lift());
  auto ob = trbar_direct(f2, 2, ReduceMode::cbar);
  CHECK(ob.zero);
}

TEST_CASE("direct route: independence of the lift") {
  const auto& f = golden_lift();
  auto k1 = parse_automorphism("K a1 a2", 2);  // in A_1
  auto h = aut_commutator(k1, f);              // in A_3
  auto fh = aut_compose(f, h);
  auto ob1 = trbar_direct(f, 2, ReduceMode::none);
  auto ob2 = trbar_direct(fh, 2, ReduceMode::none);
  CHECK(cbar_equiv(ob1.representative, ob2.representative, 3, 2));
}

TEST_CASE("2-torsion: twice any representative lies in the trace lattice") {
  auto twice_in_cbar = [](const CyclicClass& rep, int k, int g) {
    CyclicClass two = rep;
    two *= 2;
    return cbar_zero(two, k, g);
  };
  CHECK(twice_in_cbar(
      trbar_formula(half_square(2, A1, A2), ReduceMode::none).representative,
      3, 2));
  auto whole_g3 = tree_sum_single(3, nd(lf(A1), lf(A3)), nd(lf(A2), lf(B1)));
  CHECK(twice_in_cbar(trbar_formula(whole_g3, ReduceMode::none).representative,
                      3, 3));
  CHECK(twice_in_cbar(
      trbar_direct(golden_lift(), 2, ReduceMode::none).representative, 3, 2));

  std::mt19937_64 rng(72);
  for (int i = 0; i < 20; ++i) {
    auto ts = random_tree_sum(rng, 2, 2, 3);
    auto ob = trbar_formula(ts, ReduceMode::none);
    CHECK(twice_in_cbar(ob.representative, 3, 2));
  }
}

TEST_CASE("antisymmetric obstruction on the worked examples") {
  WedgeClass w1 = tr_as(half_square(2, A1, A2));
  WedgeClass expect1;
  expect1.flip(A1, A2);
  CHECK(w1 == expect1);

  CHECK(tr_as(half_square(2, A1, B1)).is_zero());

  auto whole_g3 = tree_sum_single(3, nd(lf(A1), lf(A3)), nd(lf(A2), lf(B1)));
  WedgeClass w3 = tr_as(whole_g3);
  WedgeClass expect3;
  expect3.flip(A2, A3);
  CHECK(w3 == expect3);
}

TEST_CASE("iota golden value") {
  WedgeClass w;
  w.flip(A1, A2);
  BClass b = iota(w, 2);
  CHECK(b.free_part.empty());
  CHECK(b.torsion.size() == 2);
  CHECK(b.torsion.count(canonical_rotation(wd({A1, A1, A2}))) == 1);
  CHECK(b.torsion.count(canonical_rotation(wd({A2, A2, A1}))) == 1);
  CHECK(b == tr_mir(half_square(2, A1, A2)));
}

TEST_CASE("triangle identity: iota after tr_as equals the mirror reduction") {
  auto check_triangle = [](const TreeSum& ts) {
    CHECK(iota(tr_as(ts), ts.genus) == tr_mir(ts));
  };
  check_triangle(half_square(2, A1, A2));
  check_triangle(half_square(2, A1, B1));
  check_triangle(tree_sum_single(3, nd(lf(A1), lf(A3)), nd(lf(A2), lf(B1))));

  // random degree-2 sums in the two-and-two presentation tr_as is defined on
  std::mt19937_64 rng(73);
  for (int g : {2, 3}) {
    int letters = 2 * g;
    for (int i = 0; i < 25; ++i) {
      TreeSum ts;
      ts.genus = g;
      int nterms = 1 + static_cast<int>(rng() % 3);
      for (int t = 0; t < nterms; ++t) {
        Int c = 1 + static_cast<int>(rng() % 3);
        if (rng() % 3 == 0) {
          RootedTree u = random_tree(rng, letters, 2);
          ts.terms.push_back(TreeTerm{c, true, u, u});
        } else {
          ts.terms.push_back(TreeTerm{c, false, random_tree(rng, letters, 2),
                                      random_tree(rng, letters, 2)});
        }
      }
      ts.normalize();
      check_triangle(ts);
    }
  }
}

TEST_CASE("torsion witnesses at desk scale") {
  CHECK_THROWS_WITH_AS(witness(3, 4), "genus too small", std::domain_error);
  CHECK(witness(1, 3) == half_square(3, A1, A2));
  for (int k : {1, 2, 3}) {
    auto rep = witness_check(k, k + 2);
    CHECK(rep.trace_free);
    CHECK(rep.symplectic);
    CHECK(rep.mir_nonzero);
    CHECK(rep.coordinate_one);
    CHECK(rep.decomposition_checked == (k == 3));
    CHECK(rep.ok());
  }
}

TEST_CASE("witness bracket decomposition details") {
  auto [f1, f2] = witness_bracket_factors(5);
  TreeSum two_w = witness(3, 5);
  for (auto& t : two_w.terms) t.coeff *= 2;
  two_w.normalize();
  CHECK(tree_bracket(f1, f2) == two_w);
  CHECK(eta(witness_tripod_decomposition(5)) == eta(f1));
}

TEST_CASE("degree-1 subalgebra vanishing (brackets of tripods)") {
  std::mt19937_64 rng(74);
  int done = 0;
  while (done < 20) {
    auto t1 = random_tree_sum(rng, 2, 1, 2);
    auto t2 = random_tree_sum(rng, 2, 1, 2);
    if (!satoh_trace(eta(t1)).is_zero() || !satoh_trace(eta(t2)).is_zero())
      continue;
    auto br = tree_bracket(t1, t2);
    auto ob = trbar_formula(br, ReduceMode::none);
    CHECK(cbar_zero(ob.representative, 3, 2));
    ++done;
  }
}

TEST_CASE("odd-degree vanishing of the mirror reduction") {
  // sample integral elements of Ker(Tr) on degree-3 tree sums at genus 3
  std::mt19937_64 rng(75);
  std::vector<TreeSum> pool;
  std::vector<Word> basis = necklace_basis(3, 3);
  IntMatrix traces(40, static_cast<int>(basis.size()));
  for (int i = 0; i < 40; ++i) {
    // letters restricted to the first two pairs so the traces live in a
    // small subspace and the kernel is well-populated
    auto ts = random_tree_sum(rng, 3, 3, 2, 4);
    auto coords = cyclic_coordinates(satoh_trace(eta(ts)), basis);
    for (size_t j = 0; j < coords.size(); ++j)
      traces.set(i, static_cast<int>(j), coords[j]);
    pool.push_back(std::move(ts));
  }
  LatticeBasis ker = kernel_lattice(traces);
  REQUIRE(ker.rank() >= 10);
  int done = 0;
  for (const auto& row : ker.rows) {
    if (done >= 10) break;
    TreeSum combo;
    combo.genus = 3;
    for (const auto& [idx, c] : row) {
      for (TreeTerm t : pool[idx].terms) {
        t.coeff *= c;
        combo.terms.push_back(std::move(t));
      }
    }
    combo.normalize();
    if (combo.is_zero()) continue;
    CHECK(tr_mir(combo).is_zero());
    ++done;
  }
  CHECK(done >= 10);
}

TEST_CASE("cocycle property of the obstruction") {
  // degree 1 bracket degree 2 gives degree 3, which needs genus >= 3
  std::mt19937_64 rng(76);
  int done = 0;
  while (done < 10) {
    auto t1 = random_tree_sum(rng, 3, 1, 2);
    auto t2 = random_tree_sum(rng, 3, 2, 2);
    if (!satoh_trace(eta(t1)).is_zero()) continue;
    auto br = tree_bracket(t1, t2);
    CyclicClass lhs = trbar_formula(br, ReduceMode::none).representative;
    CyclicClass rep1 = trbar_formula(t1, ReduceMode::none).representative;
    CyclicClass rep2 = trbar_formula(t2, ReduceMode::none).representative;
    CyclicClass rhs = act_on_cyclic(eta(t1), rep2);
    rhs -= act_on_cyclic(eta(t2), rep1);
    CHECK(cbar_equiv(lhs, rhs, 4, 3));
    ++done;
  }
}

TEST_CASE("equivariance under basis symplectomorphisms") {
  std::mt19937_64 rng(77);
  for (const SpMap& m : {sp_sigma_swap12(), sp_rho()}) {
    for (int i = 0; i < 10; ++i) {
      auto ts = random_tree_sum(rng, 2, 2, 3);
      auto moved = sp_tree_sum(m, ts);
      CyclicClass lhs = trbar_formula(moved, ReduceMode::none).representative;
      CyclicClass rhs =
          sp_cyclic(m, trbar_formula(ts, ReduceMode::none).representative);
      CHECK(cbar_equiv(lhs, rhs, 3, 2));
    }
  }
}

TEST_CASE("independence of the tree presentation") {
  std::mt19937_64 rng(78);
  int done = 0;
  while (done < 10) {
    auto ts = random_tree_sum(rng, 2, 2, 2);
    // re-root every whole term across its top-left edge
    TreeSum moved;
    moved.genus = 2;
    bool changed = false;
    for (const auto& term : ts.terms) {
      if (term.half || term.lhs.is_leaf()) {
        moved.terms.push_back(term);
        continue;
      }
      TreeTerm alt{term.coeff, false, term.lhs.left(),
                   nd(term.lhs.right(), term.rhs)};
      // fix the orientation sign so the presentations agree as derivations
      TreeSum one, two;
      one.genus = two.genus = 2;
      one.terms.push_back(term);
      two.terms.push_back(alt);
      one.normalize();
      two.normalize();
      if (!(eta(one) == eta(two))) alt.coeff = -alt.coeff;
      moved.terms.push_back(std::move(alt));
      changed = true;
    }
    moved.normalize();
    if (!changed) continue;
    REQUIRE(eta(moved) == eta(ts));
    CyclicClass a = trbar_formula(ts, ReduceMode::none).representative;
    CyclicClass b = trbar_formula(moved, ReduceMode::none).representative;
    CHECK(cbar_equiv(a, b, 3, 2));
    ++done;
  }
}

namespace {

// group-like expansion with log theta(x) = {x} - 1/2 [a_i, b_i] and no
// higher-degree data (enough for the degree k+1 statement)
TensorElement theta_letter(int genus, Letter x, int sign, int max_deg) {
  LieElement e = lie_letter(genus, x);
  LieElement l2 = lie_bracket(lie_letter(genus, letter_a(pair_index(x))),
                              lie_letter(genus, letter_b(pair_index(x))));
  l2 *= Rat(-1, 2);
  e += l2;
  if (sign < 0) e *= Rat(-1);
  return tensor_exp(lie_to_tensor(e), max_deg);
}

TensorElement theta_word(const GroupWord& w, int max_deg) {
  TensorElement out = tensor_one(w.genus);
  for (int sl : w.letters) {
    Letter x = static_cast<Letter>((sl > 0 ? sl : -sl) - 1);
    out = tensor_product(out, theta_letter(w.genus, x, sl > 0 ? 1 : -1,
                                           max_deg),
                         max_deg);
  }
  return out;
}

GroupWord commutator_word(int genus, const RootedTree& t) {
  if (t.is_leaf()) return gw_letter(genus, t.label);
  return gw_commutator(commutator_word(genus, t.left()),
                       commutator_word(genus, t.right()));
}

void check_delta_lemma(const RootedTree& w) {
  int genus = 2;
  int k = w.leaf_count();
  GroupWord gamma = commutator_word(genus, w);
  TensorElement lt = tensor_log(theta_word(gamma, k + 1), k + 1);

  LieElement gamma_lie = lie_of_rooted(genus, w);
  CHECK(lt.graded_part(k) == lie_to_tensor(gamma_lie));

  Derivation d_l2(genus, 1);
  for (int x = 0; x < 2 * genus; ++x) {
    LieElement v = lie_bracket(lie_letter(genus, letter_a(x >> 1)),
                               lie_letter(genus, letter_b(x >> 1)));
    v *= Rat(-1, 2);
    d_l2.add_term(static_cast<Letter>(x), v);
  }
  LieElement rhs = eval(d_l2, gamma_lie);
  LieElement half_delta = delta(genus, w);
  half_delta *= Rat(1, 2);
  rhs += half_delta;

  TensorElement top = lt.graded_part(k + 1);
  LieElement lhs = top.is_zero() ? LieElement(genus) : tensor_to_lie(top);
  CHECK(lhs == rhs);
}

}  // namespace

TEST_CASE("expansion correction lemma on bracketed words") {
  // all two-letter words
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      check_delta_lemma(nd(lf(static_cast<Letter>(x)),
                           lf(static_cast<Letter>(y))));
  // sampled three- and four-letter words
  std::mt19937_64 rng(79);
  for (int i = 0; i < 20; ++i) check_delta_lemma(random_tree(rng, 4, 3));
  for (int i = 0; i < 20; ++i) check_delta_lemma(random_tree(rng, 4, 4));
}
