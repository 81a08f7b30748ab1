#include "satoh/derivation.hpp"

#include <mutex>
#include <stdexcept>

namespace satoh {

void Derivation::add_term(Letter covector, const LieElement& value) {
  if (value.is_zero()) return;
  auto it = terms.find(covector);
  if (it == terms.end()) {
    terms.emplace(covector, value);
  } else {
    it->second += value;
    if (it->second.is_zero()) terms.erase(it);
  }
}

const LieElement* Derivation::term(Letter covector) const {
  auto it = terms.find(covector);
  return it == terms.end() ? nullptr : &it->second;
}

bool Derivation::integral() const {
  for (const auto& [x, v] : terms)
    if (!v.integral()) return false;
  return true;
}

Derivation& Derivation::operator+=(const Derivation& o) {
  for (const auto& [x, v] : o.terms) add_term(x, v);
  return *this;
}

Derivation& Derivation::operator-=(const Derivation& o) {
  for (const auto& [x, v] : o.terms) {
    LieElement neg = v;
    neg *= Rat(-1);
    add_term(x, neg);
  }
  return *this;
}

Derivation& Derivation::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
  } else {
    for (auto& [x, v] : terms) v *= c;
  }
  return *this;
}

LieElement omega_element(int genus) {
  LieElement out(genus);
  for (int i = 0; i < genus; ++i)
    out += lie_bracket(lie_letter(genus, letter_a(i)),
                       lie_letter(genus, letter_b(i)));
  return out;
}

namespace {

std::map<Letter, TensorElement> term_tensors(const Derivation& d) {
  std::map<Letter, TensorElement> img;
  for (const auto& [x, v] : d.terms) img.emplace(x, lie_to_tensor(v));
  return img;
}

// Leibniz substitution of the images into each letter of each word of t.
TensorElement substitute(const std::map<Letter, TensorElement>& img,
                         const TensorElement& t) {
  TensorElement out(t.genus);
  for (const auto& [w, c] : t.terms) {
    for (size_t i = 0; i < w.size(); ++i) {
      auto it = img.find(static_cast<Letter>(w[i]));
      if (it == img.end()) continue;
      Word pre = w.substr(0, i), post = w.substr(i + 1);
      for (const auto& [u, cu] : it->second.terms)
        out.add(pre + u + post, c * cu);
    }
  }
  return out;
}

// Chen-Fox-Lyndon standard factorization: w = uv with v the
// lexicographically least proper suffix.
std::pair<Word, Word> standard_split(const Word& w) {
  size_t best = 1;
  Word bestv = w.substr(1);
  for (size_t i = 2; i < w.size(); ++i) {
    Word v = w.substr(i);
    if (v < bestv) {
      bestv = v;
      best = i;
    }
  }
  return {w.substr(0, best), std::move(bestv)};
}

LieElement lyndon_bracket(int genus, const Word& w) {
  if (w.size() == 1) return lie_letter(genus, static_cast<Letter>(w[0]));
  auto [u, v] = standard_split(w);
  return lie_bracket(lyndon_bracket(genus, u), lyndon_bracket(genus, v));
}

// c * [bracket(u), h]: expand the left factor until a letter x is outermost,
// then record the term x^* (via the omega-dual) tensor h.
void lift_outer(int genus, const Word& u, const LieElement& h, const Rat& c,
                Derivation& out) {
  if (u.size() == 1) {
    Letter x = static_cast<Letter>(u[0]);
    LieElement v = h;
    v *= is_a(x) ? c : -c;
    out.add_term(bar(x), v);
    return;
  }
  auto [p, q] = standard_split(u);
  lift_outer(genus, p, lie_bracket(lyndon_bracket(genus, q), h), c, out);
  lift_outer(genus, q, lie_bracket(lyndon_bracket(genus, p), h), -c, out);
}

}  // namespace

LieElement eval(const Derivation& d, const LieElement& x) {
  return tensor_to_lie(substitute(term_tensors(d), lie_to_tensor(x)));
}

LieElement eval_omega(const Derivation& d) {
  LieElement out(d.genus);
  for (int i = 0; i < d.genus; ++i) {
    LieElement ai = lie_letter(d.genus, letter_a(i));
    LieElement bi = lie_letter(d.genus, letter_b(i));
    if (const LieElement* da = d.term(letter_a(i)))
      out += lie_bracket(*da, bi);
    if (const LieElement* db = d.term(letter_b(i)))
      out += lie_bracket(ai, *db);
  }
  return out;
}

bool is_symplectic(const Derivation& d) { return eval_omega(d).is_zero(); }

Derivation omega_lift(const LieElement& l) {
  if (!l.homogeneous() || l.degree() < 3)
    throw std::invalid_argument("omega_lift: need homogeneous degree >= 3");
  if (!l.integral())
    throw std::invalid_argument("omega_lift: non-integral input");
  Derivation out(l.genus, l.degree() - 2);
  for (const auto& [w, c] : l.terms) {
    auto [u, v] = standard_split(w);
    lift_outer(l.genus, u, lyndon_bracket(l.genus, v), c, out);
  }
  return out;
}

CyclicClass satoh_trace(const Derivation& d) {
  CyclicClass out(d.genus, d.degree);
  for (const auto& [cov, val] : d.terms)
    for (const auto& [w, c] : lie_to_tensor(val).terms)
      if (static_cast<Letter>(w[0]) == cov) out.add(w.substr(1), c);
  return out;
}

Derivation deriv_bracket(const Derivation& d1, const Derivation& d2) {
  if (d1.genus != d2.genus) throw std::invalid_argument("genus mismatch");
  Derivation out(d1.genus, d1.degree + d2.degree);
  for (int x = 0; x < 2 * d1.genus; ++x) {
    Letter lx = static_cast<Letter>(x);
    LieElement v(d1.genus);
    if (const LieElement* t2 = d2.term(lx)) v += eval(d1, *t2);
    if (const LieElement* t1 = d1.term(lx)) v -= eval(d2, *t1);
    out.add_term(lx, v);
  }
  return out;
}

CyclicClass act_on_cyclic(const Derivation& d, const CyclicClass& c) {
  CyclicClass out(c.genus, c.degree + d.degree);
  auto img = term_tensors(d);
  for (const auto& [w, cf] : c.terms) {
    for (size_t i = 0; i < w.size(); ++i) {
      auto it = img.find(static_cast<Letter>(w[i]));
      if (it == img.end()) continue;
      Word pre = w.substr(0, i), post = w.substr(i + 1);
      for (const auto& [u, cu] : it->second.terms)
        out.add(pre + u + post, cf * cu);
    }
  }
  return out;
}

std::vector<std::pair<Letter, Word>> derivation_basis(int k, int genus) {
  std::vector<std::pair<Letter, Word>> out;
  auto lyndon = lyndon_basis(2 * genus, k + 1);
  for (int x = 0; x < 2 * genus; ++x)
    for (const auto& w : lyndon)
      out.emplace_back(static_cast<Letter>(x), w);
  return out;
}

std::vector<Word> necklace_basis(int k, int genus) {
  std::set<Word> keys;
  Word w(k, 0);
  int n = 2 * genus;
  for (;;) {
    keys.insert(canonical_rotation(w));
    int i = k - 1;
    while (i >= 0 && static_cast<Letter>(w[i]) == n - 1) w[i--] = 0;
    if (i < 0) break;
    w[i] = static_cast<char>(w[i] + 1);
  }
  return std::vector<Word>(keys.begin(), keys.end());
}

std::vector<Int> derivation_coordinates(
    const Derivation& d, const std::vector<std::pair<Letter, Word>>& basis) {
  if (!d.integral())
    throw std::invalid_argument("derivation_coordinates: non-integral input");
  std::map<std::pair<Letter, Word>, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  std::vector<Int> v(basis.size(), 0);
  for (const auto& [x, val] : d.terms)
    for (const auto& [w, c] : val.terms) {
      auto it = index.find({x, w});
      if (it == index.end())
        throw std::invalid_argument("derivation_coordinates: term off basis");
      v[it->second] = c.get_num();
    }
  return v;
}

std::vector<Int> cyclic_coordinates(const CyclicClass& c,
                                    const std::vector<Word>& basis) {
  if (!c.integral())
    throw std::invalid_argument("cyclic_coordinates: non-integral input");
  std::map<Word, int> index;
  for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = static_cast<int>(i);
  std::vector<Int> v(basis.size(), 0);
  for (const auto& [w, cf] : c.terms) {
    auto it = index.find(w);
    if (it == index.end())
      throw std::invalid_argument("cyclic_coordinates: key off basis");
    v[it->second] = cf.get_num();
  }
  return v;
}

namespace {

std::mutex lattice_cache_mutex;
std::map<std::pair<int, int>, LatticeBasis> d_cache;
std::map<std::pair<int, int>, LatticeBasis> cbar_cache;

Derivation unit_derivation(int genus, int k, Letter cov, const Word& lyndon) {
  Derivation d(genus, k);
  LieElement v(genus);
  v.add(lyndon, 1);
  d.add_term(cov, v);
  return d;
}

}  // namespace

const LatticeBasis& symplectic_kernel_lattice(int k, int genus) {
  std::pair<int, int> key{k, genus};
  {
    std::lock_guard<std::mutex> lk(lattice_cache_mutex);
    auto it = d_cache.find(key);
    if (it != d_cache.end()) return it->second;
  }
  auto basis = derivation_basis(k, genus);
  auto target = lyndon_basis(2 * genus, k + 2);
  std::map<Word, int> tindex;
  for (size_t i = 0; i < target.size(); ++i)
    tindex[target[i]] = static_cast<int>(i);
  IntMatrix m(static_cast<int>(basis.size()), static_cast<int>(target.size()));
  for (size_t r = 0; r < basis.size(); ++r) {
    auto ev = eval_omega(unit_derivation(genus, k, basis[r].first, basis[r].second));
    std::map<int, Int> row;
    for (const auto& [w, c] : ev.terms) row[tindex.at(w)] = c.get_num();
    m.set_row(static_cast<int>(r), std::move(row));
  }
  LatticeBasis ker = kernel_lattice(m);
  std::lock_guard<std::mutex> lk(lattice_cache_mutex);
  return d_cache.emplace(key, std::move(ker)).first->second;
}

bool cbar_in_budget(int k, int genus) { return k <= 4 && genus <= 3; }

const LatticeBasis& cbar_lattice(int k, int genus, bool allow_big) {
  if (!cbar_in_budget(k, genus) && !allow_big)
    throw std::domain_error("degree/genus beyond lattice budget");
  std::pair<int, int> key{k, genus};
  {
    std::lock_guard<std::mutex> lk(lattice_cache_mutex);
    auto it = cbar_cache.find(key);
    if (it != cbar_cache.end()) return it->second;
  }
  const LatticeBasis& dk = symplectic_kernel_lattice(k, genus);
  auto basis = derivation_basis(k, genus);
  auto necklaces = necklace_basis(k, genus);
  std::map<Word, int> nindex;
  for (size_t i = 0; i < necklaces.size(); ++i)
    nindex[necklaces[i]] = static_cast<int>(i);
  IntMatrix m(dk.rank(), static_cast<int>(necklaces.size()));
  for (int r = 0; r < dk.rank(); ++r) {
    Derivation d(genus, k);
    for (const auto& [col, coef] : dk.rows[r]) {
      LieElement v(genus);
      v.add(basis[col].second, Rat(coef));
      d.add_term(basis[col].first, v);
    }
    std::map<int, Int> row;
    for (const auto& [w, c] : satoh_trace(d).terms)
      row[nindex.at(w)] = c.get_num();
    m.set_row(r, std::move(row));
  }
  LatticeBasis h = hnf(m);
  std::lock_guard<std::mutex> lk(lattice_cache_mutex);
  return cbar_cache.emplace(key, std::move(h)).first->second;
}

PsiResult psi(const LieElement& l) {
  Derivation d = omega_lift(l);
  PsiResult out;
  out.representative = satoh_trace(d);
  const LatticeBasis& cb = cbar_lattice(d.degree, l.genus);
  auto coords = cyclic_coordinates(out.representative,
                                   necklace_basis(d.degree, l.genus));
  out.zero = lattice_member(cb, coords);
  return out;
}

}  // namespace satoh
