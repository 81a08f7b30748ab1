#include "satoh/lie.hpp"

#include <mutex>
#include <stdexcept>

namespace satoh {

void LieElement::add(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

bool LieElement::integral() const {
  for (const auto& [w, c] : terms)
    if (!is_integral(c)) return false;
  return true;
}

Rat LieElement::coeff(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Rat(0) : it->second;
}

bool LieElement::homogeneous() const {
  size_t len = 0;
  for (const auto& [w, c] : terms) {
    if (len == 0) len = w.size();
    if (w.size() != len) return false;
  }
  return true;
}

int LieElement::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms)
    if (static_cast<int>(w.size()) > d) d = static_cast<int>(w.size());
  return d;
}

LieElement LieElement::graded_part(int deg) const {
  LieElement out(genus);
  for (const auto& [w, c] : terms)
    if (static_cast<int>(w.size()) == deg) out.terms.emplace(w, c);
  return out;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

LieElement& LieElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
  } else {
    for (auto& [w, v] : terms) v *= c;
  }
  return *this;
}

bool is_lyndon_word(const Word& w) {
  if (w.empty()) return false;
  for (size_t i = 1; i < w.size(); ++i)
    if (w.compare(w.substr(i)) >= 0) return false;
  return true;
}

std::vector<Word> lyndon_basis(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("lyndon_basis: bad arguments");
  // Fredricksen–Kessler–Maiorana generation, filtered to length exactly k
  std::vector<Word> out;
  Word w(1, 0);
  for (;;) {
    if (static_cast<int>(w.size()) == k) out.push_back(w);
    Word t = w;
    while (static_cast<int>(t.size()) < k) t += t[t.size() % w.size()];
    while (!t.empty() && static_cast<Letter>(t.back()) == n - 1) t.pop_back();
    if (t.empty()) break;
    t.back() = static_cast<char>(t.back() + 1);
    w = t;
  }
  return out;
}

long long witt_dimension(int n, int k) {
  auto mobius = [](int d) {
    int m = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        m = -m;
      }
    }
    if (d > 1) m = -m;
    return m;
  };
  long long sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    long long pw = 1;
    for (int i = 0; i < k / d; ++i) pw *= n;
    sum += mobius(d) * pw;
  }
  return sum / k;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2 || !is_lyndon_word(w))
    throw std::invalid_argument("standard_factorization: not a Lyndon word");
  // v = lexicographically smallest proper suffix (also the longest Lyndon one)
  size_t best = 1;
  for (size_t i = 2; i < w.size(); ++i)
    if (w.compare(i, Word::npos, w, best, Word::npos) < 0) best = i;
  return {w.substr(0, best), w.substr(best)};
}

namespace {

std::mutex lyndon_cache_mutex;
std::map<Word, std::map<Word, Int>> lyndon_cache;

std::map<Word, Int> conv_commutator(const std::map<Word, Int>& a,
                                    const std::map<Word, Int>& b) {
  std::map<Word, Int> out;
  auto acc = [&out](const Word& w, Int v) {
    auto it = out.find(w);
    if (it == out.end()) {
      if (v != 0) out.emplace(w, std::move(v));
    } else {
      it->second += v;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      acc(u + v, cu * cv);
      acc(v + u, -(cu * cv));
    }
  return out;
}

}  // namespace

const std::map<Word, Int>& lyndon_tensor(const Word& w) {
  {
    std::lock_guard<std::mutex> lk(lyndon_cache_mutex);
    auto it = lyndon_cache.find(w);
    if (it != lyndon_cache.end()) return it->second;
  }
  std::map<Word, Int> val;
  if (w.size() == 1) {
    val.emplace(w, 1);
  } else {
    auto [u, v] = standard_factorization(w);
    val = conv_commutator(lyndon_tensor(u), lyndon_tensor(v));
  }
  std::lock_guard<std::mutex> lk(lyndon_cache_mutex);
  return lyndon_cache.emplace(w, std::move(val)).first->second;
}

LieElement lie_letter(int genus, Letter x) {
  LieElement out(genus);
  out.terms.emplace(Word(1, static_cast<char>(x)), Rat(1));
  return out;
}

TensorElement lie_to_tensor(const LieElement& x) {
  TensorElement out(x.genus);
  for (const auto& [w, c] : x.terms)
    for (const auto& [u, k] : lyndon_tensor(w)) out.add(u, c * k);
  return out;
}

LieElement tensor_to_lie(const TensorElement& t) {
  // Triangularity: the lex-least word in each degree of a Lie element is
  // Lyndon and carries its Lyndon-basis coefficient.  Greedy elimination.
  LieElement out(t.genus);
  TensorElement rem = t;
  while (!rem.terms.empty()) {
    const auto& [w, c] = *rem.terms.begin();
    if (!is_lyndon_word(w)) throw std::invalid_argument("not a Lie element");
    Rat cc = c;
    out.add(w, cc);
    for (const auto& [u, k] : lyndon_tensor(w)) rem.add(u, -cc * k);
  }
  return out;
}

LieElement lie_bracket(const LieElement& x, const LieElement& y) {
  TensorElement tx = lie_to_tensor(x), ty = lie_to_tensor(y);
  TensorElement comm = tensor_product(tx, ty, -1);
  comm -= tensor_product(ty, tx, -1);
  return tensor_to_lie(comm);
}

LieElement left_normed_bracket(int genus, const Word& seq) {
  if (seq.empty())
    throw std::invalid_argument("left_normed_bracket: empty sequence");
  LieElement out = lie_letter(genus, static_cast<Letter>(seq[0]));
  for (size_t i = 1; i < seq.size(); ++i)
    out = lie_bracket(out, lie_letter(genus, static_cast<Letter>(seq[i])));
  return out;
}

namespace {

using LN = std::map<Word, Int>;  // letter sequence -> integer coefficient

void ln_acc(LN& out, const Word& w, Int v) {
  auto it = out.find(w);
  if (it == out.end()) {
    if (v != 0) out.emplace(w, std::move(v));
  } else {
    it->second += v;
    if (it->second == 0) out.erase(it);
  }
}

// Left-normed form of [LN(p), LN(q)] via the Jacobi rewrite
// [A, [B, y]] = [[A, B], y] - [[A, y], B].
LN ln_pair(const Word& p, const Word& q) {
  LN out;
  if (q.size() == 1) {
    out.emplace(p + q, 1);
    return out;
  }
  Word qp = q.substr(0, q.size() - 1);
  char y = q.back();
  for (const auto& [r, c] : ln_pair(p, qp)) ln_acc(out, r + y, c);
  for (const auto& [r, c] : ln_pair(p + y, qp)) ln_acc(out, r, -c);
  return out;
}

std::mutex ln_cache_mutex;
std::map<Word, LN> ln_cache;

// Left-normed form of the standard bracketing of a Lyndon word.
const LN& ln_word(const Word& w) {
  {
    std::lock_guard<std::mutex> lk(ln_cache_mutex);
    auto it = ln_cache.find(w);
    if (it != ln_cache.end()) return it->second;
  }
  LN val;
  if (w.size() == 1) {
    val.emplace(w, 1);
  } else {
    auto [u, v] = standard_factorization(w);
    for (const auto& [p, cp] : ln_word(u))
      for (const auto& [q, cq] : ln_word(v))
        for (const auto& [r, c] : ln_pair(p, q)) ln_acc(val, r, cp * cq * c);
  }
  std::lock_guard<std::mutex> lk(ln_cache_mutex);
  return ln_cache.emplace(w, std::move(val)).first->second;
}

}  // namespace

std::vector<std::pair<Int, Word>> left_normed_decompose(const LieElement& x) {
  if (!x.integral())
    throw std::invalid_argument("left_normed_decompose: non-integral input");
  LN acc;
  for (const auto& [w, c] : x.terms) {
    Int ci = c.get_num();
    for (const auto& [r, k] : ln_word(w)) ln_acc(acc, r, ci * k);
  }
  std::vector<std::pair<Int, Word>> out;
  out.reserve(acc.size());
  for (auto& [r, c] : acc) out.emplace_back(std::move(c), r);
  return out;
}

LieElement bch(const LieElement& x, const LieElement& y, int max_deg) {
  TensorElement ex = tensor_exp(lie_to_tensor(x), max_deg);
  TensorElement ey = tensor_exp(lie_to_tensor(y), max_deg);
  TensorElement lg = tensor_log(tensor_product(ex, ey, max_deg), max_deg);
  return tensor_to_lie(lg);
}

}  // namespace satoh
