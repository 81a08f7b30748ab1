#include "satoh/cyclic.hpp"

#include <algorithm>
#include <stdexcept>

namespace satoh {

Word canonical_rotation(const Word& w) {
  if (w.size() < 2) return w;
  Word best = w;
  Word rot = w;
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

Word mirror_word(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word mirror_necklace(const Word& w) {
  return canonical_rotation(mirror_word(w));
}

void CyclicClass::add(const Word& w, const Rat& c) {
  if (c == 0) return;
  if (static_cast<int>(w.size()) != degree)
    throw std::invalid_argument("CyclicClass::add: wrong degree");
  Word key = canonical_rotation(w);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

bool CyclicClass::integral() const {
  for (const auto& [w, c] : terms)
    if (!is_integral(c)) return false;
  return true;
}

Rat CyclicClass::coeff(const Word& w) const {
  auto it = terms.find(canonical_rotation(w));
  return it == terms.end() ? Rat(0) : it->second;
}

CyclicClass& CyclicClass::operator+=(const CyclicClass& o) {
  if (!o.terms.empty() && degree != o.degree)
    throw std::invalid_argument("CyclicClass: degree mismatch");
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

CyclicClass& CyclicClass::operator-=(const CyclicClass& o) {
  if (!o.terms.empty() && degree != o.degree)
    throw std::invalid_argument("CyclicClass: degree mismatch");
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

CyclicClass& CyclicClass::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
  } else {
    for (auto& [w, v] : terms) v *= c;
  }
  return *this;
}

CyclicClass cyclic_project(const TensorElement& t) {
  int deg = t.min_degree();
  if (deg < 0) deg = 0;
  CyclicClass out(t.genus, deg);
  for (const auto& [w, c] : t.terms) {
    if (static_cast<int>(w.size()) != deg)
      throw std::invalid_argument("cyclic_project: non-homogeneous input");
    out.add(w, c);
  }
  return out;
}

BClass mirror_reduce(const CyclicClass& c) {
  if (!c.integral())
    throw std::invalid_argument("mirror_reduce: non-integral input");
  BClass out;
  out.genus = c.genus;
  out.degree = c.degree;
  const bool odd = c.degree % 2 != 0;
  for (const auto& [w, cf] : c.terms) {
    Int ci = cf.get_num();
    Word m = mirror_necklace(w);
    if (m == w) {
      if (odd) {
        // chiral in odd degree: w = -w, coefficient lives mod 2
        if (mpz_odd_p(ci.get_mpz_t())) {
          auto [it, inserted] = out.torsion.insert(w);
          if (!inserted) out.torsion.erase(it);
        }
      } else {
        out.free_part[w] += ci;
      }
    } else {
      // bracelet key = least of the mirror pair; odd degree flips the sign
      // of the non-canonical representative
      const Word& key = std::min(w, m);
      Int v = (odd && key != w) ? Int(-ci) : ci;
      out.free_part[key] += v;
    }
  }
  for (auto it = out.free_part.begin(); it != out.free_part.end();)
    it = it->second == 0 ? out.free_part.erase(it) : std::next(it);
  return out;
}

namespace {

long long ipow(long long n, int e) {
  long long r = 1;
  while (e-- > 0) r *= n;
  return r;
}

long long euler_phi(int d) {
  long long r = d;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      r -= r / p;
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) r -= r / d;
  return r;
}

}  // namespace

CountReport counts(int k, int n) {
  if (k < 1 || n < 1) throw std::invalid_argument("counts: bad arguments");
  CountReport r;
  long long sum = 0;
  for (int d = 1; d <= k; ++d)
    if (k % d == 0) sum += euler_phi(d) * ipow(n, k / d);
  r.necklaces = sum / k;
  r.chiral = k % 2 ? ipow(n, (k + 1) / 2)
                   : (n + 1) * ipow(n, k / 2) / 2;
  r.bracelets = (r.necklaces + r.chiral) / 2;
  if (k % 2) {
    r.b_free_rank = r.bracelets - r.chiral;
    r.b_torsion_rank = r.chiral;
  } else {
    r.b_free_rank = r.bracelets;
    r.b_torsion_rank = 0;
  }
  return r;
}

CountReport brute_counts(int k, int n) {
  CountReport r;
  std::set<Word> necklaces, bracelets;
  long long chiral = 0;
  Word w(k, 0);
  for (;;) {
    Word c = canonical_rotation(w);
    if (necklaces.insert(c).second) {
      Word m = mirror_necklace(c);
      if (m == c) ++chiral;
      bracelets.insert(std::min(c, m));
    }
    int i = k - 1;
    while (i >= 0 && static_cast<Letter>(w[i]) == n - 1) w[i--] = 0;
    if (i < 0) break;
    w[i] = static_cast<char>(w[i] + 1);
  }
  r.necklaces = static_cast<long long>(necklaces.size());
  r.bracelets = static_cast<long long>(bracelets.size());
  r.chiral = chiral;
  if (k % 2) {
    r.b_free_rank = r.bracelets - chiral;
    r.b_torsion_rank = chiral;
  } else {
    r.b_free_rank = r.bracelets;
    r.b_torsion_rank = 0;
  }
  return r;
}

}  // namespace satoh
