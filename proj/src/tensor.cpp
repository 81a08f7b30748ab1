#include "satoh/tensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace satoh {

void TensorElement::add(const Word& w, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

bool TensorElement::integral() const {
  for (const auto& [w, c] : terms)
    if (!is_integral(c)) return false;
  return true;
}

Rat TensorElement::coeff(const Word& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? Rat(0) : it->second;
}

int TensorElement::min_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms) {
    int len = static_cast<int>(w.size());
    if (d < 0 || len < d) d = len;
  }
  return d;
}

int TensorElement::max_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

TensorElement TensorElement::graded_part(int deg) const {
  TensorElement out(genus);
  for (const auto& [w, c] : terms)
    if (static_cast<int>(w.size()) == deg) out.terms.emplace(w, c);
  return out;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [w, c] : o.terms) add(w, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [w, c] : o.terms) add(w, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rat& c) {
  if (c == 0) {
    terms.clear();
  } else {
    for (auto& [w, v] : terms) v *= c;
  }
  return *this;
}

TensorElement tensor_letter(int genus, Letter x) {
  TensorElement t(genus);
  t.terms.emplace(Word(1, static_cast<char>(x)), Rat(1));
  return t;
}

TensorElement tensor_one(int genus) {
  TensorElement t(genus);
  t.terms.emplace(Word(), Rat(1));
  return t;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b,
                             int max_deg) {
  TensorElement out(a.genus ? a.genus : b.genus);
  for (const auto& [u, cu] : a.terms) {
    for (const auto& [v, cv] : b.terms) {
      if (max_deg >= 0 && static_cast<int>(u.size() + v.size()) > max_deg)
        continue;
      out.add(u + v, cu * cv);
    }
  }
  return out;
}

TensorElement tensor_exp(const TensorElement& x, int max_deg) {
  if (x.coeff(Word()) != 0)
    throw std::invalid_argument("tensor_exp: nonzero constant term");
  TensorElement out = tensor_one(x.genus);
  TensorElement pw = tensor_one(x.genus);
  Rat fact(1);
  int mindeg = std::max(1, x.min_degree());
  for (int k = 1; k * mindeg <= max_deg; ++k) {
    pw = tensor_product(pw, x, max_deg);
    if (pw.is_zero()) break;
    fact /= k;
    TensorElement term = pw;
    term *= fact;
    out += term;
  }
  return out;
}

TensorElement tensor_log(const TensorElement& f, int max_deg) {
  if (f.coeff(Word()) != 1)
    throw std::invalid_argument("tensor_log: constant term is not 1");
  TensorElement x = f;
  x.add(Word(), Rat(-1));
  TensorElement out(f.genus);
  TensorElement pw = tensor_one(f.genus);
  int mindeg = std::max(1, x.min_degree());
  if (x.is_zero()) return out;
  for (int k = 1; k * mindeg <= max_deg; ++k) {
    pw = tensor_product(pw, x, max_deg);
    if (pw.is_zero()) break;
    TensorElement term = pw;
    term *= Rat(k % 2 ? 1 : -1, k);
    out += term;
  }
  return out;
}

}  // namespace satoh
