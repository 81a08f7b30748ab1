#include "satoh/groupword.hpp"

#include <sstream>
#include <stdexcept>

namespace satoh {

void GroupWord::push(int signed_letter) {
  if (signed_letter == 0) throw std::invalid_argument("zero letter");
  if (!letters.empty() && letters.back() == -signed_letter)
    letters.pop_back();
  else
    letters.push_back(signed_letter);
}

GroupWord gw_letter(int genus, Letter x, int sign) {
  GroupWord w(genus);
  w.push(sign >= 0 ? static_cast<int>(x) + 1 : -(static_cast<int>(x) + 1));
  return w;
}

GroupWord gw_multiply(const GroupWord& u, const GroupWord& v) {
  if (u.genus != v.genus) throw std::invalid_argument("genus mismatch");
  GroupWord out = u;
  for (int l : v.letters) out.push(l);
  return out;
}

GroupWord gw_invert(const GroupWord& u) {
  GroupWord out(u.genus);
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

GroupWord gw_commutator(const GroupWord& u, const GroupWord& v) {
  return gw_multiply(gw_multiply(u, v),
                     gw_multiply(gw_invert(u), gw_invert(v)));
}

GroupWord boundary_word_inverse(int genus) {
  GroupWord out(genus);
  for (int i = 0; i < genus; ++i) {
    auto bi = gw_letter(genus, letter_b(i), -1);
    auto ai = gw_letter(genus, letter_a(i));
    out = gw_multiply(out, gw_commutator(bi, ai));
  }
  return out;
}

GroupWord boundary_word(int genus) {
  return gw_invert(boundary_word_inverse(genus));
}

GroupWord parse_group_word(const std::string& s, int genus) {
  GroupWord out(genus);
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    auto caret = tok.find('^');
    std::string base = tok;
    if (caret != std::string::npos) {
      std::string exp = tok.substr(caret + 1);
      base = tok.substr(0, caret);
      if (exp == "-1")
        sign = -1;
      else if (exp != "1")
        throw std::invalid_argument("bad exponent in token: " + tok);
    }
    out.push(sign * (static_cast<int>(parse_letter(base, genus)) + 1));
  }
  return out;
}

std::string group_word_string(const GroupWord& w) {
  std::string out;
  for (int l : w.letters) {
    if (!out.empty()) out += ' ';
    out += letter_name(static_cast<Letter>((l > 0 ? l : -l) - 1));
    if (l < 0) out += "^-1";
  }
  return out;
}

TensorElement magnus(const GroupWord& w, int max_deg) {
  if (max_deg < 1) throw std::invalid_argument("magnus: max_deg < 1");
  TensorElement out = tensor_one(w.genus);
  for (int l : w.letters) {
    Letter x = static_cast<Letter>((l > 0 ? l : -l) - 1);
    TensorElement gen(w.genus);
    Word pw;
    Rat sign(1);
    gen.add(Word(), 1);
    for (int d = 1; d <= max_deg; ++d) {
      pw += static_cast<char>(x);
      if (l > 0) {
        if (d == 1) gen.add(pw, 1);
      } else {
        sign = -sign;
        gen.add(pw, sign);
      }
    }
    out = tensor_product(out, gen, max_deg);
  }
  return out;
}

LieElement leading_lie_class(const GroupWord& w, int m) {
  TensorElement t = magnus(w, m);
  t.add(Word(), -1);
  for (int d = 1; d < m; ++d)
    if (!t.graded_part(d).is_zero())
      throw std::domain_error("not in Gamma_m");
  LieElement out;
  try {
    out = tensor_to_lie(t.graded_part(m));
  } catch (const std::invalid_argument&) {
    throw std::logic_error("leading term not primitive");
  }
  if (!out.integral()) throw std::logic_error("leading term not integral");
  return out;
}

}  // namespace satoh
