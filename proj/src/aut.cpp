#include "satoh/aut.hpp"

#include <cctype>
#include <stdexcept>

namespace satoh {

namespace {

GroupWord apply_images(const std::vector<GroupWord>& images,
                       const GroupWord& w) {
  GroupWord out(w.genus);
  for (int l : w.letters) {
    const GroupWord& img = images[(l > 0 ? l : -l) - 1];
    if (l > 0) {
      for (int m : img.letters) out.push(m);
    } else {
      for (auto it = img.letters.rbegin(); it != img.letters.rend(); ++it)
        out.push(-*it);
    }
  }
  return out;
}

}  // namespace

FreeAutomorphism::FreeAutomorphism(int g, std::vector<GroupWord> forward,
                                   std::vector<GroupWord> inverse)
    : genus(g), fwd(std::move(forward)), inv(std::move(inverse)) {
  if (static_cast<int>(fwd.size()) != 2 * g ||
      static_cast<int>(inv.size()) != 2 * g)
    throw std::invalid_argument("automorphism: wrong image count");
  for (int x = 0; x < 2 * g; ++x) {
    GroupWord gen = gw_letter(g, static_cast<Letter>(x));
    if (apply_images(fwd, inv[x]) != gen || apply_images(inv, fwd[x]) != gen)
      throw std::invalid_argument("automorphism: inverse images do not check");
  }
}

FreeAutomorphism FreeAutomorphism::identity(int genus) {
  std::vector<GroupWord> ims;
  for (int x = 0; x < 2 * genus; ++x)
    ims.push_back(gw_letter(genus, static_cast<Letter>(x)));
  return FreeAutomorphism(genus, ims, ims);
}

GroupWord apply_aut(const FreeAutomorphism& f, const GroupWord& w) {
  if (f.genus != w.genus) throw std::invalid_argument("genus mismatch");
  return apply_images(f.fwd, w);
}

FreeAutomorphism aut_compose(const FreeAutomorphism& f,
                             const FreeAutomorphism& g) {
  if (f.genus != g.genus) throw std::invalid_argument("genus mismatch");
  std::vector<GroupWord> fwd, inv;
  for (int x = 0; x < 2 * f.genus; ++x) {
    fwd.push_back(apply_images(f.fwd, g.fwd[x]));
    inv.push_back(apply_images(g.inv, f.inv[x]));
  }
  return FreeAutomorphism(f.genus, std::move(fwd), std::move(inv));
}

FreeAutomorphism aut_invert(const FreeAutomorphism& f) {
  return FreeAutomorphism(f.genus, f.inv, f.fwd);
}

FreeAutomorphism aut_commutator(const FreeAutomorphism& f,
                                const FreeAutomorphism& g) {
  return aut_compose(aut_compose(f, g),
                     aut_compose(aut_invert(f), aut_invert(g)));
}

FreeAutomorphism aut_K(int genus, Letter x, Letter y) {
  if (x == y) throw std::invalid_argument("K generator needs x != y");
  std::vector<GroupWord> fwd, inv;
  for (int t = 0; t < 2 * genus; ++t) {
    GroupWord gen = gw_letter(genus, static_cast<Letter>(t));
    if (t == x) {
      GroupWord yw = gw_letter(genus, y);
      fwd.push_back(gw_multiply(gw_multiply(gw_invert(yw), gen), yw));
      inv.push_back(gw_multiply(gw_multiply(yw, gen), gw_invert(yw)));
    } else {
      fwd.push_back(gen);
      inv.push_back(gen);
    }
  }
  return FreeAutomorphism(genus, std::move(fwd), std::move(inv));
}

FreeAutomorphism aut_K3(int genus, Letter x, Letter y, Letter z) {
  if (x == y || x == z || y == z)
    throw std::invalid_argument("K3 generator needs distinct letters");
  std::vector<GroupWord> fwd, inv;
  for (int t = 0; t < 2 * genus; ++t) {
    GroupWord gen = gw_letter(genus, static_cast<Letter>(t));
    if (t == x) {
      GroupWord yw = gw_letter(genus, y), zw = gw_letter(genus, z);
      fwd.push_back(gw_multiply(gen, gw_commutator(yw, zw)));
      inv.push_back(gw_multiply(gen, gw_commutator(zw, yw)));
    } else {
      fwd.push_back(gen);
      inv.push_back(gen);
    }
  }
  return FreeAutomorphism(genus, std::move(fwd), std::move(inv));
}

namespace {

struct AutParser {
  const std::string& s;
  size_t pos = 0;
  int genus;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument(std::string("automorphism parse: expected '") +
                                  c + "' at position " + std::to_string(pos));
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           std::isalnum(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos)
      throw std::invalid_argument("automorphism parse: expected name at position " +
                                  std::to_string(pos));
    return s.substr(start, pos - start);
  }

  Letter gen() { return parse_letter(ident(), genus); }

  FreeAutomorphism term() {
    skip_ws();
    if (eat('[')) {
      FreeAutomorphism a = expr();
      expect(',');
      FreeAutomorphism b = expr();
      expect(']');
      return aut_commutator(a, b);
    }
    std::string name = ident();
    if (name == "K") {
      Letter x = gen(), y = gen();
      return aut_K(genus, x, y);
    }
    if (name == "K3") {
      Letter x = gen(), y = gen(), z = gen();
      return aut_K3(genus, x, y, z);
    }
    if (name == "inv") {
      expect('(');
      FreeAutomorphism a = expr();
      expect(')');
      return aut_invert(a);
    }
    throw std::invalid_argument("automorphism parse: unknown operator " + name);
  }

  FreeAutomorphism expr() {
    FreeAutomorphism out = term();
    for (;;) {
      skip_ws();
      // explicit '*' or juxtaposed '[' both continue a product
      if (eat('*')) {
        out = aut_compose(out, term());
      } else if (pos < s.size() && s[pos] == '[') {
        out = aut_compose(out, term());
      } else {
        return out;
      }
    }
  }
};

}  // namespace

FreeAutomorphism parse_automorphism(const std::string& s, int genus) {
  AutParser p{s, 0, genus};
  FreeAutomorphism out = p.expr();
  p.skip_ws();
  if (p.pos != s.size())
    throw std::invalid_argument("automorphism parse: trailing input at position " +
                                std::to_string(p.pos));
  return out;
}

}  // namespace satoh
