#include "pluri/naming.hpp"

#include <algorithm>
#include <cctype>

#include "pluri/errors.hpp"

namespace pluri {

Naming Naming::kdv(int dim, std::string field) {
  Naming n;
  n.field = std::move(field);
  n.coords.push_back("x");
  for (int k = 2; k <= dim; ++k) n.coords.push_back("t" + std::to_string(k));
  return n;
}

Naming Naming::xyz(std::string field) {
  Naming n;
  n.field = std::move(field);
  n.coords = {"x", "y", "z"};
  return n;
}

namespace {

bool single_letter_coords(const Naming& naming) {
  return std::all_of(naming.coords.begin(), naming.coords.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

}  // namespace

std::string render(const JetVar& var, const Naming& naming) {
  if (var.dim() > naming.dim()) throw DimensionError("naming has too few coordinates");
  if (var.is_zero()) return naming.field;
  const bool compact = single_letter_coords(naming);
  std::string s = naming.field + "_";
  bool first = true;
  for (int k = 1; k <= var.dim(); ++k) {
    if (var(k) == 0) continue;
    if (!first && !compact) s += ',';
    first = false;
    for (int r = 0; r < var(k); ++r) s += naming.coords[k - 1];
  }
  return s;
}

std::string render(const Monomial& m, const Naming& naming) {
  std::string s;
  auto append = [&s](const std::string& base, int e) {
    if (!s.empty()) s += '*';
    s += base;
    if (e != 1) s += "^" + std::to_string(e);
  };
  for (const auto& [v, e] : m.factors()) append(render(v, naming), e);
  if (m.trig().sin_exp > 0) append("sin(" + naming.field + ")", m.trig().sin_exp);
  if (m.trig().cos_exp > 0) append("cos(" + naming.field + ")", m.trig().cos_exp);
  return s;
}

std::string render(const DiffPoly& p, const Naming& naming) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += render(m, naming);
    } else {
      out += to_string(mag) + "*" + render(m, naming);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Naming& naming) : s_(text), naming_(naming) {}

  DiffPoly parse_all() {
    DiffPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int dim() const { return naming_.dim(); }

  DiffPoly expr() {
    DiffPoly acc(dim());
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    for (;;) {
      DiffPoly t = term();
      if (negative)
        acc -= t;
      else
        acc += t;
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        break;
    }
    return acc;
  }

  DiffPoly term() {
    DiffPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  DiffPoly factor() {
    DiffPoly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  DiffPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      DiffPoly p = expr();
      expect(')');
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
          std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        den = digits();
      }
      Rational q(num + "/" + den);
      q.canonicalize();
      return DiffPoly::constant(dim(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      if (word == "sin" || word == "cos") {
        expect('(');
        skip_ws();
        if (s_.substr(pos_, naming_.field.size()) != naming_.field) fail("expected field name");
        pos_ += naming_.field.size();
        expect(')');
        return word == "sin" ? DiffPoly::sin_u(dim()) : DiffPoly::cos_u(dim());
      }
      if (word != naming_.field) fail("unknown identifier '" + word + "'");
      return DiffPoly::variable(jet_subscript());
    }
    fail("unexpected character");
  }

  JetVar jet_subscript() {
    MultiIndex I(dim());
    if (pos_ >= s_.size() || s_[pos_] != '_') return I;
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ','))
      ++pos_;
    std::string_view sub = s_.substr(start, pos_ - start);
    if (sub.empty()) fail("empty derivative subscript");
    std::size_t at = 0;
    while (at < sub.size()) {
      if (sub[at] == ',') {
        ++at;
        continue;
      }
      int best = 0;
      std::size_t best_len = 0;
      for (int k = 1; k <= dim(); ++k) {
        const std::string& name = naming_.coords[k - 1];
        if (name.size() > best_len && sub.substr(at, name.size()) == name) {
          best = k;
          best_len = name.size();
        }
      }
      if (best == 0) fail("unknown coordinate in subscript");
      I = I.plus(best);
      at += best_len;
    }
    return I;
  }

  std::string_view s_;
  const Naming& naming_;
  std::size_t pos_ = 0;
};

}  // namespace

DiffPoly parse(std::string_view text, const Naming& naming) {
  return Parser(text, naming).parse_all();
}

}  // namespace pluri
