#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lightnet/polyring/polynomial.hpp"

namespace lightnet {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::ostringstream os;
    os << "parse error";
    if (line != 0) os << " at line " << line;
    if (column != 0) os << ", column " << column;
    os << ": " << what;
    return os.str();
  }

  std::size_t line_;
  std::size_t column_;
};

inline std::string to_string(const Monomial& m, std::size_t arity) {
  std::string s;
  for (std::size_t i = 0; i < arity; ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += 't' + std::to_string(i + 1);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

/// Text form using t1..tn, `*`, `^` and exact rational coefficients,
/// terms in descending degrevlex order, e.g. "t2*t13 - 3/2*t4 + 1".
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    if (first) {
      if (c < 0) {
        out += '-';
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + '*';
      out += to_string(t.monomial, p.arity());
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t arity, std::size_t line)
      : text_(text), arity_(arity), line_(line) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, pos_ + 1); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        Polynomial d = power();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = Rational(1 / d.constant_term()) * acc;
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = unary();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial::constant(arity_, Rational(std::string(text_.substr(start, pos_ - start))));
    }
    if (c == 't') {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable index after 't'");
      const auto idx = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (idx == 0 || idx > arity_) fail("variable t" + std::to_string(idx) + " outside ring of arity " + std::to_string(arity_));
      return Polynomial::variable(arity_, idx - 1);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t arity_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, std::size_t arity, std::size_t line = 0) {
  return detail::PolyParser(text, arity, line).parse();
}

inline std::string order_name(const MonomialOrder& ord) {
  switch (ord.kind()) {
    case MonomialOrder::Kind::kLex:
      return "lex";
    case MonomialOrder::Kind::kDegRevLex:
      return "degrevlex";
    case MonomialOrder::Kind::kElimination:
      break;
  }
  return "elim:" + std::to_string(ord.eliminated());
}

inline MonomialOrder parse_order(std::string_view name) {
  if (name == "lex") return MonomialOrder::lex();
  if (name == "degrevlex") return MonomialOrder::degrevlex();
  if (name.starts_with("elim:")) {
    return MonomialOrder::eliminating(static_cast<std::uint32_t>(std::stoul(std::string(name.substr(5)))));
  }
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "'");
}

/// Ideal file contents: header `ideal <arity> <order>` then one generator per
/// line. Blank lines and lines starting with '#' are ignored.
struct GeneratorFile {
  std::size_t arity = 0;
  MonomialOrder order = MonomialOrder::degrevlex();
  std::vector<Polynomial> generators;
};

inline GeneratorFile read_generator_file(std::istream& in) {
  GeneratorFile f;
  bool have_header = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string tag;
      std::string order;
      std::size_t arity = 0;
      if (!(hs >> tag >> arity >> order) || tag != "ideal") {
        throw ParseError("expected header 'ideal <arity> <order>'", lineno, 0);
      }
      if (arity == 0 || arity > kMaxVariables) throw ParseError("arity out of range", lineno, 0);
      f.arity = arity;
      try {
        f.order = parse_order(order);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), lineno, 0);
      }
      have_header = true;
      continue;
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    f.generators.push_back(parse_polynomial(line, f.arity, lineno));
  }
  if (!have_header) throw ParseError("missing 'ideal' header", lineno, 0);
  return f;
}

inline void write_generator_file(std::ostream& out, std::size_t arity, const MonomialOrder& ord,
                                 const std::vector<Polynomial>& gens) {
  out << "ideal " << arity << ' ' << order_name(ord) << '\n';
  for (const auto& g : gens) out << to_string(g) << '\n';
}

}  // namespace lightnet
