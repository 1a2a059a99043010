#include "eqdc/cli/expr.hpp"

#include <cctype>

#include "eqdc/error.hpp"

namespace eqdc::cli {

std::string SourcePos::str() const {
  return source + ":" + std::to_string(line) + ":" + std::to_string(column);
}

namespace {

enum class Tok { Number, Name, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& s, const SourcePos& pos) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
          throw SyntaxError(pos.shifted(i).str() + ": expected a denominator");
        }
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Tok::Number, s.substr(start, i - start), start});
      continue;
    }
    if (name_start(c)) {
      while (i < s.size() && name_char(s[i])) ++i;
      out.push_back({Tok::Name, s.substr(start, i - start), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw SyntaxError(pos.shifted(i).str() + ": unexpected character '" + std::string(1, c) + "'");
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of input" : "'" + t.text + "'"; }

class ElementParser {
 public:
  ElementParser(const std::string& text, AlgebraPtr alg, SourcePos pos)
      : alg_(std::move(alg)), pos_(std::move(pos)), toks_(tokenize(text, pos_)) {}

  Element parse() {
    if (peek().kind == Tok::End) throw SyntaxError(here().str() + ": expected an expression");
    Element e = expr();
    if (peek().kind != Tok::End) throw SyntaxError(here().str() + ": expected '+', '-' or '*', found " + describe(peek()));
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  SourcePos here() const { return pos_.shifted(peek().offset); }
  Token take() { return toks_[i_++]; }

  Element expr() {
    Element out(alg_);
    bool first = true;
    for (;;) {
      int sign = 1;
      if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
        sign = take().kind == Tok::Minus ? -1 : 1;
      } else if (!first) {
        return out;
      }
      Element t = term();
      out += sign > 0 ? t : Rational(-1) * t;
      first = false;
    }
  }

  Element term() {
    Element out = factor();
    while (peek().kind == Tok::Star) {
      take();
      out = out * factor();
    }
    return out;
  }

  Element factor() {
    Element base = primary();
    if (peek().kind == Tok::Caret) {
      take();
      if (peek().kind != Tok::Number || peek().text.find('/') != std::string::npos) {
        throw SyntaxError(here().str() + ": expected a non-negative integer exponent, found " + describe(peek()));
      }
      base = power(base, unsigned(std::stoul(take().text)));
    }
    return base;
  }

  Element primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        take();
        return Element::scalar(alg_, parse_rational(t.text));
      case Tok::Name: {
        take();
        auto idx = alg_->find(t.text);
        if (!idx) throw UnknownGenerator(pos_.shifted(t.offset).str() + ": unknown generator '" + t.text + "'");
        return Element::generator(alg_, *idx);
      }
      case Tok::LParen: {
        take();
        Element e = expr();
        if (peek().kind != Tok::RParen) throw SyntaxError(here().str() + ": expected ')', found " + describe(peek()));
        take();
        return e;
      }
      default:
        throw SyntaxError(here().str() + ": expected a number, generator or '(', found " + describe(t));
    }
  }

  AlgebraPtr alg_;
  SourcePos pos_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

Element parse_element(const std::string& text, const AlgebraPtr& algebra, const SourcePos& pos) {
  return ElementParser(text, algebra, pos).parse();
}

RationalPoly parse_polynomial(const std::string& text, const std::vector<std::string>& names,
                              const SourcePos& pos) {
  std::vector<Generator> gens;
  for (const auto& n : names) gens.push_back({n, 2, std::nullopt, 0});
  AlgebraPtr alg = GradedAlgebra::make(gens);
  Element e = parse_element(text, alg, pos);
  RationalPoly p(names.size());
  for (const auto& [m, q] : e.terms()) p.add_term(std::vector<unsigned>(m.begin(), m.end()), q);
  return p;
}

std::vector<LabeledTerm> parse_combination(const std::string& text, const SourcePos& pos) {
  std::vector<Token> toks = tokenize(text, pos);
  std::vector<LabeledTerm> out;
  std::size_t i = 0;
  auto at = [&](std::size_t k) { return pos.shifted(toks[k].offset); };
  bool first = true;
  while (toks[i].kind != Tok::End) {
    Rational sign = 1;
    if (toks[i].kind == Tok::Plus || toks[i].kind == Tok::Minus) {
      if (toks[i].kind == Tok::Minus) sign = -1;
      ++i;
    } else if (!first) {
      throw SyntaxError(at(i).str() + ": expected '+' or '-', found " + describe(toks[i]));
    }
    first = false;
    LabeledTerm term{sign, "1", at(i), at(i)};
    if (toks[i].kind == Tok::Number) {
      term.coefficient *= parse_rational(toks[i].text);
      ++i;
      if (toks[i].kind != Tok::Star) {
        if (term.coefficient != 0) out.push_back(term);
        continue;
      }
      ++i;
    }
    if (toks[i].kind != Tok::Name) throw SyntaxError(at(i).str() + ": expected a label, found " + describe(toks[i]));
    term.pos = at(i);
    term.label = toks[i].text;
    ++i;
    if (toks[i].kind == Tok::Caret) {
      if (toks[i + 1].kind != Tok::Number) throw SyntaxError(at(i + 1).str() + ": expected an exponent");
      term.label += "^" + toks[i + 1].text;
      i += 2;
    }
    out.push_back(term);
  }
  return out;
}

std::string format_combination(const RationalVector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational a = abs(v[i]);
    std::string term;
    if (labels[i] == "1") {
      term = to_string(a);
    } else {
      term = a == 1 ? labels[i] : to_string(a) + "*" + labels[i];
    }
    if (out.empty()) {
      out = v[i] < 0 ? "-" + term : term;
    } else {
      out += v[i] < 0 ? " - " + term : " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace eqdc::cli
