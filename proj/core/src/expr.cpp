#include "polyaut/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

#include "polyaut/errors.hpp"

namespace polyaut {

namespace {

enum class Tok { Integer, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Arrow, Separator, End };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

std::string_view describe(Tok t) {
  switch (t) {
    case Tok::Integer: return "integer";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Caret: return "'^'";
    case Tok::Slash: return "'/'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Arrow: return "'->'";
    case Tok::Separator: return "separator";
    case Tok::End: return "end of input";
  }
  return "token";
}

class Lexer {
 public:
  Lexer(std::string_view text, bool separators) : text_(text), separators_(separators) {}

  Token next() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n' && separators_) break;
      if (!std::isspace(static_cast<unsigned char>(c))) break;
      ++pos_;
    }
    if (pos_ >= text_.size()) return {Tok::End, {}, text_.size()};
    const std::size_t start = pos_;
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, text_.substr(start, 1), start};
    };
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return {Tok::Integer, text_.substr(start, pos_ - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return {Tok::Ident, text_.substr(start, pos_ - start), start};
    }
    switch (c) {
      case '+': return single(Tok::Plus);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Tok::Arrow, text_.substr(start, 2), start};
        }
        return single(Tok::Minus);
      case '*': return single(Tok::Star);
      case '^': return single(Tok::Caret);
      case '/': return single(Tok::Slash);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ';':
      case '\n':
        if (separators_) return single(Tok::Separator);
        break;
      default: break;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  std::string_view text_;
  bool separators_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, ContextPtr ctx, bool separators)
      : lexer_(text, separators), ctx_(std::move(ctx)) {
    advance();
  }

  Polynomial sum() {
    Polynomial acc = product();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      Polynomial rhs = product();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  const Token& current() const { return cur_; }
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void unexpected(std::string_view expected) const {
    std::string msg = "syntax error: expected " + std::string(expected) + ", found " +
                      std::string(describe(cur_.kind));
    if (cur_.kind == Tok::Ident || cur_.kind == Tok::Integer || cur_.kind == Tok::LParen)
      msg += " (products need an explicit '*')";
    throw ParseError(msg, cur_.offset);
  }

  void expect(Tok kind) {
    if (cur_.kind != kind) unexpected(describe(kind));
    advance();
  }

  void set_context(ContextPtr ctx) { ctx_ = std::move(ctx); }

 private:
  Polynomial product() {
    Polynomial acc = factor();
    while (cur_.kind == Tok::Star) {
      advance();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return -factor();
    }
    if (cur_.kind == Tok::Plus) {
      advance();
      return factor();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (cur_.kind == Tok::Caret) {
      advance();
      if (cur_.kind != Tok::Integer) unexpected("integer exponent");
      mpz_class e(std::string(cur_.text));
      if (!e.fits_ulong_p() || e > mpz_class(std::numeric_limits<Exponent>::max()))
        throw ParseError("exponent too large", cur_.offset);
      advance();
      if (cur_.kind == Tok::Caret) throw ParseError("chained '^' is ambiguous; use parentheses", cur_.offset);
      return base.pow(e.get_ui());
    }
    return base;
  }

  Polynomial primary() {
    switch (cur_.kind) {
      case Tok::Integer: {
        Rational value{mpz_class(std::string(cur_.text))};
        advance();
        if (cur_.kind == Tok::Slash) {
          advance();
          if (cur_.kind != Tok::Integer) unexpected("integer denominator");
          mpz_class den(std::string(cur_.text));
          if (den == 0) throw ParseError("zero denominator", cur_.offset);
          advance();
          value /= den;
          value.canonicalize();
        }
        return Polynomial::constant(ctx_, value);
      }
      case Tok::Ident: {
        auto idx = ctx_->find(cur_.text);
        if (!idx) throw ParseError("unknown identifier '" + std::string(cur_.text) + "'", cur_.offset);
        advance();
        return Polynomial::variable(ctx_, *idx);
      }
      case Tok::LParen: {
        advance();
        Polynomial inner = sum();
        expect(Tok::RParen);
        return inner;
      }
      default: unexpected("operand");
    }
  }

  Lexer lexer_;
  ContextPtr ctx_;
  Token cur_{Tok::End, {}, 0};
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx) {
  Parser parser(text, ctx, false);
  if (parser.current().kind == Tok::End) throw ParseError("empty expression", 0);
  Polynomial p = parser.sum();
  if (parser.current().kind != Tok::End) parser.unexpected("operator or end of input");
  return p;
}

Rational parse_rational(std::string_view text) {
  auto ctx = make_context(std::vector<std::string>{});
  auto p = parse_polynomial(text, ctx);
  return p.constant_term();
}

std::string format_rational(const Rational& r) { return r.get_str(); }

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ctx = p.vars();
  const auto display = MonomialOrder::graded_lex(ctx.size());
  std::vector<const Term*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](const Term* a, const Term* b) { return display.greater(a->monomial, b->monomial); });
  std::string out;
  bool first = true;
  for (const Term* t : terms) {
    const bool negative = sgn(t->coeff) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(t->coeff);
    std::string mono;
    for (std::size_t v = 0; v < ctx.size(); ++v) {
      auto e = t->monomial[v];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ctx.name(v);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out += format_rational(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += format_rational(mag) + '*' + mono;
    }
  }
  return out;
}

std::vector<Polynomial> parse_assignments(std::string_view text, const ContextPtr& source,
                                          const ContextPtr& target) {
  std::vector<std::optional<Polynomial>> images(source->size());
  Parser parser(text, target, true);
  while (true) {
    while (parser.current().kind == Tok::Separator) parser.advance();
    if (parser.current().kind == Tok::End) break;
    if (parser.current().kind != Tok::Ident) parser.unexpected("variable name");
    const auto name = parser.current().text;
    const auto name_offset = parser.current().offset;
    auto idx = source->find(name);
    if (!idx) throw ParseError("unknown identifier '" + std::string(name) + "'", name_offset);
    if (images[*idx]) throw ParseError("duplicate assignment for '" + std::string(name) + "'", name_offset);
    parser.advance();
    parser.expect(Tok::Arrow);
    images[*idx] = parser.sum();
    if (parser.current().kind != Tok::Separator && parser.current().kind != Tok::End)
      parser.unexpected("';', newline or end of input");
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) throw PreconditionError("no image assigned to '" + source->name(i) + "'");
    out.push_back(std::move(*images[i]));
  }
  return out;
}

PolyMap parse_map(std::string_view text, const ContextPtr& source, const ContextPtr& target) {
  return PolyMap(source, parse_assignments(text, source, target));
}

std::string format_assignments(const VariableContext& source, std::span<const Polynomial> images) {
  std::string out;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (i) out += "; ";
    out += source.name(i) + " -> " + format_polynomial(images[i]);
  }
  return out;
}

}  // namespace polyaut
