#include <cctype>
#include <string>

#include "swapdeon/error.hpp"
#include "swapdeon/formula.hpp"

namespace swapdeon {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Dialect& dialect)
      : text_(text), dialect_(dialect) {}

  Formula run() {
    Formula f = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + peek_text() + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ParseError::Kind::Syntax, pos_, message);
  }
  [[noreturn]] void fail_at(std::size_t at, ParseError::Kind kind,
                            const std::string& message) const {
    throw ParseError(kind, at, message);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string peek_text() const {
    if (pos_ >= text_.size()) return "end of input";
    return std::string(1, text_[pos_]);
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) {
      fail("expected '" + std::string(token) + "' but found " +
           (pos_ >= text_.size() ? "end of input" : "'" + peek_text() + "'"));
    }
  }

  Formula expand(Sugar sugar, const Formula& arg, std::size_t at, int k = 0) {
    try {
      return expand_defined(sugar, arg, dialect_, k);
    } catch (const ParseError& e) {
      std::string message = e.what();
      message.erase(message.rfind(" at offset "));
      fail_at(at, ParseError::Kind::Sugar, message);
    }
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::imp(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (accept("|")) acc = Formula::disj(acc, conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = prefix();
    while (accept("&")) acc = Formula::conj(acc, prefix());
    return acc;
  }

  Formula prefix() {
    skip_space();
    std::size_t at = pos_;
    if (accept("~")) return Formula::neg(prefix());
    if (accept("@")) {
      if (dialect_.c_family()) {
        fail_at(at, ParseError::Kind::Signature,
                "'@' is not in the signature of this logic");
      }
      return Formula::circ(prefix());
    }
    if (pos_ < text_.size() && text_[pos_] == 'O') {
      ++pos_;
      return Formula::obl(prefix());
    }
    if (pos_ < text_.size() && text_[pos_] == 'P') {
      ++pos_;
      return expand(Sugar::Permission, prefix(), at);
    }
    return postfix();
  }

  int exponent() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a positive integer exponent");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4 || std::stoi(digits) == 0) {
      pos_ = start;
      fail("exponent must be a positive integer below 10000");
    }
    return std::stoi(digits);
  }

  Formula postfix() {
    Formula f = primary();
    for (;;) {
      skip_space();
      std::size_t at = pos_;
      if (!accept("^")) return f;
      if (accept("(")) {
        int k = exponent();
        expect(")");
        f = expand(Sugar::PowerConjunction, f, at, k);
      } else {
        f = expand(Sugar::Power, f, at, exponent());
      }
    }
  }

  Formula primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    std::size_t at = pos_;
    if (accept("(")) {
      Formula inner = implication();
      expect(")");
      return inner;
    }
    char c = text_[pos_];
    if (!std::islower(static_cast<unsigned char>(c))) {
      fail("unexpected '" + peek_text() + "'");
    }
    std::size_t end = pos_;
    while (end < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[end])) ||
            text_[end] == '_')) {
      ++end;
    }
    std::string word(text_.substr(pos_, end - pos_));
    pos_ = end;
    Sugar sugar;
    if (word == "bot") {
      sugar = Sugar::Bottom;
    } else if (word == "snot") {
      sugar = Sugar::StrongNeg;
    } else if (word == "snotn") {
      sugar = Sugar::StrongNegN;
    } else {
      return Formula::atom(std::move(word));
    }
    expect("(");
    Formula arg = implication();
    expect(")");
    return expand(sugar, arg, at);
  }

  std::string_view text_;
  const Dialect& dialect_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, const Dialect& dialect) {
  return Parser(text, dialect).run();
}

}  // namespace swapdeon
