#include "fiveclass/expression_parser.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "fiveclass/error.hpp"

namespace fiveclass {

using algebra::Block;
using algebra::ManifoldExpression;
using bordism::Category;

namespace {

class Parser {
 public:
  Parser(std::string_view text, Category category)
      : text_(text), category_(category) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
  }

  ManifoldExpression parse() {
    ManifoldExpression e;
    e.category = category_;
    e.blocks.push_back(term());
    while (pos_ < chars_.size()) {
      if (!accept("#")) fail({"'#'", "'#~'", "end of input"});
      e.framings.push_back(accept("~") ? 1 : 0);
      e.blocks.push_back(term());
    }
    try {
      algebra::validate(e);
    } catch (const Error& err) {
      throw Error(ErrorCode::SemanticError, err.what());
    }
    return e;
  }

 private:
  std::size_t offset() const {
    return pos_ < offsets_.size() ? offsets_[pos_] : text_.size();
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "at offset " + std::to_string(offset()) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += pos_ < chars_.size() ? std::string(", found '") + chars_[pos_] + "'"
                                : std::string(", found end of input");
    throw SyntaxError(offset(), std::move(expected), msg);
  }

  [[noreturn]] void semantic(const std::string& what) const {
    throw Error(ErrorCode::SemanticError, what);
  }

  bool accept(std::string_view word) {
    if (chars_.compare(pos_, word.size(), word) == 0 &&
        pos_ + word.size() <= chars_.size()) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view word) {
    if (!accept(word)) fail({"'" + std::string(word) + "'"});
  }

  bool at_digit() const {
    return pos_ < chars_.size() &&
           std::isdigit(static_cast<unsigned char>(chars_[pos_]));
  }

  int integer() {
    const bool negative = accept("-");
    if (!at_digit()) fail({"integer"});
    long long v = 0;
    while (at_digit()) {
      v = v * 10 + (chars_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) semantic("integer too large");
      ++pos_;
    }
    return static_cast<int>(negative ? -v : v);
  }

  Block term() {
    if (accept("X(")) {
      const int first = integer();
      if (accept(",")) {
        const int second = integer();
        expect(")");
        if (category_ == Category::Smooth) {
          semantic("X(p,q) carries a KS entry; only X(q) is smooth");
        }
        if (first != 0 && first != 1) semantic("KS entry of X(p,q) must be 0 or 1");
        return Block::fake_rp5(category_, second, first);
      }
      expect(")");
      return Block::fake_rp5(category_, first, 0);
    }
    if (accept("S2xRP3")) return Block::s2xrp3();
    if (accept("*S2xRP3")) {
      if (category_ == Category::Smooth) {
        semantic("*S2xRP3 is not smoothable; use the top category");
      }
      return Block::star_s2xrp3();
    }
    if (accept("CP2xS1")) return Block::cp2xs1();
    if (at_digit() || (pos_ < chars_.size() && chars_[pos_] == '-')) {
      const int k = integer();
      expect("*(S2xS2)xS1");
      if (k < 1) semantic("(#_k S2xS2)xS1 needs k >= 1");
      return Block::s2xs2xs1(k);
    }
    fail({"'X('", "'S2xRP3'", "'*S2xRP3'", "'CP2xS1'", "'k*(S2xS2)xS1'"});
  }

  std::string_view text_;
  Category category_;
  std::string chars_;
  std::vector<std::size_t> offsets_;
  std::size_t pos_ = 0;
};

}  // namespace

ManifoldExpression parse_expression(std::string_view text, Category category) {
  return Parser(text, category).parse();
}

}  // namespace fiveclass
