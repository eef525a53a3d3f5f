#include <cctype>
#include <charconv>

#include "satnum/errors.hpp"
#include "satnum/families.hpp"
#include "satnum_internal/family_signature.hpp"

namespace satnum {

namespace {

// Recursive descent over
//   expr := NAME '(' arg {',' arg} ')'
//   arg  := INTEGER | expr
// Positions in errors are 1-based; end of input is size() + 1.
class FamilyParser {
 public:
  explicit FamilyParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!at(c)) {
      fail(pos_ == text_.size() ? std::string("unexpected end of input, expected '") + c + "'"
                                : std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool at_letter() {
    skip_space();
    return pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string_view name() {
    if (!at_letter()) fail("expected a family name");
    const auto start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  std::int64_t integer() {
    if (!at_digit()) fail("expected an integer");
    const auto start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) {
      pos_ = start;
      fail("integer out of range");
    }
    return value;
  }

  FamilySpec expression() {
    skip_space();
    const auto name_pos = pos_;
    const auto word = name();
    const auto* sig = detail::find_signature(word);
    if (sig == nullptr) {
      pos_ = name_pos;
      fail("unknown family '" + std::string(word) + "'");
    }
    FamilySpec spec;
    spec.kind = sig->kind;
    expect('(');
    for (std::size_t i = 0; i < sig->args.size(); ++i) {
      if (i > 0) {
        if (at(')')) {
          fail(std::string(sig->name) + " expects " +
               std::to_string(sig->args.size()) + " arguments");
        }
        expect(',');
      }
      if (sig->args[i] == 'i') {
        if (at_letter()) fail("expected an integer, found a family");
        spec.ints.push_back(integer());
      } else {
        if (at_digit()) fail("expected a family, found an integer");
        spec.children.push_back(expression());
      }
    }
    if (at(',')) {
      fail(std::string(sig->name) + " expects " +
           std::to_string(sig->args.size()) + " arguments");
    }
    expect(')');
    return spec;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family(std::string_view text) {
  return FamilyParser(text).parse();
}

}  // namespace satnum
