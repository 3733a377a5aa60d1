#include "ocf/ordinal.hpp"

#include <cctype>
#include <limits>

#include "ocf/errors.hpp"

namespace ocf {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw OverflowError(std::string(what) + " out of range");
  }
  return a + b;
}

}  // namespace

Ord2 add(Ord2 a, Ord2 b) {
  if (b.degree > 0) {
    // The finite tail of the left operand is absorbed: w*k + c + w = w*(k+1).
    return Ord2{checked_add(a.degree, b.degree, "degree"), b.shift};
  }
  return Ord2{a.degree, checked_add(a.shift, b.shift, "shift")};
}

std::optional<Ord2> left_sub(Ord2 a, Ord2 b) {
  if (a < b) return std::nullopt;
  if (a.degree == b.degree) return Ord2{0, a.shift - b.shift};
  return Ord2{a.degree - b.degree, a.shift};
}

std::strong_ordering compare(Ord2 a, Ord2 b) noexcept { return a <=> b; }

std::string to_string(Ord2 v) {
  if (v.degree == 0) return std::to_string(v.shift);
  std::string out = "w";
  if (v.degree > 1) out += "*" + std::to_string(v.degree);
  if (v.shift > 0) out += "+" + std::to_string(v.shift);
  return out;
}

namespace {

class OrdinalScanner {
 public:
  explicit OrdinalScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t number() {
    skip_space();
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a number in ordinal literal", pos_);
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError("number in ordinal literal out of range", pos_);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ord2 parse_ordinal(std::string_view text) {
  OrdinalScanner sc(text);
  if (sc.at_end()) throw ParseError("empty ordinal literal", 0);
  Ord2 out;
  if (sc.consume('w')) {
    out.degree = 1;
    if (sc.consume('*')) out.degree = sc.number();
    if (sc.consume('+')) out.shift = sc.number();
  } else {
    out.shift = sc.number();
  }
  if (!sc.at_end()) {
    throw ParseError("unexpected trailing characters in ordinal literal",
                     sc.pos());
  }
  return out;
}

}  // namespace ocf
