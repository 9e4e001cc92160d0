#include "bcjq/bicomplex.hpp"

#include <cctype>
#include <cmath>

namespace bcjq {

std::string_view to_string(Conjugation kind) {
  switch (kind) {
    case Conjugation::I:
      return "i";
    case Conjugation::J:
      return "j";
    case Conjugation::IJ:
      return "ij";
  }
  return "?";
}

std::optional<Conjugation> parse_conjugation(std::string_view text) {
  if (text == "i") return Conjugation::I;
  if (text == "j") return Conjugation::J;
  if (text == "ij") return Conjugation::IJ;
  return std::nullopt;
}

std::string to_string(const Bicomplex<Rational>& w) {
  std::string out = w.w0.to_string();
  const auto term = [&out](const Rational& c, std::string_view unit) {
    if (c.sign() < 0) {
      out += " - " + (-c).to_string();
    } else {
      out += " + " + c.to_string();
    }
    out += "*";
    out += unit;
  };
  term(w.w1, "i");
  term(w.w2, "j");
  term(w.w3, "ij");
  return out;
}

namespace {

class BicomplexParser {
 public:
  explicit BicomplexParser(std::string_view text) : text_(text) {}

  Bicomplex<Rational> parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty literal");
    Bicomplex<Rational> out;
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      std::optional<Rational> coef = coefficient();
      skip_space();
      bool star = false;
      if (coef && peek() == '*') {
        ++pos_;
        star = true;
        skip_space();
      }
      const int axis = unit();
      if (!coef && axis < 0) fail("expected a coefficient or a unit");
      if (star && axis < 0) fail("dangling '*'");
      skip_space();

      Rational value = coef.value_or(Rational(1));
      if (negative) value = -value;
      switch (axis < 0 ? 0 : axis) {
        case 0:
          out.w0 += value;
          break;
        case 1:
          out.w1 += value;
          break;
        case 2:
          out.w2 += value;
          break;
        default:
          out.w3 += value;
          break;
      }
    }
    return out;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::optional<Rational> coefficient() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    if (pos_ == start) return std::nullopt;
    if (peek() == '/') {
      ++pos_;
      const std::size_t den_start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
      if (pos_ == den_start) fail("missing denominator");
    }
    return Rational::parse(std::string_view(text_).substr(start, pos_ - start));
  }

  // 1 = i, 2 = j, 3 = ij, -1 when no unit follows.
  int unit() {
    if (peek() == 'i') {
      ++pos_;
      if (peek() == 'j') {
        ++pos_;
        return 3;
      }
      return 1;
    }
    if (peek() == 'j') {
      ++pos_;
      return 2;
    }
    return -1;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bicomplex literal '" + text_ + "': " + why + " at offset " + std::to_string(pos_));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Bicomplex<Rational> parse_bicomplex(std::string_view text) { return BicomplexParser(text).parse(); }

double real_magnitude(const Bicomplex<Rational>& w) {
  const double a = w.w0.to_double();
  const double b = w.w1.to_double();
  const double c = w.w2.to_double();
  const double d = w.w3.to_double();
  return std::sqrt(a * a + b * b + c * c + d * d);
}

Bicomplex<Rational> project_rational(const Bicomplex<Cyclo>& w) {
  if (!(w.w0.is_rational() && w.w1.is_rational() && w.w2.is_rational() && w.w3.is_rational())) {
    throw ProjectionError("bicomplex value " + to_string(w) + " has a nonzero w-part");
  }
  return {w.w0.rational_part(), w.w1.rational_part(), w.w2.rational_part(), w.w3.rational_part()};
}

Bicomplex<Cyclo> embed(const Bicomplex<Rational>& w) { return {w.w0, w.w1, w.w2, w.w3}; }

}  // namespace bcjq
