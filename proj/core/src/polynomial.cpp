#include "rayzeta/polynomial.hpp"

#include "rayzeta/error.hpp"

#include <cctype>
#include <stdexcept>

namespace rayzeta {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    skip_space();
    Polynomial result;
    if (peek() == '(') {
      ++pos_;
      result = sum();
      expect(')');
      skip_space();
      if (peek() == '/') {
        ++pos_;
        result *= Rational(1) / divisor();
      }
    } else {
      result = sum();
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return result;
  }

 private:
  Polynomial sum() {
    Polynomial total;
    skip_space();
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      total += term() * Rational(sign);
      first = false;
    }
    if (first) fail("empty polynomial");
    return total;
  }

  Polynomial term() {
    skip_space();
    Rational coeff = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Rational(integer());
      has_coeff = true;
      skip_space();
      if (peek() == '/' && is_digit_after_slash()) {
        ++pos_;
        coeff /= divisor();
      }
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
      }
    }
    std::size_t power = 0;
    if (peek() == 'x' || peek() == 'n') {
      ++pos_;
      power = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        const Integer p = integer();
        if (p > 64) fail("exponent too large");
        power = static_cast<std::size_t>(to_int64(p));
      }
    } else if (!has_coeff) {
      fail("expected a coefficient or variable");
    }
    skip_space();
    if (peek() == '/') {
      ++pos_;
      coeff /= divisor();
    }
    std::vector<Rational> coeffs(power + 1, Rational(0));
    coeffs[power] = coeff;
    return Polynomial(std::move(coeffs));
  }

  bool is_digit_after_slash() const {
    std::size_t p = pos_ + 1;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Rational divisor() {
    const Integer d = integer();
    if (d == 0) fail("division by zero");
    return Rational(d);
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("cannot parse polynomial '" + std::string(text_) + "' at offset " + std::to_string(pos_) +
                      ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool Polynomial::has_integer_coeffs() const {
  for (const Rational& c : coeffs_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
  return value;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (coeffs_.empty() || rhs.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  for (Rational& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    const std::string mag_text = is_integer(mag) ? numerator(mag).str() : rayzeta::to_string(mag);
    if (k == 0) {
      out += mag_text;
    } else {
      if (mag != 1) out += mag_text;
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis(std::vector<Rational>{Rational(1)});
    Rational scale = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[j] == xs[i]) throw std::invalid_argument("interpolate: repeated abscissa");
      basis *= Polynomial(std::vector<Rational>{-xs[j], Rational(1)});
      scale *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / scale);
  }
  return result;
}

}  // namespace rayzeta
