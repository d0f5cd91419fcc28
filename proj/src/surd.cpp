#include "schurlab/surd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace schurlab {

namespace {

int rational_sign(const Rational& v) { return v.numerator() > 0 ? 1 : (v.numerator() < 0 ? -1 : 0); }

}  // namespace

int Surd::sign() const {
  const int sp = rational_sign(rational_);
  const int sq = rational_sign(radical_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 against 3 q^2.
  const Rational lhs = rational_ * rational_;
  const Rational rhs = 3 * radical_ * radical_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sp : sq;
}

std::int64_t Surd::floor() const {
  auto k = static_cast<std::int64_t>(std::floor(to_double()));
  // The double estimate can be off by one near integers; settle exactly.
  while ((*this - Surd(k)).sign() < 0) --k;
  while ((*this - Surd(k + 1)).sign() >= 0) ++k;
  return k;
}

double Surd::to_double() const {
  return boost::rational_cast<double>(rational_) +
         boost::rational_cast<double>(radical_) * std::sqrt(3.0);
}

std::string Surd::to_string() const {
  std::ostringstream out;
  out << rational_.numerator();
  if (rational_.denominator() != 1) out << '/' << rational_.denominator();
  if (radical_.numerator() != 0) {
    out << (radical_ > 0 ? "+" : "-");
    const Rational mag = radical_ > 0 ? radical_ : -radical_;
    out << mag.numerator();
    if (mag.denominator() != 1) out << '/' << mag.denominator();
    out << "*sqrt3";
  }
  return out.str();
}

Surd operator/(const Surd& l, const Surd& r) {
  // (a + b s)/(c + d s) = (a + b s)(c - d s)/(c^2 - 3 d^2); the norm is nonzero
  // for r != 0 because sqrt 3 is irrational.
  const Rational norm = r.rational_ * r.rational_ - 3 * r.radical_ * r.radical_;
  if (norm.numerator() == 0) throw std::domain_error("Surd: division by zero");
  const Surd conj(r.rational_, -r.radical_);
  const Surd num = l * conj;
  return {num.rational_ / norm, num.radical_ / norm};
}

}  // namespace schurlab
