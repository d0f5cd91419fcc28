#pragma once

// Exact arithmetic in Q(sqrt 3): values p + q*sqrt(3) with rational p, q.
// Block proportions of the canonical colorings live here so that boundary
// placement never goes through floating point.

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace schurlab {

using Rational = boost::rational<std::int64_t>;

class Surd {
 public:
  constexpr Surd() = default;
  Surd(Rational rational) : rational_(rational) {}  // NOLINT: implicit by design of Q -> Q(sqrt 3)
  Surd(std::int64_t integer) : rational_(integer) {}  // NOLINT
  Surd(Rational rational, Rational radical) : rational_(rational), radical_(radical) {}

  static Surd sqrt3() { return Surd(Rational(0), Rational(1)); }

  [[nodiscard]] const Rational& rational_part() const { return rational_; }
  [[nodiscard]] const Rational& radical_part() const { return radical_; }
  [[nodiscard]] bool is_rational() const { return radical_.numerator() == 0; }

  /// -1, 0 or +1, decided exactly.
  [[nodiscard]] int sign() const;
  /// Largest integer k with k <= value, decided exactly.
  [[nodiscard]] std::int64_t floor() const;
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string to_string() const;

  Surd operator-() const { return {-rational_, -radical_}; }
  friend Surd operator+(const Surd& l, const Surd& r) {
    return {l.rational_ + r.rational_, l.radical_ + r.radical_};
  }
  friend Surd operator-(const Surd& l, const Surd& r) { return l + (-r); }
  friend Surd operator*(const Surd& l, const Surd& r) {
    return {l.rational_ * r.rational_ + 3 * l.radical_ * r.radical_,
            l.rational_ * r.radical_ + l.radical_ * r.rational_};
  }
  /// Throws std::domain_error on division by zero.
  friend Surd operator/(const Surd& l, const Surd& r);

  friend bool operator==(const Surd& l, const Surd& r) {
    return l.rational_ == r.rational_ && l.radical_ == r.radical_;
  }
  friend bool operator<(const Surd& l, const Surd& r) { return (l - r).sign() < 0; }
  friend bool operator<=(const Surd& l, const Surd& r) { return (l - r).sign() <= 0; }
  friend bool operator>(const Surd& l, const Surd& r) { return r < l; }

 private:
  Rational rational_{0};
  Rational radical_{0};
};

}  // namespace schurlab
