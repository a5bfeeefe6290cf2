#pragma once

#include <compare>
#include <iosfwd>
#include <string>

namespace fischerlab {

/// Total degree of a polynomial. The zero polynomial has degree NEG_INF,
/// which is absorbing under addition and below every finite degree.
class Degree {
 public:
  constexpr Degree() = default;  // NEG_INF
  constexpr explicit Degree(int value) : finite_(true), value_(value) {}

  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_neg_inf() const { return !finite_; }
  /// Throws InvalidArgument on NEG_INF.
  int value() const;

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return Degree();
    return Degree(a.value_ + b.value_);
  }

  friend constexpr bool operator==(Degree a, Degree b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(Degree a, int b) { return a == Degree(b); }
  friend constexpr std::strong_ordering operator<=>(Degree a, int b) {
    return a <=> Degree(b);
  }

  std::string to_string() const;

 private:
  bool finite_ = false;
  int value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Degree d);

}  // namespace fischerlab
