#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fischerlab {

/// Coefficient field. Q models the real polynomials, Qi = Q(i) the complex.
enum class Field { Q, Qi };

std::string_view field_name(Field f);
Field parse_field(std::string_view name);

/// Exact element of Q or Q(i).
///
/// Both parts are kept in GMP canonical form (positive denominator, reduced).
/// A Q scalar always has a zero imaginary part. Arithmetic between scalars of
/// different fields throws FieldMismatch; equality across fields is false.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(Field field) : field_(field) {}
  Scalar(Field field, mpq_class re, mpq_class im = 0);

  static Scalar from_int(Field field, long value);
  static Scalar rational(Field field, long num, unsigned long den = 1);
  static Scalar zero(Field field) { return Scalar(field); }
  static Scalar one(Field field) { return from_int(field, 1); }
  /// The imaginary unit; only exists in Qi.
  static Scalar imaginary_unit();

  Field field() const noexcept { return field_; }
  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_real() const { return sgn(im_) == 0; }

  /// Sum of numerator and denominator bit lengths over both parts; used as a
  /// pivot-size heuristic.
  std::size_t bit_size() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Real part as a double (lossy; only for boundary sampling).
  double to_double() const;

  /// "p/q", or "re + im*i" style text in Qi. Used for diagnostics only.
  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o, const char* op) const;

  Field field_ = Field::Q;
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace fischerlab
