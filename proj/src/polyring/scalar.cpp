#include "fischerlab/polyring/scalar.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "fischerlab/error.hpp"

namespace fischerlab {

namespace {

std::size_t bits(const mpz_class& z) {
  return sgn(z) == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

// A zero part contributes nothing.
std::size_t bits(const mpq_class& q) {
  return sgn(q) == 0 ? 0 : bits(q.get_num()) + bits(q.get_den());
}

}  // namespace

std::string_view field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

Field parse_field(std::string_view name) {
  if (name == "Q") return Field::Q;
  if (name == "Qi") return Field::Qi;
  throw InvalidArgument("unknown field '" + std::string(name) +
                        "' (expected Q or Qi)");
}

Scalar::Scalar(Field field, mpq_class re, mpq_class im)
    : field_(field), re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
  if (field_ == Field::Q && sgn(im_) != 0)
    throw FieldMismatch("nonzero imaginary part in a Q scalar");
}

Scalar Scalar::from_int(Field field, long value) {
  return Scalar(field, mpq_class(value));
}

Scalar Scalar::rational(Field field, long num, unsigned long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  return Scalar(field, mpq_class(num, den));
}

Scalar Scalar::imaginary_unit() { return Scalar(Field::Qi, 0, 1); }

bool Scalar::is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

bool Scalar::is_one() const { return re_ == 1 && sgn(im_) == 0; }

std::size_t Scalar::bit_size() const { return bits(re_) + bits(im_); }

void Scalar::require_same_field(const Scalar& o, const char* op) const {
  if (field_ != o.field_)
    throw FieldMismatch(std::string("cross-field scalar ") + op + ": " +
                        std::string(field_name(field_)) + " vs " +
                        std::string(field_name(o.field_)));
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.re_ = -r.re_;
  r.im_ = -r.im_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o, "addition");
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o, "subtraction");
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o, "multiplication");
  if (field_ == Field::Q) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidArgument("division by zero");
  if (field_ == Field::Q) return Scalar(field_, 1 / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(field_, re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o, "division");
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.re_ == b.re_ && a.im_ == b.im_;
}

double Scalar::to_double() const { return re_.get_d(); }

std::string Scalar::to_string() const {
  if (field_ == Field::Q || sgn(im_) == 0) return re_.get_str();
  std::ostringstream os;
  if (sgn(re_) != 0) os << re_.get_str() << (sgn(im_) > 0 ? " + " : " - ");
  else if (sgn(im_) < 0) os << "-";
  os << mpq_class(abs(im_)).get_str() << "*i";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace fischerlab
