#include "fischerlab/polyring/poly_json.hpp"

#include <string>

#include "fischerlab/error.hpp"

namespace fischerlab {

namespace {

nlohmann::json rational_to_json(const mpq_class& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

mpz_class parse_integer(const nlohmann::json& j) {
  if (!j.is_string()) throw InvalidArgument("integer must be a decimal string");
  const auto text = j.get<std::string>();
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0)
    throw InvalidArgument("malformed integer '" + text + "'");
  return z;
}

mpq_class rational_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw InvalidArgument("rational must have 'num' and 'den'");
  mpz_class den = parse_integer(j.at("den"));
  if (den <= 0) throw InvalidArgument("rational denominator must be positive");
  mpq_class q(parse_integer(j.at("num")), den);
  q.canonicalize();
  return q;
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.field() == Field::Q) return rational_to_json(s.re());
  return {{"re", rational_to_json(s.re())}, {"im", rational_to_json(s.im())}};
}

Scalar scalar_from_json(const nlohmann::json& j, Field field) {
  if (field == Field::Q) return Scalar(field, rational_from_json(j));
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw InvalidArgument("Qi scalar must have 're' and 'im'");
  return Scalar(field, rational_from_json(j.at("re")), rational_from_json(j.at("im")));
}

nlohmann::json poly_to_json(const Poly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back({{"exps", m.exponents()}, {"coeff", scalar_to_json(c)}});
  return {{"arity", p.arity()},
          {"field", std::string(field_name(p.field()))},
          {"terms", std::move(terms)}};
}

Poly poly_from_json(const nlohmann::json& j) {
  try {
    const auto arity = j.at("arity").get<std::size_t>();
    const Field field = parse_field(j.at("field").get<std::string>());
    Poly p(arity, field);
    for (const auto& t : j.at("terms")) {
      Monomial m(t.at("exps").get<std::vector<Monomial::Exponent>>());
      if (m.arity() != arity) throw InvalidArgument("term exponent length != arity");
      Scalar c = scalar_from_json(t.at("coeff"), field);
      if (c.is_zero()) throw InvalidArgument("zero coefficient in serialized polynomial");
      if (!p.coefficient(m).is_zero()) throw InvalidArgument("duplicate monomial");
      p.add_term(m, c);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed polynomial JSON: ") + e.what());
  }
}

}  // namespace fischerlab
