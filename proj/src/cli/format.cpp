#include "fischerlab/cli/expr.hpp"

#include <algorithm>
#include <sstream>

#include "fischerlab/error.hpp"

namespace fischerlab::cli {

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string imaginary_text(const mpq_class& magnitude) {
  return magnitude == 1 ? std::string("i") : magnitude.get_str() + "*i";
}

// Sign and unsigned body of one term.
std::pair<bool, std::string> term_text(const Scalar& c, const std::string& mono) {
  const auto with_mono = [&](std::string coeff) {
    if (mono.empty()) return coeff;
    return coeff + "*" + mono;
  };
  if (c.is_real()) {
    const mpq_class mag = abs(c.re());
    if (mag == 1 && !mono.empty()) return {sgn(c.re()) < 0, mono};
    return {sgn(c.re()) < 0, with_mono(mag.get_str())};
  }
  if (sgn(c.re()) == 0) return {sgn(c.im()) < 0, with_mono(imaginary_text(abs(c.im())))};
  std::string both = "(" + c.re().get_str() + (sgn(c.im()) > 0 ? " + " : " - ") +
                     imaginary_text(abs(c.im())) + ")";
  return {false, with_mono(both)};
}

}  // namespace

std::string format_polynomial(const Poly& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.arity()) throw ArityMismatch("variable names do not match arity");
  if (p.is_zero()) return "0";
  std::vector<std::pair<const Monomial*, const Scalar*>> terms;
  for (const auto& [m, c] : p.terms()) terms.emplace_back(&m, &c);
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first->degree() > b.first->degree();
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    auto [negative, body] = term_text(*c, monomial_text(*m, vars));
    if (out.empty()) out = (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out;
}

std::string format_polynomial(const Poly& p) {
  return format_polynomial(p, default_variable_names(p.arity()));
}

std::string format_scalar(const Scalar& s) {
  auto [negative, body] = term_text(s, "");
  return (negative ? "-" : "") + body;
}

}  // namespace fischerlab::cli
