#include "fischerlab/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "fischerlab/cli/expr.hpp"
#include "fischerlab/error.hpp"

namespace fischerlab::cli {

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::Text: return "text";
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
  }
  return "text";
}

OutputFormat parse_output_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw InvalidArgument("unknown output format '" + std::string(name) + "'");
}

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

void RunConfig::validate() const {
  if (vars.empty()) throw InvalidArgument("--vars must name at least one variable");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw InvalidArgument("invalid variable name '" + v + "'");
    if (v == "i") throw InvalidArgument("'i' is reserved for the imaginary unit");
    if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
  }
  if (!(tol_root > 0.0) || !(tol_boundary > 0.0))
    throw InvalidArgument("tolerances must be positive");
  if (slack < 0) throw InvalidArgument("slack must be >= 0");
  if (max_degree < 0) throw InvalidArgument("max degree must be >= 0");
}

Poly parse_polynomial(std::string_view text, const RunConfig& config) {
  return parse_polynomial(text, config.vars, config.field);
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace fischerlab::cli
