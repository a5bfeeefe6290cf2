#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fischerlab/polyring/poly.hpp"

namespace fischerlab::cli {

enum class OutputFormat { Text, Json, Csv };

std::string_view format_name(OutputFormat f);
OutputFormat parse_output_format(std::string_view name);

/// Settings shared by every subcommand.
struct RunConfig {
  Field field = Field::Q;
  /// Defines arity and variable order.
  std::vector<std::string> vars;
  int max_degree = 0;
  int slack = 0;
  double tol_root = 1e-12;
  double tol_boundary = 1e-9;
  std::uint64_t seed = 1;
  OutputFormat output = OutputFormat::Text;

  std::size_t arity() const noexcept { return vars.size(); }
  /// Throws InvalidArgument on empty/duplicate/invalid names, non-positive
  /// tolerances or negative slack.
  void validate() const;
};

Poly parse_polynomial(std::string_view text, const RunConfig& config);

/// Splits "a,b,c" on commas, trimming blanks around each item.
std::vector<std::string> split_list(std::string_view text);

}  // namespace fischerlab::cli
