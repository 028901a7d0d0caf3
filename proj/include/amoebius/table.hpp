#pragma once

#include <string>
#include <vector>

#include "amoebius/class_poset.hpp"
#include "amoebius/mulambda.hpp"

namespace amoebius {

enum class Format { Markdown, Csv, Json };

Format parse_format(std::string const &name);

/// A rendered result: every cell is already a decimal string.
struct Table {
  std::string group;
  std::string aut;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(Table const &, Table const &) = default;
};

std::string render(Table const &t, Format f);
/// Inverse of render(t, Format::Json).
Table table_from_json(std::string const &text);

struct ClassTableOptions {
  bool omega2 = false;
  /// Drop classes [H] < [G] with mu_A(H, G) = 0.
  bool nonzero_only = false;
};

/// One row per A-class, from [G] down: representative, order, mu_A,
/// omega_A(H, 1), optionally omega_A(H, 2), kappa and sigma.
Table class_table(ClassPoset const &poset, std::string const &group_spec,
                  std::string const &aut_spec, ClassTableOptions const &options = {});

/// One row per conjugacy class, from G down: mu(H, G), kappa, sigma.
Table sigma_table(ClassPoset const &conjugacy, std::string const &group_spec,
                  bool nonzero_only = false);

Table mu_lambda_table(MuLambdaReport const &report, std::string const &group_spec);

} // namespace amoebius
