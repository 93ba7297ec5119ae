#pragma once

// File formats of the CLI. Parsing goes through nlohmann::json; output is
// produced by a small deterministic writer (fixed key order, doubles with
// 17 significant digits) so identical inputs give byte-identical output.

#include "cq/quadric.hpp"
#include "cq/roots.hpp"

#include <optional>
#include <sstream>
#include <string>

namespace cq {

struct SubspaceDocument {
  int m = 0;
  std::optional<double> tol;
  std::vector<CVec> basis;  // raw vectors; orthonormalization is span()'s job

  RealSubspace to_subspace() const;
};

// Throws std::invalid_argument naming the offending field.
SubspaceDocument parse_subspace_document(const std::string& text);

std::string emit_subspace_document(const SubspaceDocument& doc);
std::string emit_classification(const Classification& c);
std::string emit_root_table(const std::vector<RootDatum>& table, int m);
std::string emit_decomposition(const RestrictedRootReport& report,
                               const CartanFrame& frame);
std::string emit_angles(const std::vector<double>& angles);
std::string emit_period(double formula, double oracle);
std::string emit_embedding_check(const EmbeddingCheck& check);
std::string emit_oracle_result(int m, int trials, double max_deviation);

// %.17g rendering used for every double in emitted documents.
std::string format_double(double x);

}  // namespace cq
