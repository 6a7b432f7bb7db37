#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zf/generators.hpp"

namespace zf {

struct ValidationConfig {
  /// Random families to draw from; each gets `per_family` instances.
  std::vector<GeneratorFamily> families{GeneratorFamily::RandomTree,
                                        GeneratorFamily::RandomUnicyclic,
                                        GeneratorFamily::RandomCactus,
                                        GeneratorFamily::RandomBlock};
  std::size_t per_family = 50;
  std::size_t min_n = 4;
  std::size_t max_n = 12;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct ValidationRow {
  GeneratorSpec spec;
  std::string method;
  std::optional<std::size_t> family_value;
  std::optional<std::size_t> exact_value;
  long long bound_m = 0;
  long long bound_blocks = 0;
  bool witness_ok = false;
  bool passed = false;
  /// Reason for a failed row (mismatch, bound violation, or an exception).
  std::string error;
  /// Edge list text of the instance; always filled so failures reproduce.
  std::string edge_list;
};

struct ValidationReport {
  /// Sorted by family, then seed.
  std::vector<ValidationRow> rows;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double seconds = 0;

  bool ok() const { return failed == 0; }
};

/// Validates one instance: the family solver (or the dispatcher for families
/// without a dedicated one) against the exact search, witness validity, and
/// both lower bounds. Never throws; errors become failed rows.
ValidationRow validate_instance(const GeneratorSpec& spec);

/// Throws PreconditionError on an inconsistent configuration.
ValidationReport validate_corpus(const ValidationConfig& config);

void write_csv(std::ostream& out, const ValidationReport& report);
void write_table(std::ostream& out, const ValidationReport& report);

}  // namespace zf
