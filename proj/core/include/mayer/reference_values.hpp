#pragma once

// Published constants for the classical Lennard-Jones gas at beta = 1, and the
// recomputation of each from this library. One table, one source of truth.

#include <string>
#include <vector>

#include "mayer/bounds.hpp"

namespace mayer {

enum class ToleranceKind { relative, absolute };

struct ReferenceValue {
  std::string name;
  std::string section;  // "5.2" or "5.3"
  double printed = 0.0;
  ToleranceKind tolerance_kind = ToleranceKind::relative;
  double tolerance = 0.0;
  // Known mismatch between the printed value and its own components; a miss
  // is reported as FLAG instead of FAIL.
  bool preregistered = false;
  std::string citation;
};

const std::vector<ReferenceValue>& reference_values();

enum class RowStatus { pass, flag, fail };
std::string to_string(RowStatus s);

struct ReproductionRow {
  ReferenceValue reference;
  double computed = 0.0;
  double rel_diff = 0.0;  // |computed - printed| / |printed|
  RowStatus status = RowStatus::pass;
};

struct Reproduction {
  std::vector<ReproductionRow> rows;
  std::vector<std::string> notes;

  // No FAIL rows.
  bool ok() const;
};

inline constexpr double kSmallCutRadius = 0.3637;

// section: "5.2", "5.3" or "all".
Reproduction reproduce(const std::string& section, const QuadratureSpec& spec = {});

}  // namespace mayer
