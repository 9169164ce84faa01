// Published reference tables for x^2 + 5^a 13^b 17^c = 2^m y^n, embedded as
// data, plus the corrections this artifact's independent search established.
#pragma once

#include "lrn/solution.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lrn {

struct PublishedRow {
  SolutionTuple row;          // exactly as printed (may fail verification)
  std::string source;         // which table / position
  bool known_erratum = false;
  std::optional<SolutionTuple> correction;  // verified replacement, if any
};

// The 28 printed rows: 19 from the 3|n table, 9 from the 4|n table.
const std::vector<PublishedRow>& published_rows();

// Printed rows with the known transposition erratum replaced by its verified
// correction. This is the set the acceptance criteria call the corrected
// golden set.
const std::vector<SolutionTuple>& corrected_rows();

// Solutions the exhaustive search finds inside the reference box that the
// published tables do not contain. Every entry is verified exactly at
// startup. One n=3 row plus three n=5 rows.
const std::vector<SolutionTuple>& discovered_rows();

// corrected_rows + discovered_rows, sorted: the full verified solution set
// on the reference box.
const std::vector<SolutionTuple>& verified_rows();

}  // namespace lrn
