#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abacus/beta_set.hpp"
#include "abacus/hook_classes.hpp"
#include "abacus/mullineux.hpp"
#include "abacus/partition.hpp"
#include "abacus/runner_matrix.hpp"

namespace abacus {

// Partition text: comma-separated parts ("6,4,2"), "-" for the empty
// partition, exponent shorthand accepted on input ("1^2" = "1,1").
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p);

// Beta-set text: "floor=-4; beads=5,2,-1" with explicit beads descending.
BetaSet parse_beta_set(const std::string& text);
std::string format_beta_set(const BetaSet& b);

// Matrix JSON: {"d":3,"e":5,"rows":[[...],...]}, rows ordered x = 1..d-1.
std::string matrix_to_json(const RunnerMatrix& m);
RunnerMatrix matrix_from_json(const std::string& text);
// Rows-only form used on the command line: [[0,0,1,0,0],[0,0,0,0,1]].
RunnerMatrix matrix_from_rows_json(const std::string& text, int d, int e);
std::string matrix_rows_json(const RunnerMatrix& m);

std::string classify_report_json(const Partition& p, int d, int e, const HookClassReport& r);

struct FamilyResult;
std::string core_weight_json(const Partition& core, long long weight);

// ASCII abacus: e runners as columns, one row of positions per line,
// positions increasing downwards; 'o' bead, '.' empty, '#' emitted bead.
std::string render_abacus(const BetaSet& b, int e);
std::string render_abacus_pair(const BetaSet& b, const std::vector<long long>& emitted, int e);

std::string trace_json(const AmaTrace& trace, const Partition& input, int e,
                       std::optional<int> d);

} // namespace abacus
