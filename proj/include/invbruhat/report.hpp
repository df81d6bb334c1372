#pragma once

// Deterministic text renderings of the command-line reports. Every function
// returns the full output; identical arguments give byte-identical text.
//
// Record formats:
//   jsonl  one JSON object per line, keys in a fixed order
//   text   aligned human-readable lines
//   dot    Graphviz digraph (Hasse diagrams only)
//
// Element records carry {word, n, fixed_points, inv, exc, rank_in,
// rank_class}; rank_class is null when the class is not graded. Hasse
// diagram nodes are named by permutation word, edges point from lower to
// upper cover and carry label="(i,j)" when the cover is also a cover of I_n.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "invbruhat/fpclasses.hpp"
#include "invbruhat/permutation.hpp"

namespace invbruhat {

enum class Format { jsonl, text, dot };

/// Throws Error for unknown names.
Format parse_format(std::string_view name);

enum class ChainQuery { increasing, decreasing, all };

ChainQuery parse_chain_query(std::string_view name);

struct CommandOutput {
  std::string body;
  /// All verifications embedded in the command passed.
  bool ok = true;
};

CommandOutput cmd_enumerate(const FixedPointSpec& spec, Format format);

CommandOutput cmd_hasse(const FixedPointSpec& spec, Format format);

/// Closed-form gradedness predicate against brute force for each spec; ok iff they agree
/// everywhere. Graded rows also audit the element-level rank formula and
/// the class rank.
CommandOutput cmd_check_graded(const std::vector<FixedPointSpec>& specs, Format format);

CommandOutput cmd_chains(const Permutation& from, const Permutation& to, ChainQuery query, Format format,
                         std::size_t limit = 10'000);

/// `reversed` selects the reversed-lex label order; nullopt picks reversed
/// for A = {0} and standard otherwise.
CommandOutput cmd_el_verify(const FixedPointSpec& spec, std::optional<bool> reversed, Format format);

/// prop is 19 or 20; m is required for 20 and ignored for 19.
CommandOutput cmd_counterexample(int prop, int n, int i, std::optional<int> m, Format format);

}  // namespace invbruhat
