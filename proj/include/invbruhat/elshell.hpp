#pragma once

// EL-labelling checks on labelled Hasse diagrams, the fixed-point-free
// decreasing-chain property, and escaping length-two intervals.

#include <optional>
#include <string>
#include <vector>

#include "invbruhat/bruhat.hpp"
#include "invbruhat/chains.hpp"
#include "invbruhat/fpclasses.hpp"
#include "invbruhat/label.hpp"

namespace invbruhat {

/// Total order on labels. reversed_lex: (i1,j1) < (i2,j2) iff i1 > i2, or
/// i1 == i2 and j1 > j2.
enum class LabelOrder { standard_lex, reversed_lex };

bool label_less(RiseLabel a, RiseLabel b, LabelOrder order);

struct Lemma21Result {
  bool holds = false;
  Chain chain;  // decreasing chain in I_n
};

/// Decreasing I_n chain between fixed-point-free p < q, and whether all its
/// interior elements are fixed-point-free.
Lemma21Result lemma21_check(const Permutation& p, const Permutation& q);

struct ElViolation {
  Permutation bottom;
  Permutation top;
  std::string reason;
};

enum class ElStatus { el_labelling, not_el_labelling, not_applicable };

struct ElReport {
  ElStatus status = ElStatus::not_applicable;
  std::vector<ElViolation> violations;
  std::size_t intervals_checked = 0;
  std::string note;  // why the check does not apply, when it does not

  [[nodiscard]] bool is_el() const { return status == ElStatus::el_labelling; }
};

std::string to_string(ElStatus status);

/// Checks every interval [x, y] of the view: exactly one saturated chain has
/// weakly increasing labels under `order`, and its label word is strictly
/// smaller than that of every other saturated chain.
///
/// Throws Error if the view is not bounded or not graded. A view with
/// unlabelled covers yields status not_applicable.
ElReport el_check(const PosetView& view, LabelOrder order);

/// Hasse diagram of F_n^A where each induced cover that is also a cover of
/// I_n carries its I_n label; other covers stay unlabelled.
PosetView labelled_class_view(const FixedPointSpec& spec);

enum class EscapeKind { increasing, decreasing };

std::string to_string(EscapeKind kind);

struct EscapingInterval {
  Permutation bottom;
  Permutation top;
  Permutation midpoint;
  EscapeKind kind;
};

/// Searches pairs p < q in F_n^A two ranks apart in I_n whose increasing
/// (or decreasing) I_n chain leaves the class at its midpoint. With no kind
/// given, increasing witnesses are preferred. Absence means none exists for
/// this n. Throws Error when A = {0}, A = {n} or F_n^A = I_n.
std::optional<EscapingInterval> find_escaping_interval(const FixedPointSpec& spec,
                                                       std::optional<EscapeKind> kind = std::nullopt);

}  // namespace invbruhat
