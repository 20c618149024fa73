#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcg/family.hpp"
#include "mcg/multigraph.hpp"

namespace mcg {

enum class Verdict { MinimalSpecial, MinimalWithCertificate, NotMinimal, NotApplicable };

std::string verdict_name(Verdict v);

struct FailureWitness {
  std::string kind;           // "claw", "inadmissible_edge", "no_perfect_matching",
                              // "disconnected", "removable_edge"
  std::vector<int> vertices;  // claw: centre then leaves
  EdgeId edge = -1;
};

struct RecognitionResult {
  Verdict verdict = Verdict::NotApplicable;
  // present for minimal graphs other than K2/even cycles when the structural
  // parse succeeds; evaluates to a graph isomorphic to the input
  std::optional<Recipe> certificate;
  std::vector<EdgeId> oracle_removable;  // RE(g) when matching covered
  std::optional<FailureWitness> failure_witness;
  std::string diagnostic;  // set when a parse step had to fall back
};

// Decide whether g is a claw-free minimal matching covered graph. The
// oracle verdict (removability recomputation) is authoritative; the
// structural parse only produces the certificate. The parse inverts the
// construction steps: degree-2 paths become expansion/bisubdivision steps,
// 2-barriers split the graph through the compound operations, and bicritical
// graphs are reduced by locating an embedded gadget and un-replacing it,
// bottoming out at K4 or C6bar. Every step is validated by isomorphism
// against the rebuilt graph; failures fall back to a certificate-free
// verdict with a diagnostic.
RecognitionResult recognize(const MultiGraph& g);

// RE(g) empty, by direct per-edge recomputation. Throws when g is not
// matching covered.
bool is_minimal_oracle(const MultiGraph& g);

struct Thm13Report {
  bool minimal = false;
  int b_star = 0;
  std::vector<int> leaf_orders;
  int re_count = 0;
  int sum_ni = 0;
  bool equality_ok = false;  // |RE| equals the total order of the counted bricks
  bool bound_ok = false;     // |RE| >= 12 when not minimal (vacuous when minimal)
};

// Removable-edge accounting for simple cubic claw-free matching covered
// graphs; rejects multigraphs and other precondition violations outright.
Thm13Report verify_thm13(const MultiGraph& g);

// For a simple 3-connected cubic claw-free graph other than K4 and C6bar:
// checks RE(g) is exactly the triangle edge set and returns |V(g)|.
int cubic_brick_re_count(const MultiGraph& g);

}  // namespace mcg
