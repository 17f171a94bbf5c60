#pragma once

#include "semitop/space_map.hpp"
#include "semitop/step_path.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace semitop {

// Derivation rules for so-i-homotopy judgments. Each rule carries machine
// checkable hypotheses; the connecting homotopies themselves are supplied by
// the proved statements the rules realize.
enum class Rule {
  refl,
  sym,
  trans,
  reparam,
  paste,
  unit_left,
  unit_right,
  assoc,
  inv_cancel_left,
  inv_cancel_right,
};

std::string_view rule_name(Rule r);
// statement label the rule realizes, e.g. "Prop 4.3"
std::string_view rule_citation(Rule r);

struct CertNode {
  Rule rule = Rule::refl;
  std::vector<CertNode> children;   // sym: 1, trans/paste: 2
  std::vector<StepPath> operands;   // refl/reparam/units/inv-cancel: 1, assoc: 3
  std::optional<PLMap> rho;         // reparam only
};

// A derivation tree together with the mode it is claimed in. rel selects
// judgments relative to endpoints (paths must share both endpoints) rather
// than free ones.
struct Certificate {
  int mode = 1;
  bool rel = true;
  CertNode root;
};

struct Judgment {
  StepPath lhs;
  StepPath rhs;
  int mode = 1;
  bool rel = true;

  friend bool operator==(const Judgment&, const Judgment&) = default;
};

struct CertError {
  std::string node;     // path into the tree, e.g. "root.1.0"
  std::string rule;
  std::string message;
  std::string cites;    // violated hypothesis's statement label

  std::string describe() const;
};

struct CheckResult {
  std::optional<Judgment> judgment;
  std::optional<CertError> error;
  bool ok() const { return judgment.has_value(); }
};

// Checks every side condition of every node and returns the root judgment:
// operand paths must be so-i, endpoints must be compatible, and
// reparameterizations must satisfy their admissibility obligations (at i=3 a
// rho refuted by pl_continuity_class is rejected).
CheckResult check_certificate(const Certificate& cert);

// Step-path realization of a self-map: point j's image on [j/n, (j+1)/n).
// Two self-maps are equal pointwise iff their realizations are equal.
StepPath roll_call_path(const SpaceMap& self_map);

struct EquivalenceResult {
  bool equivalent = false;
  std::string detail;
};

// Decides the certified fragment of homotopy equivalence between spaces:
// f and g must be irresolute, c1 must prove gf ~ identity on X at the
// roll-call realization level, c2 likewise for fg on Y. Mismatched judgments
// yield false; non-irresolute maps or invalid certificates are errors.
EquivalenceResult check_homotopy_equivalence(const SpaceMap& f, const SpaceMap& g,
                                             const Certificate& c1, const Certificate& c2);

// convenience constructors for certificate trees
CertNode cert_refl(StepPath path);
CertNode cert_sym(CertNode child);
CertNode cert_trans(CertNode left, CertNode right);
CertNode cert_reparam(StepPath path, PLMap rho);
CertNode cert_paste(CertNode left, CertNode right);
CertNode cert_unit_left(StepPath path);
CertNode cert_unit_right(StepPath path);
CertNode cert_assoc(StepPath a, StepPath b, StepPath c);
CertNode cert_inv_cancel_left(StepPath path);
CertNode cert_inv_cancel_right(StepPath path);

}  // namespace semitop
