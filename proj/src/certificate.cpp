#include "semitop/certificate.hpp"

#include "semitop/error.hpp"

namespace semitop {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::refl: return "refl";
    case Rule::sym: return "sym";
    case Rule::trans: return "trans";
    case Rule::reparam: return "reparam";
    case Rule::paste: return "paste";
    case Rule::unit_left: return "unit-left";
    case Rule::unit_right: return "unit-right";
    case Rule::assoc: return "assoc";
    case Rule::inv_cancel_left: return "inv-cancel-left";
    case Rule::inv_cancel_right: return "inv-cancel-right";
  }
  return "?";
}

std::string_view rule_citation(Rule r) {
  switch (r) {
    case Rule::refl:
    case Rule::sym:
    case Rule::trans: return "Thm 3.2";
    case Rule::reparam: return "Lemma 4.1";
    case Rule::paste: return "Prop 4.2";
    case Rule::assoc: return "Prop 4.3";
    case Rule::unit_left:
    case Rule::unit_right: return "Prop 4.4";
    case Rule::inv_cancel_left:
    case Rule::inv_cancel_right: return "Prop 4.5";
  }
  return "?";
}

std::string CertError::describe() const {
  return node + " (" + rule + "): " + message + " [" + cites + "]";
}

namespace {

struct CheckFailure {
  CertError error;
};

[[noreturn]] void fail(const std::string& node, Rule rule, const std::string& message,
                       std::string_view cites) {
  throw CheckFailure{CertError{node, std::string(rule_name(rule)), message,
                               std::string(cites)}};
}

class Checker {
 public:
  Checker(int mode, bool rel) : mode_(mode), rel_(rel) {
    if (mode_ < 1 || mode_ > 3) throw input_error("certificate mode must be 1, 2 or 3");
  }

  Judgment check(const CertNode& node, const std::string& at) {
    require_arity(node, at);
    switch (node.rule) {
      case Rule::refl: {
        const StepPath& a = node.operands[0];
        require_so(a, node, at, "path");
        return judgment(a, a);
      }
      case Rule::sym: {
        Judgment j = check(node.children[0], at + ".0");
        return judgment(j.rhs, j.lhs);
      }
      case Rule::trans: {
        Judgment l = check(node.children[0], at + ".0");
        Judgment r = check(node.children[1], at + ".1");
        if (!(l.rhs == r.lhs))
          fail(at, node.rule,
               "transitivity middle mismatch: left proves ... ~ F1 and right proves G0 ~ ... "
               "with F1 != G0",
               rule_citation(node.rule));
        return judgment(l.lhs, r.rhs);
      }
      case Rule::reparam: {
        const StepPath& a = node.operands[0];
        const PLMap& rho = *node.rho;
        if (rho(Rat(0)) != 0 || rho(Rat(1)) != 1)
          fail(at, node.rule, "rho must satisfy rho(0) = 0 and rho(1) = 1",
               rule_citation(node.rule));
        if (!rho.nondecreasing())
          fail(at, node.rule, "rho must be nondecreasing to be an admissible reparameterization",
               rule_citation(node.rule));
        require_rho_so(rho, node, at);
        require_so(a, node, at, "path");
        StepPath pulled = reparameterize(a, rho);
        require_so(pulled, node, at, "reparameterized path");
        return judgment(std::move(pulled), a);
      }
      case Rule::paste: {
        Judgment l = check(node.children[0], at + ".0");
        Judgment r = check(node.children[1], at + ".1");
        // alpha ~ alpha' pasted with beta ~ beta' needs
        // alpha(0)=alpha'(0), alpha(1)=alpha'(1)=beta(0)=beta'(0), beta(1)=beta'(1)
        if (l.lhs.start() != l.rhs.start())
          fail(at, node.rule, "left pair must share its start point", rule_citation(node.rule));
        if (r.lhs.end() != r.rhs.end())
          fail(at, node.rule, "right pair must share its end point", rule_citation(node.rule));
        if (l.lhs.end() != l.rhs.end() || l.lhs.end() != r.lhs.start() ||
            r.lhs.start() != r.rhs.start())
          fail(at, node.rule,
               "pasting needs alpha(1) = alpha'(1) = beta(0) = beta'(0)",
               rule_citation(node.rule));
        return judgment(compose_paths(l.lhs, r.lhs), compose_paths(l.rhs, r.rhs));
      }
      case Rule::unit_left: {
        const StepPath& a = node.operands[0];
        require_so(a, node, at, "path");
        require_rho_so(left_unit_reparam(), node, at);
        const StepPath one = StepPath::constant(a.space(), a.start());
        return judgment(compose_paths(one, a), a);
      }
      case Rule::unit_right: {
        const StepPath& a = node.operands[0];
        require_so(a, node, at, "path");
        require_rho_so(right_unit_reparam(), node, at);
        const StepPath one = StepPath::constant(a.space(), a.end());
        return judgment(compose_paths(a, one), a);
      }
      case Rule::assoc: {
        const StepPath& a = node.operands[0];
        const StepPath& b = node.operands[1];
        const StepPath& c = node.operands[2];
        if (a.end() != b.start() || b.end() != c.start())
          fail(at, node.rule, "paths must be composable: alpha(1) = beta(0), beta(1) = gamma(0)",
               rule_citation(node.rule));
        require_so(a, node, at, "first path");
        require_so(b, node, at, "second path");
        require_so(c, node, at, "third path");
        require_rho_so(reassociation_reparam(), node, at);
        return judgment(compose_paths(a, compose_paths(b, c)),
                        compose_paths(compose_paths(a, b), c));
      }
      case Rule::inv_cancel_left: {
        const StepPath& a = node.operands[0];
        require_so(a, node, at, "path");
        return judgment(compose_paths(a, inverse_path(a)),
                        StepPath::constant(a.space(), a.start()));
      }
      case Rule::inv_cancel_right: {
        const StepPath& a = node.operands[0];
        require_so(a, node, at, "path");
        return judgment(compose_paths(inverse_path(a), a),
                        StepPath::constant(a.space(), a.end()));
      }
    }
    throw input_error("corrupt certificate node");
  }

 private:
  void require_arity(const CertNode& node, const std::string& at) {
    const std::size_t kids = node.children.size();
    const std::size_t ops = node.operands.size();
    auto need = [&](std::size_t k, std::size_t o, bool rho) {
      if (kids != k || ops != o || node.rho.has_value() != rho)
        fail(at, node.rule, "malformed node: wrong number of children or operands",
             rule_citation(node.rule));
    };
    switch (node.rule) {
      case Rule::refl:
      case Rule::unit_left:
      case Rule::unit_right:
      case Rule::inv_cancel_left:
      case Rule::inv_cancel_right: need(0, 1, false); break;
      case Rule::sym: need(1, 0, false); break;
      case Rule::trans:
      case Rule::paste: need(2, 0, false); break;
      case Rule::reparam: need(0, 1, true); break;
      case Rule::assoc: need(0, 3, false); break;
    }
  }

  Judgment judgment(StepPath lhs, StepPath rhs) {
    if (rel_ && (lhs.start() != rhs.start() || lhs.end() != rhs.end()))
      throw input_error("internal: rule produced an endpoint-breaking judgment");
    return Judgment{std::move(lhs), std::move(rhs), mode_, rel_};
  }

  void require_so(const StepPath& p, const CertNode& node, const std::string& at,
                  const std::string& role) {
    const auto v = is_so_path(p, mode_);
    if (!v.ok)
      fail(at, node.rule,
           role + " is not an so-" + std::to_string(mode_) + "-path: preimage of " +
               p.space().set_to_string(v.violation->target_set) + " is " +
               format_ratset(v.violation->preimage),
           "Def 3.4");
  }

  // Lemma 4.1 asks the reparameterization itself to be so-i-continuous; at
  // i=3 a refuted rho (e.g. the reassociation map) rejects the node.
  void require_rho_so(const PLMap& rho, const CertNode& node, const std::string& at) {
    const auto v = pl_continuity_class(rho, mode_);
    if (v.status == PLClass::holds) return;
    std::string message = "rho is not so-" + std::to_string(mode_) + "-continuous";
    if (v.status == PLClass::refuted && v.witness)
      message += ": preimage of " + format_interval(*v.witness) + " is " +
                 format_ratset(*v.witness_preimage) + ", not open";
    else
      message += " (" + v.note + ")";
    fail(at, node.rule, message, "Lemma 4.1");
  }

  int mode_;
  bool rel_;
};

}  // namespace

CheckResult check_certificate(const Certificate& cert) {
  Checker checker(cert.mode, cert.rel);
  try {
    return CheckResult{checker.check(cert.root, "root"), std::nullopt};
  } catch (const CheckFailure& f) {
    return CheckResult{std::nullopt, f.error};
  }
}

StepPath roll_call_path(const SpaceMap& self_map) {
  if (!(self_map.domain() == self_map.codomain()))
    throw input_error("roll-call realization needs a self-map");
  const FiniteSpace& s = self_map.domain();
  const int n = s.point_count();
  std::vector<Piece> pieces;
  for (int j = 0; j < n; ++j) {
    Interval iv = (j + 1 == n) ? Interval::closed(Rat(j, n), 1)
                               : Interval::left_closed(Rat(j, n), Rat(j + 1, n));
    pieces.push_back(Piece{std::move(iv), self_map.apply(j)});
  }
  return StepPath(s, std::move(pieces));
}

EquivalenceResult check_homotopy_equivalence(const SpaceMap& f, const SpaceMap& g,
                                             const Certificate& c1, const Certificate& c2) {
  if (!(f.codomain() == g.domain()) || !(g.codomain() == f.domain()))
    throw input_error("maps must form a pair f : X -> Y, g : Y -> X");
  if (!classify(f).so2) throw input_error("f is not irresolute (so-2)");
  if (!classify(g).so2) throw input_error("g is not irresolute (so-2)");
  if (c1.mode != 2 || c2.mode != 2)
    throw input_error("homotopy equivalence certificates must be in mode 2");

  const auto r1 = check_certificate(c1);
  if (!r1.ok()) throw input_error("first certificate invalid: " + r1.error->describe());
  const auto r2 = check_certificate(c2);
  if (!r2.ok()) throw input_error("second certificate invalid: " + r2.error->describe());

  const StepPath gf = roll_call_path(compose(f, g));
  const StepPath one_x = roll_call_path(identity_map(f.domain()));
  if (!(r1.judgment->lhs == gf) || !(r1.judgment->rhs == one_x))
    return {false, "judgment mismatch: first certificate does not prove gf ~ 1 on X"};

  const StepPath fg = roll_call_path(compose(g, f));
  const StepPath one_y = roll_call_path(identity_map(g.domain()));
  if (!(r2.judgment->lhs == fg) || !(r2.judgment->rhs == one_y))
    return {false, "judgment mismatch: second certificate does not prove fg ~ 1 on Y"};

  return {true, "gf ~ 1 and fg ~ 1 certified at the roll-call realization level"};
}

CertNode cert_refl(StepPath path) { return CertNode{Rule::refl, {}, {std::move(path)}, {}}; }
CertNode cert_sym(CertNode child) {
  return CertNode{Rule::sym, {std::move(child)}, {}, {}};
}
CertNode cert_trans(CertNode left, CertNode right) {
  return CertNode{Rule::trans, {std::move(left), std::move(right)}, {}, {}};
}
CertNode cert_reparam(StepPath path, PLMap rho) {
  return CertNode{Rule::reparam, {}, {std::move(path)}, std::move(rho)};
}
CertNode cert_paste(CertNode left, CertNode right) {
  return CertNode{Rule::paste, {std::move(left), std::move(right)}, {}, {}};
}
CertNode cert_unit_left(StepPath path) {
  return CertNode{Rule::unit_left, {}, {std::move(path)}, {}};
}
CertNode cert_unit_right(StepPath path) {
  return CertNode{Rule::unit_right, {}, {std::move(path)}, {}};
}
CertNode cert_assoc(StepPath a, StepPath b, StepPath c) {
  return CertNode{Rule::assoc, {}, {std::move(a), std::move(b), std::move(c)}, {}};
}
CertNode cert_inv_cancel_left(StepPath path) {
  return CertNode{Rule::inv_cancel_left, {}, {std::move(path)}, {}};
}
CertNode cert_inv_cancel_right(StepPath path) {
  return CertNode{Rule::inv_cancel_right, {}, {std::move(path)}, {}};
}

}  // namespace semitop
