#include "semitop/loop_table.hpp"

#include "semitop/error.hpp"

#include <algorithm>
#include <memory>

namespace semitop {

LoopTable::LoopTable(FiniteSpace space, int basepoint, int mode)
    : space_(std::move(space)), basepoint_(basepoint), mode_(mode) {
  space_.check_point(basepoint_);
  if (mode_ < 1 || mode_ > 3) throw input_error("table mode must be 1, 2 or 3");
}

const StepPath& LoopTable::generator(const std::string& name) const {
  const auto it = generators_.find(name);
  if (it == generators_.end()) throw input_error("unknown generator '" + name + "'");
  return it->second;
}

void LoopTable::check_word(const Word& w) const {
  for (const Letter& l : w) generator(l.name);
}

LoopTable register_loop(LoopTable table, const std::string& name, StepPath loop) {
  if (name.empty() || name == "1") throw input_error("invalid generator name");
  if (table.generators_.contains(name))
    throw input_error("duplicate generator name '" + name + "'");
  if (!(loop.space() == table.space()))
    throw input_error("loop lives in a different space than the table");
  if (loop.start() != table.basepoint() || loop.end() != table.basepoint())
    throw input_error("generator must be a loop at the basepoint");
  const auto verdict = is_so_path(loop, table.mode());
  if (!verdict.ok)
    throw input_error("generator is not an so-" + std::to_string(table.mode()) +
                      "-path: preimage of " +
                      loop.space().set_to_string(verdict.violation->target_set) + " is " +
                      format_ratset(verdict.violation->preimage));
  table.generators_.emplace(name, std::move(loop));
  return table;
}

Word reduce_word(Word w) {
  Word out;
  for (Letter& l : w) {
    if (!out.empty() && out.back().name == l.name && out.back().inverse != l.inverse)
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  return out;
}

Word invert_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(Letter{it->name, !it->inverse});
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k].name == w[k + 1].name && w[k].inverse != w[k + 1].inverse) return false;
  return true;
}

namespace {

StepPath letter_path(const LoopTable& table, const Letter& l) {
  const StepPath& base = table.generator(l.name);
  return l.inverse ? inverse_path(base) : base;
}

}  // namespace

StepPath realize(const LoopTable& table, const Word& w) {
  table.check_word(w);
  if (w.empty()) return StepPath::constant(table.space(), table.basepoint());
  StepPath acc = letter_path(table, w[0]);
  for (std::size_t k = 1; k < w.size(); ++k)
    acc = compose_paths(acc, letter_path(table, w[k]));
  return acc;
}

namespace {

// A certificate fragment with its proved judgment kept alongside, so the
// builder can chain fragments without re-deriving paths.
struct Built {
  CertNode node;
  StepPath lhs;
  StepPath rhs;
};

Built built_refl(StepPath p) { return Built{cert_refl(p), p, p}; }

Built built_paste(Built l, Built r) {
  StepPath lhs = compose_paths(l.lhs, r.lhs);
  StepPath rhs = compose_paths(l.rhs, r.rhs);
  return Built{cert_paste(std::move(l.node), std::move(r.node)), std::move(lhs),
               std::move(rhs)};
}

Built built_trans(Built l, Built r) {
  if (!(l.rhs == r.lhs)) throw input_error("internal: certificate chain mismatch");
  return Built{cert_trans(std::move(l.node), std::move(r.node)), std::move(l.lhs),
               std::move(r.rhs)};
}

// Word reduction works over a flat sequence of concrete leaf paths; adjacent
// leaves cancel when they are the same generator with opposite signs.
struct ReductionLeaf {
  Letter letter;
  StepPath path;  // already inverted for inverse letters
  StepPath base;  // the registered generator path
};

StepPath left_comb_path(const std::vector<ReductionLeaf>& leaves, std::size_t lo,
                        std::size_t hi) {
  StepPath acc = leaves[lo].path;
  for (std::size_t k = lo + 1; k < hi; ++k) acc = compose_paths(acc, leaves[k].path);
  return acc;
}

// prefix * LC(q_lo..q_hi) ~ LC(prefix, q_lo..q_hi)
Built merge_into_left_comb(const StepPath& prefix, const std::vector<ReductionLeaf>& leaves,
                           std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return built_refl(compose_paths(prefix, leaves[lo].path));
  const StepPath front = left_comb_path(leaves, lo, hi - 1);
  const StepPath& last = leaves[hi - 1].path;
  // prefix * (front * last) ~ (prefix * front) * last
  Built reassoc{cert_assoc(prefix, front, last),
                compose_paths(prefix, compose_paths(front, last)),
                compose_paths(compose_paths(prefix, front), last)};
  Built inner = built_paste(merge_into_left_comb(prefix, leaves, lo, hi - 1),
                            built_refl(last));
  return built_trans(std::move(reassoc), std::move(inner));
}

// binary expression over leaf indices, used to bridge associations
struct Expr {
  int leaf = -1;
  std::unique_ptr<Expr> l, r;

  static Expr make_leaf(int k) {
    Expr e;
    e.leaf = k;
    return e;
  }
  static Expr make_node(Expr a, Expr b) {
    Expr e;
    e.l = std::make_unique<Expr>(std::move(a));
    e.r = std::make_unique<Expr>(std::move(b));
    return e;
  }
  bool is_leaf() const { return leaf >= 0; }
};

Expr left_comb_expr(std::size_t lo, std::size_t hi) {
  Expr e = Expr::make_leaf(static_cast<int>(lo));
  for (std::size_t k = lo + 1; k < hi; ++k)
    e = Expr::make_node(std::move(e), Expr::make_leaf(static_cast<int>(k)));
  return e;
}

void frontier(const Expr& e, std::vector<int>& out) {
  if (e.is_leaf()) {
    out.push_back(e.leaf);
    return;
  }
  frontier(*e.l, out);
  frontier(*e.r, out);
}

// eval(e) ~ LC(frontier(e))
Built to_left_comb(const Expr& e, const std::vector<ReductionLeaf>& leaves) {
  if (e.is_leaf()) return built_refl(leaves[e.leaf].path);
  Built cl = to_left_comb(*e.l, leaves);
  Built cr = to_left_comb(*e.r, leaves);
  std::vector<int> right_leaves;
  frontier(*e.r, right_leaves);
  const StepPath left_lc = cl.rhs;
  Built pasted = built_paste(std::move(cl), std::move(cr));
  if (right_leaves.size() == 1) return pasted;  // LC(A) * leaf is already a left comb
  const std::size_t rlo = static_cast<std::size_t>(right_leaves.front());
  const std::size_t rhi = static_cast<std::size_t>(right_leaves.back()) + 1;
  Built merged = merge_into_left_comb(left_lc, leaves, rlo, rhi);
  return built_trans(std::move(pasted), std::move(merged));
}

// eval(e1) ~ eval(e2) for equal frontiers
Built bridge(const Expr& e1, const Expr& e2, const std::vector<ReductionLeaf>& leaves) {
  Built c1 = to_left_comb(e1, leaves);
  Built c2 = to_left_comb(e2, leaves);
  StepPath lhs = c2.rhs, rhs = c2.lhs;
  Built flipped{cert_sym(std::move(c2.node)), std::move(lhs), std::move(rhs)};
  return built_trans(std::move(c1), std::move(flipped));
}

// one cancellation of the pair at position k: LC(seq) ~ LC(seq without k,k+1)
Built cancel_step(const std::vector<ReductionLeaf>& leaves, std::size_t k) {
  const std::size_t m = leaves.size();
  const bool forward = !leaves[k].letter.inverse;  // g then g^-1
  const StepPath& base = leaves[k].base;
  const StepPath one =
      StepPath::constant(base.space(), forward ? base.start() : base.end());
  Built inv = forward ? Built{cert_inv_cancel_left(base),
                              compose_paths(base, inverse_path(base)), one}
                      : Built{cert_inv_cancel_right(base),
                              compose_paths(inverse_path(base), base), one};

  const bool has_prefix = k > 0;
  const bool has_suffix = k + 2 < m;

  if (!has_prefix && !has_suffix) return inv;  // LC(seq) is exactly the pair

  Expr target = Expr::make_node(Expr::make_leaf(static_cast<int>(k)),
                                Expr::make_leaf(static_cast<int>(k + 1)));
  if (has_prefix) target = Expr::make_node(left_comb_expr(0, k), std::move(target));
  if (has_suffix) target = Expr::make_node(std::move(target), left_comb_expr(k + 2, m));

  Built chain = bridge(left_comb_expr(0, m), target, leaves);

  if (has_prefix) {
    const StepPath prefix = left_comb_path(leaves, 0, k);
    // prefix * pair ~ prefix * 1 ~ prefix
    Built mid = built_paste(built_refl(prefix), std::move(inv));
    Built unit{cert_unit_right(prefix), compose_paths(prefix, one), prefix};
    Built collapse = built_trans(std::move(mid), std::move(unit));
    if (has_suffix) {
      const StepPath suffix = left_comb_path(leaves, k + 2, m);
      Built lifted = built_paste(std::move(collapse), built_refl(suffix));
      Built merged = merge_into_left_comb(prefix, leaves, k + 2, m);
      chain = built_trans(std::move(chain),
                          built_trans(std::move(lifted), std::move(merged)));
    } else {
      chain = built_trans(std::move(chain), std::move(collapse));
    }
  } else {
    // pair * suffix ~ 1 * suffix ~ suffix
    const StepPath suffix = left_comb_path(leaves, k + 2, m);
    Built mid = built_paste(std::move(inv), built_refl(suffix));
    Built unit{cert_unit_left(suffix), compose_paths(one, suffix), suffix};
    chain = built_trans(std::move(chain), built_trans(std::move(mid), std::move(unit)));
  }
  return chain;
}

// full reduction certificate: LC(seq) ~ LC(reduced seq)
Built reduce_with_certificate(std::vector<ReductionLeaf> leaves, const FiniteSpace& space,
                              int fallback_point) {
  if (leaves.empty()) return built_refl(StepPath::constant(space, fallback_point));
  std::optional<Built> acc;
  while (true) {
    std::optional<std::size_t> cancel;
    for (std::size_t k = 0; k + 1 < leaves.size(); ++k)
      if (leaves[k].letter.name == leaves[k + 1].letter.name &&
          leaves[k].letter.inverse != leaves[k + 1].letter.inverse) {
        cancel = k;
        break;
      }
    if (!cancel) break;
    Built step = cancel_step(leaves, *cancel);
    acc = acc ? built_trans(std::move(*acc), std::move(step)) : std::move(step);
    leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(*cancel),
                 leaves.begin() + static_cast<std::ptrdiff_t>(*cancel + 2));
    if (leaves.empty()) break;
  }
  if (!acc) {
    return built_refl(left_comb_path(leaves, 0, leaves.size()));
  }
  return std::move(*acc);
}

std::vector<ReductionLeaf> word_leaves(const LoopTable& table, const Word& w) {
  std::vector<ReductionLeaf> leaves;
  leaves.reserve(w.size());
  for (const Letter& l : w)
    leaves.push_back(ReductionLeaf{l, letter_path(table, l), table.generator(l.name)});
  return leaves;
}

}  // namespace

MultiplyResult multiply(const LoopTable& table, const Word& w1, const Word& w2) {
  table.check_word(w1);
  table.check_word(w2);
  Word joined = w1;
  joined.insert(joined.end(), w2.begin(), w2.end());
  Word reduced = reduce_word(joined);

  Built built = reduce_with_certificate(word_leaves(table, joined), table.space(),
                                        table.basepoint());
  Certificate cert{table.mode(), true, std::move(built.node)};

  MultiplyResult out{std::move(reduced), std::move(cert), std::nullopt, false, {}};
  const auto check = check_certificate(out.certificate);
  if (check.ok()) {
    if (!(check.judgment->lhs == realize(table, joined)) ||
        !(check.judgment->rhs == realize(table, out.reduced)))
      throw input_error("internal: reduction certificate proves the wrong judgment");
    out.judgment = check.judgment;
    out.verified = true;
  } else {
    out.diagnostic = check.error->describe();
  }
  return out;
}

EquivalenceSearchResult equivalent(const LoopTable& table, const Word& w1, const Word& w2,
                                   int depth) {
  table.check_word(w1);
  table.check_word(w2);
  EquivalenceSearchResult out;

  const StepPath r1 = realize(table, w1);
  const StepPath r2 = realize(table, w2);
  if (r1 == r2) {
    Certificate cert{table.mode(), true, cert_refl(r1)};
    auto check = check_certificate(cert);
    if (check.ok()) {
      out.answer = EquivAnswer::yes;
      out.certificate = std::move(cert);
      out.judgment = check.judgment;
      out.detail = "identical realizations";
      return out;
    }
  }
  if (depth < 1) {
    out.detail = "no derivation found at depth 0";
    return out;
  }

  const Word red1 = reduce_word(w1);
  const Word red2 = reduce_word(w2);
  bool same = red1.size() == red2.size();
  for (std::size_t k = 0; same && k < red1.size(); ++k) {
    if (red1[k] == red2[k]) continue;
    // letters registered under different names may carry the same path
    same = red1[k].inverse == red2[k].inverse &&
           table.generator(red1[k].name) == table.generator(red2[k].name);
  }
  if (same) {
    Built c1 = reduce_with_certificate(word_leaves(table, w1), table.space(),
                                       table.basepoint());
    Built c2 = reduce_with_certificate(word_leaves(table, w2), table.space(),
                                       table.basepoint());
    StepPath lhs = c2.rhs, rhs = c2.lhs;
    Built flipped{cert_sym(std::move(c2.node)), std::move(lhs), std::move(rhs)};
    Built chained = built_trans(std::move(c1), std::move(flipped));
    Certificate cert{table.mode(), true, std::move(chained.node)};
    auto check = check_certificate(cert);
    if (check.ok()) {
      out.answer = EquivAnswer::yes;
      out.certificate = std::move(cert);
      out.judgment = check.judgment;
      out.detail = "equal reduced words";
      return out;
    }
    out.detail = "reduction certificate did not verify: " + check.error->describe();
    return out;
  }
  out.detail = "no derivation found within depth " + std::to_string(depth);
  return out;
}

RebaseResult basepoint_change(const LoopTable& table, const StepPath& gamma, const Word& w) {
  table.check_word(w);
  if (!(gamma.space() == table.space()))
    throw input_error("rebase path lives in a different space");
  if (gamma.start() != table.basepoint())
    throw input_error("rebase path must start at the table's basepoint");
  const auto verdict = is_so_path(gamma, table.mode());
  if (!verdict.ok)
    throw input_error("rebase path is not an so-" + std::to_string(table.mode()) + "-path");

  const StepPath back = inverse_path(gamma);
  LoopTable out(table.space(), gamma.end(), table.mode());
  for (const auto& [name, loop] : table.generators())
    out = register_loop(std::move(out), name,
                        compose_paths(compose_paths(back, loop), gamma));
  return RebaseResult{std::move(out), w};
}

PushforwardResult induced_hom(const SpaceMap& f, const LoopTable& table, const Word& w) {
  table.check_word(w);
  if (table.mode() != 2)
    throw input_error("induced maps are defined for irresolute tables (mode 2)");
  if (!(f.domain() == table.space()))
    throw input_error("map domain must be the table's space");
  if (!classify(f).so2) throw input_error("map is not irresolute (so-2)");

  LoopTable out(f.codomain(), f.apply(table.basepoint()), 2);
  for (const auto& [name, loop] : table.generators()) {
    std::vector<Piece> pieces;
    pieces.reserve(loop.pieces().size());
    for (const auto& p : loop.pieces()) pieces.push_back(Piece{p.iv, f.apply(p.value)});
    out = register_loop(std::move(out), name, StepPath(f.codomain(), std::move(pieces)));
  }
  return PushforwardResult{std::move(out), w};
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += w[k].name;
    if (w[k].inverse) out += "^-1";
  }
  return out;
}

}  // namespace semitop
