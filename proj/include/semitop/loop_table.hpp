#pragma once

#include "semitop/certificate.hpp"
#include "semitop/step_path.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semitop {

struct Letter {
  std::string name;
  bool inverse = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A formal product of registered generators; reduced words (no adjacent
// cancelling pair) are the normal forms for group elements.
using Word = std::vector<Letter>;

// Named so-i loops at a fixed basepoint: the carriers for the so-i
// fundamental group's computable fragment. Immutable; registration returns
// an extended copy.
class LoopTable {
 public:
  LoopTable(FiniteSpace space, int basepoint, int mode);

  const FiniteSpace& space() const { return space_; }
  int basepoint() const { return basepoint_; }
  int mode() const { return mode_; }
  const std::map<std::string, StepPath>& generators() const { return generators_; }
  const StepPath& generator(const std::string& name) const;
  void check_word(const Word& w) const;

 private:
  friend LoopTable register_loop(LoopTable table, const std::string& name, StepPath loop);

  FiniteSpace space_;
  int basepoint_;
  int mode_;
  std::map<std::string, StepPath> generators_;
};

// Validates the loop condition (both endpoints at the basepoint) and so-i
// membership before the name becomes available.
LoopTable register_loop(LoopTable table, const std::string& name, StepPath loop);

Word reduce_word(Word w);
Word invert_word(const Word& w);
bool is_reduced(const Word& w);

// Left-associated composition of the letters' paths; the empty word realizes
// the constant path at the basepoint.
StepPath realize(const LoopTable& table, const Word& w);

struct MultiplyResult {
  Word reduced;
  Certificate certificate;           // realize(w1 w2) ~ realize(reduced)
  std::optional<Judgment> judgment;  // present iff the certificate verified
  bool verified = false;
  std::string diagnostic;            // failure reason when not verified
};

// Concatenation followed by free reduction. The emitted certificate chains
// reassociation, inverse-cancellation and unit removal steps and is checked
// before returning; in mode 3 the reassociation/unit obligations fail, so
// the reduced word comes back with a warning instead of a verified judgment.
MultiplyResult multiply(const LoopTable& table, const Word& w1, const Word& w2);

enum class EquivAnswer { yes, unknown };

struct EquivalenceSearchResult {
  EquivAnswer answer = EquivAnswer::unknown;
  std::optional<Certificate> certificate;
  std::optional<Judgment> judgment;
  std::string detail;
};

// Bounded certificate search: exact realization equality at depth 0, free
// reduction with letter identification from depth 1. Never answers "no".
EquivalenceSearchResult equivalent(const LoopTable& table, const Word& w1, const Word& w2,
                                   int depth);

struct RebaseResult {
  LoopTable table;
  Word word;
};

// Conjugates every generator along gamma (basepoint -> new point); words map
// letterwise over the conjugated table.
RebaseResult basepoint_change(const LoopTable& table, const StepPath& gamma, const Word& w);

struct PushforwardResult {
  LoopTable table;
  Word word;
};

// Pushes an irresolute map through the table: generators become f-composed
// paths over the codomain, words map letterwise. Mode 2 only.
PushforwardResult induced_hom(const SpaceMap& f, const LoopTable& table, const Word& w);

std::string format_word(const Word& w);

}  // namespace semitop
