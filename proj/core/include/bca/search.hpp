#pragma once

// Bounded exhaustive search for contact relations with a given profile of
// axiom values.
//
// Candidates on n atoms come in a fixed order: first the contacts generated
// by sets of co-principal grills (down g)^c, by increasing bitmask over g in
// canonical element order, then the contacts of reflexive symmetric atom
// adjacencies, by increasing bitmask over atom pairs (i < j) in lexicographic
// order.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bca/boolean.hpp"
#include "bca/contact.hpp"

namespace bca {

struct GoalLiteral {
  Axiom axiom;
  bool value = true;
  friend bool operator==(const GoalLiteral&, const GoalLiteral&) = default;
};

/// A conjunction of axiom literals.
struct Goal {
  std::vector<GoalLiteral> literals;
  bool matches(const AxiomReport& report) const;
  friend bool operator==(const Goal&, const Goal&) = default;
};

/// Parses e.g. "C4c ∧ ¬(C=O) ∧ E_down". Conjunction: ∧ & && , and.
/// Negation: ¬ ! ~ not. Throws std::invalid_argument on unknown axioms or
/// malformed input.
Goal parse_goal(std::string_view text);
/// Canonical spelling, e.g. "C4c & !C=O".
std::string format_goal(const Goal& goal);

enum class SearchSpace { All, Grills, Frames };

/// Accepts "all", "grills", "frames".
std::optional<SearchSpace> parse_search_space(std::string_view text);

struct Candidate {
  /// Generator in document syntax, e.g. "grills: [^0]" or "frame: a-b".
  std::string generator;
  ContactRelation contact;
};

/// Atoms a, b, c, ... Throws std::invalid_argument for n = 0 or n > 26.
Algebra letter_algebra(std::size_t n);

/// Every candidate on the algebra in search order. Grill sets that are not
/// antichains are skipped: only the minimal g of a set matter, so such a set
/// generates the same contact as an earlier one.
std::vector<Candidate> candidate_contacts(const Algebra& algebra, SearchSpace space);

struct SearchResult {
  std::optional<Candidate> witness;
  AxiomReport report;  // of the witness
  std::size_t examined = 0;
};

/// First candidate over 1..max_atoms atoms whose report matches the goal.
SearchResult search(std::size_t max_atoms, const Goal& goal, SearchSpace space = SearchSpace::All);

}  // namespace bca
