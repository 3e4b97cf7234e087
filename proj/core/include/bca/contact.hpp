#pragma once

// Contact relations on finite Boolean algebras.
//
// A ContactRelation is an explicit relation over all element pairs. The type
// assumes no axiom: relations that break symmetry or monotonicity are
// representable so that independence and counterexample experiments can be
// expressed. Axioms are evaluated by check_axioms().

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bca/boolean.hpp"
#include "bca/frame.hpp"

namespace bca {

class ContactRelation {
 public:
  /// The empty relation.
  explicit ContactRelation(Algebra algebra);
  ContactRelation(Algebra algebra, const std::function<bool(Region, Region)>& predicate);

  const Algebra& algebra() const { return algebra_; }

  bool related(Region x, Region y) const;
  void set(Region x, Region y, bool value = true);

  /// {y : x C y}.
  const ElementSet& row(Region x) const;
  /// C(x) = {y : y C x}. Equals row(x) for symmetric relations.
  ElementSet contacts_of(Region x) const;

  /// Every pair of this relation is also a pair of `other`.
  bool is_subset_of(const ContactRelation& other) const;
  std::size_t pair_count() const;

  friend bool operator==(const ContactRelation&, const ContactRelation&) = default;

 private:
  Algebra algebra_;
  std::vector<ElementSet> rows_;
};

enum class Axiom {
  C0,
  C1,
  C2,
  C3,
  C4,
  C4c,
  C5,
  C5a,
  EDown,
  EUp,
  ContactEqualsOverlap,
};

inline constexpr std::array<Axiom, 11> kAllAxioms = {
    Axiom::C0, Axiom::C1,  Axiom::C2,  Axiom::C3,    Axiom::C4,  Axiom::C4c,
    Axiom::C5, Axiom::C5a, Axiom::EDown, Axiom::EUp, Axiom::ContactEqualsOverlap,
};

/// "C0" .. "C4", "C4c", "C5", "C5a", "E_down", "E_up", "C=O".
std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom_name(std::string_view name);

/// Result of one universally quantified check. When the check fails the
/// witness holds the first violating tuple in lexicographic enumeration order
/// of the quantified variables.
struct Check {
  bool holds = true;
  std::vector<Region> witness;
};

struct AxiomReport {
  std::array<Check, kAllAxioms.size()> checks;

  const Check& operator[](Axiom a) const { return checks[static_cast<std::size_t>(a)]; }
  Check& operator[](Axiom a) { return checks[static_cast<std::size_t>(a)]; }
  bool holds(Axiom a) const { return (*this)[a].holds; }
  /// C0 through C4.
  bool is_contact_algebra() const;
};

/// Evaluates every axiom exhaustively.
///
/// Witness variables per axiom:
///   C0 (x)          0 C x
///   C1 (x, y)       x <= y, x != 0, not x C y
///   C2 (x, y)       x C y, not y C x
///   C3 (x, y, z)    x <= y, z C x, not z C y
///   C4 (x, y, z)    x C y+z, neither x C y nor x C z
///   C4c (x)         no y with C(x) = O(y)
///   C5 (a, b)       C(a) within C(b) but a not <= b
///   C5a (x)         x != 1 in contact with every nonzero y
///   E_down (x)      x != 0 with no nonzero y << x
///   E_up (x)        x != 1 with no y != 1, x << y
///   C=O (x, y)      first pair where contact and overlap differ
///
/// C4c is evaluated through its existential form (every C(x) is some O(y)),
/// which matches the family-quantified definition whenever C0-C3 hold.
AxiomReport check_axioms(const ContactRelation& c);

/// The unique y with O(y) = s, if any.
std::optional<Region> overlap_generator(const Algebra& algebra, const ElementSet& s);

ContactRelation overlap_contact(const Algebra& algebra);
/// x C y iff both are nonzero.
ContactRelation largest_contact(const Algebra& algebra);
/// x C y iff x overlaps y or some listed grill contains both.
/// Throws std::invalid_argument if a member is not a grill.
ContactRelation contact_from_grills(const Algebra& algebra, const std::vector<ElementSet>& grills);
/// x C_I y iff x C y or neither x nor y lies in I.
/// Throws std::invalid_argument if I is not an ideal.
ContactRelation ideal_extension(const ContactRelation& c, const ElementSet& ideal);
/// Contact on the powerset of the frame's worlds: A C B iff some a in A is
/// related to some b in B. Throws std::invalid_argument unless the relation is
/// reflexive and symmetric.
ContactRelation contact_from_frame(const Frame& frame);

/// Relation between atoms: a R b iff a C b. Reflexive and symmetric when C is
/// a contact relation.
Frame atom_frame(const ContactRelation& c);

/// x << y iff not x C -y.
bool nt_part(const ContactRelation& c, Region x, Region y);
/// x << x.
bool isolated(const ContactRelation& c, Region x);
ElementSet isolated_set(const ContactRelation& c);

enum class Subordination { S1, S2, S3, S4, S5, S6, S7 };
std::string_view subordination_name(Subordination s);

struct SubordinationReport {
  std::array<Check, 7> checks;

  const Check& operator[](Subordination s) const { return checks[static_cast<std::size_t>(s)]; }
  Check& operator[](Subordination s) { return checks[static_cast<std::size_t>(s)]; }
  bool all_hold() const;
};

/// Exhaustive check of S1-S7 for the non-tangential part relation.
///
/// Witness variables: S1 (x) with x in {0, 1} and not x << x; S2, S3 (x, y, z);
/// S4 (x, y, z, u); S5, S6 (x, y); S7 (x, y, z).
SubordinationReport subordination_report(const ContactRelation& c);

}  // namespace bca
