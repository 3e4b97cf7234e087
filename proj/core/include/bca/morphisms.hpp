#pragma once

// Maps between finite algebras: Boolean homomorphisms, p-morphisms between
// contact algebras, and modal homomorphisms.

#include <optional>
#include <vector>

#include "bca/boolean.hpp"
#include "bca/contact.hpp"
#include "bca/modal.hpp"

namespace bca {

class AlgebraMap {
 public:
  /// Throws std::invalid_argument unless the table has one in-range target
  /// element per source element.
  AlgebraMap(Algebra source, Algebra target, std::vector<Region> table);

  static AlgebraMap identity(const Algebra& algebra);

  /// The homomorphism dual to an atom function f from target atoms to
  /// source atoms: h(x) = {t : f(t) <= x}.
  static AlgebraMap from_atom_function(const Algebra& source, const Algebra& target,
                                       const std::vector<std::size_t>& target_to_source);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const std::vector<Region>& table() const { return table_; }

  Region operator()(Region x) const;

  friend bool operator==(const AlgebraMap&, const AlgebraMap&) = default;

 private:
  Algebra source_;
  Algebra target_;
  std::vector<Region> table_;
};

/// Apply `first`, then `second`. Throws if the middle algebras differ.
AlgebraMap compose(const AlgebraMap& first, const AlgebraMap& second);

/// Every function from target atoms to source atoms, in lexicographic order
/// of the function table. There are |source atoms|^|target atoms| of them.
std::vector<std::vector<std::size_t>> atom_functions(const Algebra& source, const Algebra& target);

/// Preserves meet, join, complement, 0 and 1.
bool is_homomorphism(const AlgebraMap& h);
bool is_injective(const AlgebraMap& h);

struct PMorphismReport {
  /// h(x) C2 h(y) implies x C1 y. Witness (x, y).
  Check p1;
  /// h(z) <<2 y implies z <<1 x and h(x) <= y for some x. Witness (z, y).
  Check p2;
  bool holds() const { return p1.holds && p2.holds; }
};

/// Throws std::invalid_argument when h is not a homomorphism or the relations
/// do not live on h's source and target, and AxiomViolation when either
/// relation is not a contact algebra.
PMorphismReport is_p_morphism(const AlgebraMap& h, const ContactRelation& c1, const ContactRelation& c2);

struct CommutationReport {
  bool p_morphism = false;
  /// h(m1(x)) = m2(h(x)) for every x. Witness (x).
  Check commutes;
};

/// Checks h . m1 = m2 . h. For p-morphisms this is a theorem; for other
/// homomorphisms the result is reported without asserting it.
CommutationReport commutes_with_m(const AlgebraMap& h, const ContactRelation& c1, const ContactRelation& c2);

/// h(D1(x)) = D2(h(x)) for every x. Witness (x).
Check commutes_with_diamond(const AlgebraMap& h, const ModalOperator& d1, const ModalOperator& d2);

/// For a modal homomorphism between KTB algebras, the p-morphism check on the
/// induced contacts. Throws std::invalid_argument when h is not a
/// homomorphism or does not commute with the operators, and AxiomViolation
/// when an operator is not KTB.
bool modal_hom_implies_p_morphism(const AlgebraMap& h, const ModalOperator& d1, const ModalOperator& d2);

}  // namespace bca
