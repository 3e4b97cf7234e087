#pragma once

// Modal possibility operators and their correspondence with contact relations.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bca/boolean.hpp"
#include "bca/contact.hpp"

namespace bca {

/// Raised when an input structure fails an axiom an operation requires.
class AxiomViolation : public std::domain_error {
 public:
  AxiomViolation(std::string axiom, const std::string& message)
      : std::domain_error(message), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

/// A total map from elements to elements. No axiom is assumed; the box
/// operator is always derived as -D(-x) and never stored.
class ModalOperator {
 public:
  /// The identity operator.
  explicit ModalOperator(Algebra algebra);
  /// Throws std::invalid_argument unless the table has one in-range entry per element.
  ModalOperator(Algebra algebra, std::vector<Region> table);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<Region>& table() const { return table_; }

  Region operator()(Region x) const;
  Region diamond(Region x) const { return (*this)(x); }
  Region box(Region x) const;

  friend bool operator==(const ModalOperator&, const ModalOperator&) = default;

 private:
  Algebra algebra_;
  std::vector<Region> table_;
};

/// D(x) = 1 for nonzero x, D(0) = 0.
ModalOperator universal_operator(const Algebra& algebra);

enum class ModalAxiom {
  Normal,
  Additive,
  CompletelyAdditive,
  MultiplicativeDual,
  T,
  B,
  Four,
  Five,
};

inline constexpr std::array<ModalAxiom, 8> kAllModalAxioms = {
    ModalAxiom::Normal, ModalAxiom::Additive, ModalAxiom::CompletelyAdditive, ModalAxiom::MultiplicativeDual,
    ModalAxiom::T,      ModalAxiom::B,        ModalAxiom::Four,               ModalAxiom::Five,
};

std::string_view modal_axiom_name(ModalAxiom axiom);

/// Witness variables: normal (0); additive (x, y); completely additive (x),
/// the first element not equal to the join of its atoms' images; dual (x, y),
/// or (1) when box(1) != 1; T (x); B (x); Four (x); Five (x).
struct ModalReport {
  std::array<Check, kAllModalAxioms.size()> checks;

  const Check& operator[](ModalAxiom a) const { return checks[static_cast<std::size_t>(a)]; }
  Check& operator[](ModalAxiom a) { return checks[static_cast<std::size_t>(a)]; }
  bool holds(ModalAxiom a) const { return (*this)[a].holds; }

  /// normal, additive, T and B.
  bool is_ktb() const;
  /// normal, additive, T and Four.
  bool is_s4() const;
  /// KTB plus Four.
  bool is_s5() const;
  /// Name of the first failing KTB axiom, if any.
  std::optional<ModalAxiom> first_ktb_failure() const;
};

/// Exhaustive classification. Complete additivity on a finite algebra is
/// taken as: normal, additive, and D(x) is the join of D(a) over atoms a <= x.
ModalReport check_modal_axioms(const ModalOperator& d);

/// The operator m with C(x) = O(m(x)).
///
/// m is computed twice, as the unique y with C(x) = O(y) and as the meet of
/// {y : x << y}, and the two results are compared.
///
/// Throws AxiomViolation("C0".."C4") when C is not a contact algebra and
/// AxiomViolation("C4c") when some C(x) is not of the form O(y).
ModalOperator derive_m(const ContactRelation& c);

/// x C y iff x * D(y) != 0. Throws AxiomViolation naming the first failing
/// KTB axiom.
ContactRelation contact_from_diamond(const ModalOperator& d);

/// nabla(x) = C(x).
ElementSet quasi_modal_nabla(const ContactRelation& c, Region x);
/// delta(x) = C(-x)^c.
ElementSet quasi_modal_delta(const ContactRelation& c, Region x);
/// The y with delta(x) = down(y), when delta(x) is principal.
std::optional<Region> box_from_delta(const ContactRelation& c, Region x);

ElementSet fixed_points(const ModalOperator& d);
/// The isolated regions of C form a subalgebra.
bool isolated_subalgebra_check(const ContactRelation& c);

struct ImageAnalysis {
  ElementSet image;
  bool closed_under_meet = false;
  bool closed_under_join = false;
  bool closed_under_complement = false;
  bool is_subalgebra = false;
};

ImageAnalysis m_image_analysis(const ModalOperator& d);

}  // namespace bca
