#include "bca/modal.hpp"

#include <cassert>

namespace bca {

namespace {

Region at(std::size_t i) { return Region{static_cast<Mask>(i)}; }

void fail(Check& check, std::vector<Region> witness) {
  check.holds = false;
  check.witness = std::move(witness);
}

}  // namespace

ModalOperator::ModalOperator(Algebra algebra) : algebra_(std::move(algebra)), table_(algebra_.elements()) {}

ModalOperator::ModalOperator(Algebra algebra, std::vector<Region> table)
    : algebra_(std::move(algebra)), table_(std::move(table)) {
  if (table_.size() != algebra_.size()) {
    throw std::invalid_argument("modal table has " + std::to_string(table_.size()) + " entries, expected " +
                                std::to_string(algebra_.size()));
  }
  for (Region y : table_) algebra_.require(y);
}

Region ModalOperator::operator()(Region x) const {
  algebra_.require(x);
  return table_[x.index()];
}

Region ModalOperator::box(Region x) const {
  return algebra_.complement((*this)(algebra_.complement(x)));
}

ModalOperator universal_operator(const Algebra& algebra) {
  std::vector<Region> table(algebra.size(), algebra.one());
  table[0] = algebra.zero();
  return ModalOperator(algebra, std::move(table));
}

std::string_view modal_axiom_name(ModalAxiom axiom) {
  switch (axiom) {
    case ModalAxiom::Normal: return "normal";
    case ModalAxiom::Additive: return "additive";
    case ModalAxiom::CompletelyAdditive: return "completely_additive";
    case ModalAxiom::MultiplicativeDual: return "multiplicative_dual";
    case ModalAxiom::T: return "T";
    case ModalAxiom::B: return "B";
    case ModalAxiom::Four: return "Four";
    case ModalAxiom::Five: return "Five";
  }
  return "?";
}

bool ModalReport::is_ktb() const {
  return holds(ModalAxiom::Normal) && holds(ModalAxiom::Additive) && holds(ModalAxiom::T) &&
         holds(ModalAxiom::B);
}

bool ModalReport::is_s4() const {
  return holds(ModalAxiom::Normal) && holds(ModalAxiom::Additive) && holds(ModalAxiom::T) &&
         holds(ModalAxiom::Four);
}

bool ModalReport::is_s5() const { return is_ktb() && holds(ModalAxiom::Four); }

std::optional<ModalAxiom> ModalReport::first_ktb_failure() const {
  for (ModalAxiom a : {ModalAxiom::Normal, ModalAxiom::Additive, ModalAxiom::T, ModalAxiom::B}) {
    if (!holds(a)) return a;
  }
  return std::nullopt;
}

ModalReport check_modal_axioms(const ModalOperator& d) {
  const Algebra& alg = d.algebra();
  const std::size_t n = alg.size();
  const auto leq = [](Region x, Region y) { return (x.bits & ~y.bits) == 0; };
  ModalReport report;
  using M = ModalAxiom;

  if (d(alg.zero()) != alg.zero()) fail(report[M::Normal], {alg.zero()});

  for (std::size_t x = 0; x < n && report[M::Additive].holds; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (d(at(x | y)) != alg.join(d(at(x)), d(at(y)))) {
        fail(report[M::Additive], {at(x), at(y)});
        break;
      }
    }
  }

  if (!report.holds(M::Normal)) {
    fail(report[M::CompletelyAdditive], {alg.zero()});
  } else if (!report.holds(M::Additive)) {
    fail(report[M::CompletelyAdditive], report[M::Additive].witness);
  } else {
    for (std::size_t x = 0; x < n; ++x) {
      Region joined = alg.zero();
      for (std::size_t i = 0; i < alg.atom_count(); ++i) {
        if (x & (std::size_t{1} << i)) joined = alg.join(joined, d(alg.atom(i)));
      }
      if (joined != d(at(x))) {
        fail(report[M::CompletelyAdditive], {at(x)});
        break;
      }
    }
  }

  if (d.box(alg.one()) != alg.one()) {
    fail(report[M::MultiplicativeDual], {alg.one()});
  } else {
    for (std::size_t x = 0; x < n && report[M::MultiplicativeDual].holds; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (d.box(at(x & y)) != alg.meet(d.box(at(x)), d.box(at(y)))) {
          fail(report[M::MultiplicativeDual], {at(x), at(y)});
          break;
        }
      }
    }
  }

  for (Region x : alg.elements()) {
    if (report[M::T].holds && !leq(x, d(x))) fail(report[M::T], {x});
    if (report[M::B].holds && !leq(d(d.box(x)), x)) fail(report[M::B], {x});
    if (report[M::Four].holds && !leq(d(d(x)), d(x))) fail(report[M::Four], {x});
    if (report[M::Five].holds && !leq(d(x), d.box(d(x)))) fail(report[M::Five], {x});
  }

  return report;
}

ModalOperator derive_m(const ContactRelation& c) {
  const Algebra& alg = c.algebra();
  const AxiomReport axioms = check_axioms(c);
  for (Axiom a : {Axiom::C0, Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4}) {
    if (!axioms.holds(a)) {
      throw AxiomViolation(std::string(axiom_name(a)),
                           "not a contact algebra: " + std::string(axiom_name(a)) + " fails");
    }
  }

  std::vector<Region> table;
  table.reserve(alg.size());
  for (Region x : alg.elements()) {
    auto by_overlap = overlap_generator(alg, c.contacts_of(x));
    if (!by_overlap) {
      throw AxiomViolation("C4c", "C4c violated at " + alg.format(x) + ": C(x) is not O(y) for any y");
    }
    Region by_meet = alg.one();
    for (Region y : alg.elements()) {
      if (nt_part(c, x, y)) by_meet = alg.meet(by_meet, y);
    }
    if (by_meet != *by_overlap) {
      throw std::logic_error("m(" + alg.format(x) + ") differs between the overlap and meet computations");
    }
    table.push_back(*by_overlap);
  }
  return ModalOperator(alg, std::move(table));
}

ContactRelation contact_from_diamond(const ModalOperator& d) {
  const ModalReport report = check_modal_axioms(d);
  if (auto failure = report.first_ktb_failure()) {
    std::string name(modal_axiom_name(*failure));
    throw AxiomViolation(name, "operator is not KTB: " + name + " fails");
  }
  const Algebra& alg = d.algebra();
  ContactRelation out(alg, [&](Region x, Region y) { return (x.bits & d(y).bits) != 0; });
  assert(derive_m(out) == d);
  return out;
}

ElementSet quasi_modal_nabla(const ContactRelation& c, Region x) { return c.contacts_of(x); }

ElementSet quasi_modal_delta(const ContactRelation& c, Region x) {
  return c.contacts_of(c.algebra().complement(x)).complement();
}

std::optional<Region> box_from_delta(const ContactRelation& c, Region x) {
  const Algebra& alg = c.algebra();
  ElementSet delta = quasi_modal_delta(c, x);
  Region top = alg.sup(delta);
  if (alg.down_set(top) != delta) return std::nullopt;
  return top;
}

ElementSet fixed_points(const ModalOperator& d) {
  ElementSet out = d.algebra().empty_set();
  for (Region x : d.algebra().elements()) {
    if (d(x) == x) out.insert(x);
  }
  return out;
}

bool isolated_subalgebra_check(const ContactRelation& c) { return c.algebra().is_subalgebra(isolated_set(c)); }

ImageAnalysis m_image_analysis(const ModalOperator& d) {
  const Algebra& alg = d.algebra();
  ImageAnalysis out{alg.empty_set()};
  for (Region x : alg.elements()) out.image.insert(d(x));
  const auto members = out.image.members();
  out.closed_under_meet = out.closed_under_join = out.closed_under_complement = true;
  for (Region x : members) {
    if (!out.image.contains(alg.complement(x))) out.closed_under_complement = false;
    for (Region y : members) {
      if (!out.image.contains(alg.meet(x, y))) out.closed_under_meet = false;
      if (!out.image.contains(alg.join(x, y))) out.closed_under_join = false;
    }
  }
  out.is_subalgebra = alg.is_subalgebra(out.image);
  return out;
}

}  // namespace bca
