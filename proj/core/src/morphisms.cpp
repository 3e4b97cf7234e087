#include "bca/morphisms.hpp"

#include <stdexcept>

namespace bca {

AlgebraMap::AlgebraMap(Algebra source, Algebra target, std::vector<Region> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_.size()) {
    throw std::invalid_argument("map table has " + std::to_string(table_.size()) + " entries, expected " +
                                std::to_string(source_.size()));
  }
  for (Region y : table_) target_.require(y);
}

AlgebraMap AlgebraMap::identity(const Algebra& algebra) { return AlgebraMap(algebra, algebra, algebra.elements()); }

AlgebraMap AlgebraMap::from_atom_function(const Algebra& source, const Algebra& target,
                                          const std::vector<std::size_t>& target_to_source) {
  if (target_to_source.size() != target.atom_count()) {
    throw std::invalid_argument("atom function needs one entry per target atom");
  }
  for (std::size_t s : target_to_source) {
    if (s >= source.atom_count()) throw std::invalid_argument("atom function entry out of range");
  }
  std::vector<Region> table;
  table.reserve(source.size());
  for (Region x : source.elements()) {
    Mask image = 0;
    for (std::size_t t = 0; t < target_to_source.size(); ++t) {
      if (x.bits & (Mask{1} << target_to_source[t])) image |= Mask{1} << t;
    }
    table.push_back(Region{image});
  }
  return AlgebraMap(source, target, std::move(table));
}

Region AlgebraMap::operator()(Region x) const {
  source_.require(x);
  return table_[x.index()];
}

AlgebraMap compose(const AlgebraMap& first, const AlgebraMap& second) {
  if (!(first.target() == second.source())) throw std::invalid_argument("maps do not compose");
  std::vector<Region> table;
  for (Region x : first.source().elements()) table.push_back(second(first(x)));
  return AlgebraMap(first.source(), second.target(), std::move(table));
}

std::vector<std::vector<std::size_t>> atom_functions(const Algebra& source, const Algebra& target) {
  const std::size_t k = source.atom_count();
  const std::size_t m = target.atom_count();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(m, 0);
  while (true) {
    out.push_back(f);
    // Odometer increment, last position fastest.
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++f[pos] < k) break;
      f[pos] = 0;
      if (pos == 0) return out;
    }
    if (m == 0) return out;
  }
}

bool is_homomorphism(const AlgebraMap& h) {
  const Algebra& s = h.source();
  const Algebra& t = h.target();
  if (h(s.zero()) != t.zero() || h(s.one()) != t.one()) return false;
  for (Region x : s.elements()) {
    if (h(s.complement(x)) != t.complement(h(x))) return false;
    for (Region y : s.elements()) {
      if (h(s.meet(x, y)) != t.meet(h(x), h(y))) return false;
      if (h(s.join(x, y)) != t.join(h(x), h(y))) return false;
    }
  }
  return true;
}

bool is_injective(const AlgebraMap& h) {
  ElementSet seen = h.target().empty_set();
  for (Region x : h.source().elements()) {
    if (seen.contains(h(x))) return false;
    seen.insert(h(x));
  }
  return true;
}

namespace {

void require_contact(const ContactRelation& c, const char* which) {
  AxiomReport report = check_axioms(c);
  for (Axiom a : {Axiom::C0, Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4}) {
    if (!report.holds(a)) {
      throw AxiomViolation(std::string(axiom_name(a)),
                           std::string(which) + " relation is not a contact algebra: " +
                               std::string(axiom_name(a)) + " fails");
    }
  }
}

void require_endpoints(const AlgebraMap& h, const Algebra& source, const Algebra& target) {
  if (!(h.source() == source)) throw std::invalid_argument("map source differs from the first structure's algebra");
  if (!(h.target() == target)) throw std::invalid_argument("map target differs from the second structure's algebra");
  if (!is_homomorphism(h)) throw std::invalid_argument("map is not a Boolean homomorphism");
}

}  // namespace

PMorphismReport is_p_morphism(const AlgebraMap& h, const ContactRelation& c1, const ContactRelation& c2) {
  require_endpoints(h, c1.algebra(), c2.algebra());
  require_contact(c1, "source");
  require_contact(c2, "target");
  const Algebra& s = h.source();
  const Algebra& t = h.target();
  PMorphismReport report;

  for (Region x : s.elements()) {
    for (Region y : s.elements()) {
      if (c2.related(h(x), h(y)) && !c1.related(x, y)) {
        report.p1 = Check{false, {x, y}};
        break;
      }
    }
    if (!report.p1.holds) break;
  }

  for (Region z : s.elements()) {
    for (Region y : t.elements()) {
      if (!nt_part(c2, h(z), y)) continue;
      bool found = false;
      for (Region x : s.elements()) {
        if (nt_part(c1, z, x) && t.leq(h(x), y)) {
          found = true;
          break;
        }
      }
      if (!found) {
        report.p2 = Check{false, {z, y}};
        break;
      }
    }
    if (!report.p2.holds) break;
  }
  return report;
}

CommutationReport commutes_with_m(const AlgebraMap& h, const ContactRelation& c1, const ContactRelation& c2) {
  CommutationReport report;
  report.p_morphism = is_p_morphism(h, c1, c2).holds();
  const ModalOperator m1 = derive_m(c1);
  const ModalOperator m2 = derive_m(c2);
  report.commutes = commutes_with_diamond(h, m1, m2);
  return report;
}

Check commutes_with_diamond(const AlgebraMap& h, const ModalOperator& d1, const ModalOperator& d2) {
  if (!(h.source() == d1.algebra()) || !(h.target() == d2.algebra())) {
    throw std::invalid_argument("map endpoints differ from the operators' algebras");
  }
  for (Region x : h.source().elements()) {
    if (h(d1(x)) != d2(h(x))) return Check{false, {x}};
  }
  return Check{};
}

bool modal_hom_implies_p_morphism(const AlgebraMap& h, const ModalOperator& d1, const ModalOperator& d2) {
  require_endpoints(h, d1.algebra(), d2.algebra());
  if (!commutes_with_diamond(h, d1, d2).holds) {
    throw std::invalid_argument("map does not commute with the modal operators");
  }
  return is_p_morphism(h, contact_from_diamond(d1), contact_from_diamond(d2)).holds();
}

}  // namespace bca
