#include "bca/contact.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace bca {

namespace {

constexpr auto npos = boost::dynamic_bitset<>::npos;

Region at(std::size_t i) { return Region{static_cast<Mask>(i)}; }

void fail(Check& check, std::vector<Region> witness) {
  check.holds = false;
  check.witness = std::move(witness);
}

std::vector<ElementSet> columns(const ContactRelation& c) {
  std::vector<ElementSet> out;
  out.reserve(c.algebra().size());
  for (Region x : c.algebra().elements()) out.push_back(c.contacts_of(x));
  return out;
}

}  // namespace

ContactRelation::ContactRelation(Algebra algebra)
    : algebra_(std::move(algebra)), rows_(algebra_.size(), ElementSet(algebra_.size())) {}

ContactRelation::ContactRelation(Algebra algebra, const std::function<bool(Region, Region)>& predicate)
    : ContactRelation(std::move(algebra)) {
  for (Region x : algebra_.elements()) {
    for (Region y : algebra_.elements()) {
      if (predicate(x, y)) rows_[x.index()].insert(y);
    }
  }
}

bool ContactRelation::related(Region x, Region y) const {
  algebra_.require(x);
  algebra_.require(y);
  return rows_[x.index()].contains(y);
}

void ContactRelation::set(Region x, Region y, bool value) {
  algebra_.require(x);
  algebra_.require(y);
  if (value) {
    rows_[x.index()].insert(y);
  } else {
    rows_[x.index()].erase(y);
  }
}

const ElementSet& ContactRelation::row(Region x) const {
  algebra_.require(x);
  return rows_[x.index()];
}

ElementSet ContactRelation::contacts_of(Region x) const {
  algebra_.require(x);
  ElementSet out = algebra_.empty_set();
  for (std::size_t y = 0; y < rows_.size(); ++y) {
    if (rows_[y].contains(x)) out.insert(at(y));
  }
  return out;
}

bool ContactRelation::is_subset_of(const ContactRelation& other) const {
  if (!(algebra_ == other.algebra_)) throw std::invalid_argument("relations over different algebras");
  for (std::size_t x = 0; x < rows_.size(); ++x) {
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  }
  return true;
}

std::size_t ContactRelation::pair_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

std::string_view axiom_name(Axiom axiom) {
  switch (axiom) {
    case Axiom::C0: return "C0";
    case Axiom::C1: return "C1";
    case Axiom::C2: return "C2";
    case Axiom::C3: return "C3";
    case Axiom::C4: return "C4";
    case Axiom::C4c: return "C4c";
    case Axiom::C5: return "C5";
    case Axiom::C5a: return "C5a";
    case Axiom::EDown: return "E_down";
    case Axiom::EUp: return "E_up";
    case Axiom::ContactEqualsOverlap: return "C=O";
  }
  return "?";
}

std::optional<Axiom> parse_axiom_name(std::string_view name) {
  for (Axiom a : kAllAxioms) {
    if (axiom_name(a) == name) return a;
  }
  return std::nullopt;
}

bool AxiomReport::is_contact_algebra() const {
  return holds(Axiom::C0) && holds(Axiom::C1) && holds(Axiom::C2) && holds(Axiom::C3) &&
         holds(Axiom::C4);
}

std::optional<Region> overlap_generator(const Algebra& algebra, const ElementSet& s) {
  // O(y)^c = down(-y), so -y must be the join of the complement.
  ElementSet rest = s.complement();
  if (!rest.contains(algebra.zero())) return std::nullopt;
  Region y = algebra.complement(algebra.sup(rest));
  if (algebra.overlap_set(y) != s) return std::nullopt;
  return y;
}

AxiomReport check_axioms(const ContactRelation& c) {
  const Algebra& alg = c.algebra();
  const std::size_t n = alg.size();
  const Region zero = alg.zero();
  const Region one = alg.one();
  const auto cols = columns(c);
  const auto rel = [&](std::size_t x, std::size_t y) { return c.row(at(x)).contains(at(y)); };
  const auto leq = [](std::size_t x, std::size_t y) { return (x & ~y) == 0; };
  const auto compl_of = [&](std::size_t x) { return static_cast<std::size_t>(one.bits & ~x); };
  AxiomReport report;

  {
    auto i = c.row(zero).bits().find_first();
    if (i != npos) fail(report[Axiom::C0], {at(i)});
  }

  for (std::size_t x = 1; x < n && report[Axiom::C1].holds; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (leq(x, y) && !rel(x, y)) {
        fail(report[Axiom::C1], {at(x), at(y)});
        break;
      }
    }
  }

  for (std::size_t x = 0; x < n && report[Axiom::C2].holds; ++x) {
    ElementSet diff = c.row(at(x)) - cols[x];
    auto y = diff.bits().find_first();
    if (y != npos) fail(report[Axiom::C2], {at(x), at(y)});
  }

  for (std::size_t x = 0; x < n && report[Axiom::C3].holds; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq(x, y)) continue;
      ElementSet diff = cols[x] - cols[y];
      auto z = diff.bits().find_first();
      if (z != npos) {
        fail(report[Axiom::C3], {at(x), at(y), at(z)});
        break;
      }
    }
  }

  for (std::size_t x = 0; x < n && report[Axiom::C4].holds; ++x) {
    const auto& row = c.row(at(x));
    for (std::size_t y = 0; y < n && report[Axiom::C4].holds; ++y) {
      if (row.contains(at(y))) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (row.contains(at(y | z)) && !row.contains(at(z))) {
          fail(report[Axiom::C4], {at(x), at(y), at(z)});
          break;
        }
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (!overlap_generator(alg, cols[x])) {
      fail(report[Axiom::C4c], {at(x)});
      break;
    }
  }

  for (std::size_t a = 0; a < n && report[Axiom::C5].holds; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (cols[a].is_subset_of(cols[b]) && !leq(a, b)) {
        fail(report[Axiom::C5], {at(a), at(b)});
        break;
      }
    }
  }

  ElementSet nonzero = alg.full_set();
  nonzero.erase(zero);
  for (std::size_t x = 0; x < n; ++x) {
    if (at(x) != one && nonzero.is_subset_of(c.row(at(x)))) {
      fail(report[Axiom::C5a], {at(x)});
      break;
    }
  }

  for (std::size_t x = 1; x < n; ++x) {
    bool found = false;
    for (std::size_t y = 1; y < n && !found; ++y) found = !rel(y, compl_of(x));
    if (!found) {
      fail(report[Axiom::EDown], {at(x)});
      break;
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    if (at(x) == one) continue;
    bool found = false;
    for (std::size_t y = 0; y < n && !found; ++y) {
      if (at(y) != one) found = !rel(x, compl_of(y));
    }
    if (!found) {
      fail(report[Axiom::EUp], {at(x)});
      break;
    }
  }

  for (std::size_t x = 0; x < n && report[Axiom::ContactEqualsOverlap].holds; ++x) {
    ElementSet diff = (c.row(at(x)) - alg.overlap_set(at(x))) | (alg.overlap_set(at(x)) - c.row(at(x)));
    auto y = diff.bits().find_first();
    if (y != npos) fail(report[Axiom::ContactEqualsOverlap], {at(x), at(y)});
  }

  return report;
}

ContactRelation overlap_contact(const Algebra& algebra) {
  return ContactRelation(algebra, [](Region x, Region y) { return (x.bits & y.bits) != 0; });
}

ContactRelation largest_contact(const Algebra& algebra) {
  return ContactRelation(algebra, [](Region x, Region y) { return x.bits != 0 && y.bits != 0; });
}

ContactRelation contact_from_grills(const Algebra& algebra, const std::vector<ElementSet>& grills) {
  for (std::size_t i = 0; i < grills.size(); ++i) {
    if (!algebra.is_grill(grills[i])) {
      throw std::invalid_argument("member " + std::to_string(i) + " of the grill family is not a grill");
    }
  }
  ContactRelation out(algebra, [&](Region x, Region y) {
    if ((x.bits & y.bits) != 0) return true;
    for (const auto& g : grills) {
      if (g.contains(x) && g.contains(y)) return true;
    }
    return false;
  });
  assert(check_axioms(out).is_contact_algebra());
  return out;
}

ContactRelation ideal_extension(const ContactRelation& c, const ElementSet& ideal) {
  const Algebra& alg = c.algebra();
  if (!alg.is_ideal(ideal)) throw std::invalid_argument("ideal extension needs an ideal");
  ContactRelation out(alg, [&](Region x, Region y) {
    return c.related(x, y) || (!ideal.contains(x) && !ideal.contains(y));
  });
  assert(c.is_subset_of(out));
  assert(!check_axioms(c).is_contact_algebra() || check_axioms(out).is_contact_algebra());
  return out;
}

ContactRelation contact_from_frame(const Frame& frame) {
  if (!frame.is_reflexive()) throw std::invalid_argument("frame relation is not reflexive");
  if (!frame.is_symmetric()) throw std::invalid_argument("frame relation is not symmetric");
  Algebra alg = frame.algebra();
  std::vector<Mask> image(alg.size(), 0);
  for (std::size_t x = 1; x < alg.size(); ++x) {
    // Peel off the lowest world; image(x) = image(rest) | successors(world).
    Mask low = static_cast<Mask>(x) & (~static_cast<Mask>(x) + 1);
    auto world = static_cast<std::size_t>(std::countr_zero(low));
    image[x] = image[x & ~low] | frame.successors(world);
  }
  ContactRelation out(alg, [&](Region x, Region y) { return (image[x.index()] & y.bits) != 0; });
  assert(check_axioms(out).is_contact_algebra() && check_axioms(out).holds(Axiom::C4c));
  return out;
}

Frame atom_frame(const ContactRelation& c) {
  const Algebra& alg = c.algebra();
  Frame frame(alg.atom_names());
  for (std::size_t i = 0; i < alg.atom_count(); ++i) {
    for (std::size_t j = 0; j < alg.atom_count(); ++j) {
      if (c.related(alg.atom(i), alg.atom(j))) frame.set(i, j);
    }
  }
  return frame;
}

bool nt_part(const ContactRelation& c, Region x, Region y) {
  return !c.related(x, c.algebra().complement(y));
}

bool isolated(const ContactRelation& c, Region x) { return nt_part(c, x, x); }

ElementSet isolated_set(const ContactRelation& c) {
  ElementSet out = c.algebra().empty_set();
  for (Region x : c.algebra().elements()) {
    if (isolated(c, x)) out.insert(x);
  }
  return out;
}

std::string_view subordination_name(Subordination s) {
  static constexpr std::array<std::string_view, 7> names = {"S1", "S2", "S3", "S4", "S5", "S6", "S7"};
  return names[static_cast<std::size_t>(s)];
}

bool SubordinationReport::all_hold() const {
  for (const auto& check : checks) {
    if (!check.holds) return false;
  }
  return true;
}

SubordinationReport subordination_report(const ContactRelation& c) {
  const Algebra& alg = c.algebra();
  const std::size_t n = alg.size();
  const Mask one = alg.one().bits;
  const auto leq = [](std::size_t x, std::size_t y) { return (x & ~y) == 0; };

  // ll[x] = {y : x << y}
  std::vector<ElementSet> ll(n, alg.empty_set());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (nt_part(c, at(x), at(y))) ll[x].insert(at(y));
    }
  }
  const auto sub = [&](std::size_t x, std::size_t y) { return ll[x].contains(at(y)); };

  SubordinationReport report;
  using S = Subordination;

  if (!sub(0, 0)) {
    fail(report[S::S1], {at(0)});
  } else if (!sub(one, one)) {
    fail(report[S::S1], {at(one)});
  }

  for (std::size_t x = 0; x < n && report[S::S2].holds; ++x) {
    for (std::size_t y = 0; y < n && report[S::S2].holds; ++y) {
      if (!sub(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (sub(x, z) && !sub(x, y & z)) {
          fail(report[S::S2], {at(x), at(y), at(z)});
          break;
        }
      }
    }
  }

  for (std::size_t x = 0; x < n && report[S::S3].holds; ++x) {
    for (std::size_t y = 0; y < n && report[S::S3].holds; ++y) {
      if (!sub(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (sub(z, y) && !sub(x | z, y)) {
          fail(report[S::S3], {at(x), at(y), at(z)});
          break;
        }
      }
    }
  }

  for (std::size_t x = 0; x < n && report[S::S4].holds; ++x) {
    for (std::size_t y = 0; y < n && report[S::S4].holds; ++y) {
      if (!leq(x, y)) continue;
      for (std::size_t z = 0; z < n && report[S::S4].holds; ++z) {
        if (!sub(y, z)) continue;
        for (std::size_t u = 0; u < n; ++u) {
          if (leq(z, u) && !sub(x, u)) {
            fail(report[S::S4], {at(x), at(y), at(z), at(u)});
            break;
          }
        }
      }
    }
  }

  for (std::size_t x = 0; x < n && report[S::S5].holds; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (sub(x, y) && !leq(x, y)) {
        fail(report[S::S5], {at(x), at(y)});
        break;
      }
    }
  }

  for (std::size_t x = 0; x < n && report[S::S6].holds; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (sub(x, y) && !sub(one & ~y, one & ~x)) {
        fail(report[S::S6], {at(x), at(y)});
        break;
      }
    }
  }

  for (std::size_t x = 0; x < n && report[S::S7].holds; ++x) {
    for (std::size_t y = 0; y < n && report[S::S7].holds; ++y) {
      if (!sub(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if ((y & z) == 0 && c.related(at(x), at(z))) {
          fail(report[S::S7], {at(x), at(y), at(z)});
          break;
        }
      }
    }
  }

  return report;
}

}  // namespace bca
