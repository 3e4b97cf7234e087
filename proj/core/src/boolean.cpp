#include "bca/boolean.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace bca {

ElementSet ElementSet::complement() const {
  ElementSet out = *this;
  out.bits_.flip();
  return out;
}

std::vector<Region> ElementSet::members() const {
  std::vector<Region> out;
  out.reserve(bits_.count());
  for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
    out.push_back(Region{static_cast<Mask>(i)});
  }
  return out;
}

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  auto first = static_cast<unsigned char>(name.front());
  if (!std::isalpha(first) && first != '_') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

Algebra::Algebra(std::vector<std::string> atom_names) : atoms_(std::move(atom_names)) {
  if (atoms_.empty()) throw std::invalid_argument("algebra needs at least one atom");
  if (atoms_.size() > kMaxAtoms) {
    throw std::invalid_argument("algebra has " + std::to_string(atoms_.size()) +
                                " atoms; at most " + std::to_string(kMaxAtoms) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : atoms_) {
    if (!is_valid_atom_name(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate atom name '" + name + "'");
  }
}

Algebra make_algebra(std::vector<std::string> atom_names) { return Algebra(std::move(atom_names)); }

Region Algebra::atom(std::size_t i) const {
  if (i >= atoms_.size()) throw std::out_of_range("atom index out of range");
  return Region{Mask{1} << i};
}

std::vector<Region> Algebra::atoms() const {
  std::vector<Region> out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) out.push_back(atom(i));
  return out;
}

std::vector<Region> Algebra::elements() const {
  std::vector<Region> out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = Region{static_cast<Mask>(i)};
  return out;
}

bool Algebra::is_atom(Region x) const {
  return contains(x) && x.bits != 0 && (x.bits & (x.bits - 1)) == 0;
}

int Algebra::atom_index(std::string_view name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

void Algebra::require(Region x) const {
  if (!contains(x)) {
    throw std::invalid_argument("region " + std::to_string(x.bits) + " is not an element of a " +
                                std::to_string(size()) + "-element algebra");
  }
}

Region Algebra::meet(Region x, Region y) const {
  require(x);
  require(y);
  return Region{x.bits & y.bits};
}

Region Algebra::join(Region x, Region y) const {
  require(x);
  require(y);
  return Region{x.bits | y.bits};
}

Region Algebra::complement(Region x) const {
  require(x);
  return Region{one().bits & ~x.bits};
}

bool Algebra::leq(Region x, Region y) const {
  require(x);
  require(y);
  return (x.bits & ~y.bits) == 0;
}

Region Algebra::sup(std::span<const Region> family) const {
  Region out = zero();
  for (Region x : family) out = join(out, x);
  return out;
}

Region Algebra::inf(std::span<const Region> family) const {
  Region out = one();
  for (Region x : family) out = meet(out, x);
  return out;
}

Region Algebra::sup(const ElementSet& family) const {
  auto members = family.members();
  return sup(members);
}

Region Algebra::inf(const ElementSet& family) const {
  auto members = family.members();
  return inf(members);
}

ElementSet Algebra::full_set() const { return empty_set().complement(); }

ElementSet Algebra::up_set(Region x) const {
  require(x);
  ElementSet out = empty_set();
  for (Region y : elements()) {
    if ((x.bits & ~y.bits) == 0) out.insert(y);
  }
  return out;
}

ElementSet Algebra::down_set(Region x) const {
  require(x);
  ElementSet out = empty_set();
  // Enumerate submasks of x.
  Mask sub = x.bits;
  while (true) {
    out.insert(Region{sub});
    if (sub == 0) break;
    sub = (sub - 1) & x.bits;
  }
  return out;
}

ElementSet Algebra::overlap_set(Region x) const {
  require(x);
  ElementSet out = empty_set();
  for (Region y : elements()) {
    if ((x.bits & y.bits) != 0) out.insert(y);
  }
  return out;
}

ElementSet Algebra::coprincipal_grill(Region x) const {
  require(x);
  if (x == one()) throw std::invalid_argument("co-principal grill of 1 is empty, not a grill");
  return down_set(x).complement();
}

std::vector<ElementSet> Algebra::ultrafilters() const {
  std::vector<ElementSet> out;
  for (Region a : atoms()) out.push_back(up_set(a));
  return out;
}

bool Algebra::is_filter(const ElementSet& s) const {
  if (s.universe() != size() || s.empty()) return false;
  for (Region x : s.members()) {
    if (!up_set(x).is_subset_of(s)) return false;
    for (Region y : s.members()) {
      if (!s.contains(meet(x, y))) return false;
    }
  }
  return true;
}

bool Algebra::is_ideal(const ElementSet& s) const {
  if (s.universe() != size() || s.empty()) return false;
  for (Region x : s.members()) {
    if (!down_set(x).is_subset_of(s)) return false;
    for (Region y : s.members()) {
      if (!s.contains(join(x, y))) return false;
    }
  }
  return true;
}

bool Algebra::is_grill(const ElementSet& s) const {
  if (s.universe() != size() || s.empty() || s.contains(zero())) return false;
  for (Region x : s.members()) {
    if (!up_set(x).is_subset_of(s)) return false;
  }
  for (Region x : elements()) {
    for (Region y : elements()) {
      if (s.contains(join(x, y)) && !s.contains(x) && !s.contains(y)) return false;
    }
  }
  return true;
}

bool Algebra::is_cp_grill(const ElementSet& s) const {
  if (!is_grill(s)) return false;
  ElementSet rest = s.complement();
  return rest == down_set(sup(rest));
}

bool Algebra::is_subalgebra(const ElementSet& s) const {
  if (s.universe() != size() || !s.contains(zero()) || !s.contains(one())) return false;
  auto members = s.members();
  for (Region x : members) {
    if (!s.contains(complement(x))) return false;
    for (Region y : members) {
      if (!s.contains(meet(x, y)) || !s.contains(join(x, y))) return false;
    }
  }
  return true;
}

std::string Algebra::format(Region x) const {
  require(x);
  if (x == zero()) return "0";
  if (x == one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (x.bits & (Mask{1} << i)) {
      if (!out.empty()) out += '+';
      out += atoms_[i];
    }
  }
  return out;
}

std::string Algebra::format(const ElementSet& s) const {
  std::string out = "{";
  bool first = true;
  for (Region x : s.members()) {
    if (!first) out += ", ";
    out += format(x);
    first = false;
  }
  return out + "}";
}

}  // namespace bca
