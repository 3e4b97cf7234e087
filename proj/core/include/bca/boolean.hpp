#pragma once

// Finite Boolean algebras as powerset algebras over a list of named atoms.
//
// An element is encoded as the bitset of atoms below it, atom 0 in the least
// significant position. Canonical element order is the unsigned value of that
// bitset, so zero is index 0 and one is index 2^n - 1.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bca {

using Mask = std::uint32_t;

/// Largest supported atom count. Relations are stored densely over 2^n x 2^n
/// element pairs, so this is a memory bound rather than a correctness bound.
inline constexpr std::size_t kMaxAtoms = 12;

/// An element of a finite Boolean algebra, identified by its atom set.
struct Region {
  Mask bits = 0;

  constexpr std::size_t index() const { return bits; }
  friend constexpr auto operator<=>(Region, Region) = default;
};

/// A set of elements of one algebra, stored as a bitset over element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}

  std::size_t universe() const { return bits_.size(); }
  bool contains(Region x) const { return x.index() < bits_.size() && bits_.test(x.index()); }
  void insert(Region x) { bits_.set(x.index()); }
  void erase(Region x) { bits_.reset(x.index()); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  /// Set complement relative to the whole algebra.
  ElementSet complement() const;
  bool is_subset_of(const ElementSet& other) const { return bits_.is_subset_of(other.bits_); }

  /// Members in canonical order.
  std::vector<Region> members() const;

  ElementSet& operator&=(const ElementSet& o) { bits_ &= o.bits_; return *this; }
  ElementSet& operator|=(const ElementSet& o) { bits_ |= o.bits_; return *this; }
  ElementSet& operator-=(const ElementSet& o) { bits_ -= o.bits_; return *this; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  const boost::dynamic_bitset<>& bits() const { return bits_; }

 private:
  boost::dynamic_bitset<> bits_;
};

/// Powerset algebra over n >= 1 named atoms.
class Algebra {
 public:
  /// Throws std::invalid_argument on an empty list, duplicate or malformed
  /// names, or more than kMaxAtoms atoms.
  explicit Algebra(std::vector<std::string> atom_names);

  std::size_t atom_count() const { return atoms_.size(); }
  std::size_t size() const { return std::size_t{1} << atoms_.size(); }
  const std::vector<std::string>& atom_names() const { return atoms_; }

  Region zero() const { return Region{0}; }
  Region one() const { return Region{static_cast<Mask>(size() - 1)}; }
  Region atom(std::size_t i) const;
  std::vector<Region> atoms() const;
  std::vector<Region> elements() const;
  bool is_atom(Region x) const;

  /// Index of the atom with this name, or -1.
  int atom_index(std::string_view name) const;

  bool contains(Region x) const { return x.bits < size(); }
  /// Throws std::invalid_argument when x is not an element of this algebra.
  void require(Region x) const;

  Region meet(Region x, Region y) const;
  Region join(Region x, Region y) const;
  Region complement(Region x) const;
  bool leq(Region x, Region y) const;
  bool lt(Region x, Region y) const { return leq(x, y) && x != y; }
  bool overlaps(Region x, Region y) const { return meet(x, y) != zero(); }

  /// sup of the empty family is 0, inf of the empty family is 1.
  Region sup(std::span<const Region> family) const;
  Region inf(std::span<const Region> family) const;
  Region sup(const ElementSet& family) const;
  Region inf(const ElementSet& family) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const;

  ElementSet up_set(Region x) const;
  ElementSet down_set(Region x) const;
  /// O(x): every y with x * y != 0.
  ElementSet overlap_set(Region x) const;

  /// (down x)^c, which equals O(-x). Throws std::invalid_argument for x = 1.
  ElementSet coprincipal_grill(Region x) const;
  /// The principal ultrafilters up(a), one per atom, in atom order.
  std::vector<ElementSet> ultrafilters() const;

  bool is_filter(const ElementSet& s) const;
  bool is_ideal(const ElementSet& s) const;
  bool is_grill(const ElementSet& s) const;
  /// Grill whose complement is a principal ideal. Equivalent to the
  /// arbitrary-join splitting condition on complete algebras.
  bool is_cp_grill(const ElementSet& s) const;
  /// Contains 0 and 1 and is closed under meet, join, complement.
  bool is_subalgebra(const ElementSet& s) const;

  /// "0", "1", or atom names joined by '+', in atom order.
  std::string format(Region x) const;
  std::string format(const ElementSet& s) const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::vector<std::string> atoms_;
};

/// Builds the algebra over the given atom names.
Algebra make_algebra(std::vector<std::string> atom_names);

/// True for names usable as atoms: [A-Za-z_][A-Za-z0-9_]*.
bool is_valid_atom_name(std::string_view name);

}  // namespace bca
