#pragma once

// Finite Alexandroff spaces given by a preorder, and their algebras of
// regular closed sets with the intersection contact.
//
// Topology convention: the open sets are the up-sets of the preorder. So the
// interior of A is the largest up-set inside A and the closure of A is its
// down-closure.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bca/boolean.hpp"
#include "bca/contact.hpp"

namespace bca {

using PointSet = std::uint32_t;

inline constexpr std::size_t kMaxPoints = 20;

class FinitePreorder {
 public:
  /// `order` lists pairs (p, q) meaning p <= q. Reflexive pairs are added;
  /// throws std::invalid_argument if the result is not transitive, on
  /// duplicate or empty names, or beyond kMaxPoints points.
  FinitePreorder(std::vector<std::string> points, const std::vector<std::pair<std::size_t, std::size_t>>& order);

  std::size_t point_count() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  bool leq(std::size_t p, std::size_t q) const { return (up_[p] >> q) & 1U; }
  PointSet all() const { return static_cast<PointSet>((std::uint64_t{1} << points_.size()) - 1); }

  /// Largest up-set inside a.
  PointSet interior(PointSet a) const;
  /// Down-closure of a.
  PointSet closure(PointSet a) const;

  friend bool operator==(const FinitePreorder&, const FinitePreorder&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<PointSet> up_;
};

class RegularClosedAlgebra {
 public:
  /// Enumerates RC(X), checks the Boolean laws for the operations
  /// A * B = Cl Int (A n B), A + B = A u B, -A = Cl (X \ A), and checks that
  /// the intersection contact satisfies C0-C4 and C4c. Throws std::logic_error
  /// if any check fails. Above 64 elements only the pairwise laws are checked.
  /// Atoms are named by `atom_names` when given, else r0, r1, ... in canonical
  /// order.
  explicit RegularClosedAlgebra(FinitePreorder space, std::vector<std::string> atom_names = {});

  const FinitePreorder& space() const { return space_; }
  std::size_t size() const { return elements_.size(); }
  bool is_regular_closed(PointSet a) const { return space_.closure(space_.interior(a)) == a; }

  PointSet meet(PointSet a, PointSet b) const;
  PointSet join(PointSet a, PointSet b) const { return a | b; }
  PointSet complement(PointSet a) const;
  /// A C B iff A n B is nonempty.
  bool in_contact(PointSet a, PointSet b) const { return (a & b) != 0; }

  /// Atoms of RC(X) as point sets, in canonical order.
  const std::vector<PointSet>& atoms() const { return atoms_; }

  /// The isomorphic powerset algebra over the RC atoms.
  const Algebra& algebra() const { return algebra_; }
  /// Point set of an element of algebra(): the union of its atoms.
  PointSet points_of(Region x) const;
  /// Element of algebra() for a regular closed set; throws if a is not RC.
  Region region_of(PointSet a) const;
  /// The intersection contact transported to algebra().
  const ContactRelation& contact() const { return contact_; }

 private:
  FinitePreorder space_;
  std::vector<PointSet> elements_;
  std::vector<PointSet> atoms_;
  Algebra algebra_;
  ContactRelation contact_;
};

RegularClosedAlgebra rc_algebra(const FinitePreorder& space);

/// Antichain over the named points: the discrete space.
FinitePreorder discrete_space(std::vector<std::string> points);

struct BranchingExample {
  RegularClosedAlgebra rc;
  bool size_is_power_of_two = false;        // |RC| = 2^n
  bool branches_are_atoms = false;          // each branch with bottom is an atom
  bool branches_touch_disjointly = false;   // distinct branches in contact, meet 0
  bool ll_matches_interior = false;         // A << B iff A within Int B
  bool holds() const {
    return size_is_power_of_two && branches_are_atoms && branches_touch_disjointly && ll_matches_interior;
  }
};

/// n chains of chain_len points each, joined below a common bottom point.
/// Points are "bot" and "p<i>_<j>"; RC atoms are named B1..Bn.
/// Throws std::invalid_argument for n = 0 or chain_len = 0.
BranchingExample branching_example(std::size_t branches, std::size_t chain_len = 2);

}  // namespace bca
