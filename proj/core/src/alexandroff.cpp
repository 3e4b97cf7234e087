#include "bca/alexandroff.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace bca {

namespace {

// Triple-quantified laws and the contact axiom report are only run up to this
// many elements; pair laws are always checked.
constexpr std::size_t kFullCheckLimit = 64;

std::vector<std::string> default_names(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < k; ++i) out.push_back("r" + std::to_string(i));
  return out;
}

std::vector<PointSet> enumerate_rc(const FinitePreorder& space) {
  std::vector<PointSet> out;
  const std::uint64_t count = std::uint64_t{1} << space.point_count();
  for (std::uint64_t a = 0; a < count; ++a) {
    auto set = static_cast<PointSet>(a);
    if (space.closure(space.interior(set)) == set) out.push_back(set);
  }
  return out;
}

std::vector<PointSet> minimal_nonzero(const std::vector<PointSet>& elements) {
  std::vector<PointSet> out;
  for (PointSet a : elements) {
    if (a == 0) continue;
    bool minimal = std::none_of(elements.begin(), elements.end(),
                                [&](PointSet b) { return b != 0 && b != a && (b & ~a) == 0; });
    if (minimal) out.push_back(a);
  }
  return out;
}

}  // namespace

FinitePreorder::FinitePreorder(std::vector<std::string> points,
                               const std::vector<std::pair<std::size_t, std::size_t>>& order)
    : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("space needs at least one point");
  if (points_.size() > kMaxPoints) throw std::invalid_argument("too many points");
  std::unordered_set<std::string> seen;
  for (const auto& p : points_) {
    if (!is_valid_atom_name(p)) throw std::invalid_argument("invalid point name '" + p + "'");
    if (!seen.insert(p).second) throw std::invalid_argument("duplicate point name '" + p + "'");
  }
  up_.assign(points_.size(), 0);
  for (std::size_t p = 0; p < points_.size(); ++p) up_[p] |= PointSet{1} << p;
  for (auto [p, q] : order) {
    if (p >= points_.size() || q >= points_.size()) throw std::invalid_argument("order pair out of range");
    up_[p] |= PointSet{1} << q;
  }
  for (std::size_t p = 0; p < points_.size(); ++p) {
    for (std::size_t q = 0; q < points_.size(); ++q) {
      if (leq(p, q) && (up_[q] & ~up_[p]) != 0) {
        throw std::invalid_argument("order is not transitive at " + points_[p] + " <= " + points_[q]);
      }
    }
  }
}

PointSet FinitePreorder::interior(PointSet a) const {
  PointSet out = 0;
  for (std::size_t p = 0; p < points_.size(); ++p) {
    if (((a >> p) & 1U) && (up_[p] & ~a) == 0) out |= PointSet{1} << p;
  }
  return out;
}

PointSet FinitePreorder::closure(PointSet a) const {
  PointSet out = 0;
  for (std::size_t q = 0; q < points_.size(); ++q) {
    if ((up_[q] & a) != 0) out |= PointSet{1} << q;
  }
  return out;
}

RegularClosedAlgebra::RegularClosedAlgebra(FinitePreorder space, std::vector<std::string> atom_names)
    : space_(std::move(space)),
      elements_(enumerate_rc(space_)),
      atoms_(minimal_nonzero(elements_)),
      algebra_(atom_names.empty() ? default_names(atoms_.size()) : std::move(atom_names)),
      contact_(algebra_) {
  if (algebra_.atom_count() != atoms_.size()) {
    throw std::invalid_argument("expected " + std::to_string(atoms_.size()) + " atom names");
  }
  if (elements_.size() != algebra_.size()) {
    throw std::logic_error("RC(X) is not atomic over its minimal elements");
  }
  for (Region x : algebra_.elements()) {
    if (!is_regular_closed(points_of(x))) throw std::logic_error("join of RC atoms is not regular closed");
  }

  const PointSet top = space_.all();
  const auto member = [&](PointSet a) { return std::binary_search(elements_.begin(), elements_.end(), a); };
  for (PointSet a : elements_) {
    if (!member(complement(a))) throw std::logic_error("RC(X) not closed under complement");
    if (meet(a, complement(a)) != 0 || join(a, complement(a)) != top) {
      throw std::logic_error("complement law fails in RC(X)");
    }
    for (PointSet b : elements_) {
      if (!member(meet(a, b)) || !member(join(a, b))) throw std::logic_error("RC(X) not closed under meet/join");
      if (meet(a, b) != meet(b, a)) throw std::logic_error("meet not commutative in RC(X)");
      if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a) throw std::logic_error("absorption fails in RC(X)");
      if (elements_.size() > kFullCheckLimit) continue;
      for (PointSet c : elements_) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
          throw std::logic_error("distributivity fails in RC(X)");
        }
        if (meet(a, meet(b, c)) != meet(meet(a, b), c)) throw std::logic_error("meet not associative in RC(X)");
      }
    }
  }

  for (Region x : algebra_.elements()) {
    for (Region y : algebra_.elements()) {
      if (in_contact(points_of(x), points_of(y))) contact_.set(x, y);
    }
  }
  if (elements_.size() > kFullCheckLimit) return;
  AxiomReport report = check_axioms(contact_);
  if (!report.is_contact_algebra() || !report.holds(Axiom::C4c)) {
    throw std::logic_error("intersection contact on RC(X) fails C0-C4c");
  }
}

PointSet RegularClosedAlgebra::meet(PointSet a, PointSet b) const { return space_.closure(space_.interior(a & b)); }

PointSet RegularClosedAlgebra::complement(PointSet a) const { return space_.closure(space_.all() & ~a); }

PointSet RegularClosedAlgebra::points_of(Region x) const {
  algebra_.require(x);
  PointSet out = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (x.bits & (Mask{1} << i)) out |= atoms_[i];
  }
  return out;
}

Region RegularClosedAlgebra::region_of(PointSet a) const {
  if (!is_regular_closed(a)) throw std::invalid_argument("point set is not regular closed");
  Mask bits = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if ((atoms_[i] & ~a) == 0) bits |= Mask{1} << i;
  }
  return Region{bits};
}

RegularClosedAlgebra rc_algebra(const FinitePreorder& space) { return RegularClosedAlgebra(space); }

FinitePreorder discrete_space(std::vector<std::string> points) { return FinitePreorder(std::move(points), {}); }

BranchingExample branching_example(std::size_t branches, std::size_t chain_len) {
  if (branches == 0 || chain_len == 0) throw std::invalid_argument("branching example needs n >= 1 and chain_len >= 1");
  if (branches > kMaxAtoms || 1 + branches * chain_len > kMaxPoints) {
    throw std::invalid_argument("branching example too large");
  }
  std::vector<std::string> points = {"bot"};
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<PointSet> branch_sets;
  for (std::size_t i = 1; i <= branches; ++i) {
    PointSet branch = 1;  // bottom
    std::size_t first = points.size();
    for (std::size_t j = 1; j <= chain_len; ++j) {
      std::size_t idx = points.size();
      points.push_back("p" + std::to_string(i) + "_" + std::to_string(j));
      branch |= PointSet{1} << idx;
      order.emplace_back(0, idx);
      for (std::size_t below = first; below < idx; ++below) order.emplace_back(below, idx);
    }
    branch_sets.push_back(branch);
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= branches; ++i) names.push_back("B" + std::to_string(i));

  BranchingExample out{RegularClosedAlgebra(FinitePreorder(points, order), names)};
  const RegularClosedAlgebra& rc = out.rc;
  out.size_is_power_of_two = rc.size() == (std::size_t{1} << branches);
  out.branches_are_atoms = rc.atoms() == branch_sets;

  out.branches_touch_disjointly = true;
  for (std::size_t i = 0; i < branch_sets.size(); ++i) {
    for (std::size_t j = 0; j < branch_sets.size(); ++j) {
      if (i == j) continue;
      if (!rc.in_contact(branch_sets[i], branch_sets[j]) || rc.meet(branch_sets[i], branch_sets[j]) != 0) {
        out.branches_touch_disjointly = false;
      }
    }
  }

  out.ll_matches_interior = true;
  const FinitePreorder& space = rc.space();
  for (Region x : rc.algebra().elements()) {
    for (Region y : rc.algebra().elements()) {
      PointSet a = rc.points_of(x);
      PointSet b = rc.points_of(y);
      bool by_interior = (a & ~space.interior(b)) == 0;
      if (nt_part(rc.contact(), x, y) != by_interior) out.ll_matches_interior = false;
    }
  }
  return out;
}

}  // namespace bca
