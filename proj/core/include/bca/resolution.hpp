#pragma once

// Resolution contact algebras: contact induced by a partition of the unit into
// cells, refinement of partitions, and the link to S5 operators through the
// frame of principal ultrafilters.
//
// Ultrafilters of a finite algebra are all principal, so up(a) is represented
// by its atom a throughout. The Stone map s(x) is then the atom set of x.

#include <string>
#include <vector>

#include "bca/boolean.hpp"
#include "bca/contact.hpp"
#include "bca/frame.hpp"
#include "bca/modal.hpp"
#include "bca/morphisms.hpp"

namespace bca {

class Partition {
 public:
  /// Throws std::invalid_argument unless the cells are nonzero, pairwise
  /// disjoint and join to 1. Cells are stored in canonical order.
  Partition(Algebra algebra, std::vector<Region> cells);

  /// Every atom its own cell.
  static Partition finest(const Algebra& algebra);
  /// The single cell 1.
  static Partition coarsest(const Algebra& algebra);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<Region>& cells() const { return cells_; }
  bool has_cell(Region x) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Algebra algebra_;
  std::vector<Region> cells_;
};

/// Every partition of the algebra, one per set partition of its atoms, in a
/// fixed generation order (restricted growth strings).
std::vector<Partition> all_partitions(const Algebra& algebra);

/// x C_P y iff some cell overlaps both.
ContactRelation contact_from_partition(const Partition& p);

/// Cells overlapping x, in canonical order.
std::vector<Region> cell_cover(const Partition& p, Region x);
Region cover_join(const Partition& p, Region x);
/// The operator x -> cover_join(p, x).
ModalOperator cover_operator(const Partition& p);

/// Every cell of `finer` lies below some cell of `coarser`.
bool is_finer(const Partition& finer, const Partition& coarser);
/// Finer, and some cell of `finer` is not a cell of `coarser`.
bool is_strictly_finer(const Partition& finer, const Partition& coarser);

struct RefinementStep {
  bool included = false;       // C_{i+1} within C_i
  bool proper = false;         // and the inclusion is proper
  bool strictly_finer = false;
};

struct RefinementReport {
  std::vector<RefinementStep> steps;
  /// Overlap is contained in every C_i.
  bool overlap_in_all = false;
  /// Every step is included, and proper exactly at strictly finer steps.
  bool holds() const;
};

/// chain[i + 1] must be finer than chain[i]; throws std::invalid_argument
/// otherwise.
RefinementReport refinement_monotonicity(const std::vector<Partition>& chain);

/// Worlds are the atoms (standing for up(a)); a R b iff a <= D(b).
Frame ultrafilter_frame(const ModalOperator& d);

struct CellClassBijection {
  /// Equivalence classes of the ultrafilter relation, as atom masks.
  std::vector<Mask> classes;
  /// For each cell, the index of the class equal to its Stone set, or -1.
  std::vector<int> cell_to_class;
  bool relation_is_equivalence = false;
  bool injective = false;
  bool onto = false;
  bool stone_sets_disjoint = false;
  bool holds() const { return relation_is_equivalence && injective && onto && stone_sets_disjoint; }
};

/// Matches cells of P with equivalence classes of the ultrafilter frame of the
/// cover operator, through the Stone map.
CellClassBijection cell_class_bijection(const Partition& p);

struct S5Embedding {
  /// Powerset algebra whose atoms stand for the ultrafilters of the source.
  Algebra target;
  Frame frame;
  ContactRelation relational_contact;
  Partition classes;
  AlgebraMap stone;
  bool frame_is_equivalence = false;
  /// C_R equals the partition contact of the R-classes.
  bool relational_equals_partition = false;
  bool stone_is_injective_homomorphism = false;
  /// x C_D y iff s(x) C_R s(y), for every pair.
  bool contact_preserved = false;
  bool holds() const {
    return frame_is_equivalence && relational_equals_partition && stone_is_injective_homomorphism &&
           contact_preserved;
  }
};

/// Embeds (B, C_D) into a resolution algebra over the ultrafilters of B.
/// Target atoms are named "U" followed by the source atom name.
/// Throws AxiomViolation unless D is S5.
S5Embedding s5_embedding(const ModalOperator& d);

}  // namespace bca
