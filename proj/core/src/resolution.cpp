#include "bca/resolution.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bca {

Partition::Partition(Algebra algebra, std::vector<Region> cells)
    : algebra_(std::move(algebra)), cells_(std::move(cells)) {
  if (cells_.empty()) throw std::invalid_argument("partition needs at least one cell");
  Mask covered = 0;
  for (Region p : cells_) {
    algebra_.require(p);
    if (p == algebra_.zero()) throw std::invalid_argument("partition cell is zero");
    if (covered & p.bits) throw std::invalid_argument("partition cells overlap at " + algebra_.format(p));
    covered |= p.bits;
  }
  if (Region{covered} != algebra_.one()) throw std::invalid_argument("partition cells do not join to 1");
  std::sort(cells_.begin(), cells_.end());
}

Partition Partition::finest(const Algebra& algebra) { return Partition(algebra, algebra.atoms()); }

Partition Partition::coarsest(const Algebra& algebra) { return Partition(algebra, {algebra.one()}); }

bool Partition::has_cell(Region x) const { return std::binary_search(cells_.begin(), cells_.end(), x); }

std::vector<Partition> all_partitions(const Algebra& algebra) {
  const std::size_t n = algebra.atom_count();
  std::vector<Partition> out;
  // Restricted growth strings: block[0] = 0, block[i] <= 1 + max(block[0..i)).
  std::vector<std::size_t> block(n, 0);
  auto emit = [&] {
    std::size_t blocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<Region> cells(blocks);
    for (std::size_t i = 0; i < n; ++i) cells[block[i]].bits |= Mask{1} << i;
    out.emplace_back(algebra, std::move(cells));
  };
  auto recurse = [&](auto& self, std::size_t i, std::size_t max_used) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t b = 0; b <= max_used + 1; ++b) {
      block[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  if (n == 1) {
    emit();
  } else {
    recurse(recurse, 1, 0);
  }
  return out;
}

ContactRelation contact_from_partition(const Partition& p) {
  const Algebra& alg = p.algebra();
  std::vector<Mask> cover(alg.size(), 0);
  for (Region x : alg.elements()) cover[x.index()] = cover_join(p, x).bits;
  ContactRelation out(alg, [&](Region x, Region y) { return (cover[x.index()] & y.bits) != 0; });
  assert(check_axioms(out).is_contact_algebra() && check_axioms(out).holds(Axiom::C4c));
  return out;
}

std::vector<Region> cell_cover(const Partition& p, Region x) {
  p.algebra().require(x);
  std::vector<Region> out;
  for (Region cell : p.cells()) {
    if (cell.bits & x.bits) out.push_back(cell);
  }
  return out;
}

Region cover_join(const Partition& p, Region x) {
  auto cover = cell_cover(p, x);
  return p.algebra().sup(cover);
}

ModalOperator cover_operator(const Partition& p) {
  std::vector<Region> table;
  for (Region x : p.algebra().elements()) table.push_back(cover_join(p, x));
  return ModalOperator(p.algebra(), std::move(table));
}

bool is_finer(const Partition& finer, const Partition& coarser) {
  if (!(finer.algebra() == coarser.algebra())) throw std::invalid_argument("partitions of different algebras");
  return std::all_of(finer.cells().begin(), finer.cells().end(), [&](Region p) {
    return std::any_of(coarser.cells().begin(), coarser.cells().end(),
                       [&](Region q) { return (p.bits & ~q.bits) == 0; });
  });
}

bool is_strictly_finer(const Partition& finer, const Partition& coarser) {
  if (!is_finer(finer, coarser)) return false;
  return std::any_of(finer.cells().begin(), finer.cells().end(), [&](Region p) { return !coarser.has_cell(p); });
}

bool RefinementReport::holds() const {
  if (!overlap_in_all) return false;
  return std::all_of(steps.begin(), steps.end(),
                     [](const RefinementStep& s) { return s.included && s.proper == s.strictly_finer; });
}

RefinementReport refinement_monotonicity(const std::vector<Partition>& chain) {
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!is_finer(chain[i + 1], chain[i])) {
      throw std::invalid_argument("chain is not a refinement chain at step " + std::to_string(i + 1));
    }
  }
  RefinementReport report;
  report.overlap_in_all = true;
  std::vector<ContactRelation> contacts;
  for (const auto& p : chain) {
    contacts.push_back(contact_from_partition(p));
    if (!overlap_contact(p.algebra()).is_subset_of(contacts.back())) report.overlap_in_all = false;
  }
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    RefinementStep step;
    step.included = contacts[i + 1].is_subset_of(contacts[i]);
    step.proper = step.included && !(contacts[i + 1] == contacts[i]);
    step.strictly_finer = is_strictly_finer(chain[i + 1], chain[i]);
    report.steps.push_back(step);
  }
  return report;
}

Frame ultrafilter_frame(const ModalOperator& d) {
  const Algebra& alg = d.algebra();
  Frame frame(alg.atom_names());
  for (std::size_t a = 0; a < alg.atom_count(); ++a) {
    for (std::size_t b = 0; b < alg.atom_count(); ++b) {
      if (alg.leq(alg.atom(a), d(alg.atom(b)))) frame.set(a, b);
    }
  }
  assert(!check_modal_axioms(d).is_s5() || frame.is_equivalence());
  return frame;
}

CellClassBijection cell_class_bijection(const Partition& p) {
  CellClassBijection out;
  const Frame frame = ultrafilter_frame(cover_operator(p));
  out.relation_is_equivalence = frame.is_equivalence();
  out.classes = frame.components();

  Mask seen = 0;
  out.stone_sets_disjoint = true;
  for (Region cell : p.cells()) {
    // The Stone set of a cell is the set of atoms below it.
    if (seen & cell.bits) out.stone_sets_disjoint = false;
    seen |= cell.bits;
    auto it = std::find(out.classes.begin(), out.classes.end(), cell.bits);
    out.cell_to_class.push_back(it == out.classes.end() ? -1 : static_cast<int>(it - out.classes.begin()));
  }

  std::vector<bool> hit(out.classes.size(), false);
  out.injective = true;
  for (int k : out.cell_to_class) {
    if (k < 0) {
      out.injective = false;
      continue;
    }
    if (hit[static_cast<std::size_t>(k)]) out.injective = false;
    hit[static_cast<std::size_t>(k)] = true;
  }
  out.onto = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  return out;
}

S5Embedding s5_embedding(const ModalOperator& d) {
  const ModalReport report = check_modal_axioms(d);
  if (!report.is_s5()) {
    std::string failing = "Four";
    if (auto f = report.first_ktb_failure()) failing = std::string(modal_axiom_name(*f));
    throw AxiomViolation(failing, "operator is not S5: " + failing + " fails");
  }
  const Algebra& source = d.algebra();
  std::vector<std::string> names;
  for (const auto& a : source.atom_names()) names.push_back("U" + a);
  Algebra target(names);

  Frame frame(names);
  const Frame base = ultrafilter_frame(d);
  for (std::size_t a = 0; a < source.atom_count(); ++a) {
    for (std::size_t b = 0; b < source.atom_count(); ++b) frame.set(a, b, base.related(a, b));
  }

  std::vector<Region> classes;
  for (Mask m : frame.components()) classes.push_back(Region{m});

  S5Embedding out{target,
                  frame,
                  contact_from_frame(frame),
                  Partition(target, classes),
                  AlgebraMap(source, target, source.elements())};
  out.frame_is_equivalence = frame.is_equivalence();
  out.relational_equals_partition = out.relational_contact == contact_from_partition(out.classes);
  out.stone_is_injective_homomorphism = is_homomorphism(out.stone) && is_injective(out.stone);

  const ContactRelation source_contact = contact_from_diamond(d);
  out.contact_preserved = true;
  for (Region x : source.elements()) {
    for (Region y : source.elements()) {
      if (source_contact.related(x, y) != out.relational_contact.related(out.stone(x), out.stone(y))) {
        out.contact_preserved = false;
      }
    }
  }
  return out;
}

}  // namespace bca
