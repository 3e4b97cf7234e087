// Acceptance run: one PASS/FAIL line per criterion, with detail lines under
// failures. Exit status 1 if any criterion fails.

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bca/alexandroff.hpp"
#include "bca/cli.hpp"
#include "bca/contact.hpp"
#include "bca/io.hpp"
#include "bca/modal.hpp"
#include "bca/morphisms.hpp"
#include "bca/resolution.hpp"
#include "bca/search.hpp"
#include "oracles.hpp"

using namespace bca;

namespace {

class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) notes_.push_back(what);
  }
  void equal(const std::string& what, const std::string& expected, const std::string& actual) {
    if (expected != actual) notes_.push_back(what + ": expected " + expected + ", got " + actual);
  }
  void note(const std::string& what) { extra_.push_back(what); }
  bool passed() const { return notes_.empty(); }
  const std::vector<std::string>& failures() const { return notes_; }
  const std::vector<std::string>& extra() const { return extra_; }

 private:
  std::vector<std::string> notes_;
  std::vector<std::string> extra_;
};

const Algebra kAbc({"a", "b", "c"});

Region el(const Algebra& alg, std::string_view s) { return io::parse_element(alg, s); }

ContactRelation grills(const Algebra& alg, std::initializer_list<std::string_view> below) {
  std::vector<ElementSet> gs;
  for (auto g : below) gs.push_back(alg.coprincipal_grill(el(alg, g)));
  return contact_from_grills(alg, gs);
}

std::string overlap_form(const ContactRelation& c, Region x) {
  auto y = overlap_generator(c.algebra(), c.contacts_of(x));
  return y ? "O(" + c.algebra().format(*y) + ")" : "none";
}

// Criterion 4 population.
std::vector<ContactRelation> frame_population() {
  std::vector<ContactRelation> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& c : oracle::all_frame_contacts(oracle::letters(n))) out.push_back(std::move(c));
  }
  return out;
}

std::vector<ModalOperator> ktb_population() {
  std::vector<ModalOperator> out = oracle::all_ktb_brute_force_n2();
  for (auto& d : oracle::all_ktb(oracle::letters(3))) out.push_back(std::move(d));
  return out;
}

void figure_one(Criterion& k) {
  const ContactRelation c = grills(kAbc, {"b", "c"});
  for (const char* x : {"a", "a+b", "a+c", "b+c"}) k.equal("C(" + std::string(x) + ")", "O(1)", overlap_form(c, el(kAbc, x)));
  k.equal("C(b)", "O(a+b)", overlap_form(c, el(kAbc, "b")));
  k.equal("C(c)", "O(b+c)", overlap_form(c, el(kAbc, "c")));
  const ModalOperator m = derive_m(c);
  k.equal("m(b)", "a+b", kAbc.format(m(el(kAbc, "b"))));
  k.equal("m(m(b))", "1", kAbc.format(m(m(el(kAbc, "b")))));
  const ImageAnalysis img = m_image_analysis(m);
  k.equal("m[B]", "{0, a+b, b+c, 1}", kAbc.format(img.image));
  const Region meet = kAbc.meet(el(kAbc, "a+b"), el(kAbc, "b+c"));
  k.equal("a+b * b+c", "b", kAbc.format(meet));
  k.expect(!img.image.contains(meet), "b lies in m[B]");
  k.expect(!img.closed_under_meet, "m[B] closed under meet");
  if (!k.passed()) {
    k.note("C(a) = O(1) puts c in contact with a, so by symmetry a lies in C(c); O(b+c) excludes a.");
    k.note("computed m: " + [&] {
      std::string s;
      for (Region x : kAbc.elements()) s += (s.empty() ? "" : ", ") + kAbc.format(x) + "->" + kAbc.format(m(x));
      return s;
    }());
  }
}

void figure_two(Criterion& k) {
  const ContactRelation c = grills(kAbc, {"c"});
  const ModalOperator m = derive_m(c);
  auto mv = [&](std::string_view x) { return kAbc.format(m(el(kAbc, x))); };
  k.equal("m(c)", "c", mv("c"));
  for (const char* x : {"a", "b", "a+b"}) k.equal("m(" + std::string(x) + ")", "a+b", mv(x));
  for (const char* x : {"a+c", "b+c"}) k.equal("m(" + std::string(x) + ")", "1", mv(x));
  const Region a = el(kAbc, "a"), b = el(kAbc, "b");
  k.equal("-m(a)", "c", kAbc.format(kAbc.complement(m(a))));
  k.equal("m(-a)", "1", kAbc.format(m(kAbc.complement(a))));
  k.equal("m(a*b)", "0", kAbc.format(m(kAbc.meet(a, b))));
  k.equal("m(a)*m(b)", "a+b", kAbc.format(kAbc.meet(m(a), m(b))));
  const ImageAnalysis img = m_image_analysis(m);
  ElementSet expected = kAbc.empty_set();
  for (const char* x : {"0", "c", "a+b", "1"}) expected.insert(el(kAbc, x));
  k.equal("m[B]", kAbc.format(expected), kAbc.format(img.image));
  k.expect(img.is_subalgebra, "m[B] is not a subalgebra");
  k.expect(c == contact_from_partition(Partition(kAbc, {el(kAbc, "a+b"), el(kAbc, "c")})), "C differs from C_P");
}

void figure_three(Criterion& k) {
  const ModalOperator m = derive_m(grills(kAbc, {"b+c"}));
  for (Region x : kAbc.elements()) k.equal("m(" + kAbc.format(x) + ")", kAbc.format(x), kAbc.format(m(x)));
  k.equal("fixed points", "8", std::to_string(fixed_points(m).size()));
}

void round_trips(Criterion& k) {
  std::size_t contacts = 0, ops = 0;
  for (const auto& c : frame_population()) {
    ++contacts;
    k.expect(contact_from_diamond(derive_m(c)) == c, "contact round trip fails on " + io::serialize({"", c}));
  }
  const auto n2 = oracle::all_ktb_brute_force_n2();
  k.equal("KTB operators on 2 atoms", "2", std::to_string(n2.size()));
  for (const auto& d : ktb_population()) {
    ++ops;
    k.expect(derive_m(contact_from_diamond(d)) == d, "operator round trip fails on " + io::serialize({"", d}));
  }
  k.note(std::to_string(contacts) + " contacts, " + std::to_string(ops) + " KTB operators");
}

void lemma_suite(Criterion& k) {
  for (const auto& c : frame_population()) {
    const Algebra& alg = c.algebra();
    const ModalOperator m = derive_m(c);
    k.expect(m(alg.zero()) == alg.zero(), "m(0) != 0");
    for (Region x : alg.elements()) {
      Mask by_atoms = 0;
      for (std::size_t i = 0; i < alg.atom_count(); ++i) {
        if ((x.bits >> i) & 1U) by_atoms |= m(alg.atom(i)).bits;
      }
      k.expect(m(x).bits == by_atoms, "m not atom-determined at " + alg.format(x));
      k.expect(nt_part(c, x, m(x)), "not x << m(x) at " + alg.format(x));
      for (Region y : alg.elements()) {
        k.expect(alg.leq(m(x), alg.complement(y)) == alg.leq(m(y), alg.complement(x)),
                 "symmetry law fails at " + alg.format(x) + ", " + alg.format(y));
      }
    }
  }
}

void collapse(Criterion& k) {
  const Goal goal = parse_goal("C4c & E_down & !C=O");
  std::size_t examined = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const Algebra alg = oracle::letters(n);
    std::vector<ContactRelation> all = oracle::all_grill_contacts(alg);
    for (auto& c : oracle::all_frame_contacts(alg)) all.push_back(std::move(c));
    for (const auto& c : all) {
      ++examined;
      if (goal.matches(check_axioms(c))) k.expect(false, "collapse counterexample: " + io::serialize({"", c}));
    }
  }
  k.expect(!search(3, goal).witness, "search reports a collapse counterexample");
  const SearchResult indep = search(2, parse_goal("C4c & !C=O"));
  k.expect(indep.witness.has_value(), "no independence witness at n <= 2");
  if (indep.witness) {
    k.expect(indep.witness->contact == largest_contact(oracle::letters(2)), "witness is not the largest contact on 2 atoms");
  }
  k.note(std::to_string(examined) + " unpruned candidates examined");
}

void resolution(Criterion& k) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Algebra alg = oracle::letters(n);
    for (const auto& p : all_partitions(alg)) {
      const ContactRelation c = contact_from_partition(p);
      const AxiomReport r = check_axioms(c);
      k.expect(r.is_contact_algebra() && r.holds(Axiom::C4c) && oracle::c4c_by_families(c), "C_P fails C0-C4c");
      const ModalOperator m = derive_m(c);
      for (Region x : alg.elements()) {
        k.expect(m(m(x)) == m(x), "m not idempotent");
        for (Region y : alg.elements()) {
          k.expect(c.related(x, y) == alg.overlaps(cover_join(p, x), cover_join(p, y)), "cover criterion fails");
        }
      }
      for (std::size_t s = 0; s < (std::size_t{1} << p.cells().size()); ++s) {
        Mask join = 0;
        for (std::size_t i = 0; i < p.cells().size(); ++i) {
          if ((s >> i) & 1U) join |= p.cells()[i].bits;
        }
        k.expect(isolated(c, Region{join}), "join of cells not isolated");
      }
    }
  }
  // The published negative example.
  const ContactRelation g = grills(kAbc, {"b", "c"});
  const ModalOperator m = derive_m(g);
  const Region a = el(kAbc, "a"), c = el(kAbc, "c");
  k.expect(kAbc.overlaps(m(a), m(c)), "m(a)*m(c) = 0");
  k.expect(!g.related(a, c), "a C c holds (m(a) = " + kAbc.format(m(a)) + ", m(c) = " + kAbc.format(m(c)) + ")");
  for (Region x : kAbc.elements()) {
    for (Region y : kAbc.elements()) {
      if (x.bits < y.bits && kAbc.overlaps(m(x), m(y)) && !g.related(x, y)) {
        k.note("pair refuting the converse on this contact: (" + kAbc.format(x) + ", " + kAbc.format(y) + ")");
        return;
      }
    }
  }
}

void refinement(Criterion& k) {
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const Algebra alg = oracle::letters(n);
    const auto ps = all_partitions(alg);
    const ContactRelation o = overlap_contact(alg);
    for (const auto& p : ps) {
      const ContactRelation cp = contact_from_partition(p);
      k.expect(o.is_subset_of(cp), "overlap not inside C_P");
      for (const auto& q : ps) {
        if (!is_finer(p, q)) continue;
        ++pairs;
        const ContactRelation cq = contact_from_partition(q);
        k.expect(cp.is_subset_of(cq), "C_P not inside C_Q");
        k.expect((cp != cq) == is_strictly_finer(p, q), "properness differs from strict refinement");
        k.expect(refinement_monotonicity({q, p}).holds(), "refinement report fails");
      }
    }
  }
  k.note(std::to_string(pairs) + " refinement pairs");
}

void bijection_and_embedding(Criterion& k) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const auto& p : all_partitions(oracle::letters(n))) {
      k.expect(cell_class_bijection(p).holds(), "cell/class bijection fails");
    }
  }
  std::size_t s5 = 0;
  std::vector<ModalOperator> ops = ktb_population();
  for (const auto& c : frame_population()) ops.push_back(derive_m(c));
  for (const auto& d : ops) {
    if (!check_modal_axioms(d).is_s5()) continue;
    ++s5;
    const S5Embedding e = s5_embedding(d);
    k.expect(e.holds(), "S5 embedding fails on " + io::serialize({"", d}));
  }
  k.note(std::to_string(s5) + " S5 operators embedded");
}

void alexandroff(Criterion& k) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const BranchingExample ex = branching_example(n, 2);
    const std::string tag = "n=" + std::to_string(n) + ": ";
    k.equal(tag + "|RC|", std::to_string(std::size_t{1} << n), std::to_string(ex.rc.size()));
    if (n >= 2) {
      for (std::size_t i = 0; i < ex.rc.atoms().size(); ++i) {
        for (std::size_t j = i + 1; j < ex.rc.atoms().size(); ++j) {
          const PointSet x = ex.rc.atoms()[i], y = ex.rc.atoms()[j];
          k.expect(ex.rc.in_contact(x, y) && ex.rc.meet(x, y) == 0, tag + "branches do not touch disjointly");
        }
      }
    }
    k.expect(check_axioms(ex.rc.contact()).holds(Axiom::C4c) && oracle::c4c_by_families(ex.rc.contact()),
             tag + "C4c fails");
  }
}

void p_morphisms(Criterion& k) {
  std::size_t classified = 0, p_count = 0, modal_count = 0;
  for (std::size_t ns = 1; ns <= 3; ++ns) {
    for (std::size_t nt = 1; nt <= 3; ++nt) {
      const Algebra s = oracle::letters(ns), t = oracle::letters(nt);
      std::vector<AlgebraMap> homs;
      if (ns == nt) homs.push_back(AlgebraMap::identity(s));
      for (const auto& f : atom_functions(s, t)) homs.push_back(AlgebraMap::from_atom_function(s, t, f));
      const auto cs1 = oracle::all_frame_contacts(s);
      const auto cs2 = oracle::all_frame_contacts(t);
      for (const auto& c1 : cs1) {
        const ModalOperator m1 = derive_m(c1);
        for (const auto& c2 : cs2) {
          const ModalOperator m2 = derive_m(c2);
          for (const auto& h : homs) {
            ++classified;
            k.expect(is_homomorphism(h), "atom-function map is not a homomorphism");
            if (is_p_morphism(h, c1, c2).holds()) {
              ++p_count;
              k.expect(commutes_with_m(h, c1, c2).commutes.holds, "p-morphism does not commute with m");
            }
            if (commutes_with_diamond(h, m1, m2).holds) {
              ++modal_count;
              k.expect(modal_hom_implies_p_morphism(h, m1, m2), "modal homomorphism fails P1 or P2");
            }
          }
        }
      }
    }
  }
  k.note(std::to_string(classified) + " maps classified, " + std::to_string(p_count) + " p-morphisms, " +
         std::to_string(modal_count) + " modal homomorphisms");
}

struct Run {
  int code;
  std::string out;
  std::string err;
  bool operator==(const Run&) const = default;
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

void determinism(Criterion& k) {
  const auto fixture = [](const char* f) { return (std::filesystem::path(BCA_FIXTURE_DIR) / f).string(); };
  std::vector<std::vector<std::string>> suite = {{"reproduce", "all"}, {"--format", "kv", "reproduce", "all"}};
  for (const char* f : {"fig1.contact", "fig2.contact", "fig3.contact", "largest.contact", "asymmetric.contact",
                        "malformed.contact", "fig2.partition", "chain.preorder"}) {
    suite.push_back({"check", fixture(f)});
    suite.push_back({"--format", "kv", "check", fixture(f)});
  }
  std::vector<Run> first, second;
  for (const auto& cmd : suite) first.push_back(run_cli(cmd));
  for (const auto& cmd : suite) second.push_back(run_cli(cmd));
  for (std::size_t i = 0; i < suite.size(); ++i) {
    k.expect(first[i] == second[i], "outputs differ for command " + std::to_string(i));
    k.expect(first[i].code >= 0 && first[i].code <= 2, "exit code outside 0/1/2");
  }
  k.equal("check fig2 exit", "0", std::to_string(run_cli({"check", fixture("fig2.contact")}).code));
  k.equal("check asymmetric exit", "1", std::to_string(run_cli({"check", fixture("asymmetric.contact")}).code));
  k.equal("check malformed exit", "2", std::to_string(run_cli({"check", fixture("malformed.contact")}).code));
  k.equal("unknown verb exit", "2", std::to_string(run_cli({"frobnicate"}).code));
  k.note(std::to_string(suite.size()) + " commands run twice");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Criterion&)>>> criteria = {
      {"Figure 1 values", figure_one},
      {"Figure 2 values", figure_two},
      {"Figure 3 fixed points", figure_three},
      {"contact/operator round trips", round_trips},
      {"laws of m", lemma_suite},
      {"collapse and independence", collapse},
      {"resolution algebras", resolution},
      {"refinement monotonicity", refinement},
      {"cell/class bijection and S5 embedding", bijection_and_embedding},
      {"branching spaces", alexandroff},
      {"p-morphisms", p_morphisms},
      {"CLI determinism and exit codes", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion k;
    try {
      criteria[i].second(k);
    } catch (const std::exception& e) {
      k.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (k.passed() ? "PASS " : "FAIL ") << (i + 1) << " " << criteria[i].first << "\n";
    for (const auto& f : k.failures()) std::cout << "     - " << f << "\n";
    if (!k.passed()) {
      for (const auto& e : k.extra()) std::cout << "     . " << e << "\n";
    }
    failed += !k.passed();
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
