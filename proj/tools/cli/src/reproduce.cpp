#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "bca/alexandroff.hpp"
#include "bca/cli.hpp"
#include "bca/contact.hpp"
#include "bca/modal.hpp"
#include "bca/resolution.hpp"
#include "bca/search.hpp"

namespace bca::cli {

namespace {

std::string str(bool b) { return b ? "true" : "false"; }

class Expect {
 public:
  explicit Expect(Reproduction& r) : r_(r) {}

  void value(std::string key, const std::string& expected, const std::string& actual) {
    std::replace(key.begin(), key.end(), ' ', '_');
    r_.report.add(key, actual);
    if (expected == actual) return;
    r_.report.add(key + ".expected", expected);
    if (!r_.divergence) r_.divergence = key + " (expected " + expected + ", got " + actual + ")";
  }
  void truth(const std::string& key, bool actual, bool expected = true) { value(key, str(expected), str(actual)); }
  void info(std::string key, const std::string& value) {
    std::replace(key.begin(), key.end(), ' ', '_');
    r_.report.add(key, value);
  }

  void finish() {
    r_.report.add("status", r_.divergence ? "fail" : "pass");
    if (r_.divergence) r_.report.add("first_divergence", *r_.divergence);
  }

 private:
  Reproduction& r_;
};

Algebra abc() { return Algebra({"a", "b", "c"}); }

Region el(const Algebra& alg, std::string_view text) { return io::parse_element(alg, text); }

ContactRelation from_grills(const Algebra& alg, std::initializer_list<std::string_view> below) {
  std::vector<ElementSet> grills;
  for (auto g : below) grills.push_back(alg.coprincipal_grill(el(alg, g)));
  return contact_from_grills(alg, grills);
}

std::string overlap_form(const ContactRelation& c, Region x) {
  auto y = overlap_generator(c.algebra(), c.contacts_of(x));
  return y ? "O(" + c.algebra().format(*y) + ")" : "not of the form O(y)";
}

std::string tuple(const Algebra& alg, const std::vector<Region>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + alg.format(xs[i]);
  return out + ")";
}

void fig1(Expect& e) {
  const Algebra alg = abc();
  const ContactRelation c = from_grills(alg, {"b", "c"});
  e.info("contact", "grills [^b] [^c] on atoms a b c");
  for (const char* x : {"a", "a+b", "a+c", "b+c"}) e.value("C(" + std::string(x) + ")", "O(1)", overlap_form(c, el(alg, x)));
  e.value("C(b)", "O(a+b)", overlap_form(c, el(alg, "b")));
  e.value("C(c)", "O(b+c)", overlap_form(c, el(alg, "c")));

  const ModalOperator m = derive_m(c);
  const Region b = el(alg, "b");
  e.value("m(b)", "a+b", alg.format(m(b)));
  e.value("m(m(b))", "1", alg.format(m(m(b))));
  const ImageAnalysis img = m_image_analysis(m);
  e.value("m[B]", "{0, a+b, b+c, 1}", alg.format(img.image));
  const Region meet = alg.meet(el(alg, "a+b"), el(alg, "b+c"));
  e.value("a+b*b+c", "b", alg.format(meet));
  e.truth("a+b*b+c in m[B]", img.image.contains(meet), false);
  e.truth("m[B] closed under meet", img.closed_under_meet, false);
  e.truth("m[B] is a subalgebra", img.is_subalgebra, false);

  const Region a = el(alg, "a");
  const Region cc = el(alg, "c");
  e.truth("m(a)*m(c)!=0", alg.overlaps(m(a), m(cc)));
  e.truth("a C c", c.related(a, cc), false);

  // First pair refuting "m(x) * m(y) != 0 implies x C y", for reference.
  std::string witness = "none";
  for (Region x : alg.elements()) {
    for (Region y : alg.elements()) {
      if (witness == "none" && alg.overlaps(m(x), m(y)) && !c.related(x, y)) witness = tuple(alg, {x, y});
    }
  }
  e.info("converse counterexample", witness);
}

void fig2(Expect& e) {
  const Algebra alg = abc();
  const ContactRelation c = from_grills(alg, {"c"});
  e.info("contact", "grills [^c] on atoms a b c");
  const ModalOperator m = derive_m(c);
  auto mv = [&](std::string_view x) { return alg.format(m(el(alg, x))); };
  e.value("m(c)", "c", mv("c"));
  for (const char* x : {"a", "b", "a+b"}) e.value("m(" + std::string(x) + ")", "a+b", mv(x));
  for (const char* x : {"a+c", "b+c"}) e.value("m(" + std::string(x) + ")", "1", mv(x));
  const Region a = el(alg, "a");
  const Region b = el(alg, "b");
  e.value("-m(a)", "c", alg.format(alg.complement(m(a))));
  e.value("m(-a)", "1", alg.format(m(alg.complement(a))));
  e.value("m(a*b)", "0", alg.format(m(alg.meet(a, b))));
  e.value("m(a)*m(b)", "a+b", alg.format(alg.meet(m(a), m(b))));
  const ImageAnalysis img = m_image_analysis(m);
  e.value("m[B]", "{0, a+b, c, 1}", alg.format(img.image));
  e.truth("m[B] is a subalgebra", img.is_subalgebra);
  const Partition p(alg, {el(alg, "a+b"), el(alg, "c")});
  e.truth("C = C_P for P = {a+b, c}", c == contact_from_partition(p));
}

void fig3(Expect& e) {
  const Algebra alg = abc();
  const ContactRelation c = from_grills(alg, {"b+c"});
  e.info("contact", "grills [^b+c] on atoms a b c");
  const ModalOperator m = derive_m(c);
  for (Region x : alg.elements()) e.value("m(" + alg.format(x) + ")", alg.format(x), alg.format(m(x)));
  e.value("fixed points", "8", std::to_string(fixed_points(m).size()));
}

void branch(Expect& e, std::size_t n) {
  const BranchingExample ex = branching_example(n, 2);
  e.info("space", std::to_string(n) + " chains of 2 points over a common bottom");
  e.value("|RC|", std::to_string(std::size_t{1} << n), std::to_string(ex.rc.size()));
  e.truth("branches are the atoms", ex.branches_are_atoms);
  if (n >= 2) e.truth("distinct branches in contact with zero meet", ex.branches_touch_disjointly);
  e.truth("C4c", check_axioms(ex.rc.contact()).holds(Axiom::C4c));
  e.truth("x << y iff x within Int y", ex.ll_matches_interior);
}

void independence(Expect& e) {
  const Algebra alg({"a", "b"});
  const AxiomReport r = check_axioms(largest_contact(alg));
  e.info("contact", "largest contact on atoms a b");
  e.value("|B|", "4", std::to_string(alg.size()));
  for (Axiom a : {Axiom::C0, Axiom::C1, Axiom::C2, Axiom::C3, Axiom::C4, Axiom::C4c}) {
    e.truth(std::string(axiom_name(a)), r.holds(a));
  }
  e.truth("C=O", r.holds(Axiom::ContactEqualsOverlap), false);
  e.truth("E_down", r.holds(Axiom::EDown), false);
}

void collapse(Expect& e) {
  const SearchResult none = search(3, parse_goal("C4c & E_down & !C=O"));
  e.info("search 1", "C4c & E_down & !C=O over 1..3 atoms");
  e.info("search 1 examined", std::to_string(none.examined));
  e.value("search 1 result", "none", none.witness ? none.witness->generator : "none");

  const SearchResult found = search(2, parse_goal("C4c & !C=O"));
  e.info("search 2", "C4c & !C=O over 1..2 atoms");
  e.info("search 2 examined", std::to_string(found.examined));
  e.truth("search 2 found", found.witness.has_value());
  if (found.witness) {
    const ContactRelation& w = found.witness->contact;
    e.info("search 2 result", found.witness->generator);
    e.value("search 2 atoms", "2", std::to_string(w.algebra().atom_count()));
    e.truth("search 2 result is the largest contact", w == largest_contact(w.algebra()));
  }
}

}  // namespace

std::vector<std::string> example_ids() {
  return {"fig1", "fig2", "fig3", "branch-1", "branch-2", "branch-3", "branch-4", "independence", "collapse"};
}

Reproduction reproduce(std::string_view id) {
  Reproduction r;
  r.report.add("example", std::string(id));
  Expect e(r);
  if (id == "fig1") {
    fig1(e);
  } else if (id == "fig2") {
    fig2(e);
  } else if (id == "fig3") {
    fig3(e);
  } else if (id == "independence") {
    independence(e);
  } else if (id == "collapse") {
    collapse(e);
  } else if (id.substr(0, 7) == "branch-") {
    std::size_t n = 0;
    std::string_view digits = id.substr(7);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0 || n > 9) {
      throw std::invalid_argument("branch example needs 1 <= n <= 9, got '" + std::string(digits) + "'");
    }
    branch(e, n);
  } else {
    throw std::invalid_argument("unknown example '" + std::string(id) +
                                "'; expected fig1, fig2, fig3, branch-<n>, independence or collapse");
  }
  e.finish();
  return r;
}

}  // namespace bca::cli
