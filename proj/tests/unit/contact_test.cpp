#include <gtest/gtest.h>

#include <functional>
#include <optional>
#include <random>

#include "bca/contact.hpp"
#include "bca/io.hpp"
#include "oracles.hpp"

using namespace bca;

namespace {

Region el(const Algebra& alg, std::string_view s) { return io::parse_element(alg, s); }

ContactRelation grills(const Algebra& alg, std::initializer_list<std::string_view> below) {
  std::vector<ElementSet> gs;
  for (auto g : below) gs.push_back(alg.coprincipal_grill(el(alg, g)));
  return contact_from_grills(alg, gs);
}

using Tuple = std::vector<Region>;

// First tuple over `arity` variables, in lexicographic mask order, for which
// `bad` holds.
std::optional<Tuple> first_violation(const Algebra& alg, std::size_t arity,
                                     const std::function<bool(const Tuple&)>& bad) {
  Tuple t(arity, alg.zero());
  const std::size_t size = alg.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= size;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = arity; i-- > 0;) {
      t[i] = Region{static_cast<Mask>(rest % size)};
      rest /= size;
    }
    if (bad(t)) return t;
  }
  return std::nullopt;
}

// Reference evaluation of every axiom straight from its definition.
std::optional<Tuple> reference_witness(const ContactRelation& c, Axiom axiom) {
  const Algebra& alg = c.algebra();
  const Mask one = alg.one().bits;
  auto C = [&](Region x, Region y) { return c.related(x, y); };
  auto leq = [](Region x, Region y) { return (x.bits & ~y.bits) == 0; };
  auto neg = [&](Region x) { return Region{static_cast<Mask>(one & ~x.bits)}; };
  auto ll = [&](Region x, Region y) { return !C(x, neg(y)); };
  auto col = [&](Region x) {
    ElementSet s = alg.empty_set();
    for (Region z : alg.elements()) {
      if (C(z, x)) s.insert(z);
    }
    return s;
  };
  switch (axiom) {
    case Axiom::C0:
      return first_violation(alg, 1, [&](const Tuple& t) { return C(alg.zero(), t[0]); });
    case Axiom::C1:
      return first_violation(alg, 2, [&](const Tuple& t) {
        return t[0].bits != 0 && leq(t[0], t[1]) && !C(t[0], t[1]);
      });
    case Axiom::C2:
      return first_violation(alg, 2, [&](const Tuple& t) { return C(t[0], t[1]) && !C(t[1], t[0]); });
    case Axiom::C3:
      return first_violation(alg, 3, [&](const Tuple& t) {
        return leq(t[0], t[1]) && C(t[2], t[0]) && !C(t[2], t[1]);
      });
    case Axiom::C4:
      return first_violation(alg, 3, [&](const Tuple& t) {
        return C(t[0], Region{static_cast<Mask>(t[1].bits | t[2].bits)}) && !C(t[0], t[1]) && !C(t[0], t[2]);
      });
    case Axiom::C4c:
      return first_violation(alg, 1, [&](const Tuple& t) {
        const ElementSet s = col(t[0]);
        for (Region y : alg.elements()) {
          if (alg.overlap_set(y) == s) return false;
        }
        return true;
      });
    case Axiom::C5:
      return first_violation(alg, 2, [&](const Tuple& t) {
        return col(t[0]).is_subset_of(col(t[1])) && !leq(t[0], t[1]);
      });
    case Axiom::C5a:
      return first_violation(alg, 1, [&](const Tuple& t) {
        if (t[0] == alg.one()) return false;
        for (Region y : alg.elements()) {
          if (y.bits != 0 && !C(t[0], y)) return false;
        }
        return true;
      });
    case Axiom::EDown:
      return first_violation(alg, 1, [&](const Tuple& t) {
        if (t[0].bits == 0) return false;
        for (Region y : alg.elements()) {
          if (y.bits != 0 && ll(y, t[0])) return false;
        }
        return true;
      });
    case Axiom::EUp:
      return first_violation(alg, 1, [&](const Tuple& t) {
        if (t[0] == alg.one()) return false;
        for (Region y : alg.elements()) {
          if (y != alg.one() && ll(t[0], y)) return false;
        }
        return true;
      });
    case Axiom::ContactEqualsOverlap:
      return first_violation(alg, 2, [&](const Tuple& t) {
        return C(t[0], t[1]) != oracle::meets(t[0].bits, t[1].bits);
      });
  }
  return std::nullopt;
}

void expect_matches_reference(const ContactRelation& c) {
  const AxiomReport r = check_axioms(c);
  for (Axiom a : kAllAxioms) {
    // The existential C4c form is only faithful once C0-C3 hold.
    if (a == Axiom::C4c && !(r.holds(Axiom::C0) && r.holds(Axiom::C1) && r.holds(Axiom::C2) && r.holds(Axiom::C3))) {
      continue;
    }
    const auto ref = reference_witness(c, a);
    EXPECT_EQ(r.holds(a), !ref.has_value()) << axiom_name(a);
    if (ref) EXPECT_EQ(r[a].witness, *ref) << axiom_name(a);
  }
}

bool c0_to_c3(const AxiomReport& r) {
  return r.holds(Axiom::C0) && r.holds(Axiom::C1) && r.holds(Axiom::C2) && r.holds(Axiom::C3);
}

}  // namespace

TEST(Contact, AxiomNamesRoundTrip) {
  for (Axiom a : kAllAxioms) EXPECT_EQ(parse_axiom_name(axiom_name(a)), a);
  EXPECT_EQ(axiom_name(Axiom::ContactEqualsOverlap), "C=O");
  EXPECT_EQ(axiom_name(Axiom::EDown), "E_down");
  EXPECT_FALSE(parse_axiom_name("C9").has_value());
}

TEST(Contact, OverlapSatisfiesEverything) {
  const Algebra alg({"a", "b", "c"});
  const ContactRelation o = overlap_contact(alg);
  const AxiomReport r = check_axioms(o);
  for (Axiom a : kAllAxioms) EXPECT_TRUE(r.holds(a)) << axiom_name(a);
  EXPECT_TRUE(o.related(el(alg, "a"), el(alg, "a+b")));
  EXPECT_FALSE(o.related(el(alg, "a"), el(alg, "b+c")));
  EXPECT_EQ(isolated_set(o), alg.full_set());
}

TEST(Contact, LargestOnFourElements) {
  const Algebra alg({"a", "b"});
  const ContactRelation l = largest_contact(alg);
  EXPECT_TRUE(l.related(el(alg, "a"), el(alg, "b")));
  EXPECT_FALSE(l.related(alg.zero(), alg.one()));
  const AxiomReport r = check_axioms(l);
  EXPECT_TRUE(r.is_contact_algebra());
  EXPECT_TRUE(r.holds(Axiom::C4c));
  EXPECT_FALSE(r.holds(Axiom::EDown));
  EXPECT_FALSE(r.holds(Axiom::ContactEqualsOverlap));
  expect_matches_reference(l);
}

TEST(Contact, TwoElementAlgebraExtensionalityIsVacuous) {
  const Algebra alg({"a"});
  const AxiomReport r = check_axioms(overlap_contact(alg));
  EXPECT_TRUE(r.holds(Axiom::EDown));
  EXPECT_TRUE(r.holds(Axiom::EUp));
  EXPECT_EQ(overlap_contact(alg), largest_contact(alg));
}

TEST(Contact, MissingSymmetricPairFailsC2) {
  const Algebra alg({"a", "b", "c"});
  ContactRelation c = overlap_contact(alg);
  c.set(el(alg, "a"), el(alg, "b"));
  const AxiomReport r = check_axioms(c);
  EXPECT_FALSE(r.holds(Axiom::C2));
  EXPECT_EQ(r[Axiom::C2].witness, (Tuple{el(alg, "a"), el(alg, "b")}));
  expect_matches_reference(c);
}

TEST(Contact, GrillExamples) {
  const Algebra alg({"a", "b", "c"});
  const ContactRelation c = grills(alg, {"b", "c"});
  EXPECT_EQ(c.contacts_of(el(alg, "b")), alg.overlap_set(el(alg, "a+b")));
  EXPECT_EQ(c.contacts_of(el(alg, "a")), alg.overlap_set(alg.one()));
  EXPECT_EQ(contact_from_grills(alg, {}), overlap_contact(alg));
  ElementSet not_grill = alg.empty_set();
  not_grill.insert(alg.one());
  EXPECT_THROW(contact_from_grills(alg, {not_grill}), std::invalid_argument);
  EXPECT_FALSE(isolated(c, el(alg, "a")));
}

TEST(Contact, IdealExtensionExamples) {
  const Algebra alg({"a", "b", "c"});
  const ContactRelation c = grills(alg, {"c"});
  EXPECT_EQ(ideal_extension(c, alg.down_set(alg.one())), c);
  ElementSet zero = alg.empty_set();
  zero.insert(alg.zero());
  EXPECT_EQ(ideal_extension(c, zero), largest_contact(alg));

  const ContactRelation o = overlap_contact(alg);
  const ContactRelation oi = ideal_extension(o, alg.down_set(el(alg, "a")));
  EXPECT_TRUE(oi.related(el(alg, "a+b"), el(alg, "c")));
  EXPECT_FALSE(oi.related(el(alg, "a"), el(alg, "c")));

  ElementSet not_ideal = alg.empty_set();
  not_ideal.insert(el(alg, "a"));
  EXPECT_THROW(ideal_extension(o, not_ideal), std::invalid_argument);
}

TEST(Contact, FrameExamples) {
  Frame id({"a", "b", "c"});
  for (std::size_t i = 0; i < 3; ++i) id.set(i, i);
  const Algebra alg = id.algebra();
  EXPECT_EQ(contact_from_frame(id), overlap_contact(alg));

  Frame ab = id;
  ab.set(0, 1);
  ab.set(1, 0);
  const ContactRelation c = contact_from_frame(ab);
  EXPECT_TRUE(c.related(el(alg, "a"), el(alg, "b")));
  EXPECT_FALSE(c.related(el(alg, "a"), el(alg, "c")));
  EXPECT_EQ(c, grills(alg, {"c"}));
  EXPECT_EQ(atom_frame(c), ab);

  Frame complete({"a", "b", "c"});
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) complete.set(i, j);
  }
  EXPECT_EQ(contact_from_frame(complete), largest_contact(alg));

  Frame directed = id;
  directed.set(0, 1);
  EXPECT_THROW(contact_from_frame(directed), std::invalid_argument);
  Frame irreflexive({"a", "b"});
  EXPECT_THROW(contact_from_frame(irreflexive), std::invalid_argument);
}

TEST(Contact, NonTangentialPartExamples) {
  const Algebra alg({"a", "b", "c"});
  const ContactRelation fig3 = grills(alg, {"b+c"});
  EXPECT_EQ(fig3, overlap_contact(alg));
  EXPECT_EQ(isolated_set(fig3).size(), 8u);
  const ContactRelation fig1 = grills(alg, {"b", "c"});
  EXPECT_TRUE(nt_part(fig1, alg.zero(), el(alg, "a")));
  EXPECT_TRUE(nt_part(fig1, el(alg, "a"), alg.one()));
  EXPECT_FALSE(nt_part(fig1, el(alg, "a"), el(alg, "a")));
}

TEST(Contact, SubordinationExamples) {
  const Algebra alg({"a", "b", "c"});
  EXPECT_TRUE(subordination_report(overlap_contact(alg)).all_hold());
  EXPECT_TRUE(subordination_report(grills(alg, {"b", "c"})).all_hold());

  // Overlap minus (a, a+b) and (a+b, a) breaks C3 and with it S4.
  ContactRelation broken = overlap_contact(alg);
  broken.set(el(alg, "a"), el(alg, "a+b"), false);
  broken.set(el(alg, "a+b"), el(alg, "a"), false);
  EXPECT_FALSE(check_axioms(broken).holds(Axiom::C3));
  const SubordinationReport s = subordination_report(broken);
  EXPECT_FALSE(s[Subordination::S4].holds);
  EXPECT_FALSE(s[Subordination::S4].witness.empty());
  EXPECT_EQ(subordination_name(Subordination::S4), "S4");
}

// Witnesses are the first violating tuple, re-derived independently.
TEST(ContactProperty, WitnessesMatchReferenceOnRandomRelations) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Algebra alg = oracle::letters(1 + trial % 3);
    const double p = 0.1 + 0.8 * ((trial * 7) % 10) / 10.0;
    expect_matches_reference(oracle::random_relation(alg, rng, p));
    expect_matches_reference(oracle::random_c0_c3(alg, rng, p / 4));
  }
}

TEST(ContactProperty, C4cFlagMatchesFamilyDefinition) {
  std::mt19937 rng(5);
  int with = 0, without = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Algebra alg = oracle::letters(1 + trial % 3);
    const ContactRelation c = oracle::random_c0_c3(alg, rng, 0.02 + 0.2 * (trial % 5) / 5.0);
    const AxiomReport r = check_axioms(c);
    ASSERT_TRUE(c0_to_c3(r));
    EXPECT_EQ(r.holds(Axiom::C4c), oracle::c4c_by_families(c)) << trial;
    (r.holds(Axiom::C4c) ? with : without) += 1;
    if (r.holds(Axiom::C4)) EXPECT_TRUE(r.holds(Axiom::C4c));

    // C4c iff every nonzero C(x) is a completely prime grill.
    bool all_cp = true;
    for (Region x : alg.elements()) {
      if (x.bits != 0) all_cp = all_cp && alg.is_cp_grill(c.contacts_of(x));
    }
    EXPECT_EQ(r.holds(Axiom::C4c), all_cp);
    if (r.is_contact_algebra()) {
      for (Region x : alg.elements()) {
        if (x.bits != 0) EXPECT_TRUE(alg.is_grill(c.contacts_of(x)));
      }
    }
  }
  // The generator has to reach both sides for the comparison to mean anything.
  EXPECT_GT(with, 10);
  EXPECT_GT(without, 10);
}

// C4c in terms of <<: if x << y for every y in J then x << inf J.
TEST(ContactProperty, C4cMatchesNonTangentialMeetForm) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const Algebra alg = oracle::letters(1 + trial % 3);
    const ContactRelation c = oracle::random_c0_c3(alg, rng, 0.03 + 0.1 * (trial % 4));
    const std::size_t size = alg.size();
    bool meet_form = true;
    for (std::size_t fam = 0; fam < (std::size_t{1} << size) && meet_form; ++fam) {
      Mask inf = alg.one().bits;
      for (std::size_t y = 0; y < size; ++y) {
        if ((fam >> y) & 1U) inf &= static_cast<Mask>(y);
      }
      for (Region x : alg.elements()) {
        bool all = true;
        for (std::size_t y = 0; y < size; ++y) {
          if ((fam >> y) & 1U) all = all && nt_part(c, x, Region{static_cast<Mask>(y)});
        }
        if (all && !nt_part(c, x, Region{inf})) meet_form = false;
      }
    }
    EXPECT_EQ(check_axioms(c).holds(Axiom::C4c), meet_form) << trial;
  }
}

TEST(ContactProperty, ConstructorsAreMonotone) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Algebra alg = oracle::letters(n);
    const ContactRelation o = overlap_contact(alg);
    const ContactRelation l = largest_contact(alg);
    for (const auto& c : oracle::all_grill_contacts(alg)) {
      EXPECT_TRUE(o.is_subset_of(c));
      EXPECT_TRUE(c.is_subset_of(l));
      for (Region g : alg.elements()) {
        const ElementSet ideal = alg.down_set(g);
        EXPECT_TRUE(c.is_subset_of(ideal_extension(c, ideal)));
      }
    }
  }
}

TEST(ContactProperty, GrillAndFrameContactsAreContactAlgebras) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Algebra alg = oracle::letters(n);
    for (const auto& c : oracle::all_grill_contacts(alg)) {
      const AxiomReport r = check_axioms(c);
      EXPECT_TRUE(r.is_contact_algebra());
      EXPECT_TRUE(r.holds(Axiom::C4c));
    }
    for (const auto& c : oracle::all_frame_contacts(alg)) {
      const AxiomReport r = check_axioms(c);
      EXPECT_TRUE(r.is_contact_algebra());
      EXPECT_TRUE(r.holds(Axiom::C4c));
      EXPECT_EQ(contact_from_frame(atom_frame(c)), c);
    }
  }
  // The library constructor agrees with the brute-force one.
  const Algebra alg = oracle::letters(3);
  EXPECT_EQ(grills(alg, {"b", "c"}), oracle::grill_contact(alg, {2, 4}));
}

// Under C4c, extensionality from below forces C = O.
TEST(ContactProperty, CollapseOverAllGrillContacts) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Algebra alg = oracle::letters(n);
    for (const auto& c : oracle::all_grill_contacts(alg)) {
      const AxiomReport r = check_axioms(c);
      if (r.holds(Axiom::C4c) && r.holds(Axiom::EDown)) {
        EXPECT_TRUE(r.holds(Axiom::ContactEqualsOverlap)) << alg.format(c.contacts_of(alg.atom(0)));
      }
    }
  }
}

TEST(ContactProperty, IsolatedRegionsOfOverlapAndLargest) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const Algebra alg = oracle::letters(n);
    EXPECT_EQ(isolated_set(overlap_contact(alg)), alg.full_set());
    ElementSet bounds = alg.empty_set();
    bounds.insert(alg.zero());
    bounds.insert(alg.one());
    EXPECT_EQ(isolated_set(largest_contact(alg)), bounds);
  }
}
