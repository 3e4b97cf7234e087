#include <gtest/gtest.h>

#include <random>

#include "bca/contact.hpp"
#include "bca/io.hpp"
#include "bca/modal.hpp"
#include "bca/morphisms.hpp"
#include "oracles.hpp"

using namespace bca;

namespace {

Region el(const Algebra& alg, std::string_view s) { return io::parse_element(alg, s); }

bool hom_by_definition(const AlgebraMap& h) {
  const Algebra& s = h.source();
  const Algebra& t = h.target();
  if (h(s.zero()) != t.zero() || h(s.one()) != t.one()) return false;
  for (Region x : s.elements()) {
    if (h(s.complement(x)) != t.complement(h(x))) return false;
    for (Region y : s.elements()) {
      if (h(s.meet(x, y)) != t.meet(h(x), h(y)) || h(s.join(x, y)) != t.join(h(x), h(y))) return false;
    }
  }
  return true;
}

bool p1_by_definition(const AlgebraMap& h, const ContactRelation& c1, const ContactRelation& c2) {
  for (Region x : h.source().elements()) {
    for (Region y : h.source().elements()) {
      if (c2.related(h(x), h(y)) && !c1.related(x, y)) return false;
    }
  }
  return true;
}

bool p2_by_definition(const AlgebraMap& h, const ContactRelation& c1, const ContactRelation& c2) {
  const Algebra& s = h.source();
  const Algebra& t = h.target();
  for (Region z : s.elements()) {
    for (Region y : t.elements()) {
      if (c2.related(h(z), t.complement(y))) continue;
      bool found = false;
      for (Region x : s.elements()) {
        found = found || (!c1.related(z, s.complement(x)) && t.leq(h(x), y));
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<AlgebraMap> all_homs(const Algebra& s, const Algebra& t) {
  std::vector<AlgebraMap> out;
  for (const auto& f : atom_functions(s, t)) out.push_back(AlgebraMap::from_atom_function(s, t, f));
  return out;
}

}  // namespace

TEST(Morphisms, IdentityAndBadTables) {
  const Algebra alg({"a", "b", "c"});
  const AlgebraMap id = AlgebraMap::identity(alg);
  EXPECT_TRUE(is_homomorphism(id));
  EXPECT_TRUE(is_injective(id));
  EXPECT_THROW(AlgebraMap(alg, alg, {Region{0}}), std::invalid_argument);

  // Constant 1 on nonzero elements: preserves 0 and 1 but not meets.
  std::vector<Region> table(alg.size(), alg.one());
  table[0] = alg.zero();
  EXPECT_FALSE(is_homomorphism(AlgebraMap(alg, alg, table)));

  const ContactRelation c = contact_from_grills(alg, {alg.coprincipal_grill(el(alg, "b")),
                                                      alg.coprincipal_grill(el(alg, "c"))});
  EXPECT_TRUE(is_p_morphism(id, c, c).holds());
  const CommutationReport cm = commutes_with_m(id, c, c);
  EXPECT_TRUE(cm.p_morphism);
  EXPECT_TRUE(cm.commutes.holds);
}

TEST(Morphisms, AtomFunctionCountAndCompose) {
  const Algebra s = oracle::letters(3);
  const Algebra t = oracle::letters(2);
  EXPECT_EQ(atom_functions(s, t).size(), 9u);
  const AlgebraMap h = AlgebraMap::from_atom_function(s, t, {2, 0});
  EXPECT_EQ(h(el(s, "c")), el(t, "a"));
  EXPECT_EQ(h(el(s, "b")), t.zero());
  EXPECT_THROW(compose(h, h), std::invalid_argument);
  const AlgebraMap back = AlgebraMap::from_atom_function(t, s, {0, 1, 1});
  const AlgebraMap hb = compose(h, back);
  for (Region x : s.elements()) EXPECT_EQ(hb(x), back(h(x)));
}

TEST(Morphisms, OverlapIntoFigureTwoFailsP1) {
  const Algebra alg({"a", "b", "c"});
  const ContactRelation fig2 = contact_from_grills(alg, {alg.coprincipal_grill(el(alg, "c"))});
  const PMorphismReport r = is_p_morphism(AlgebraMap::identity(alg), overlap_contact(alg), fig2);
  EXPECT_FALSE(r.p1.holds);
  EXPECT_EQ(r.p1.witness, (std::vector<Region>{el(alg, "a"), el(alg, "b")}));
  // Reported, not thrown, although m is not preserved.
  const CommutationReport cm = commutes_with_m(AlgebraMap::identity(alg), overlap_contact(alg), fig2);
  EXPECT_FALSE(cm.p_morphism);
  EXPECT_FALSE(cm.commutes.holds);
}

TEST(Morphisms, PreconditionsAreEnforced) {
  const Algebra alg({"a", "b"});
  std::vector<Region> table(alg.size(), alg.one());
  table[0] = alg.zero();
  const AlgebraMap bad(alg, alg, table);
  const ContactRelation o = overlap_contact(alg);
  EXPECT_THROW(is_p_morphism(bad, o, o), std::invalid_argument);
  ContactRelation asym = o;
  asym.set(el(alg, "a"), el(alg, "b"));
  EXPECT_THROW(is_p_morphism(AlgebraMap::identity(alg), asym, o), AxiomViolation);
  EXPECT_THROW(is_p_morphism(AlgebraMap::identity(alg), o, overlap_contact(oracle::letters(3))),
               std::invalid_argument);

  const Algebra abc({"a", "b", "c"});
  const ModalOperator id = derive_m(overlap_contact(abc));
  const ModalOperator fig2 = derive_m(contact_from_grills(abc, {abc.coprincipal_grill(el(abc, "c"))}));
  EXPECT_FALSE(commutes_with_diamond(AlgebraMap::identity(abc), id, fig2).holds);
  EXPECT_THROW(modal_hom_implies_p_morphism(AlgebraMap::identity(abc), id, fig2), std::invalid_argument);
  EXPECT_TRUE(modal_hom_implies_p_morphism(AlgebraMap::identity(abc), fig2, fig2));
}

// Homomorphisms between small powerset algebras are exactly the maps induced
// by atom functions.
TEST(MorphismsProperty, HomomorphismsAreAtomFunctionMaps) {
  for (std::size_t ns = 1; ns <= 3; ++ns) {
    for (std::size_t nt = 1; nt <= 2; ++nt) {
      const Algebra s = oracle::letters(ns);
      const Algebra t = oracle::letters(nt);
      const auto induced = all_homs(s, t);
      std::size_t count = 0;
      std::vector<Region> table(s.size());
      const std::size_t total = [&] {
        std::size_t r = 1;
        for (std::size_t i = 0; i < s.size(); ++i) r *= t.size();
        return r;
      }();
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (auto& r : table) {
          r = Region{static_cast<Mask>(rest % t.size())};
          rest /= t.size();
        }
        const AlgebraMap h(s, t, table);
        const bool hom = hom_by_definition(h);
        EXPECT_EQ(is_homomorphism(h), hom);
        if (hom) {
          ++count;
          EXPECT_NE(std::find(induced.begin(), induced.end(), h), induced.end());
        }
      }
      EXPECT_EQ(count, induced.size());
    }
  }
}

// P1, P2 against the definitions; for p-morphisms m commutes; p-morphisms are
// exactly the modal homomorphisms for the derived operators.
TEST(MorphismsProperty, PMorphismsAgainstDefinitionAndModalHoms) {
  std::size_t p_count = 0, non_p = 0;
  for (std::size_t ns = 1; ns <= 3; ++ns) {
    for (std::size_t nt = 1; nt <= 3; ++nt) {
      const Algebra s = oracle::letters(ns);
      const Algebra t = oracle::letters(nt);
      const auto homs = all_homs(s, t);
      for (const auto& c1 : oracle::all_frame_contacts(s)) {
        const ModalOperator m1 = derive_m(c1);
        for (const auto& c2 : oracle::all_frame_contacts(t)) {
          const ModalOperator m2 = derive_m(c2);
          for (const auto& h : homs) {
            const PMorphismReport r = is_p_morphism(h, c1, c2);
            EXPECT_EQ(r.p1.holds, p1_by_definition(h, c1, c2));
            EXPECT_EQ(r.p2.holds, p2_by_definition(h, c1, c2));
            const bool modal_hom = commutes_with_diamond(h, m1, m2).holds;
            EXPECT_EQ(r.holds(), modal_hom);
            const CommutationReport cm = commutes_with_m(h, c1, c2);
            EXPECT_EQ(cm.p_morphism, r.holds());
            if (r.holds()) {
              ++p_count;
              EXPECT_TRUE(cm.commutes.holds);
            } else {
              ++non_p;
            }
            if (modal_hom) EXPECT_TRUE(modal_hom_implies_p_morphism(h, m1, m2));
          }
        }
      }
    }
  }
  EXPECT_GT(p_count, 50u);
  EXPECT_GT(non_p, 50u);
}

TEST(MorphismsProperty, PMorphismsCompose) {
  std::mt19937 rng(3);
  std::vector<std::pair<Algebra, std::vector<ContactRelation>>> objects;
  for (std::size_t n = 1; n <= 3; ++n) {
    const Algebra alg = oracle::letters(n);
    objects.emplace_back(alg, oracle::all_frame_contacts(alg));
  }
  std::uniform_int_distribution<std::size_t> pick_obj(0, objects.size() - 1);
  std::size_t composed = 0;
  for (int trial = 0; trial < 3000 && composed < 200; ++trial) {
    const auto& [a1, cs1] = objects[pick_obj(rng)];
    const auto& [a2, cs2] = objects[pick_obj(rng)];
    const auto& [a3, cs3] = objects[pick_obj(rng)];
    const auto& c1 = cs1[rng() % cs1.size()];
    const auto& c2 = cs2[rng() % cs2.size()];
    const auto& c3 = cs3[rng() % cs3.size()];
    const auto f = all_homs(a1, a2);
    const auto g = all_homs(a2, a3);
    const AlgebraMap& h1 = f[rng() % f.size()];
    const AlgebraMap& h2 = g[rng() % g.size()];
    if (!is_p_morphism(h1, c1, c2).holds() || !is_p_morphism(h2, c2, c3).holds()) continue;
    ++composed;
    EXPECT_TRUE(is_p_morphism(compose(h1, h2), c1, c3).holds());
  }
  EXPECT_GT(composed, 20u);
}

// Object-level round trips between contact and KTB presentations.
TEST(MorphismsProperty, ObjectRoundTrips) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Algebra alg = oracle::letters(n);
    for (const auto& c : oracle::all_frame_contacts(alg)) EXPECT_EQ(contact_from_diamond(derive_m(c)), c);
    for (const auto& d : oracle::all_ktb(alg)) EXPECT_EQ(derive_m(contact_from_diamond(d)), d);
  }
}
