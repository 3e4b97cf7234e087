#include "bca/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bca/contact.hpp"
#include "bca/modal.hpp"
#include "bca/morphisms.hpp"
#include "bca/resolution.hpp"
#include "bca/search.hpp"

namespace bca::cli {

namespace {

/// Raised for a checked property that fails; maps to exit code 1.
struct PropertyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string label;
  io::Document doc;
};

std::vector<Loaded> load(const std::vector<std::string>& paths) {
  std::vector<Loaded> out;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<io::Document> docs;
    try {
      docs = io::parse_documents(buf.str());
    } catch (const io::ParseError& e) {
      throw std::invalid_argument(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                                  e.detail());
    }
    if (docs.empty()) throw std::invalid_argument(path + ": no documents");
    for (std::size_t i = 0; i < docs.size(); ++i) {
      std::string label = docs[i].name;
      if (label.empty()) label = docs.size() == 1 ? path : path + "#" + std::to_string(i + 1);
      out.push_back(Loaded{label, std::move(docs[i])});
    }
  }
  return out;
}

std::string tuple(const Algebra& alg, const std::vector<Region>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + alg.format(xs[i]);
  return out + ")";
}

void add_check(io::Report& r, const std::string& key, const Check& c, const Algebra& alg) {
  r.add(key, c.holds);
  if (!c.holds) r.add(key + ".witness", tuple(alg, c.witness));
}

void emit(std::ostream& out, const std::vector<io::Report>& reports, const std::string& format) {
  if (format == "kv") {
    std::vector<io::Document> docs;
    for (const auto& r : reports) docs.push_back(io::Document{"", r});
    out << io::serialize_documents(docs);
    return;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i > 0) out << '\n';
    out << io::render_text(reports[i]);
  }
}

// Splits "A, B & !C" style requirement lists into (name, value) pairs.
std::vector<std::pair<std::string, bool>> requirement_list(std::string_view text) {
  std::string s(text);
  for (std::string_view sym : {"∧", "&&", "¬"}) {
    for (auto at = s.find(sym); at != std::string::npos; at = s.find(sym)) {
      s.replace(at, sym.size(), sym == "¬" ? "!" : " ");
    }
  }
  std::replace_if(s.begin(), s.end(), [](char c) { return c == ',' || c == '&' || c == '(' || c == ')'; }, ' ');
  std::vector<std::pair<std::string, bool>> out;
  std::istringstream in(s);
  std::string word;
  bool negate = false;
  while (in >> word) {
    if (word == "and") continue;
    if (word == "not") {
      negate = !negate;
      continue;
    }
    while (!word.empty() && (word.front() == '!' || word.front() == '~')) {
      negate = !negate;
      word.erase(0, 1);
    }
    if (word.empty()) continue;
    out.emplace_back(word, !negate);
    negate = false;
  }
  if (out.empty()) throw std::invalid_argument("empty requirement list");
  return out;
}

io::Report axioms_report(const Loaded& l, const ContactRelation& c, const Goal& required, bool& ok) {
  io::Report r;
  r.add("document", l.label);
  const AxiomReport report = check_axioms(c);
  for (Axiom a : kAllAxioms) add_check(r, std::string(axiom_name(a)), report[a], c.algebra());
  r.add("contact_algebra", report.is_contact_algebra());
  r.add("required", format_goal(required));
  r.add("status", required.matches(report) ? "pass" : "fail");
  ok = ok && required.matches(report);
  return r;
}

bool modal_requirement(const ModalReport& report, const std::string& name) {
  if (name == "KTB") return report.is_ktb();
  if (name == "S4") return report.is_s4();
  if (name == "S5") return report.is_s5();
  for (ModalAxiom a : kAllModalAxioms) {
    if (modal_axiom_name(a) == name) return report.holds(a);
  }
  throw std::invalid_argument("unknown modal requirement '" + name + "'");
}

io::Report modal_report(const Loaded& l, const ModalOperator& d, const std::vector<std::pair<std::string, bool>>& req,
                        bool& ok) {
  io::Report r;
  r.add("document", l.label);
  const ModalReport report = check_modal_axioms(d);
  for (ModalAxiom a : kAllModalAxioms) add_check(r, std::string(modal_axiom_name(a)), report[a], d.algebra());
  r.add("KTB", report.is_ktb());
  r.add("S4", report.is_s4());
  r.add("S5", report.is_s5());
  std::string spelled;
  bool pass = true;
  for (const auto& [name, value] : req) {
    spelled += (spelled.empty() ? "" : " & ") + std::string(value ? "" : "!") + name;
    if (modal_requirement(report, name) != value) pass = false;
  }
  r.add("required", spelled);
  r.add("status", pass ? "pass" : "fail");
  ok = ok && pass;
  return r;
}

ContactRelation as_contact(const Loaded& l) {
  if (const auto* c = std::get_if<ContactRelation>(&l.doc.body)) return *c;
  if (const auto* d = std::get_if<ModalOperator>(&l.doc.body)) return contact_from_diamond(*d);
  throw std::invalid_argument(l.label + ": expected a contact or modal document, got " +
                              std::string(io::kind_name(l.doc.kind())));
}

int cmd_check(const std::vector<std::string>& files, const std::string& mode, const std::string& require,
              const std::string& format, std::ostream& out) {
  const auto docs = load(files);
  std::vector<io::Report> reports;
  bool ok = true;

  std::string m = mode;
  if (m.empty()) {
    switch (docs.front().doc.kind()) {
      case io::Kind::Modal: m = "modal"; break;
      case io::Kind::Map: m = "p-morphism"; break;
      default: m = "axioms";
    }
  }

  if (m == "axioms") {
    const Goal required = parse_goal(require.empty() ? "C0 & C1 & C2 & C3 & C4 & C4c" : require);
    for (const auto& l : docs) {
      const auto& c = io::body_as<ContactRelation>(l.doc, io::Kind::Contact);
      reports.push_back(axioms_report(l, c, required, ok));
    }
  } else if (m == "modal") {
    const auto req = requirement_list(require.empty() ? "KTB" : require);
    for (const auto& l : docs) reports.push_back(modal_report(l, io::body_as<ModalOperator>(l.doc, io::Kind::Modal), req, ok));
  } else {
    if (docs.size() != 3) {
      throw std::invalid_argument("--p-morphism needs a map document followed by two contact or modal documents");
    }
    const auto& h = io::body_as<AlgebraMap>(docs[0].doc, io::Kind::Map);
    const ContactRelation c1 = as_contact(docs[1]);
    const ContactRelation c2 = as_contact(docs[2]);
    const PMorphismReport p = is_p_morphism(h, c1, c2);
    io::Report r;
    r.add("map", docs[0].label);
    r.add("source", docs[1].label);
    r.add("target", docs[2].label);
    add_check(r, "P1", p.p1, h.source());
    r.add("P2", p.p2.holds);
    if (!p.p2.holds) {
      r.add("P2.witness", "(" + h.source().format(p.p2.witness[0]) + ", " + h.target().format(p.p2.witness[1]) + ")");
    }
    r.add("p_morphism", p.holds());
    if (check_axioms(c1).holds(Axiom::C4c) && check_axioms(c2).holds(Axiom::C4c)) {
      const CommutationReport cm = commutes_with_m(h, c1, c2);
      r.add("commutes_with_m", cm.commutes.holds);
      if (!cm.commutes.holds) r.add("commutes_with_m.witness", tuple(h.source(), cm.commutes.witness));
    }
    r.add("status", p.holds() ? "pass" : "fail");
    ok = p.holds();
    reports.push_back(std::move(r));
  }
  emit(out, reports, format);
  return ok ? kOk : kFails;
}

io::WriteOptions write_options(const std::string& form) {
  io::WriteOptions o;
  if (form == "pairs") o.relation_form = io::RelationForm::Pairs;
  if (form == "matrix") o.relation_form = io::RelationForm::Matrix;
  return o;
}

std::string violation(const std::string& label, const AxiomViolation& e) {
  return label + ": " + e.axiom() + " fails: " + e.what();
}

int cmd_derive(const std::vector<std::string>& files, std::ostream& out) {
  std::vector<io::Document> docs;
  for (const auto& l : load(files)) {
    const auto& c = io::body_as<ContactRelation>(l.doc, io::Kind::Contact);
    try {
      docs.push_back(io::Document{l.doc.name, derive_m(c)});
    } catch (const AxiomViolation& e) {
      throw PropertyFailure(violation(l.label, e));
    }
  }
  out << io::serialize_documents(docs);
  return kOk;
}

int cmd_convert(const std::vector<std::string>& files, const std::string& form, std::ostream& out) {
  std::vector<io::Document> docs;
  for (const auto& l : load(files)) {
    if (const auto* d = std::get_if<ModalOperator>(&l.doc.body)) {
      try {
        docs.push_back(io::Document{l.doc.name, contact_from_diamond(*d)});
      } catch (const AxiomViolation& e) {
        throw PropertyFailure(violation(l.label, e));
      }
    } else {
      docs.push_back(l.doc);
    }
  }
  out << io::serialize_documents(docs, write_options(form));
  return kOk;
}

int cmd_embed(const std::vector<std::string>& files, const std::string& format, std::ostream& out) {
  std::vector<io::Document> docs;
  std::vector<io::Report> reports;
  bool ok = true;
  for (const auto& l : load(files)) {
    std::optional<ModalOperator> d;
    try {
      if (const auto* c = std::get_if<ContactRelation>(&l.doc.body)) {
        d = derive_m(*c);
      } else {
        d = io::body_as<ModalOperator>(l.doc, io::Kind::Modal);
      }
      const S5Embedding e = s5_embedding(*d);
      const std::string base = l.doc.name.empty() ? "" : l.doc.name + ".";
      docs.push_back(io::Document{base + "frame", e.frame});
      docs.push_back(io::Document{base + "classes", e.classes});
      docs.push_back(io::Document{base + "stone", e.stone});
      io::Report r;
      r.add("document", l.label);
      r.add("frame_is_equivalence", e.frame_is_equivalence);
      r.add("relational_equals_partition", e.relational_equals_partition);
      r.add("stone_is_injective_homomorphism", e.stone_is_injective_homomorphism);
      r.add("contact_preserved", e.contact_preserved);
      r.add("status", e.holds() ? "pass" : "fail");
      ok = ok && e.holds();
      reports.push_back(std::move(r));
    } catch (const AxiomViolation& e) {
      throw PropertyFailure(violation(l.label, e));
    }
  }
  if (format == "kv") {
    for (auto& r : reports) docs.push_back(io::Document{"", std::move(r)});
    out << io::serialize_documents(docs);
  } else {
    out << io::serialize_documents(docs) << '\n';
    emit(out, reports, format);
  }
  return ok ? kOk : kFails;
}

int cmd_reproduce(const std::vector<std::string>& ids, const std::string& format, std::ostream& out,
                  std::ostream& err) {
  std::vector<std::string> list = ids;
  if (list.size() == 1 && list.front() == "all") list = example_ids();
  std::vector<io::Report> reports;
  std::optional<std::string> first;
  for (const auto& id : list) {
    Reproduction r = reproduce(id);
    if (r.divergence && !first) first = id + ": " + *r.divergence;
    reports.push_back(std::move(r.report));
  }
  emit(out, reports, format);
  if (first) {
    err << "bca: first divergent value: " << *first << '\n';
    return kFails;
  }
  return kOk;
}

int cmd_search(std::size_t atoms, const std::string& goal_text, std::size_t bound, const std::string& space_text,
               const std::string& format, std::ostream& out) {
  if (bound > 5) throw std::invalid_argument("--bound is at most 5");
  if (atoms == 0) throw std::invalid_argument("--atoms must be at least 1");
  if (atoms > bound) {
    throw std::invalid_argument("--atoms " + std::to_string(atoms) + " exceeds the bound " + std::to_string(bound));
  }
  const Goal goal = parse_goal(goal_text);
  const auto space = parse_search_space(space_text);
  if (!space) throw std::invalid_argument("unknown search space '" + space_text + "'");
  const SearchResult result = search(atoms, goal, *space);

  io::Report r;
  r.add("goal", format_goal(goal));
  r.add("atoms", "1.." + std::to_string(atoms));
  r.add("space", space_text);
  r.add("examined", std::to_string(result.examined));
  if (!result.witness) {
    r.add("result", "none");
    emit(out, {r}, format);
    return kOk;
  }
  r.add("result", "found");
  r.add("witness_atoms", std::to_string(result.witness->contact.algebra().atom_count()));
  r.add("witness_generator", result.witness->generator);
  io::Document witness{"witness", result.witness->contact};
  if (format == "kv") {
    out << io::serialize_documents({io::Document{"", r}, witness});
  } else {
    emit(out, {r}, format);
    out << '\n' << io::serialize(witness);
  }
  return kOk;
}

io::Report describe(const Loaded& l) {
  io::Report r;
  r.add("document", l.label);
  r.add("kind", std::string(io::kind_name(l.doc.kind())));
  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, Algebra>) {
          r.add("atoms", std::to_string(body.atom_count()));
          r.add("elements", std::to_string(body.size()));
        } else if constexpr (std::is_same_v<T, ContactRelation>) {
          const Algebra& alg = body.algebra();
          const AxiomReport ax = check_axioms(body);
          for (Axiom a : kAllAxioms) add_check(r, std::string(axiom_name(a)), ax[a], alg);
          const SubordinationReport sub = subordination_report(body);
          for (std::size_t i = 0; i < sub.checks.size(); ++i) {
            add_check(r, std::string(subordination_name(static_cast<Subordination>(i))), sub.checks[i], alg);
          }
          r.add("pairs", std::to_string(body.pair_count()));
          r.add("isolated", alg.format(isolated_set(body)));
          r.add("isolated_subalgebra", isolated_subalgebra_check(body));
          if (ax.is_contact_algebra() && ax.holds(Axiom::C4c)) {
            const ModalOperator m = derive_m(body);
            std::string table;
            for (Region x : alg.elements()) table += (table.empty() ? "" : " ") + alg.format(x) + "->" + alg.format(m(x));
            r.add("m", table);
            const ImageAnalysis img = m_image_analysis(m);
            r.add("m_image", alg.format(img.image));
            r.add("m_image_subalgebra", img.is_subalgebra);
            r.add("m_S5", check_modal_axioms(m).is_s5());
          }
        } else if constexpr (std::is_same_v<T, ModalOperator>) {
          const ModalReport mr = check_modal_axioms(body);
          for (ModalAxiom a : kAllModalAxioms) add_check(r, std::string(modal_axiom_name(a)), mr[a], body.algebra());
          r.add("KTB", mr.is_ktb());
          r.add("S4", mr.is_s4());
          r.add("S5", mr.is_s5());
          r.add("fixed_points", body.algebra().format(fixed_points(body)));
        } else if constexpr (std::is_same_v<T, Partition>) {
          const ContactRelation c = contact_from_partition(body);
          const AxiomReport ax = check_axioms(c);
          r.add("cells", std::to_string(body.cells().size()));
          r.add("contact_algebra", ax.is_contact_algebra());
          r.add("C4c", ax.holds(Axiom::C4c));
          r.add("cell_class_bijection", cell_class_bijection(body).holds());
        } else if constexpr (std::is_same_v<T, Frame>) {
          r.add("reflexive", body.is_reflexive());
          r.add("symmetric", body.is_symmetric());
          r.add("transitive", body.is_transitive());
          r.add("components", std::to_string(body.components().size()));
        } else if constexpr (std::is_same_v<T, FinitePreorder>) {
          const RegularClosedAlgebra rc(body);
          r.add("regular_closed_sets", std::to_string(rc.size()));
          r.add("rc_atoms", std::to_string(rc.atoms().size()));
          r.add("C4c", check_axioms(rc.contact()).holds(Axiom::C4c));
        } else if constexpr (std::is_same_v<T, AlgebraMap>) {
          r.add("homomorphism", is_homomorphism(body));
          r.add("injective", is_injective(body));
        }
      },
      l.doc.body);
  return r;
}

int cmd_report(const std::vector<std::string>& files, const std::string& format, std::ostream& out) {
  std::vector<io::Report> reports;
  for (const auto& l : load(files)) reports.push_back(describe(l));
  emit(out, reports, format);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Boolean contact algebras: checks, constructions and model search", "bca"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report form")->check(CLI::IsMember({"text", "kv"}));
  app.fallthrough();

  std::vector<std::string> files;
  std::string require;
  bool axioms = false, modal = false, pmorph = false;
  auto* check = app.add_subcommand("check", "Check contact axioms, modal axioms or the p-morphism conditions");
  check->add_option("files", files, "Input documents")->required()->check(CLI::ExistingFile);
  auto* f_ax = check->add_flag("--axioms", axioms, "Contact axioms (default C0-C4, C4c)");
  auto* f_mo = check->add_flag("--modal", modal, "Modal axioms (default KTB)");
  auto* f_pm = check->add_flag("--p-morphism", pmorph, "Map, then source and target structures");
  f_ax->excludes(f_mo)->excludes(f_pm);
  f_mo->excludes(f_pm);
  check->add_option("--require", require, "Required profile, e.g. \"C4c & !C=O\" or \"S5\"");

  std::string form = "canonical";
  auto* derive = app.add_subcommand("derive", "Contact document to the modal document of m");
  derive->add_option("files", files)->required()->check(CLI::ExistingFile);
  auto* convert = app.add_subcommand("convert", "Modal document to its contact; other kinds are canonicalized");
  convert->add_option("files", files)->required()->check(CLI::ExistingFile);
  convert->add_option("--form", form, "Contact output form")->check(CLI::IsMember({"canonical", "pairs", "matrix"}));

  auto* embed = app.add_subcommand("embed", "S5 embedding into a resolution algebra");
  embed->add_option("files", files)->required()->check(CLI::ExistingFile);

  std::vector<std::string> ids;
  auto* repro = app.add_subcommand("reproduce", "Rebuild a worked example and compare its published values");
  repro->add_option("example", ids, "fig1 fig2 fig3 branch-<n> independence collapse, or all")->required();

  std::size_t atoms = 0, bound = 4;
  std::string goal, space = "all";
  auto* srch = app.add_subcommand("search", "First candidate contact matching an axiom profile");
  srch->add_option("--atoms", atoms, "Search 1..n atoms")->required();
  srch->add_option("--goal", goal, "Profile, e.g. \"C4c & !(C=O)\"")->required();
  srch->add_option("--bound", bound, "Largest permitted --atoms")->capture_default_str();
  srch->add_option("--space", space, "all, grills or frames")->capture_default_str();

  auto* rep = app.add_subcommand("report", "Describe documents");
  rep->add_option("files", files)->required()->check(CLI::ExistingFile);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "bca: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*check) {
      std::string mode = axioms ? "axioms" : modal ? "modal" : pmorph ? "p-morphism" : "";
      return cmd_check(files, mode, require, format, out);
    }
    if (*derive) return cmd_derive(files, out);
    if (*convert) return cmd_convert(files, form, out);
    if (*embed) return cmd_embed(files, format, out);
    if (*repro) return cmd_reproduce(ids, format, out, err);
    if (*srch) return cmd_search(atoms, goal, bound, space, format, out);
    if (*rep) return cmd_report(files, format, out);
  } catch (const PropertyFailure& e) {
    err << "bca: " << e.what() << '\n';
    return kFails;
  } catch (const AxiomViolation& e) {
    err << "bca: " << e.axiom() << " fails: " << e.what() << '\n';
    return kFails;
  } catch (const std::invalid_argument& e) {
    err << "bca: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace bca::cli
