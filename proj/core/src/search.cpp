#include "bca/search.hpp"

#include <stdexcept>

namespace bca {

bool Goal::matches(const AxiomReport& report) const {
  for (const GoalLiteral& lit : literals) {
    if (report.holds(lit.axiom) != lit.value) return false;
  }
  return true;
}

namespace {

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

void skip_space(std::string_view& s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
}

// Consumes a conjunction symbol if present.
bool eat_and(std::string_view& s) {
  for (std::string_view op : {"∧", "&&", "&", ",", "and "}) {
    if (starts_with(s, op)) {
      s.remove_prefix(op.size());
      return true;
    }
  }
  return false;
}

bool eat_not(std::string_view& s) {
  for (std::string_view op : {"¬", "!", "~", "not "}) {
    if (starts_with(s, op)) {
      s.remove_prefix(op.size());
      return true;
    }
  }
  return false;
}

}  // namespace

Goal parse_goal(std::string_view text) {
  Goal goal;
  std::string_view s = text;
  skip_space(s);
  if (s.empty()) throw std::invalid_argument("empty goal");
  while (true) {
    bool value = true;
    skip_space(s);
    while (eat_not(s)) {
      value = !value;
      skip_space(s);
    }
    bool paren = !s.empty() && s.front() == '(';
    if (paren) s.remove_prefix(1);
    skip_space(s);
    std::size_t len = 0;
    while (len < s.size() && s[len] != ' ' && s[len] != '\t' && s[len] != ')' && s[len] != ',' && s[len] != '&' &&
           !starts_with(s.substr(len), "∧")) {
      ++len;
    }
    std::string_view name = s.substr(0, len);
    auto axiom = parse_axiom_name(name);
    if (!axiom) throw std::invalid_argument("unknown axiom '" + std::string(name) + "' in goal");
    s.remove_prefix(len);
    skip_space(s);
    if (paren) {
      if (s.empty() || s.front() != ')') throw std::invalid_argument("missing ')' in goal");
      s.remove_prefix(1);
      skip_space(s);
    }
    goal.literals.push_back(GoalLiteral{*axiom, value});
    if (s.empty()) break;
    if (!eat_and(s)) throw std::invalid_argument("expected a conjunction in goal at '" + std::string(s) + "'");
  }
  return goal;
}

std::string format_goal(const Goal& goal) {
  std::string out;
  for (const GoalLiteral& lit : goal.literals) {
    if (!out.empty()) out += " & ";
    if (!lit.value) out += "!";
    out += axiom_name(lit.axiom);
  }
  return out;
}

std::optional<SearchSpace> parse_search_space(std::string_view text) {
  if (text == "all") return SearchSpace::All;
  if (text == "grills") return SearchSpace::Grills;
  if (text == "frames") return SearchSpace::Frames;
  return std::nullopt;
}

Algebra letter_algebra(std::size_t n) {
  if (n == 0 || n > 26) throw std::invalid_argument("atom count must be between 1 and 26");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return Algebra(std::move(names));
}

std::vector<Candidate> candidate_contacts(const Algebra& algebra, SearchSpace space) {
  std::vector<Candidate> out;
  if (space != SearchSpace::Frames) {
    // Grill g ranges over every element but 1. Bits are chosen from the
    // highest g down, 0 before 1, which visits subsets in increasing mask order.
    const std::size_t k = algebra.size() - 1;
    std::vector<Region> chosen;
    auto recurse = [&](auto& self, std::size_t i) -> void {
      if (i == 0) {
        std::vector<ElementSet> grills;
        std::string gen = "grills:";
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
          grills.push_back(algebra.coprincipal_grill(*it));
          gen += " [^" + algebra.format(*it) + "]";
        }
        out.push_back(Candidate{gen, contact_from_grills(algebra, grills)});
        return;
      }
      Region g{static_cast<Mask>(i - 1)};
      self(self, i - 1);
      bool comparable = false;
      for (Region h : chosen) comparable = comparable || algebra.leq(g, h) || algebra.leq(h, g);
      if (comparable) return;
      chosen.push_back(g);
      self(self, i - 1);
      chosen.pop_back();
    };
    recurse(recurse, k);
  }
  if (space != SearchSpace::Grills) {
    const std::size_t n = algebra.atom_count();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      Frame frame(algebra.atom_names());
      std::string gen = "frame:";
      for (std::size_t i = 0; i < n; ++i) frame.set(i, i);
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if (!((mask >> p) & 1U)) continue;
        auto [u, v] = pairs[p];
        frame.set(u, v);
        frame.set(v, u);
        gen += " " + algebra.atom_names()[u] + "-" + algebra.atom_names()[v];
      }
      out.push_back(Candidate{gen, contact_from_frame(frame)});
    }
  }
  return out;
}

SearchResult search(std::size_t max_atoms, const Goal& goal, SearchSpace space) {
  SearchResult result;
  for (std::size_t n = 1; n <= max_atoms; ++n) {
    for (Candidate& cand : candidate_contacts(letter_algebra(n), space)) {
      ++result.examined;
      AxiomReport report = check_axioms(cand.contact);
      if (goal.matches(report)) {
        result.witness = std::move(cand);
        result.report = report;
        return result;
      }
    }
  }
  return result;
}

}  // namespace bca
