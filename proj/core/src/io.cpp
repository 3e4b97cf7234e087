#include "bca/io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace bca::io {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

std::string_view kind_name(Kind kind) {
  switch (kind) {
    case Kind::Algebra: return "algebra";
    case Kind::Contact: return "contact";
    case Kind::Modal: return "modal";
    case Kind::Partition: return "partition";
    case Kind::Frame: return "frame";
    case Kind::Preorder: return "preorder";
    case Kind::Map: return "map";
    case Kind::Report: return "report";
  }
  return "?";
}

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t col = 0;
};

struct Entry {
  std::string key;
  std::size_t line = 0;
  std::size_t col = 0;
  std::vector<Token> tokens;
};

struct RawDoc {
  std::size_t line = 0;
  std::vector<Entry> entries;
};

bool is_space(char c) { return c == ' ' || c == '\t'; }

[[noreturn]] void fail(const Token& t, const std::string& msg) { throw ParseError(t.line, t.col, msg); }
[[noreturn]] void fail(const Entry& e, const std::string& msg) { throw ParseError(e.line, e.col, msg); }

// Splits on whitespace outside (), [] and {}.
void tokenize(std::string_view s, std::size_t line, std::size_t col0, std::vector<Token>& out) {
  std::size_t i = 0;
  while (i < s.size()) {
    if (is_space(s[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    std::vector<char> stack;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (stack.empty() && is_space(c)) break;
      if (c == '(' || c == '[' || c == '{') {
        stack.push_back(c == '(' ? ')' : c == '[' ? ']' : '}');
      } else if (c == ')' || c == ']' || c == '}') {
        if (stack.empty() || stack.back() != c) {
          throw ParseError(line, col0 + i, std::string("unbalanced '") + c + "'");
        }
        stack.pop_back();
      }
    }
    if (!stack.empty()) throw ParseError(line, col0 + start, std::string("missing '") + stack.back() + "'");
    out.push_back(Token{std::string(s.substr(start, i - start)), line, col0 + start});
  }
}

std::vector<RawDoc> lex(std::string_view text) {
  std::vector<RawDoc> docs;
  RawDoc current;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto finish = [&] {
    if (!current.entries.empty()) docs.push_back(std::move(current));
    current = RawDoc{};
  };
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    if (auto cr = line.find('\r'); cr != std::string_view::npos) {
      throw ParseError(line_no, cr + 1, "carriage return; files must use LF line endings");
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size()) continue;
    std::string_view trimmed = line.substr(first);
    while (!trimmed.empty() && is_space(trimmed.back())) trimmed.remove_suffix(1);

    if (trimmed == "---" && first == 0) {
      finish();
      continue;
    }
    if (first > 0) {
      if (current.entries.empty()) throw ParseError(line_no, first + 1, "continuation line without a key");
      tokenize(line, line_no, 1, current.entries.back().tokens);
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, 1, "expected 'key: value'");
    std::string_view key = line.substr(0, colon);
    if (key.empty()) throw ParseError(line_no, 1, "empty key");
    if (auto sp = std::find_if(key.begin(), key.end(), is_space); sp != key.end()) {
      throw ParseError(line_no, static_cast<std::size_t>(sp - key.begin()) + 1, "whitespace in key");
    }
    if (current.entries.empty()) current.line = line_no;
    Entry entry{std::string(key), line_no, 1, {}};
    tokenize(line.substr(colon + 1), line_no, colon + 2, entry.tokens);
    current.entries.push_back(std::move(entry));
  }
  finish();
  return docs;
}

// Element parsing with column tracking. `col` is the column of text[0].

Region parse_term(const Algebra& alg, std::string_view text, std::size_t line, std::size_t col) {
  if (text.empty()) throw ParseError(line, col, "empty element");
  if (text == "0") return alg.zero();
  if (text == "1") return alg.one();
  if (int i = alg.atom_index(text); i >= 0) return alg.atom(static_cast<std::size_t>(i));
  const auto& names = alg.atom_names();
  bool single = std::all_of(names.begin(), names.end(), [](const std::string& n) { return n.size() == 1; });
  if (single && text.size() > 1) {
    Mask bits = 0;
    for (std::size_t k = 0; k < text.size(); ++k) {
      int i = alg.atom_index(text.substr(k, 1));
      if (i < 0) throw ParseError(line, col + k, "undeclared atom '" + std::string(text.substr(k, 1)) + "'");
      bits |= Mask{1} << i;
    }
    return Region{bits};
  }
  throw ParseError(line, col, "undeclared atom '" + std::string(text) + "'");
}

std::vector<std::pair<std::string_view, std::size_t>> split(std::string_view s, char sep) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size()) {
      char c = s[i];
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      if (c != sep || depth != 0) continue;
    }
    std::string_view part = s.substr(start, i - start);
    std::size_t off = start;
    while (!part.empty() && is_space(part.front())) {
      part.remove_prefix(1);
      ++off;
    }
    while (!part.empty() && is_space(part.back())) part.remove_suffix(1);
    out.emplace_back(part, off);
    start = i + 1;
  }
  return out;
}

Region parse_elem(const Algebra& alg, std::string_view text, std::size_t line, std::size_t col) {
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw ParseError(line, col, "expected '}'");
    std::string_view inner = text.substr(1, text.size() - 2);
    Mask bits = 0;
    if (std::all_of(inner.begin(), inner.end(), is_space)) return alg.zero();
    for (auto [part, off] : split(inner, ',')) {
      if (part.empty()) throw ParseError(line, col + 1 + off, "empty atom in set");
      int i = alg.atom_index(part);
      if (i < 0) throw ParseError(line, col + 1 + off, "undeclared atom '" + std::string(part) + "'");
      bits |= Mask{1} << i;
    }
    return Region{bits};
  }
  if (text.find('+') != std::string_view::npos) {
    Mask bits = 0;
    for (auto [part, off] : split(text, '+')) bits |= parse_term(alg, part, line, col + off).bits;
    return Region{bits};
  }
  return parse_term(alg, text, line, col);
}

Region parse_elem(const Algebra& alg, const Token& t) { return parse_elem(alg, t.text, t.line, t.col); }

// "x->y" style pairs: returns both halves with their columns.
struct Halves {
  std::string_view left;
  std::size_t left_col;
  std::string_view right;
  std::size_t right_col;
};

Halves split_arrow(const Token& t, std::string_view arrow) {
  std::string_view s = t.text;
  std::size_t at = s.find(arrow);
  if (at == std::string_view::npos) fail(t, "expected 'x" + std::string(arrow) + "y', got '" + t.text + "'");
  return Halves{s.substr(0, at), t.col, s.substr(at + arrow.size()), t.col + at + arrow.size()};
}

class DocReader {
 public:
  explicit DocReader(const RawDoc& raw) : raw_(raw) {
    for (const Entry& e : raw.entries) {
      if (!entries_.emplace(e.key, &e).second) fail(e, "duplicate key '" + e.key + "'");
    }
  }

  void allow(std::initializer_list<std::string_view> keys, std::string_view kind) const {
    for (const Entry& e : raw_.entries) {
      if (e.key == "kind" || e.key == "format" || e.key == "name") continue;
      if (std::find(keys.begin(), keys.end(), e.key) == keys.end()) {
        fail(e, "unknown key '" + e.key + "' in " + std::string(kind) + " document");
      }
    }
  }

  const Entry* find(std::string_view key) const {
    auto it = entries_.find(std::string(key));
    return it == entries_.end() ? nullptr : it->second;
  }

  const Entry& need(std::string_view key, std::string_view kind) const {
    if (const Entry* e = find(key)) return *e;
    throw ParseError(raw_.line, 1, std::string(kind) + " document is missing '" + std::string(key) + "'");
  }

  static const Token& single(const Entry& e) {
    if (e.tokens.size() != 1) fail(e, "'" + e.key + "' takes exactly one value");
    return e.tokens.front();
  }

  const RawDoc& raw() const { return raw_; }

 private:
  const RawDoc& raw_;
  std::map<std::string, const Entry*> entries_;
};

Algebra read_atoms(const Entry& e) {
  std::vector<std::string> names;
  for (const Token& t : e.tokens) {
    if (!is_valid_atom_name(t.text)) fail(t, "invalid name '" + t.text + "'");
    if (std::find(names.begin(), names.end(), t.text) != names.end()) fail(t, "duplicate name '" + t.text + "'");
    names.push_back(t.text);
  }
  if (names.empty()) fail(e, "'" + e.key + "' needs at least one name");
  if (names.size() > kMaxAtoms) fail(e, "at most " + std::to_string(kMaxAtoms) + " atoms are supported");
  return Algebra(std::move(names));
}

std::size_t read_atom(const Algebra& alg, std::string_view name, const Token& t, std::size_t col) {
  int i = alg.atom_index(name);
  if (i < 0) throw ParseError(t.line, col, "undeclared name '" + std::string(name) + "'");
  return static_cast<std::size_t>(i);
}

std::vector<std::pair<std::size_t, std::size_t>> read_edges(const Algebra& alg, const Entry& e,
                                                            std::string_view arrow) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const Token& t : e.tokens) {
    Halves h = split_arrow(t, arrow);
    out.emplace_back(read_atom(alg, h.left, t, h.left_col), read_atom(alg, h.right, t, h.right_col));
  }
  return out;
}

std::vector<Region> read_table(const Algebra& source, const Algebra& target, const Entry& e) {
  std::vector<std::optional<Region>> table(source.size());
  for (const Token& t : e.tokens) {
    Halves h = split_arrow(t, "->");
    Region x = parse_elem(source, h.left, t.line, h.left_col);
    Region y = parse_elem(target, h.right, t.line, h.right_col);
    if (table[x.index()]) fail(t, "second entry for " + source.format(x));
    table[x.index()] = y;
  }
  std::vector<Region> out;
  for (Region x : source.elements()) {
    if (!table[x.index()]) fail(e, "table has no entry for " + source.format(x));
    out.push_back(*table[x.index()]);
  }
  return out;
}

Partition read_partition(const Algebra& alg, const Entry& e) {
  std::vector<Region> cells;
  for (const Token& t : e.tokens) cells.push_back(parse_elem(alg, t));
  try {
    return Partition(alg, std::move(cells));
  } catch (const std::invalid_argument& ex) {
    if (e.tokens.empty()) fail(e, ex.what());
    fail(e.tokens.front(), ex.what());
  }
}

ElementSet read_grill(const Algebra& alg, const Token& t) {
  const std::string& s = t.text;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(t, "expected a grill like [^b] or [a, a+b]");
  std::string_view inner = std::string_view(s).substr(1, s.size() - 2);
  if (!inner.empty() && inner.front() == '^') {
    Region x = parse_elem(alg, inner.substr(1), t.line, t.col + 2);
    if (x == alg.one()) fail(t, "[^1] is empty and not a grill");
    return alg.coprincipal_grill(x);
  }
  ElementSet g = alg.empty_set();
  if (std::all_of(inner.begin(), inner.end(), is_space)) return g;
  for (auto [part, off] : split(inner, ',')) g.insert(parse_elem(alg, part, t.line, t.col + 1 + off));
  if (!alg.is_grill(g)) fail(t, "not a grill: " + alg.format(g));
  return g;
}

ContactRelation read_contact(const DocReader& r) {
  static constexpr std::string_view kind = "contact";
  r.allow({"algebra", "grills", "ideal", "partition", "frame", "pairs", "matrix", "builtin"}, kind);
  const Algebra alg = read_atoms(r.need("algebra", kind));

  const Entry* gen = nullptr;
  for (std::string_view key : {"grills", "ideal", "partition", "frame", "pairs", "matrix", "builtin"}) {
    if (const Entry* e = r.find(key)) {
      if (gen) {
        const Entry& later = gen->line > e->line ? *gen : *e;
        const Entry& earlier = gen->line > e->line ? *e : *gen;
        fail(later, "'" + earlier.key + "' and '" + later.key + "' both given; use exactly one");
      }
      gen = e;
    }
  }
  if (!gen) {
    throw ParseError(r.raw().line, 1,
                     "contact document needs one of grills, ideal, partition, frame, pairs, matrix, builtin");
  }

  const std::string& key = gen->key;
  if (key == "grills") {
    std::vector<ElementSet> grills;
    for (const Token& t : gen->tokens) grills.push_back(read_grill(alg, t));
    return contact_from_grills(alg, grills);
  }
  if (key == "ideal") {
    Region x = parse_elem(alg, DocReader::single(*gen));
    return ideal_extension(overlap_contact(alg), alg.down_set(x));
  }
  if (key == "partition") return contact_from_partition(read_partition(alg, *gen));
  if (key == "frame") {
    Frame frame(alg.atom_names());
    for (std::size_t i = 0; i < alg.atom_count(); ++i) frame.set(i, i);
    for (auto [u, v] : read_edges(alg, *gen, "-")) {
      frame.set(u, v);
      frame.set(v, u);
    }
    return contact_from_frame(frame);
  }
  if (key == "pairs") {
    ContactRelation c(alg);
    for (const Token& t : gen->tokens) {
      const std::string& s = t.text;
      if (s.size() < 2 || s.front() != '(' || s.back() != ')') fail(t, "expected a pair like (a,b)");
      auto parts = split(std::string_view(s).substr(1, s.size() - 2), ',');
      if (parts.size() != 2) fail(t, "a pair has two elements");
      Region x = parse_elem(alg, parts[0].first, t.line, t.col + 1 + parts[0].second);
      Region y = parse_elem(alg, parts[1].first, t.line, t.col + 1 + parts[1].second);
      c.set(x, y);
    }
    return c;
  }
  if (key == "matrix") {
    if (gen->tokens.size() != alg.size()) {
      fail(*gen, "matrix needs " + std::to_string(alg.size()) + " rows, got " + std::to_string(gen->tokens.size()));
    }
    ContactRelation c(alg);
    for (Region x : alg.elements()) {
      const Token& row = gen->tokens[x.index()];
      if (row.text.size() != alg.size()) fail(row, "row needs " + std::to_string(alg.size()) + " entries");
      for (Region y : alg.elements()) {
        char ch = row.text[y.index()];
        if (ch != '0' && ch != '1') throw ParseError(row.line, row.col + y.index(), "matrix entries are 0 or 1");
        if (ch == '1') c.set(x, y);
      }
    }
    return c;
  }
  const Token& t = DocReader::single(*gen);
  if (t.text == "overlap") return overlap_contact(alg);
  if (t.text == "largest") return largest_contact(alg);
  fail(t, "unknown builtin '" + t.text + "'; expected overlap or largest");
}

Document read_document(const RawDoc& raw) {
  DocReader r(raw);
  std::string name;
  std::optional<Body> body;
  if (const Entry* f = r.find("format")) {
    if (DocReader::single(*f).text != "1") fail(f->tokens.front(), "unsupported format '" + f->tokens.front().text + "'");
  }
  if (const Entry* n = r.find("name")) {
    for (const Token& t : n->tokens) name += (name.empty() ? "" : " ") + t.text;
  }
  const Entry& kind_entry = r.need("kind", "every");
  const Token& kind = DocReader::single(kind_entry);

  if (kind.text == "algebra") {
    r.allow({"atoms"}, kind.text);
    body = read_atoms(r.need("atoms", kind.text));
  } else if (kind.text == "contact") {
    body = read_contact(r);
  } else if (kind.text == "modal") {
    r.allow({"algebra", "table"}, kind.text);
    Algebra alg = read_atoms(r.need("algebra", kind.text));
    body = ModalOperator(alg, read_table(alg, alg, r.need("table", kind.text)));
  } else if (kind.text == "partition") {
    r.allow({"algebra", "cells"}, kind.text);
    Algebra alg = read_atoms(r.need("algebra", kind.text));
    body = read_partition(alg, r.need("cells", kind.text));
  } else if (kind.text == "frame") {
    r.allow({"worlds", "edges"}, kind.text);
    Algebra worlds = read_atoms(r.need("worlds", kind.text));
    body = Frame(worlds.atom_names(), read_edges(worlds, r.need("edges", kind.text), "-"));
  } else if (kind.text == "preorder") {
    r.allow({"points", "order"}, kind.text);
    const Entry& points = r.need("points", kind.text);
    const Entry& order = r.need("order", kind.text);
    std::vector<std::string> names;
    for (const Token& t : points.tokens) {
      if (!is_valid_atom_name(t.text)) fail(t, "invalid name '" + t.text + "'");
      if (std::find(names.begin(), names.end(), t.text) != names.end()) fail(t, "duplicate name '" + t.text + "'");
      names.push_back(t.text);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const Token& t : order.tokens) {
      Halves h = split_arrow(t, "<=");
      auto at = [&](std::string_view name, std::size_t col) {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw ParseError(t.line, col, "undeclared point '" + std::string(name) + "'");
        return static_cast<std::size_t>(it - names.begin());
      };
      pairs.emplace_back(at(h.left, h.left_col), at(h.right, h.right_col));
    }
    try {
      body = FinitePreorder(names, pairs);
    } catch (const std::invalid_argument& ex) {
      fail(order, ex.what());
    }
  } else if (kind.text == "map") {
    r.allow({"source", "target", "table"}, kind.text);
    Algebra source = read_atoms(r.need("source", kind.text));
    Algebra target = read_atoms(r.need("target", kind.text));
    body = AlgebraMap(source, target, read_table(source, target, r.need("table", kind.text)));
  } else if (kind.text == "report") {
    fail(kind, "report documents are output only");
  } else {
    fail(kind, "unknown kind '" + kind.text + "'");
  }
  return Document{std::move(name), std::move(*body)};
}

// Serialization.

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
  return out;
}

void line(std::ostringstream& os, std::string_view key, const std::string& value) {
  os << key << ':';
  if (!value.empty()) os << ' ' << value;
  os << '\n';
}

std::string table_value(const Algebra& source, const Algebra& target, const std::vector<Region>& table) {
  std::string out;
  for (Region x : source.elements()) {
    if (!out.empty()) out += ' ';
    out += source.format(x) + "->" + target.format(table[x.index()]);
  }
  return out;
}

std::string edge_value(const Frame& f, bool upper_only) {
  std::string out;
  for (std::size_t u = 0; u < f.world_count(); ++u) {
    for (std::size_t v = upper_only ? u + 1 : 0; v < f.world_count(); ++v) {
      if (!f.related(u, v)) continue;
      if (!out.empty()) out += ' ';
      out += f.worlds()[u] + "-" + f.worlds()[v];
    }
  }
  return out;
}

void write_contact(std::ostringstream& os, const ContactRelation& c, RelationForm form) {
  const Algebra& alg = c.algebra();
  line(os, "algebra", join_names(alg.atom_names()));
  if (form == RelationForm::Canonical) {
    if (c == overlap_contact(alg)) {
      line(os, "builtin", "overlap");
      return;
    }
    Frame f = atom_frame(c);
    if (f.is_reflexive() && f.is_symmetric() && contact_from_frame(f) == c) {
      line(os, "frame", edge_value(f, true));
      return;
    }
    form = RelationForm::Pairs;
  }
  std::vector<std::string> items;
  for (Region x : alg.elements()) {
    if (form == RelationForm::Matrix) {
      std::string row;
      for (Region y : alg.elements()) row += c.related(x, y) ? '1' : '0';
      items.push_back(row);
      continue;
    }
    for (Region y : c.row(x).members()) items.push_back("(" + alg.format(x) + "," + alg.format(y) + ")");
  }
  line(os, form == RelationForm::Matrix ? "matrix" : "pairs", join_names(items));
}

void write_body(std::ostringstream& os, const Document& doc, const WriteOptions& options) {
  line(os, "kind", std::string(kind_name(doc.kind())));
  if (!doc.name.empty()) line(os, "name", doc.name);
  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, Algebra>) {
          line(os, "atoms", join_names(body.atom_names()));
        } else if constexpr (std::is_same_v<T, ContactRelation>) {
          write_contact(os, body, options.relation_form);
        } else if constexpr (std::is_same_v<T, ModalOperator>) {
          line(os, "algebra", join_names(body.algebra().atom_names()));
          line(os, "table", table_value(body.algebra(), body.algebra(), body.table()));
        } else if constexpr (std::is_same_v<T, Partition>) {
          line(os, "algebra", join_names(body.algebra().atom_names()));
          std::string cells;
          for (Region p : body.cells()) cells += (cells.empty() ? "" : " ") + body.algebra().format(p);
          line(os, "cells", cells);
        } else if constexpr (std::is_same_v<T, Frame>) {
          line(os, "worlds", join_names(body.worlds()));
          line(os, "edges", edge_value(body, false));
        } else if constexpr (std::is_same_v<T, FinitePreorder>) {
          line(os, "points", join_names(body.points()));
          std::string order;
          for (std::size_t p = 0; p < body.point_count(); ++p) {
            for (std::size_t q = 0; q < body.point_count(); ++q) {
              if (p == q || !body.leq(p, q)) continue;
              order += (order.empty() ? "" : " ") + body.points()[p] + "<=" + body.points()[q];
            }
          }
          line(os, "order", order);
        } else if constexpr (std::is_same_v<T, AlgebraMap>) {
          line(os, "source", join_names(body.source().atom_names()));
          line(os, "target", join_names(body.target().atom_names()));
          line(os, "table", table_value(body.source(), body.target(), body.table()));
        } else {
          for (const auto& [k, v] : body.fields) line(os, k, v);
        }
      },
      doc.body);
}

}  // namespace

std::vector<Document> parse_documents(std::string_view text) {
  std::vector<Document> out;
  for (const RawDoc& raw : lex(text)) out.push_back(read_document(raw));
  return out;
}

Document parse_document(std::string_view text) {
  auto docs = parse_documents(text);
  if (docs.size() != 1) {
    throw ParseError(1, 1, "expected exactly one document, found " + std::to_string(docs.size()));
  }
  return std::move(docs.front());
}

Region parse_element(const Algebra& algebra, std::string_view text) { return parse_elem(algebra, text, 1, 1); }

std::string serialize(const Document& doc, const WriteOptions& options) { return serialize_documents({doc}, options); }

std::string serialize_documents(const std::vector<Document>& docs, const WriteOptions& options) {
  std::ostringstream os;
  if (options.header) os << "format: 1\n";
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (i > 0) os << "---\n";
    write_body(os, docs[i], options);
  }
  return os.str();
}

std::string render_text(const Report& report) {
  std::size_t width = 0;
  for (const auto& [k, v] : report.fields) width = std::max(width, k.size());
  std::ostringstream os;
  for (const auto& [k, v] : report.fields) {
    os << k;
    if (!v.empty()) os << std::string(width - k.size() + 2, ' ') << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace bca::io
