#include "semabs/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace semabs {

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols.size(); ++i)
    if (symbols[i] == name) return i;
  return std::nullopt;
}

std::string to_string(SemigroupClass c) {
  switch (c) {
    case SemigroupClass::Group: return "group";
    case SemigroupClass::Cancellative: return "cancellative";
    case SemigroupClass::General: return "general";
    case SemigroupClass::Auto: return "auto";
  }
  return "auto";
}

SemigroupClass semigroup_class_from_string(const std::string& s) {
  if (s == "group") return SemigroupClass::Group;
  if (s == "cancellative") return SemigroupClass::Cancellative;
  if (s == "general") return SemigroupClass::General;
  if (s == "auto") return SemigroupClass::Auto;
  throw Error("unknown class '" + s + "'");
}

bool Presentation::operator==(const Presentation& other) const {
  return name == other.name && generators.symbols == other.generators.symbols &&
         generators.copies == other.generators.copies &&
         relations == other.relations && declared_class == other.declared_class &&
         has_identity == other.has_identity;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void skip_blanks() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
  }
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// One logical line with comments stripped, plus its source position.
struct Line {
  std::string text;
  int line;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::string current;
  int line_no = 1;
  int start_line = 1;
  bool in_comment = false;
  auto flush = [&] {
    std::size_t a = current.find_first_not_of(" \t\r");
    if (a != std::string::npos) {
      std::size_t b = current.find_last_not_of(" \t\r");
      out.push_back({current.substr(a, b - a + 1), start_line});
    }
    current.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      ++line_no;
      start_line = line_no;
      in_comment = false;
    } else if (c == '#') {
      in_comment = true;
    } else if (!in_comment) {
      if (current.empty()) start_line = line_no;
      current += c;
    }
  }
  flush();
  return out;
}

// side := '0' | term ('+' term)*  ;  term := [coeff ['*']] name
Exponents parse_side(const std::string& text, int line, int col_base,
                     const GeneratorSet& gens) {
  Exponents v(gens.size(), 0);
  Cursor c{text};
  auto fail = [&](const std::string& msg) -> void {
    throw ParseError(msg, line, col_base + c.col - 1);
  };
  c.skip_blanks();
  if (c.done()) fail("empty relation side");
  if (c.peek() == '0') {
    c.advance();
    c.skip_blanks();
    if (!c.done()) fail("unexpected text after '0'");
    return v;
  }
  while (true) {
    c.skip_blanks();
    if (c.done()) fail("dangling '+' in relation side");
    long long coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = 0;
      while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        coeff = coeff * 10 + (c.peek() - '0');
        if (coeff > 1000000) fail("coefficient too large");
        c.advance();
      }
      c.skip_blanks();
      if (!c.done() && c.peek() == '*') {
        c.advance();
        c.skip_blanks();
      }
    }
    if (c.done() || !is_name_char(c.peek()) ||
        std::isdigit(static_cast<unsigned char>(c.peek())))
      fail("expected generator name");
    std::string name;
    while (!c.done() && is_name_char(c.peek())) {
      name += c.peek();
      c.advance();
    }
    auto idx = gens.index_of(name);
    if (!idx) fail("unknown generator '" + name + "'");
    v[*idx] += static_cast<int>(coeff);
    c.skip_blanks();
    if (c.done()) break;
    if (c.peek() != '+') fail("expected '+' between terms");
    c.advance();
  }
  return v;
}

bool same_relation(const RelationPair& a, const RelationPair& b) {
  return (a.lhs == b.lhs && a.rhs == b.rhs) || (a.lhs == b.rhs && a.rhs == b.lhs);
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::vector<std::pair<std::string, int>> relation_chunks;  // text after 'relations:'
  bool saw_generators = false;

  for (const Line& ln : split_lines(text)) {
    const std::string& s = ln.text;
    auto starts = [&](const char* kw) {
      return s.rfind(kw, 0) == 0;
    };
    if (starts("semigroup")) {
      std::string rest = s.substr(9);
      std::size_t a = rest.find_first_not_of(" \t");
      if (a == std::string::npos) throw ParseError("missing semigroup name", ln.line, 10);
      p.name = rest.substr(a);
      std::size_t b = p.name.find_last_not_of(" \t");
      p.name = p.name.substr(0, b + 1);
    } else if (starts("generators:")) {
      if (saw_generators)
        throw ParseError("duplicate generators statement", ln.line, 1);
      saw_generators = true;
      std::istringstream iss(s.substr(11));
      std::string tok;
      while (iss >> tok) {
        for (char ch : tok)
          if (!is_name_char(ch))
            throw ParseError("invalid generator name '" + tok + "'", ln.line, 1);
        if (p.generators.index_of(tok))
          throw ParseError("duplicate generator '" + tok + "'", ln.line, 1);
        p.generators.symbols.push_back(tok);
      }
      if (p.generators.symbols.empty())
        throw ParseError("empty generator list", ln.line, 1);
    } else if (starts("copies:")) {
      if (!saw_generators)
        throw ParseError("copies before generators", ln.line, 1);
      std::string rest = s.substr(7);
      std::istringstream iss(rest);
      std::string chunk;
      while (std::getline(iss, chunk, ';')) {
        auto eq = chunk.find('=');
        if (eq == std::string::npos)
          throw ParseError("copies entries must look like alias = original", ln.line, 1);
        auto trim = [](std::string t) {
          std::size_t a = t.find_first_not_of(" \t");
          if (a == std::string::npos) return std::string();
          std::size_t b = t.find_last_not_of(" \t");
          return t.substr(a, b - a + 1);
        };
        std::string alias = trim(chunk.substr(0, eq));
        std::string orig = trim(chunk.substr(eq + 1));
        if (alias.empty() || orig.empty())
          throw ParseError("copies entries must look like alias = original", ln.line, 1);
        if (!p.generators.index_of(orig))
          throw ParseError("copy of unknown generator '" + orig + "'", ln.line, 1);
        if (p.generators.index_of(alias))
          throw ParseError("alias '" + alias + "' already declared", ln.line, 1);
        p.generators.symbols.push_back(alias);
        p.generators.copies.emplace_back(alias, orig);
      }
    } else if (starts("relations:")) {
      relation_chunks.emplace_back(s.substr(10), ln.line);
    } else if (starts("class:")) {
      std::string rest = s.substr(6);
      std::size_t a = rest.find_first_not_of(" \t");
      if (a == std::string::npos) throw ParseError("missing class", ln.line, 7);
      std::size_t b = rest.find_last_not_of(" \t");
      try {
        p.declared_class = semigroup_class_from_string(rest.substr(a, b - a + 1));
      } catch (const Error& e) {
        throw ParseError(e.what(), ln.line, 7);
      }
    } else {
      throw ParseError("unrecognized statement '" + s.substr(0, 20) + "'", ln.line, 1);
    }
  }

  if (!saw_generators) throw ParseError("missing generators statement", 1, 1);

  for (const auto& [chunk, line] : relation_chunks) {
    std::istringstream iss(chunk);
    std::string rel;
    while (std::getline(iss, rel, ';')) {
      if (rel.find_first_not_of(" \t") == std::string::npos) continue;
      auto eq = rel.find('=');
      if (eq == std::string::npos)
        throw ParseError("relation needs '='", line, 1);
      if (rel.find('=', eq + 1) != std::string::npos)
        throw ParseError("relation has more than one '='", line, 1);
      RelationPair r;
      r.lhs = parse_side(rel.substr(0, eq), line, 1, p.generators);
      r.rhs = parse_side(rel.substr(eq + 1), line, 1, p.generators);
      p.relations.push_back(std::move(r));
    }
  }

  // Aliases are ordinary generators identified with their originals.
  for (const auto& [alias, orig] : p.generators.copies) {
    RelationPair r;
    r.lhs.assign(p.generators.size(), 0);
    r.rhs.assign(p.generators.size(), 0);
    r.lhs[*p.generators.index_of(alias)] = 1;
    r.rhs[*p.generators.index_of(orig)] = 1;
    if (std::none_of(p.relations.begin(), p.relations.end(),
                     [&](const RelationPair& q) { return same_relation(q, r); }))
      p.relations.push_back(std::move(r));
  }
  p.has_identity = true;  // the text format always denotes a monoid presentation
  return p;
}

Presentation normalize(const Presentation& p) {
  Presentation q = p;
  q.has_identity = true;
  const std::size_t n = q.generators.size();

  for (auto& r : q.relations) {
    if (r.lhs.size() != n || r.rhs.size() != n)
      throw PreconditionError("relation arity does not match generator count");
    for (int x : r.lhs)
      if (x < 0) throw PreconditionError("negative exponent in relation");
    for (int x : r.rhs)
      if (x < 0) throw PreconditionError("negative exponent in relation");
  }

  // Alias relations, in case the presentation was built programmatically.
  for (const auto& [alias, orig] : q.generators.copies) {
    auto ai = q.generators.index_of(alias);
    auto oi = q.generators.index_of(orig);
    if (!ai || !oi) throw PreconditionError("copy references unknown generator");
    RelationPair r;
    r.lhs.assign(n, 0);
    r.rhs.assign(n, 0);
    r.lhs[*ai] = 1;
    r.rhs[*oi] = 1;
    q.relations.push_back(std::move(r));
  }

  std::vector<RelationPair> kept;
  for (const auto& r : q.relations) {
    if (r.lhs == r.rhs) continue;  // trivial
    if (std::none_of(kept.begin(), kept.end(),
                     [&](const RelationPair& s) { return same_relation(s, r); }))
      kept.push_back(r);
  }
  q.relations = std::move(kept);
  return q;
}

IntVec relation_difference(const RelationPair& r) {
  IntVec d(r.lhs.size());
  for (std::size_t i = 0; i < r.lhs.size(); ++i) d[i] = Int(r.lhs[i]) - Int(r.rhs[i]);
  return d;
}

std::string render_side(const Exponents& v, const GeneratorSet& gens) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (v[i] != 1) out += std::to_string(v[i]);
    out += gens.symbols[i];
  }
  return out.empty() ? "0" : out;
}

std::string serialize(const Presentation& p) {
  std::ostringstream out;
  if (!p.name.empty()) out << "semigroup " << p.name << "\n";
  out << "generators:";
  std::set<std::string> alias_names;
  for (const auto& [alias, orig] : p.generators.copies) alias_names.insert(alias);
  for (const auto& s : p.generators.symbols)
    if (!alias_names.count(s)) out << " " << s;
  out << "\n";
  if (!p.generators.copies.empty()) {
    out << "copies:";
    bool first = true;
    for (const auto& [alias, orig] : p.generators.copies) {
      out << (first ? " " : "; ") << alias << " = " << orig;
      first = false;
    }
    out << "\n";
  }
  if (!p.relations.empty()) {
    out << "relations:";
    bool first = true;
    for (const auto& r : p.relations) {
      out << (first ? " " : "; ") << render_side(r.lhs, p.generators) << " = "
          << render_side(r.rhs, p.generators);
      first = false;
    }
    out << "\n";
  }
  out << "class: " << to_string(p.declared_class) << "\n";
  return out.str();
}

}  // namespace semabs
