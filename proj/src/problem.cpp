#include "gkd/problem.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace gkd {

ParseError::ParseError(std::string k, std::size_t l, std::size_t c, const std::string& msg)
    : std::runtime_error(l ? "line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg : msg),
      kind(std::move(k)),
      line(l),
      col(c) {}

namespace {

struct Token {
  std::string text;
  std::size_t col;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.push_back({s.substr(start, i - start), start + 1});
  }
  return out;
}

struct Section {
  std::string name;
  Line header;  // tokens after the bracket
  std::vector<Line> body;
};

const std::vector<std::string> kOrder{"field", "units", "arrows", "compose", "cocycle", "element", "module"};

std::size_t rank_of(const std::string& name) {
  return static_cast<std::size_t>(std::find(kOrder.begin(), kOrder.end(), name) - kOrder.begin());
}

std::vector<Section> split_sections(std::istream& in) {
  std::vector<Section> out;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const auto& head = tokens.front();
    if (head.text.front() == '[') {
      auto close = head.text.find(']');
      if (close == std::string::npos || close + 1 != head.text.size())
        throw ParseError("syntax", number, head.col, "malformed section header '" + head.text + "'");
      std::string name = head.text.substr(1, close - 1);
      std::size_t r = rank_of(name);
      if (r == kOrder.size()) throw ParseError("unknown section", number, head.col, "unknown section [" + name + "]");
      if (!out.empty()) {
        std::size_t prev = rank_of(out.back().name);
        bool repeatable = name == "element" || name == "module";
        if (r < prev || (r == prev && !repeatable))
          throw ParseError("section order", number, head.col, "section [" + name + "] out of order");
      }
      tokens.erase(tokens.begin());
      out.push_back({name, {number, std::move(tokens)}, {}});
      continue;
    }
    if (out.empty()) throw ParseError("missing [field]", number, head.col, "missing [field]");
    out.back().body.push_back({number, std::move(tokens)});
  }
  if (out.empty() || out.front().name != "field") {
    std::size_t line = out.empty() ? 0 : out.front().header.number;
    throw ParseError("missing [field]", line, 1, "missing [field]");
  }
  return out;
}

long long parse_id(const Token& t, std::size_t line) {
  long long v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size() || v < 0)
    throw ParseError("syntax", line, t.col, "expected a non-negative integer id, got '" + t.text + "'");
  return v;
}

std::size_t parse_count(const Token& t, std::size_t line) { return static_cast<std::size_t>(parse_id(t, line)); }

Scalar parse_scalar(const Field& f, const Token& t, std::size_t line) {
  try {
    return f.parse(t.text);
  } catch (const AlgebraError& e) {
    throw ParseError("syntax", line, t.col, e.what());
  }
}

void expect_tokens(const Line& l, std::size_t n, const char* what) {
  if (l.tokens.size() != n) {
    std::size_t col = l.tokens.size() > n ? l.tokens[n].col : (l.tokens.empty() ? 1 : l.tokens.back().col);
    throw ParseError("syntax", l.number, col, std::string("expected ") + what);
  }
}

Field parse_field(const Section& s) {
  std::vector<Token> toks = s.header.tokens;
  std::size_t line = s.header.number;
  for (const auto& l : s.body) {
    toks.insert(toks.end(), l.tokens.begin(), l.tokens.end());
    line = l.number;
  }
  if (toks.size() == 1 && toks[0].text == "Q") return Field::rationals();
  if (toks.size() == 2 && toks[0].text == "GF") {
    std::size_t p = parse_count(toks[1], line);
    if (p > 0xffffffffULL || !is_prime(p)) throw ParseError("syntax", line, toks[1].col, "GF modulus must be prime");
    return Field::prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("syntax", line, toks.empty() ? 1 : toks[0].col, "expected 'Q' or 'GF <p>'");
}

}  // namespace

std::vector<Matrix> ModuleSpec::matrices(const Field& f, std::size_t basis_size) const {
  if (rows.size() != basis_size * dim)
    throw ParseError("syntax", line, 1,
                     "module '" + name + "' has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(basis_size * dim));
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < basis_size; ++k)
    out.push_back(Matrix::from_rows(f, dim, {rows.begin() + static_cast<std::ptrdiff_t>(k * dim),
                                             rows.begin() + static_cast<std::ptrdiff_t>((k + 1) * dim)}));
  return out;
}

std::optional<Arrow> ProblemFile::index_of(long long id) const {
  auto it = std::lower_bound(tables.ids.begin(), tables.ids.end(), id);
  if (it == tables.ids.end() || *it != id) return std::nullopt;
  return static_cast<Arrow>(it - tables.ids.begin());
}

const ModuleSpec& ProblemFile::module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return m;
  throw std::out_of_range("no module named '" + name + "'");
}

const ElementSpec& ProblemFile::element(const std::string& name) const {
  for (const auto& e : elements)
    if (e.name == name) return e;
  throw std::out_of_range("no element named '" + name + "'");
}

ProblemFile parse_problem(std::istream& in) {
  auto sections = split_sections(in);
  ProblemFile p;
  p.field = parse_field(sections[0]);
  p.cocycle = Cocycle(p.field);

  struct ArrowLine {
    long long id, src, tgt, inv;
    std::size_t line;
    std::vector<Token> toks;
  };
  std::map<long long, std::size_t> unit_lines;
  std::vector<ArrowLine> arrows;
  std::size_t i = 1;
  if (i < sections.size() && sections[i].name == "units") {
    std::vector<Line> lines{sections[i].header};
    lines.insert(lines.end(), sections[i].body.begin(), sections[i].body.end());
    for (const auto& l : lines)
      for (const auto& t : l.tokens) {
        long long id = parse_id(t, l.number);
        if (!unit_lines.emplace(id, l.number).second)
          throw ParseError("duplicate id", l.number, t.col, "duplicate id " + t.text);
      }
    ++i;
  } else {
    throw ParseError("syntax", i < sections.size() ? sections[i].header.number : 0, 1, "missing [units]");
  }
  std::set<long long> all_ids;
  for (auto& [id, line] : unit_lines) all_ids.insert(id);
  if (i < sections.size() && sections[i].name == "arrows") {
    for (const auto& l : sections[i].body) {
      expect_tokens(l, 4, "'id src tgt inv'");
      ArrowLine a{parse_id(l.tokens[0], l.number), parse_id(l.tokens[1], l.number), parse_id(l.tokens[2], l.number),
                  parse_id(l.tokens[3], l.number), l.number, l.tokens};
      if (!all_ids.insert(a.id).second)
        throw ParseError("duplicate id", l.number, l.tokens[0].col, "duplicate id " + l.tokens[0].text);
      arrows.push_back(std::move(a));
    }
    ++i;
  }
  for (const auto& a : arrows) {
    if (!unit_lines.count(a.src)) throw ParseError("dangling reference", a.line, a.toks[1].col, "source " + a.toks[1].text + " is not a unit");
    if (!unit_lines.count(a.tgt)) throw ParseError("dangling reference", a.line, a.toks[2].col, "range " + a.toks[2].text + " is not a unit");
    if (!all_ids.count(a.inv)) throw ParseError("dangling reference", a.line, a.toks[3].col, "unknown arrow " + a.toks[3].text);
  }

  const std::size_t m = all_ids.size();
  auto& t = p.tables;
  t.ids.assign(all_ids.begin(), all_ids.end());
  t.is_unit.assign(m, false);
  t.src.assign(m, 0);
  t.tgt.assign(m, 0);
  t.inv.assign(m, 0);
  t.comp.assign(m * m, kNoArrow);
  auto idx = [&](long long id) { return *p.index_of(id); };
  for (auto& [id, line] : unit_lines) {
    Arrow u = idx(id);
    t.is_unit[u] = true;
    t.src[u] = t.tgt[u] = t.inv[u] = u;
  }
  for (const auto& a : arrows) {
    Arrow k = idx(a.id);
    t.src[k] = idx(a.src);
    t.tgt[k] = idx(a.tgt);
    t.inv[k] = idx(a.inv);
  }
  auto resolve = [&](const Token& tok, std::size_t line) {
    auto k = p.index_of(parse_id(tok, line));
    if (!k) throw ParseError("dangling reference", line, tok.col, "unknown arrow " + tok.text);
    return *k;
  };
  std::set<std::pair<Arrow, Arrow>> given;
  if (i < sections.size() && sections[i].name == "compose") {
    for (const auto& l : sections[i].body) {
      expect_tokens(l, 3, "'a b ab'");
      Arrow a = resolve(l.tokens[0], l.number), b = resolve(l.tokens[1], l.number), ab = resolve(l.tokens[2], l.number);
      if (!given.insert({a, b}).second)
        throw ParseError("duplicate id", l.number, l.tokens[0].col, "product of this pair given twice");
      t.at(a, b) = ab;
    }
    ++i;
  }
  for (Arrow a = 0; a < m; ++a)
    for (Arrow u = 0; u < m; ++u) {
      if (!t.is_unit[u]) continue;
      if (t.tgt[a] == u && !given.count({u, a})) t.at(u, a) = a;
      if (t.src[a] == u && !given.count({a, u})) t.at(a, u) = a;
    }

  if (i < sections.size() && sections[i].name == "cocycle") {
    std::set<std::pair<Arrow, Arrow>> seen;
    for (const auto& l : sections[i].body) {
      expect_tokens(l, 3, "'a b value'");
      Arrow a = resolve(l.tokens[0], l.number), b = resolve(l.tokens[1], l.number);
      Scalar v = parse_scalar(p.field, l.tokens[2], l.number);
      if (v.is_zero()) throw ParseError("zero cocycle value", l.number, l.tokens[2].col, "zero cocycle value");
      if (!seen.insert({a, b}).second)
        throw ParseError("duplicate id", l.number, l.tokens[0].col, "cocycle value given twice");
      p.cocycle.set(a, b, v);
    }
    ++i;
  }

  std::set<std::string> names;
  for (; i < sections.size(); ++i) {
    const auto& s = sections[i];
    if (s.name == "element") {
      expect_tokens(s.header, 1, "an element name");
      ElementSpec e{s.header.tokens[0].text, {}};
      if (!names.insert("element:" + e.name).second)
        throw ParseError("duplicate id", s.header.number, s.header.tokens[0].col, "duplicate element " + e.name);
      for (const auto& l : s.body) {
        expect_tokens(l, 2, "'arrow value'");
        e.terms.emplace_back(resolve(l.tokens[0], l.number), parse_scalar(p.field, l.tokens[1], l.number));
      }
      p.elements.push_back(std::move(e));
    } else if (s.name == "module") {
      expect_tokens(s.header, 3, "'name dim algebra'");
      ModuleSpec mod;
      mod.name = s.header.tokens[0].text;
      mod.dim = parse_count(s.header.tokens[1], s.header.number);
      mod.line = s.header.number;
      if (!names.insert("module:" + mod.name).second)
        throw ParseError("duplicate id", s.header.number, s.header.tokens[0].col, "duplicate module " + mod.name);
      const Token& alg = s.header.tokens[2];
      if (alg.text.starts_with("iso:")) {
        Token unit{alg.text.substr(4), alg.col + 4};
        Arrow x = resolve(unit, s.header.number);
        if (!t.is_unit[x]) throw ParseError("dangling reference", s.header.number, unit.col, unit.text + " is not a unit");
        mod.iso_unit = x;
      } else if (alg.text != "B") {
        throw ParseError("syntax", s.header.number, alg.col, "algebra must be 'B' or 'iso:<unit>'");
      }
      for (const auto& l : s.body) {
        expect_tokens(l, mod.dim, "one row of the module matrix");
        Vector row;
        for (const auto& tok : l.tokens) row.push_back(parse_scalar(p.field, tok, l.number));
        mod.rows.push_back(std::move(row));
      }
      p.modules.push_back(std::move(mod));
    }
  }
  return p;
}

ProblemFile parse_problem_text(const std::string& text) {
  std::istringstream in(text);
  return parse_problem(in);
}

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("io", 0, 0, "cannot read '" + path + "'");
  return parse_problem(in);
}

std::string serialize(const ProblemFile& p) {
  const auto& t = p.tables;
  const std::size_t m = t.size();
  auto id = [&](Arrow a) { return std::to_string(t.ids[a]); };
  std::ostringstream out;
  out << "[field] " << (p.field.is_rational() ? std::string("Q") : "GF " + std::to_string(p.field.characteristic()))
      << "\n[units]";
  for (Arrow a = 0; a < m; ++a)
    if (t.is_unit[a]) out << ' ' << id(a);
  out << "\n[arrows]\n";
  for (Arrow a = 0; a < m; ++a)
    if (!t.is_unit[a]) out << id(a) << ' ' << id(t.src[a]) << ' ' << id(t.tgt[a]) << ' ' << id(t.inv[a]) << '\n';
  out << "[compose]\n";
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b)
      if (!t.is_unit[a] && !t.is_unit[b] && t.at(a, b) != kNoArrow)
        out << id(a) << ' ' << id(b) << ' ' << id(t.at(a, b)) << '\n';
  if (!p.cocycle.entries().empty()) {
    out << "[cocycle]\n";
    for (const auto& [ab, v] : p.cocycle.entries()) out << id(ab.first) << ' ' << id(ab.second) << ' ' << v << '\n';
  }
  for (const auto& e : p.elements) {
    out << "[element] " << e.name << '\n';
    for (const auto& [a, v] : e.terms) out << id(a) << ' ' << v << '\n';
  }
  for (const auto& mod : p.modules) {
    out << "[module] " << mod.name << ' ' << mod.dim << ' ' << (mod.iso_unit ? "iso:" + id(*mod.iso_unit) : "B") << '\n';
    for (const auto& row : mod.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << '\n';
    }
  }
  return out.str();
}

ProblemFile problem_from(const TwistedGroupoid& tg) {
  ProblemFile p;
  p.field = tg.field();
  p.tables = tg.groupoid().tables();
  p.cocycle = tg.cocycle();
  return p;
}

}  // namespace gkd
