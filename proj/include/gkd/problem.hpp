#pragma once

// The .gkd problem-file format.
//
//   [field] Q | GF <p>
//   [units] id ...
//   [arrows]            id src tgt inv, one non-unit arrow per line
//   [compose]           a b ab
//   [cocycle]           a b value
//   [element] name      then "arrow value" lines
//   [module] name dim algebra      algebra is B or iso:<unit id>; then one
//                                  row per line, dim rows per basis element
//
// Sections appear in this order; [cocycle], [element] and [module] are
// optional, the last two may repeat. "#" starts a comment. Ids are integers
// and map to dense indices in increasing order. Products with a unit on
// either side are implied.

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gkd/groupoid.hpp"
#include "gkd/twist.hpp"

namespace gkd {

struct ParseError : std::runtime_error {
  ParseError(std::string kind, std::size_t line, std::size_t col, const std::string& msg);
  std::string kind;  // "syntax", "missing [field]", "dangling reference", "duplicate id", ...
  std::size_t line, col;
};

struct ElementSpec {
  std::string name;
  std::vector<std::pair<Arrow, Scalar>> terms;
};

struct ModuleSpec {
  std::string name;
  std::size_t dim = 0;
  std::optional<Arrow> iso_unit;  // nothing for a module over B
  std::vector<Vector> rows;       // basis-element blocks of dim rows each
  std::size_t line = 0;

  /// Splits rows into square matrices; throws ParseError when the count is off.
  std::vector<Matrix> matrices(const Field& f, std::size_t basis_size) const;
};

struct ProblemFile {
  Field field = Field::rationals();
  GroupoidTables tables;
  Cocycle cocycle{Field::rationals()};
  std::vector<ElementSpec> elements;
  std::vector<ModuleSpec> modules;

  /// Dense index of an external id.
  std::optional<Arrow> index_of(long long id) const;
  const ModuleSpec& module(const std::string& name) const;  // throws std::out_of_range
  const ElementSpec& element(const std::string& name) const;
};

ProblemFile parse_problem(std::istream& in);
ProblemFile parse_problem_text(const std::string& text);
ProblemFile parse_problem_file(const std::string& path);

/// Canonical text; parse_problem_text(serialize(p)) reproduces p.
std::string serialize(const ProblemFile& p);

ProblemFile problem_from(const TwistedGroupoid& tg);

}  // namespace gkd
