#pragma once

// Finite discrete groupoids. Arrows are dense indices 0..m-1; units are a
// flagged subset. Composition follows s(a) = r(b) for the product ab.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gkd/linalg.hpp"

namespace gkd {

using Arrow = std::size_t;
inline constexpr Arrow kNoArrow = std::numeric_limits<Arrow>::max();

struct GroupoidError : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct MalformedTable : GroupoidError {
  using GroupoidError::GroupoidError;
};

struct NotAUnit : GroupoidError {
  using GroupoidError::GroupoidError;
};

/// Raw tables, as read from a file or produced by a constructor.
struct GroupoidTables {
  std::vector<bool> is_unit;
  std::vector<Arrow> src, tgt, inv;
  std::vector<Arrow> comp;          // m*m, kNoArrow where undefined
  std::vector<long long> ids;       // external labels, defaults to indices

  std::size_t size() const { return is_unit.size(); }
  Arrow& at(Arrow a, Arrow b) { return comp[a * size() + b]; }
  Arrow at(Arrow a, Arrow b) const { return comp[a * size() + b]; }
};

struct Violation {
  std::string axiom;
  std::vector<Arrow> witness;
  std::string detail;
};

/// First failing axiom, or nothing. Throws MalformedTable on bad indices.
std::optional<Violation> validate(const GroupoidTables& t);

/// A finite group by its multiplication table; element 0 need not be the identity.
struct GroupTable {
  std::vector<std::vector<std::size_t>> mul;
  std::size_t identity = 0;

  std::size_t order() const { return mul.size(); }
  std::size_t inverse(std::size_t g) const;
};

GroupTable cyclic_group(std::size_t n);
GroupTable klein_four();  // e, a, b, ab with xor multiplication
GroupTable symmetric_group_3();
void check_group(const GroupTable& g);

struct IsotropyGroup {
  std::vector<Arrow> arrows;  // arrows[0] is the unit
  GroupTable table;           // indices into arrows
};

class FiniteGroupoid {
public:
  /// Validates; throws GroupoidError naming the failing axiom.
  static FiniteGroupoid make(GroupoidTables t);

  std::size_t size() const { return t_.size(); }
  const std::vector<Arrow>& units() const { return units_; }
  bool is_unit(Arrow a) const { return t_.is_unit.at(a); }
  Arrow src(Arrow a) const { return t_.src.at(a); }
  Arrow tgt(Arrow a) const { return t_.tgt.at(a); }
  Arrow inv(Arrow a) const { return t_.inv.at(a); }
  bool composable(Arrow a, Arrow b) const { return src(a) == tgt(b); }
  /// ab, or kNoArrow when s(a) != r(b).
  Arrow comp(Arrow a, Arrow b) const { return t_.at(a, b); }
  long long id(Arrow a) const { return t_.ids.at(a); }
  std::string label(Arrow a) const { return std::to_string(id(a)); }
  const GroupoidTables& tables() const { return t_; }

  /// Position of a unit within units().
  std::size_t unit_index(Arrow u) const;
  void require_unit(Arrow x) const;

  IsotropyGroup isotropy_group(Arrow x) const;
  /// Units reachable from x, ascending.
  std::vector<Arrow> orbit(Arrow x) const;
  /// G(y,x): arrows with source x and range y, ascending.
  std::vector<Arrow> hom_set(Arrow y, Arrow x) const;
  /// Arrows with source x, ascending.
  std::vector<Arrow> source_fiber(Arrow x) const;
  /// Orbits as sorted unit lists, ordered by least element.
  std::vector<std::vector<Arrow>> orbits() const;

  bool is_bisection(const std::vector<Arrow>& s) const;

private:
  explicit FiniteGroupoid(GroupoidTables t);
  GroupoidTables t_;
  std::vector<Arrow> units_;
  std::vector<std::size_t> unit_pos_;
};

FiniteGroupoid pair_groupoid(std::size_t n);
FiniteGroupoid group_groupoid(const GroupTable& g);
/// act[g][p] is the image of point p under g.
FiniteGroupoid action_groupoid(const GroupTable& g, const std::vector<std::vector<std::size_t>>& act);
FiniteGroupoid group_bundle(const std::vector<GroupTable>& fibers);
FiniteGroupoid disjoint_union(const FiniteGroupoid& g1, const FiniteGroupoid& g2);

/// Index of the arrow (i -> j) of pair_groupoid(n): range i, source j.
Arrow pair_arrow(std::size_t n, std::size_t i, std::size_t j);

}  // namespace gkd
