#include "gkd/fixtures.hpp"

#include <stdexcept>

namespace gkd {

namespace {

// Group bundle over three units: Z2 at unit 0, trivial at 1 and 2. Arrow 3
// is the generator of the Z2 fiber.
FiniteGroupoid gb_groupoid() { return group_bundle({cyclic_group(2), cyclic_group(1), cyclic_group(1)}); }

// Z2 swapping points 0 and 1 and fixing 2.
FiniteGroupoid z2_on_three() { return action_groupoid(cyclic_group(2), {{0, 1, 2}, {1, 0, 2}}); }

// V4 on two points: a and ab swap them, b fixes both.
FiniteGroupoid v4_on_two() { return action_groupoid(klein_four(), {{0, 1}, {1, 0}, {0, 1}, {1, 0}}); }

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"pair1", "pair2", "pair3", "pair4", "z2",    "z3",    "v4",
                                              "v4q",   "gb",    "gbs",   "swap",  "union", "z2on3", "v4on2"};
  return names;
}

TwistedGroupoid fixture(const std::string& name, const Field& f) {
  if (name.size() == 5 && name.starts_with("pair") && name[4] >= '1' && name[4] <= '4')
    return TwistedGroupoid::untwisted(pair_groupoid(static_cast<std::size_t>(name[4] - '0')), f);
  if (name == "z2") return TwistedGroupoid::untwisted(group_groupoid(cyclic_group(2)), f);
  if (name == "z3") return TwistedGroupoid::untwisted(group_groupoid(cyclic_group(3)), f);
  if (name == "v4") return TwistedGroupoid::untwisted(group_groupoid(klein_four()), f);
  if (name == "v4q") {
    FiniteGroupoid g = group_groupoid(klein_four());
    Cocycle c = quaternion_cocycle(g, f);
    return TwistedGroupoid::make(std::move(g), c);
  }
  if (name == "gb") return TwistedGroupoid::untwisted(gb_groupoid(), f);
  if (name == "gbs") {
    Cocycle c(f);
    c.set(3, 3, f.from_int(-1));
    return TwistedGroupoid::make(gb_groupoid(), c);
  }
  if (name == "swap") return TwistedGroupoid::untwisted(action_groupoid(cyclic_group(2), {{0, 1}, {1, 0}}), f);
  if (name == "union")
    return TwistedGroupoid::untwisted(disjoint_union(pair_groupoid(2), group_groupoid(cyclic_group(2))), f);
  if (name == "z2on3") return TwistedGroupoid::untwisted(z2_on_three(), f);
  if (name == "v4on2") return TwistedGroupoid::untwisted(v4_on_two(), f);
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<NamedFixture> fixture_battery(const Field& f, std::size_t max_dim) {
  std::vector<NamedFixture> out;
  for (const auto& n : fixture_names()) {
    TwistedGroupoid tg = fixture(n, f);
    if (tg.groupoid().size() <= max_dim) out.push_back({n, std::move(tg)});
  }
  return out;
}

}  // namespace gkd
