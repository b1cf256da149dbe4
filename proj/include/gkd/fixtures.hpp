#pragma once

// Named desk-scale twisted groupoids used by the CLI, the tests and the
// acceptance suite.

#include <string>
#include <vector>

#include "gkd/twist.hpp"

namespace gkd {

/// pair1..pair4, z2, z3, v4, v4q, gb, gbs, swap, union, z2on3, v4on2.
const std::vector<std::string>& fixture_names();

/// Throws std::invalid_argument for an unknown name.
TwistedGroupoid fixture(const std::string& name, const Field& f);

struct NamedFixture {
  std::string name;
  TwistedGroupoid tg;
};

/// Every fixture with at most max_dim arrows, in fixture_names() order.
std::vector<NamedFixture> fixture_battery(const Field& f, std::size_t max_dim = 16);

}  // namespace gkd
