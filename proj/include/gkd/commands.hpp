#pragma once

// The computations behind each CLI command, writing into a Report.

#include <stdexcept>
#include <string>
#include <vector>

#include "gkd/ideals.hpp"
#include "gkd/problem.hpp"
#include "gkd/report.hpp"

namespace gkd {

/// Bad command arguments or inconsistent input data (exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Groupoid axioms and cocycle identities. Returns the algebra when both
/// hold, nullptr otherwise (the failures are in the report).
AlgebraPtr run_validate(const ProblemFile& p, Report& r);

/// A module section turned into an FdModule over B or over B(x,x).
FdModule build_module(const ProblemFile& p, const AlgebraPtr& b, const ModuleSpec& spec);

/// Resolves an external unit id given on the command line.
Arrow unit_argument(const ProblemFile& p, const AlgebraPtr& b, const std::string& text);

void run_algebra(const ProblemFile& p, const AlgebraPtr& b, Report& r);
void run_isotropy(const AlgebraPtr& b, Arrow x, Report& r);
void run_bimodule(const AlgebraPtr& b, Arrow x, Report& r);
void run_induce(const AlgebraPtr& b, Arrow x, const FdModule& v, Report& r);
void run_restrict(const AlgebraPtr& b, Arrow x, const FdModule& v, Report& r);
void run_germs(const AlgebraPtr& b, const FdModule& v, Report& r);
void run_ideals(const AlgebraPtr& b, Report& r);
void run_effros_hahn(const AlgebraPtr& b, Report& r);
void run_q1215(const AlgebraPtr& b, Report& r);

/// Suites: algebra, inclusion, bimodule, induction, ideals, all. File modules
/// join the generated battery.
void run_suite(const ProblemFile& p, const AlgebraPtr& b, const std::string& suite, Report& r);
const std::vector<std::string>& suite_names();

/// Modules over B(x,x) used by the suites: the regular module, one module per
/// isomorphism class of irreducibles (over GF(p); over Q the certified ones
/// among the minimal left ideals found by the witness search), and the
/// decomposable regular-plus-regular.
struct BatteryModule {
  std::string name;
  FdModule module;
};
std::vector<BatteryModule> isotropy_battery(const IsotropyData& xx);

}  // namespace gkd
