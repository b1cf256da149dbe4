// gkd: command-line front end. Exit codes: 0 all checks pass, 1 a
// mathematical check failed, 2 input or usage error.

#include <fstream>
#include <iostream>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "gkd/commands.hpp"

namespace {

struct Args {
  std::string file, x, module, suite = "all", output;
  int threads = 0;
};

const gkd::ModuleSpec& module_spec(const gkd::ProblemFile& p, const std::string& name) {
  try {
    return p.module(name);
  } catch (const std::out_of_range& e) {
    throw gkd::InputError(e.what());
  }
}

int run(const std::string& command, const Args& a) {
  gkd::ProblemFile p = gkd::parse_problem_file(a.file);
  gkd::Report r;
  r.value("command", command);
  r.value("problem", a.file);
  gkd::AlgebraPtr b = gkd::run_validate(p, r);
  if (b) {
    if (command == "algebra") {
      gkd::run_algebra(p, b, r);
    } else if (command == "isotropy") {
      gkd::Arrow x = gkd::unit_argument(p, b, a.x);
      gkd::run_isotropy(b, x, r);
      gkd::run_bimodule(b, x, r);
    } else if (command == "induce" || command == "restrict") {
      gkd::Arrow x = gkd::unit_argument(p, b, a.x);
      const auto& spec = module_spec(p, a.module);
      if (command == "induce" && spec.iso_unit != x)
        throw gkd::InputError("module '" + a.module + "' is not declared over iso:" + a.x);
      if (command == "restrict" && spec.iso_unit) throw gkd::InputError("module '" + a.module + "' is not over B");
      gkd::FdModule v = gkd::build_module(p, b, spec);
      if (command == "induce") gkd::run_induce(b, x, v, r);
      else gkd::run_restrict(b, x, v, r);
    } else if (command == "germs") {
      const auto& spec = module_spec(p, a.module);
      if (spec.iso_unit) throw gkd::InputError("module '" + a.module + "' is not over B");
      gkd::run_germs(b, gkd::build_module(p, b, spec), r);
    } else if (command == "ideals") {
      gkd::run_ideals(b, r);
    } else if (command == "verify") {
      gkd::run_suite(p, b, a.suite, r);
    } else if (command == "effros-hahn") {
      gkd::run_effros_hahn(b, r);
    } else if (command == "q1215") {
      gkd::run_q1215(b, r);
    }
  }
  r.section("summary");
  r.value("checks", r.checks());
  r.value("failures", r.failures());
  const std::string text = r.str();
  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.output, std::ios::binary);
    if (!out) throw gkd::InputError("cannot write '" + a.output + "'");
    out << text;
  }
  return r.failed() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Steinberg algebras of finite groupoids: isotropy, induction and ideals"};
  app.require_subcommand(1);
  Args a;
  app.add_option("-t,--threads", a.threads, "OpenMP threads (0 keeps the default)");
  app.add_option("-o,--output", a.output, "Write the report here instead of stdout");

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sc = app.add_subcommand(name, help);
    sc->add_option("file", a.file, "Problem file (.gkd)")->required()->check(CLI::ExistingFile);
    return sc;
  };
  add("validate", "Check groupoid axioms and cocycle identities");
  add("algebra", "Dimension, center, associativity and normalizers of B");
  add("isotropy", "Isotropy data and the bimodule at a unit")->add_option("x", a.x, "Unit id")->required();
  for (const char* name : {"induce", "restrict"}) {
    auto* sc = add(name, std::string(name) == "induce" ? "Induce a B(x,x)-module to B" : "Restrict a B-module to B(x,x)");
    sc->add_option("x", a.x, "Unit id")->required();
    sc->add_option("module", a.module, "Module name")->required();
  }
  add("germs", "Germ spaces and the annihilator decomposition")->add_option("module", a.module, "Module name")->required();
  add("ideals", "Enumerate two-sided ideals over GF(p)");
  add("verify", "Run a verification suite")
      ->add_option("suite", a.suite, "Suite name")
      ->check(CLI::IsMember(gkd::suite_names()));
  add("effros-hahn", "Decompose ideals into induced ideals");
  add("q1215", "Find primitive inducing ideals for every primitive ideal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return 2;
  }
  if (a.threads > 0) omp_set_num_threads(a.threads);
  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, a);
  } catch (const gkd::ParseError& e) {
    std::cerr << "parse error (" << e.kind << "): " << e.what() << '\n';
  } catch (const gkd::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
  } catch (const gkd::CocycleError& e) {
    std::cerr << "cocycle error: " << e.what() << '\n';
  } catch (const gkd::ModuleError& e) {
    std::cerr << "module error: " << e.what() << '\n';
  } catch (const gkd::AlgebraError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
