// Writes the bundled .gkd problem files into a directory.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "gkd/commands.hpp"
#include "gkd/fixtures.hpp"

namespace {

void add_module(gkd::ProblemFile& p, std::string name, const gkd::FdModule& m, std::optional<gkd::Arrow> iso) {
  gkd::ModuleSpec spec;
  spec.name = std::move(name);
  spec.dim = m.dim();
  spec.iso_unit = iso;
  for (const auto& a : m.action())
    for (auto& row : a.row_list()) spec.rows.push_back(std::move(row));
  p.modules.push_back(std::move(spec));
}

// Irreducible B(x,x)-modules at every unit, as iso:x module sections.
void add_isotropy_modules(gkd::ProblemFile& p, const gkd::AlgebraPtr& b) {
  for (gkd::Arrow x : b->groupoid().units()) {
    gkd::IsotropyData xx = gkd::IsotropyData::build(b, x, x);
    for (const auto& w : gkd::isotropy_battery(xx))
      if (w.name.starts_with("irr")) add_module(p, w.name + "_at" + b->groupoid().label(x), w.module, x);
  }
}

void write(const std::filesystem::path& dir, const std::string& name, const gkd::ProblemFile& p,
           const std::string& comment) {
  std::ofstream out(dir / (name + ".gkd"), std::ios::binary);
  out << "# " << comment << '\n' << gkd::serialize(p);
  std::cout << (dir / (name + ".gkd")).string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Write the bundled .gkd fixtures"};
  std::string outdir = "fixtures";
  app.add_option("outdir", outdir, "Output directory");
  CLI11_PARSE(app, argc, argv);
  std::filesystem::create_directories(outdir);
  const std::filesystem::path dir(outdir);

  auto emit = [&](const std::string& fixture, const gkd::Field& f, const std::string& file, const std::string& comment,
                  auto extra) {
    gkd::TwistedGroupoid tg = gkd::fixture(fixture, f);
    gkd::ProblemFile p = gkd::problem_from(tg);
    gkd::AlgebraPtr b = gkd::make_algebra(tg);
    add_isotropy_modules(p, b);
    extra(p, b);
    write(dir, file, p, comment);
  };
  auto none = [](gkd::ProblemFile&, const gkd::AlgebraPtr&) {};
  const gkd::Field q = gkd::Field::rationals();
  for (const auto& n : gkd::fixture_names()) {
    if (n == "pair2" || n == "z2") continue;
    emit(n, q, n, n + " over Q", none);
  }
  emit("pair2", q, "pair2", "pair groupoid on two points over Q; column is the module K^2",
       [](gkd::ProblemFile& p, const gkd::AlgebraPtr& b) {
         const gkd::Field& f = b->field();
         std::vector<gkd::Matrix> action;
         // delta_(i,j) acts as the matrix unit E_ij; units are (i,i).
         for (gkd::Arrow a = 0; a < b->dim(); ++a) {
           gkd::Matrix m(f, 2, 2);
           m(b->groupoid().tgt(a), b->groupoid().src(a)) = f.one();
           action.push_back(m);
         }
         add_module(p, "column", gkd::FdModule(b->presentation(), 2, action), std::nullopt);
       });
  emit("z2", q, "z2", "K[Z2] over Q; n = d0 + d1 has no partial inverse", [](gkd::ProblemFile& p, const gkd::AlgebraPtr& b) {
    p.elements.push_back({"n", {{0, b->field().one()}, {1, b->field().one()}}});
    p.elements.push_back({"generator", {{1, b->field().one()}}});
  });
  for (auto [name, prime] : std::vector<std::pair<std::string, std::uint32_t>>{
           {"v4q", 3}, {"gb", 3}, {"gbs", 3}, {"gb", 2}, {"z2on3", 2}, {"union", 2}, {"pair3", 2}, {"v4on2", 3}}) {
    const std::string file = name + "_gf" + std::to_string(prime);
    emit(name, gkd::Field::prime(prime), file, name + " over GF(" + std::to_string(prime) + ")", none);
  }

  // pair2 with the product (0,1)(1,0) pointing at the wrong unit.
  gkd::ProblemFile bad = gkd::problem_from(gkd::fixture("pair2", q));
  bad.tables.at(2, 3) = 1;
  write(dir, "corrupted", bad, "pair2 with a corrupted composition table");
  return 0;
}
