// Acceptance run: one PASS/FAIL line per criterion. Exit status 1 when a
// criterion fails, unless it was named with --expect-fail and failed only for
// its documented reason.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <omp.h>

#include "gkd/commands.hpp"
#include "gkd/fixtures.hpp"
#include "gkd/kernels.hpp"
#include "support.hpp"

using namespace gkd;
using namespace gkd::test;

namespace {

struct Outcome {
  bool pass = true;
  bool unexplained = false;  // a failure other than a documented impossibility
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (!unexplained) detail << "first failure: " << why << "; ";
    pass = false;
    unexplained = true;
  }
  void gap(const std::string& why) {
    detail << why << "; ";
    pass = false;
  }
};

std::vector<NamedFixture> battery(const Field& f) { return fixture_battery(f, 16); }

std::vector<Scalar> random_cochain(const FiniteGroupoid& g, const Field& f, std::mt19937& rng) {
  std::vector<Scalar> b;
  for (Arrow a = 0; a < g.size(); ++a) b.push_back(g.is_unit(a) ? f.one() : random_nonzero(f, rng));
  return b;
}

// Structure constants delta_a delta_b = w(a,b) delta_ab for an arbitrary table w.
AlgebraPresentation convolution_table(const FiniteGroupoid& g, const Field& f,
                                      const std::function<Scalar(Arrow, Arrow)>& w) {
  std::vector<std::string> labels;
  std::vector<Vector> products;
  for (Arrow a = 0; a < g.size(); ++a) labels.push_back(g.label(a));
  for (Arrow a = 0; a < g.size(); ++a)
    for (Arrow b = 0; b < g.size(); ++b) {
      Vector v = zero_vector(f, g.size());
      if (g.composable(a, b)) v[g.comp(a, b)] = w(a, b);
      products.push_back(v);
    }
  return AlgebraPresentation::from_products(f, labels, products, std::nullopt);
}

bool finite_within(const Field& f, std::size_t dim) {
  return f.is_prime_field() && kernels::scan_size(f.characteristic(), dim) <= kEnumerationBudget;
}

// Whether a single mutation at (a,b) must leave the table associative: the
// component of a is a lone unit (K with e e = c e), or a is the non-unit of a
// component isomorphic to Z2, where every value of omega(a,a) is a cocycle.
bool mutation_is_invisible(const FiniteGroupoid& g, Arrow a, Arrow b) {
  if (a != b) return false;
  std::size_t component = 0;
  for (Arrow c = 0; c < g.size(); ++c)
    for (Arrow y : g.orbit(g.tgt(a))) component += g.tgt(c) == y;
  if (component == 1) return true;
  return component == 2 && !g.is_unit(a) && g.is_unit(g.comp(a, a));
}

// 1. Associativity for random coboundaries and the quaternion cocycle; every
// single-value mutation is detected.
Outcome criterion1() {
  Outcome o;
  const Field f = Field::prime(5);
  std::mt19937 rng(1);
  std::size_t cocycles = 0, mutants = 0, killed = 0, invisible = 0;
  std::string survivors;
  auto mutate_all = [&](const std::string& name, const FiniteGroupoid& g, const std::function<Scalar(Arrow, Arrow)>& w) {
    for (Arrow a = 0; a < g.size(); ++a)
      for (Arrow b = 0; b < g.size(); ++b) {
        if (!g.composable(a, b)) continue;
        ++mutants;
        auto mutated = [&](Arrow c, Arrow d) { return c == a && d == b ? w(c, d) * f.from_int(2) : w(c, d); };
        const bool detected = kernels::associativity_parallel(convolution_table(g, f, mutated)).defects > 0;
        const bool predicted = mutation_is_invisible(g, a, b);
        killed += detected;
        invisible += predicted;
        if (!detected) survivors += " " + name + "(" + g.label(a) + "," + g.label(b) + ")";
        if (detected == predicted)
          o.fail(name + " mutation (" + g.label(a) + "," + g.label(b) + ") " +
                 (detected ? "detected although predicted invisible" : "survived"));
      }
  };
  for (const auto& nf : battery(f)) {
    const FiniteGroupoid g = nf.tg.groupoid();
    for (int k = 0; k < 50; ++k, ++cocycles) {
      TwistedGroupoid tg = TwistedGroupoid::make(g, coboundary(g, random_cochain(g, f, rng)));
      if (kernels::associativity_parallel(*make_algebra(tg)->presentation()).defects != 0)
        o.fail(nf.name + " coboundary " + std::to_string(k) + " not associative");
      if (k == 0) mutate_all(nf.name, g, [&](Arrow a, Arrow b) { return tg.omega(a, b); });
    }
  }
  FiniteGroupoid v4 = group_groupoid(klein_four());
  TwistedGroupoid h = TwistedGroupoid::make(v4, quaternion_cocycle(v4, f));
  ++cocycles;
  if (kernels::associativity_parallel(*make_algebra(h)->presentation()).defects != 0) o.fail("quaternion");
  mutate_all("v4q", v4, [&](Arrow a, Arrow b) { return h.omega(a, b); });
  if (killed < mutants)
    o.gap("kill rate " + std::to_string(killed) + "/" + std::to_string(mutants) +
          "; survivors are exactly the mutants of omega(a,a) on a lone unit or on Z2, whose tables stay associative:" +
          survivors);
  o.detail << "cocycles=" << cocycles << " mutants=" << mutants << " killed=" << killed << " predicted invisible=" << invisible;
  return o;
}

// 2. Pair groupoids are matrix algebras with a unique irreducible module.
Outcome criterion2() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    const Field q = Field::rationals();
    AlgebraPtr b = make_algebra(TwistedGroupoid::untwisted(pair_groupoid(n), q));
    AlgebraPresentation mat = matrix_algebra(q, n);
    auto index = [&](Arrow a) { return b->groupoid().tgt(a) * n + b->groupoid().src(a); };
    for (Arrow a = 0; a < b->dim(); ++a)
      for (Arrow c = 0; c < b->dim(); ++c) {
        Vector got = b->presentation()->basis_product(a, c), relabeled = zero_vector(q, n * n);
        for (Arrow k = 0; k < b->dim(); ++k) relabeled[index(k)] = got[k];
        if (relabeled != mat.basis_product(index(a), index(c))) o.fail("matrix units n=" + std::to_string(n));
      }
    if (center(*b->presentation()).dim() != 1) o.fail("center n=" + std::to_string(n));

    for (std::uint32_t p : {2u, 3u}) {
      const Field f = Field::prime(p);
      AlgebraPtr bp = make_algebra(TwistedGroupoid::untwisted(pair_groupoid(n), f));
      FdModule reg = regular_module(bp->presentation());
      // Column j of the regular module: span of the arrows with source j.
      std::vector<Subspace> columns;
      Subspace total(f, reg.dim());
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < n; ++i) vs.push_back(unit_vector(f, reg.dim(), pair_arrow(n, i, j)));
        columns.push_back(span(f, reg.dim(), vs));
        total = sum(total, columns.back());
      }
      FdModule first = submodule(reg, columns[0]);
      auto v = is_irreducible(first);
      if (!(v.irreducible() && v.exact) || first.dim() != n) o.fail("column module n=" + std::to_string(n));
      for (const auto& c : columns) {
        FdModule m = submodule(reg, c);
        if (!is_submodule(reg, c) || hom_space(first, m).dim() != 1) o.fail("column isomorphism");
      }
      if (total.dim() != reg.dim()) o.fail("columns do not span");
      // The regular module is a sum of copies of one irreducible, so every
      // irreducible is isomorphic to it. Where the scan fits, also confirm
      // that every minimal submodule has dimension n.
      if (finite_within(f, reg.dim())) {
        std::size_t minimal = 0;
        auto subs = all_submodules(reg);
        for (const auto& s : subs)
          if (s.dim() > 0 && s.dim() < n) o.fail("submodule of dimension below n");
          else minimal += s.dim() == n;
        o.detail << "n=" << n << "/GF(" << p << ") minimal=" << minimal << " ";
      }
    }
  }
  return o;
}

// 3. Inverse semigroup of singleton sections and the beta homomorphism.
Outcome criterion3() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& nf : battery(Field::rationals())) {
    AlgebraPtr b = make_algebra(nf.tg);
    std::vector<NormalizerCertificate> sample;
    for (Arrow a = 0; a < b->dim(); ++a) sample.push_back(certify_section(b->delta(a)));
    auto rep = verify_inverse_semigroup(*b, sample);
    if (!rep.ok()) o.fail(nf.name + " semigroup: " + (rep.violations.empty() ? "unbounded" : rep.violations[0]));
    for (const auto& n : sample) {
      PartialBijection bn = beta_of(n.n, n.n_star);
      if (beta_of(n.n_star, n.n) != bn.inverse()) o.fail(nf.name + " beta of n*");
      for (const auto& m : sample) {
        ++pairs;
        AlgebraElement nm = n.n * m.n;
        PartialBijection expect = compose(bn, beta_of(m.n, m.n_star));
        PartialBijection got = nm.is_zero() ? PartialBijection{} : beta_of(nm, m.n_star * n.n_star);
        if (got != expect) o.fail(nf.name + " beta of a product");
      }
    }
  }
  o.detail << "fixtures=" << battery(Field::rationals()).size() << " pairs=" << pairs;
  return o;
}

// 4. B(x,x) is the twisted group algebra of the isotropy group.
Outcome criterion4() {
  Outcome o;
  std::size_t units = 0;
  for (const auto& f : {Field::rationals(), Field::prime(5)})
    for (const auto& nf : battery(f)) {
      AlgebraPtr b = make_algebra(nf.tg);
      for (Arrow x : b->groupoid().units()) {
        ++units;
        IsotropyData xx = IsotropyData::build(b, x, x);
        IsotropyTwist it = restrict_to_isotropy(nf.tg, x);
        if (xx.dim() != it.arrows.size()) o.fail(nf.name + " dimension");
        if (!identify_with_twisted_group_algebra(xx).ok()) o.fail(nf.name + " identification");
        // Transport the group algebra table through the classes of the deltas.
        const auto& g = it.group.groupoid();
        for (Arrow i = 0; i < g.size(); ++i)
          for (Arrow j = 0; j < g.size(); ++j) {
            Vector pi = xx.p(unit_vector(f, b->dim(), it.arrows[i]));
            Vector pj = xx.p(unit_vector(f, b->dim(), it.arrows[j]));
            Vector expect = scale(it.group.omega(i, j), xx.p(unit_vector(f, b->dim(), it.arrows[g.comp(i, j)])));
            if (xx.algebra_structure()->multiply(pi, pj) != expect) o.fail(nf.name + " table");
          }
      }
    }
  o.detail << "units=" << units;
  return o;
}

// 5. B = C + L and H = C cap L.
Outcome criterion5() {
  Outcome o;
  std::size_t pairs = 0;
  for (const auto& nf : battery(Field::rationals())) {
    AlgebraPtr b = make_algebra(nf.tg);
    for (Arrow y : b->groupoid().units())
      for (Arrow x : b->groupoid().units()) {
        ++pairs;
        IsotropyData d = IsotropyData::build(b, y, x);
        if (!d.regular() || sum(d.C(), d.L()) != Subspace::full(b->field(), b->dim())) o.fail(nf.name + " C + L");
        if (!d.h_is_meet() || intersect(d.C(), d.L()) != d.H()) o.fail(nf.name + " C cap L");
      }
  }
  o.detail << "unit pairs=" << pairs;
  return o;
}

// 6. M_x is free over B(x,x) with one generator per orbit point.
Outcome criterion6() {
  Outcome o;
  std::size_t units = 0;
  for (const auto& f : {Field::rationals(), Field::prime(3)})
    for (const auto& nf : battery(f)) {
      AlgebraPtr b = make_algebra(nf.tg);
      for (Arrow x : b->groupoid().units()) {
        ++units;
        auto m = ImprimitivityBimodule::build(IsotropyData::build(b, x, x));
        const std::size_t expect = b->groupoid().orbit(x).size() * b->groupoid().isotropy_group(x).arrows.size();
        const Matrix& z = m.zeta_matrix();
        if (m.dim() != expect || z.rows() != expect || z.cols() != expect || rank(z) != expect)
          o.fail(nf.name + " zeta coordinates");
        for (const auto& c : check_bimodule(m))
          if (!c.pass) o.fail(nf.name + " " + c.name);
      }
    }
  o.detail << "units=" << units;
  return o;
}

struct Case {
  std::string fixture;
  AlgebraPtr b;
  Arrow x;
  std::string module;
  FdModule w;
};

std::vector<Case> battery_cases(const Field& f) {
  std::vector<Case> out;
  for (const auto& nf : battery(f)) {
    AlgebraPtr b = make_algebra(nf.tg);
    for (Arrow x : b->groupoid().units()) {
      IsotropyData xx = IsotropyData::build(b, x, x);
      for (auto& w : isotropy_battery(xx)) out.push_back({nf.name, b, x, w.name, w.module});
    }
  }
  return out;
}

// 7. V -> Res_x Ind_x V is an isomorphism.
Outcome criterion7() {
  Outcome o;
  std::size_t cases = 0, min_battery = 1000;
  for (const auto& nf : battery(Field::prime(3))) {
    AlgebraPtr b = make_algebra(nf.tg);
    for (Arrow x : b->groupoid().units()) {
      IsotropyData xx = IsotropyData::build(b, x, x);
      auto m = ImprimitivityBimodule::build(xx);
      auto mods = isotropy_battery(xx);
      min_battery = std::min(min_battery, mods.size());
      for (const auto& w : mods) {
        ++cases;
        if (!verify_res_ind_roundtrip(m, w.module).ok()) o.fail(nf.name + " " + w.name);
      }
    }
  }
  if (min_battery < 3) o.fail("battery smaller than 3");
  o.detail << "cases=" << cases << " smallest battery=" << min_battery;
  return o;
}

// 8. Submodule lattices of V and Ind_x V correspond.
Outcome criterion8() {
  Outcome o;
  std::size_t checked = 0, skipped = 0;
  for (const auto& f : {Field::prime(2), Field::prime(3)})
    for (const auto& c : battery_cases(f)) {
      IsotropyData xx = IsotropyData::build(c.b, c.x, c.x);
      auto m = ImprimitivityBimodule::build(xx);
      if (!finite_within(f, m.orbit().size() * c.w.dim())) {
        ++skipped;
        continue;
      }
      ++checked;
      auto lc = verify_lattice_transfer(m, c.w);
      if (!lc.ok() || lc.submodules_v != lc.submodules_ind) o.fail(c.fixture + " " + c.module + " over " + f.name());
    }
  o.detail << "checked=" << checked << " beyond 2^20=" << skipped;
  if (checked == 0) o.fail("nothing checked");
  return o;
}

// B-modules for the embedding and annihilator checks: the regular module and
// the modules induced from the isotropy battery.
std::vector<std::pair<std::string, FdModule>> b_modules(const AlgebraPtr& b) {
  std::vector<std::pair<std::string, FdModule>> out;
  out.emplace_back("regular", regular_module(b->presentation()));
  for (Arrow x : b->groupoid().units()) {
    IsotropyData xx = IsotropyData::build(b, x, x);
    auto m = ImprimitivityBimodule::build(xx);
    for (const auto& w : isotropy_battery(xx))
      out.emplace_back("Ind_" + b->groupoid().label(x) + " " + w.name, induce(m, w.module));
  }
  return out;
}

// 9. rho: Ind_x Res_x V -> V is injective; onto for irreducible V with
// Res_x V != 0, and Res_x V is then irreducible.
Outcome criterion9() {
  Outcome o;
  std::size_t cases = 0, irreducible = 0, onto_reducible = 0, undecided = 0;
  for (const auto& f : {Field::prime(2), Field::prime(3)})
    for (const auto& nf : battery(f)) {
      AlgebraPtr b = make_algebra(nf.tg);
      for (const auto& [name, v] : b_modules(b)) {
        auto verdict = is_irreducible(v);
        for (Arrow x : b->groupoid().units()) {
          IsotropyData xx = IsotropyData::build(b, x, x);
          Restriction res = restriction(v, xx);
          if (res.carrier.dim() == 0) continue;
          ++cases;
          auto e = verify_ind_res_embedding(ImprimitivityBimodule::build(xx), v);
          if (!e.injective || !e.linear) o.fail(nf.name + " " + name + " not injective");
          if (verdict.irreducible()) {
            ++irreducible;
            auto rv = is_irreducible(res.module);
            if (!e.onto) o.fail(nf.name + " " + name + " irreducible but not onto");
            if (!(rv.irreducible() && rv.exact)) o.fail(nf.name + " " + name + " Res_x V not certified irreducible");
          } else if (verdict.reducible()) {
            onto_reducible += e.onto;
          } else {
            ++undecided;
          }
        }
      }
    }
  o.detail << "cases=" << cases << " irreducible=" << irreducible << " reducible but onto=" << onto_reducible
           << " undecided=" << undecided << " (the converse does not hold)";
  return o;
}

Subspace invariant_closure(const Field& f, std::size_t n, std::vector<Vector> gens, const std::vector<Matrix>& mats) {
  Subspace s = span(f, n, gens);
  while (true) {
    std::vector<Vector> more = s.basis();
    for (const auto& m : mats)
      for (const auto& v : s.basis()) more.push_back(m.apply(v));
    Subspace t = span(f, n, more);
    if (t == s) return s;
    s = t;
  }
}

// 10. Ann(Ind_x V) = Ind_x(Ann V), and the two-sided criterion for
// Ann(Ind_x(V/W)) on random triples.
Outcome criterion10() {
  Outcome o;
  std::size_t ann_cases = 0, triples = 0, zero_side = 0;
  for (const auto& f : {Field::prime(3), Field::rationals()})
    for (const auto& nf : battery(f)) {
      AlgebraPtr b = make_algebra(nf.tg);
      for (Arrow x : b->groupoid().units()) {
        IsotropyData xx = IsotropyData::build(b, x, x);
        auto m = ImprimitivityBimodule::build(xx);
        for (const auto& w : isotropy_battery(xx)) {
          ++ann_cases;
          if (annihilator(induce(m, w.module)) != induced_ideal(xx, annihilator(w.module)))
            o.fail(nf.name + " " + w.name + " annihilator identity");
        }
      }
    }
  const Field f = Field::prime(3);
  std::mt19937 rng(10);
  for (const auto& nf : battery(f)) {
    AlgebraPtr b = make_algebra(nf.tg);
    auto pool = b_modules(b);
    const auto& units = b->groupoid().units();
    for (int t = 0; t < 100; ++t, ++triples) {
      const FdModule& v = pool[rng() % pool.size()].second;
      Arrow x = units[rng() % units.size()];
      IsotropyData xx = IsotropyData::build(b, x, x);
      std::vector<Matrix> cmats;
      for (const auto& c : xx.C().basis()) cmats.push_back(v.rho(c));
      std::vector<Vector> gens = germ_space(v, *b, x).jv.basis();
      for (std::size_t k = rng() % 3; k > 0; --k) gens.push_back(random_vector(f, v.dim(), rng, 0, 2));
      Subspace w = invariant_closure(f, v.dim(), gens, cmats);
      FdModule ind = induce(ImprimitivityBimodule::build(xx), fiber_quotient(v, xx, w));
      // Half the probes are drawn from Ann(Ind_x(V/W)) so both answers occur.
      Subspace ann = annihilator(ind);
      Vector probe = random_vector(f, b->dim(), rng, 0, 2);
      if (t % 2 == 0 && ann.dim() > 0) {
        probe = zero_vector(f, b->dim());
        for (const auto& a : ann.basis()) axpy(probe, random_vector(f, 1, rng, 0, 2)[0], a);
      }
      bool direct = true;
      for (Arrow d = 0; d < b->dim(); ++d) {
        Matrix mm = v.rho(b->presentation()->multiply(unit_vector(f, b->dim(), d), probe));
        for (std::size_t j = 0; j < v.dim(); ++j) direct = direct && w.contains(mm.column(j));
      }
      bool killed = ind.rho(probe).is_zero();
      zero_side += killed;
      if (killed != direct) o.fail(nf.name + " triple " + std::to_string(t));
    }
  }
  o.detail << "annihilator cases=" << ann_cases << " triples=" << triples << " in annihilator=" << zero_side;
  return o;
}

// 11. Effros-Hahn over GF(2) for dim B <= 12, and primitive inducing ideals.
Outcome criterion11() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const Field f = Field::prime(2);
  std::size_t fixtures = 0, ideals = 0, primitive = 0, yes = 0;
  for (const auto& nf : battery(f)) {
    if (nf.tg.groupoid().size() > 12) continue;
    ++fixtures;
    AlgebraPtr b = make_algebra(nf.tg);
    auto all = all_ideals(*b->presentation());
    for (const auto& i : all) {
      ++ideals;
      if (!effros_hahn_check(b, i).intersection_ok) o.fail(nf.name + " intersection");
    }
    for (const auto& m : maximal_ideals(all)) {
      ++primitive;
      auto w = primitive_witness(*b, m);
      if (!w) {
        o.fail(nf.name + " no faithful irreducible module");
        continue;
      }
      auto rep = effros_hahn_check(b, m, &*w);
      if (!rep.ok() || !rep.single_x) o.fail(nf.name + " single induced ideal");
      auto q = inducing_ideal_experiment(b, m, *w);
      yes += q.answer;
      if (!q.answer || !q.inducing || !q.inducing_primitive) o.fail(nf.name + " inducing ideal: " + q.reason);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > 60) o.fail("runtime " + std::to_string(secs) + " s");
  o.detail << "fixtures=" << fixtures << " ideals=" << ideals << " primitive=" << primitive << " yes=" << yes
           << " seconds=" << static_cast<int>(secs + 0.5);
  return o;
}

std::string full_suite(const std::filesystem::path& file) {
  ProblemFile p = parse_problem_file(file.string());
  Report r;
  AlgebraPtr b = run_validate(p, r);
  if (b) run_suite(p, b, "all", r);
  return r.str();
}

// 12. Full-suite reports are byte-identical across runs and thread counts.
Outcome criterion12() {
  Outcome o;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(GKD_FIXTURE_DIR))
    if (e.path().extension() == ".gkd" && e.path().stem() != "corrupted") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  const int threads = std::max(4, omp_get_max_threads());
  std::size_t bytes = 0;
  for (const auto& file : files) {
    omp_set_num_threads(threads);
    std::string first = full_suite(file), second = full_suite(file);
    omp_set_num_threads(1);
    std::string serial = full_suite(file);
    omp_set_num_threads(threads);
    bytes += first.size();
    if (first != second) o.fail(file.filename().string() + " differs between runs");
    if (first != serial) o.fail(file.filename().string() + " differs with one thread");
  }
  if (files.empty()) o.fail("no fixture files in " + std::string(GKD_FIXTURE_DIR));
  o.detail << "files=" << files.size() << " report bytes=" << bytes << " threads=" << threads << "/1";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  // --expect-fail N: criterion N is known to be unattainable; the run succeeds
  // only if N fails for the documented reason and every other criterion passes.
  std::set<std::size_t> expected;
  for (int i = 1; i + 1 < argc; i += 2)
    if (std::string(argv[i]) == "--expect-fail") expected.insert(std::stoul(argv[i + 1]));
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3,  criterion4,
                                                       criterion5, criterion6, criterion7,  criterion8,
                                                       criterion9, criterion10, criterion11, criterion12};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (expected.count(k + 1) ? (o.pass || o.unexplained) : !o.pass) ++failed;
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s) "
         << o.detail.str();
    std::cout << line.str() << std::endl;
  }
  return failed ? 1 : 0;
}
