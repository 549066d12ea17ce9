// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every check is compared against brute force or against
// facts known independently of the library.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "carter/carter.hpp"
#include "carter/catalog.hpp"
#include "carter/composition.hpp"
#include "carter/error.hpp"
#include "carter/families.hpp"
#include "carter/kernel.hpp"
#include "carter/lattice.hpp"
#include "carter/lemmas.hpp"
#include "carter/wreath.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace carter;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Permutation cyc(std::size_t degree, std::string_view text) { return Permutation::parse(text, degree); }

oracle::Elements naive(FiniteGroup const& g) { return oracle::closure(g.degree(), g.generators()); }

Limits wide_limits() {
  Limits l;
  l.pruned_carter = 30000;
  return l;
}

std::vector<GroupFile> const& soluble() {
  static auto const files = testing_support::load_corpus("soluble");
  return files;
}

std::vector<GroupFile> const& nonsoluble() {
  static auto const files = testing_support::load_corpus("nonsoluble");
  return files;
}

Outcome criterion1() {
  auto const start = Clock::now();
  std::size_t checked = 0;
  for (auto const& f : soluble()) {
    auto r = carter_subgroups(f.group, {}, f.id);
    if (r.classes.size() != 1 || r.total_count < 1) {
      return {false, f.id + ": " + std::to_string(r.classes.size()) + " classes"};
    }
    ++checked;
  }
  double const t = seconds_since(start);
  std::ostringstream out;
  out << checked << " soluble groups, one class each, " << t << "s";
  return {checked >= 74 && t < 300, out.str()};
}

Outcome criterion2() {
  struct Case {
    std::string name;
    FiniteGroup g;
    std::size_t total;
    std::uint64_t order;
  };
  std::vector<Case> cases{{"Sym3", symmetric_group(3), 3, 2},
                          {"Alt4", alternating_group(4), 4, 3},
                          {"Sym4", symmetric_group(4), 3, 8},
                          {"Alt5", alternating_group(5), 0, 0},
                          {"Sym5", symmetric_group(5), 15, 8}};
  for (auto const& c : cases) {
    auto elements = naive(c.g);
    auto brute = oracle::carter_subgroups(elements);
    auto r = carter_subgroups(c.g);
    std::size_t const brute_classes = oracle::conjugacy_class_count(elements, brute);
    bool ok = brute.size() == c.total && r.total_count == c.total &&
              r.classes.size() == brute_classes && r.conjugate &&
              r.classes.size() == (c.total ? 1u : 0u);
    for (auto const& cls : r.classes) ok = ok && cls.representative.order() == c.order;
    for (auto const& h : brute) ok = ok && h.size() == c.order;
    if (!ok) return {false, c.name + " disagrees with the exhaustive scan"};
  }
  return {true, "Sym3, Alt4, Sym4, Alt5, Sym5 match the exhaustive scan"};
}

Outcome criterion3() {
  auto const limits = wide_limits();
  std::size_t n = 0;
  for (auto const* set : {&soluble(), &nonsoluble()}) {
    for (auto const& f : *set) {
      auto r = check_theorem(f.group, limits, f.id);
      if (r.verdict != "consistent") return {false, f.id + ": " + r.verdict};
      ++n;
    }
  }
  return {true, std::to_string(n) + " corpus groups consistent"};
}

Outcome criterion4() {
  std::size_t triples = 0;
  std::size_t failures = 0;
  for (auto const& f : soluble()) {
    auto r = run_lemma1(f.group);
    triples += r.checks.size();
    failures += r.failures;
  }
  std::string detail = std::to_string(triples) + " triples, " + std::to_string(failures) + " failures";
  return {triples >= 200 && failures == 0, detail};
}

Outcome criterion5() {
  auto const limits = wide_limits();
  auto const g = wreath_product(alternating_group(5), cyclic_group(2));
  auto const carter = carter_subgroups(g, limits, "Alt5wrC2");
  if (carter.classes.empty()) {
    // Cross-check the absence: every nilpotent subgroup class has a strictly
    // larger normalizer.
    std::size_t self_normalizing = 0;
    for (auto const& c : nilpotent_subgroup_classes(g, limits)) {
      if (normalizer(g, c.representative).order() == c.representative.order()) ++self_normalizing;
    }
    return {false, "Alt5 wr C2 (order " + std::to_string(g.order()) +
                       ") has no Carter subgroup; self-normalizing nilpotent classes: " +
                       std::to_string(self_normalizing) + "; the pipeline has no input H"};
  }
  auto const h = carter.classes.front().representative;
  auto const b = SubgroupHandle(g, derived_subgroup(g).group());
  auto const e = build_wreath_embedding(g, h, b, limits);
  auto const r = verify_lemma3(g, h, b, limits);
  bool ok = e.p == 2 && check_invariants(e).all() && r.claim && r.h1_carter;
  return {ok, "p = " + std::to_string(e.p)};
}

// Same pipeline on Sym5 wr C2, which does have Carter subgroups. Reported
// for information; it is not one of the numbered criteria.
Outcome supplement5() {
  auto const start = Clock::now();
  auto const limits = wide_limits();
  auto const g = wreath_product(symmetric_group(5), cyclic_group(2));
  auto const carter = carter_subgroups(g, limits, "Sym5wrC2");
  if (carter.classes.empty()) return {false, "no Carter subgroup"};
  auto const h = carter.classes.front().representative;
  auto const b = SubgroupHandle(g, derived_subgroup(derived_subgroup(g).group()).group());
  auto const e = build_wreath_embedding(g, h, b, limits);
  auto const r = verify_lemma3(g, h, b, limits);
  bool const ok = e.p == 2 && check_invariants(e).all() && r.claim && r.h1_carter && r.bridge;
  std::ostringstream out;
  out << "Sym5 wr C2: |H| = " << h.order() << ", p = " << e.p << ", |A| = " << e.a.order()
      << ", invariants " << (check_invariants(e).all() ? "hold" : "fail") << ", claim "
      << r.claim << ", h1_carter " << r.h1_carter << ", " << seconds_since(start) << "s";
  return {ok, out.str()};
}

Outcome criterion6() {
  auto s4 = symmetric_group(4);
  auto d8 = SubgroupHandle(s4, {cyc(4, "(1 2 3 4)"), cyc(4, "(1 3)")});
  if (!verify_lemma5(s4, d8, cyc(4, "(1 3)(2 4)")).all()) return {false, "Sym4 with D8"};
  std::size_t groups = 0;
  std::size_t runs = 0;
  for (auto const& f : soluble()) {
    auto carter = carter_subgroups(f.group);
    auto const& k = carter.classes.front().representative;
    if (center(k.group()).order() == 1) continue;
    ++groups;
    auto summary = run_lemma5(f.group);
    for (auto const& run : summary.runs) {
      // Soluble groups satisfy (*) vacuously, so no run may be skipped.
      if (!run.report) return {false, f.id + ": skipped: " + run.skipped};
      if (!run.report->all()) return {false, f.id + ": z = " + run.z.to_string()};
      ++runs;
    }
  }
  return {groups > 0, std::to_string(groups) + " groups, " + std::to_string(runs) +
                          " (K, z) pairs, all flags true"};
}

Outcome criterion7() {
  std::mt19937_64 rng(2024);
  std::size_t groups = 0;
  auto check_kernel = [&](GroupFile const& f) -> std::string {
    auto const& g = f.group;
    auto elements = naive(g);
    if (g.order() != elements.size()) return "order";
    if (g.elements().elements() != elements) return "element list";
    // Membership: members, and random permutations of the full degree.
    for (auto const& x : elements) {
      if (!g.contains(x)) return "membership of a member";
    }
    std::vector<Point> images(g.degree());
    for (int i = 0; i < 200; ++i) {
      std::iota(images.begin(), images.end(), Point{0});
      std::shuffle(images.begin(), images.end(), rng);
      Permutation p(images);
      if (g.contains(p) != oracle::contains(elements, p)) return "membership of a random permutation";
    }
    for (int round = 0; round < 4; ++round) {
      auto x = g.random_element(rng);
      auto y = g.random_element(rng);
      for (auto method : {SearchMethod::enumerate, SearchMethod::backtrack}) {
        if (naive(centralizer(g, x, method).group()) != oracle::centralizer(elements, x)) {
          return "centralizer";
        }
        SubgroupHandle h(g, {x, y});
        if (naive(normalizer(g, h, method).group()) != oracle::normalizer(elements, naive(h.group()))) {
          return "normalizer";
        }
      }
    }
    if (naive(center(g).group()) != oracle::center(elements)) return "center";
    return {};
  };
  auto factors = [](CompositionSeries const& s) {
    std::map<std::string, int> m;
    for (auto const& f : s.factors) ++m[f.label];
    return m;
  };
  for (auto const* set : {&soluble(), &nonsoluble()}) {
    for (auto const& f : *set) {
      if (f.group.order() <= 500) {
        auto what = check_kernel(f);
        if (!what.empty()) return {false, f.id + ": " + what};
        ++groups;
      }
      if (factors(composition_series(f.group, SeriesChoice::least)) !=
          factors(composition_series(f.group, SeriesChoice::greatest))) {
        return {false, f.id + ": composition factors differ"};
      }
    }
  }
  return {true, std::to_string(groups) + " groups cross-validated; factor multisets agree"};
}

Outcome criterion8() {
  std::ifstream in(testing_support::fixture_path("catalog_rows.txt"));
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) rows += !line.empty() && line[0] != '#';
  if (rows != catalog_entries().size()) return {false, "fixture row count differs"};
  auto const alt = catalog_lookup(Family::alternating, {}, {});
  ExtensionDescriptor proper;
  proper.a_equals_g = false;
  auto const e6 = catalog_lookup(Family::E6, {1, 2, 1}, proper);
  ExtensionDescriptor between;
  between.a_within_ghat = true;
  auto const a = catalog_lookup(Family::A, {2, 2, 1}, between);
  bool ok = alt.verdict == Verdict::conjugate && e6.verdict == Verdict::not_guaranteed &&
            a.verdict == Verdict::conjugate;
  return {ok, std::to_string(rows) + " rows; alternating, E6 (A != G), A_l (G <= A <= Ghat)"};
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1", criterion1}, {"2", criterion2}, {"3", criterion3}, {"4", criterion4},
      {"5", criterion5}, {"6", criterion6}, {"7", criterion7}, {"8", criterion8}};
  int failed = 0;
  for (auto const& [name, run] : criteria) {
    auto const start = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %s: %s (%s) [%.1fs]\n", name.c_str(), o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
    failed += !o.pass;
    if (name == "5") {
      Outcome s;
      try {
        s = supplement5();
      } catch (std::exception const& e) {
        s = {false, std::string("exception: ") + e.what()};
      }
      std::printf("supplement 5: %s (%s)\n", s.pass ? "PASS" : "FAIL", s.detail.c_str());
    }
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
