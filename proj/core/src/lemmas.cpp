#include "carter/lemmas.hpp"

#include <unordered_set>

#include "carter/error.hpp"
#include "carter/kernel.hpp"

namespace carter {

namespace {

std::unordered_set<Permutation> conjugacy_class_of(FiniteGroup const& g,
                                                   Permutation const& z) {
  std::unordered_set<Permutation> seen{z};
  std::vector<Permutation> queue{z};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto const& s : g.generators()) {
      auto y = queue[i].conjugate_by(s);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

bool meets_other_than(std::unordered_set<Permutation> const& cls,
                      FiniteGroup const& subgroup, Permutation const& z) {
  for (auto const& y : cls) {
    if (y != z && subgroup.contains(y)) return true;
  }
  return false;
}

}  // namespace

bool verify_quotient_image(FiniteGroup const& g, SubgroupHandle const& h,
                           SubgroupHandle const& n) {
  if (!g.contains(n.group()) || !normalizes(g, n.group())) {
    fail(ErrorCode::NotNormal, "N is not normal in G");
  }
  if (!is_carter(g, h)) fail(ErrorCode::NotCarter, "H is not a Carter subgroup of G");
  auto const section = quotient(g, n);
  auto const image = section.image_of(h.group());
  return is_carter(section.image_group, SubgroupHandle(section.image_group, image));
}

Lemma5Report verify_lemma5(FiniteGroup const& g, SubgroupHandle const& k,
                           Permutation const& z, Limits const& limits) {
  if (!is_carter(g, k)) fail(ErrorCode::NotCarter, "K is not a Carter subgroup of G");
  auto const zk = center(k.group());
  if (z.is_identity() || !zk.contains(z)) {
    fail(ErrorCode::NotCentral, "z is not a non-trivial element of Z(K)");
  }
  auto const cz = centralizer(g, z);
  if (!check_star(cz.group(), limits).satisfied) {
    fail(ErrorCode::StarFails, "C_G(z) does not satisfy condition (*)");
  }

  Lemma5Report report;
  auto const cls = conjugacy_class_of(g, z);
  report.class_size = cls.size();

  auto const search = overgroups(g, k, limits.overgroups);
  report.overgroups_complete = search.complete;
  for (auto const& y : search.overgroups) {
    if (!check_star(y.group(), limits).satisfied) {
      ++report.overgroups_skipped;
      continue;
    }
    ++report.overgroups_checked;
    if (normalizer(g, y).order() != y.order()) {
      report.overgroups_self_normalizing = false;
    }
  }

  report.conjugates_in_ZK = !meets_other_than(cls, zk.group(), z);
  report.conjugates_in_ZG = !meets_other_than(cls, center(g).group(), z);
  report.readings_differ = report.conjugates_in_ZK != report.conjugates_in_ZG;

  auto const carter = carter_subgroups(g, limits);
  for (auto const& c : carter.classes) {
    if (are_conjugate(g, c.representative, k)) continue;
    auto const zh = center(c.representative.group());
    for (auto const& y : cls) {
      if (zh.contains(y)) report.center_meeting_other_carter = false;
    }
  }

  auto const order = static_cast<std::int64_t>(z.order());
  for (std::int64_t e = 2; e < order; ++e) {
    auto const power = z.pow(e);
    if (power != z && cls.count(power) != 0) report.power_conjugacy = false;
  }
  return report;
}

Lemma1Report run_lemma1(FiniteGroup const& g, Limits const& limits) {
  Lemma1Report report;
  report.star = check_star(g, limits).satisfied;
  if (!report.star) return report;
  auto const carter = carter_subgroups(g, limits);
  auto const normals = normal_subgroups(g, limits.normal_subgroups);
  for (std::size_t i = 0; i < carter.classes.size(); ++i) {
    for (auto const& n : normals) {
      QuotientImageCheck check{i, n, false};
      check.holds = verify_quotient_image(g, carter.classes[i].representative, n);
      if (!check.holds) ++report.failures;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

Lemma5Summary run_lemma5(FiniteGroup const& g, Limits const& limits) {
  Lemma5Summary summary;
  auto const carter = carter_subgroups(g, limits);
  for (std::size_t i = 0; i < carter.classes.size(); ++i) {
    auto const& k = carter.classes[i].representative;
    auto const zk = center(k.group());
    for (auto const& z : zk.group().elements().elements()) {
      if (z.is_identity()) continue;
      Lemma5Run run{i, z, std::nullopt, {}};
      try {
        run.report = verify_lemma5(g, k, z, limits);
        if (!run.report->all()) ++summary.failures;
      } catch (Error const& e) {
        if (e.code() != ErrorCode::StarFails) throw;
        run.skipped = e.what();
      }
      summary.runs.push_back(std::move(run));
    }
  }
  return summary;
}

}  // namespace carter
