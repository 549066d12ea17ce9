#include "carter/carter.hpp"

#include "carter/error.hpp"
#include "carter/kernel.hpp"

namespace carter {

namespace {

std::vector<SubgroupClass> nilpotent_classes(FiniteGroup const& g,
                                             Limits const& limits,
                                             std::string* method) {
  if (g.order() <= limits.exhaustive_subgroups) {
    if (method) *method = "exhaustive";
    std::vector<SubgroupClass> result;
    for (auto& c : all_subgroup_classes(g, limits.exhaustive_subgroups)) {
      if (is_nilpotent(c.representative.group())) result.push_back(std::move(c));
    }
    return result;
  }
  if (g.order() > limits.pruned_carter) {
    fail(ErrorCode::GroupTooLarge,
         "group order " + std::to_string(g.order()) +
             " exceeds the Carter search limit " + std::to_string(limits.pruned_carter));
  }
  if (method) *method = "pruned";
  return subgroup_classes(g, SubgroupFilter::nilpotent, limits.pruned_carter);
}

}  // namespace

bool is_carter(FiniteGroup const& g, SubgroupHandle const& h) {
  if (h.degree() != g.degree() || !g.contains(h.group())) {
    fail(ErrorCode::NotASubgroup, "is_carter: H is not a subgroup of G");
  }
  return is_nilpotent(h.group()) && normalizer(g, h).order() == h.order();
}

std::vector<SubgroupClass> nilpotent_subgroup_classes(FiniteGroup const& g,
                                                      Limits const& limits) {
  return nilpotent_classes(g, limits, nullptr);
}

CarterReport carter_subgroups(FiniteGroup const& g, Limits const& limits,
                              std::string group_id) {
  CarterReport report;
  report.group_id = std::move(group_id);
  report.group_order = g.order();
  for (auto& c : nilpotent_classes(g, limits, &report.method)) {
    // The class has [G : N_G(H)] members, so H is self-normalizing iff the
    // class size is the index of H.
    if (c.class_size * c.representative.order() != g.order()) continue;
    report.total_count += c.class_size;
    report.classes.push_back(std::move(c));
  }
  report.conjugate = report.classes.size() <= 1;
  return report;
}

StarReport check_star(FiniteGroup const& g, Limits const& limits,
                      std::string group_id) {
  StarReport report;
  report.group_id = std::move(group_id);
  if (is_soluble(g)) return report;
  auto const series = composition_series(g);
  report.factors = series.factors;
  auto const nilpotent = nilpotent_subgroup_classes(g, limits);

  // Conjugate inputs often give the same induced group; cache by group.
  std::vector<std::pair<FiniteGroup, CarterReport>> cache;
  for (std::size_t i = 0; i < series.factors.size(); ++i) {
    if (series.factors[i].abelian) continue;
    auto const& a = series.terms[i];
    auto const& b = series.terms[i + 1];
    for (auto const& n : nilpotent) {
      StarEntry entry;
      entry.factor_index = i;
      entry.factor_label = series.factors[i].label;
      entry.nilpotent = n.representative;
      FiniteGroup induced;
      try {
        induced = group_with_induced(n.representative, a, b, limits.element_action);
      } catch (Error const& e) {
        if (e.code() == ErrorCode::NontrivialCenter) {
          fail(ErrorCode::Internal, "simple section with non-trivial center");
        }
        throw;
      }
      entry.induced_group_order = induced.order();
      CarterReport const* found = nullptr;
      for (auto const& [group, carter] : cache) {
        if (group.order() == induced.order() && group == induced) found = &carter;
      }
      if (!found) {
        cache.emplace_back(induced, carter_subgroups(induced, limits));
        found = &cache.back().second;
      }
      entry.carter_classes = found->classes.size();
      entry.carter_conjugate = found->conjugate;
      report.satisfied = report.satisfied && entry.carter_conjugate;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

TheoremReport check_theorem(FiniteGroup const& g, Limits const& limits,
                            std::string group_id) {
  TheoremReport report;
  report.star_report = check_star(g, limits, group_id);
  report.carter_report = carter_subgroups(g, limits, std::move(group_id));
  report.star = report.star_report.satisfied;
  report.carter_conjugate = report.carter_report.conjugate;
  report.verdict =
      (!report.star || report.carter_conjugate) ? "consistent" : "COUNTEREXAMPLE";
  return report;
}

}  // namespace carter
