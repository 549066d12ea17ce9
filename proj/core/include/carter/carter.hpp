#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carter/composition.hpp"
#include "carter/lattice.hpp"
#include "carter/sections.hpp"

namespace carter {

/// Search limits; every report records the values in force.
struct Limits {
  std::uint64_t exhaustive_subgroups = kDefaultSubgroupCap;
  // Nilpotent-only enumeration is used up to this order.
  std::uint64_t pruned_carter = 2000;
  std::uint64_t element_action = kDefaultElementActionCap;
  std::uint64_t normal_subgroups = kDefaultNormalCap;
  std::uint64_t overgroups = kDefaultSubgroupCap;
};

/// Nilpotent and self-normalizing. Throws NotASubgroup.
bool is_carter(FiniteGroup const& g, SubgroupHandle const& h);

struct CarterReport {
  std::string group_id;
  std::uint64_t group_order = 1;
  std::string method;  // "exhaustive" or "pruned"
  std::vector<SubgroupClass> classes;
  std::uint64_t total_count = 0;
  bool conjugate = true;  // also true when there are no Carter subgroups
};

/// Carter subgroups up to conjugacy. All subgroup classes are scanned up to
/// limits.exhaustive_subgroups, nilpotent classes only up to
/// limits.pruned_carter. Throws GroupTooLarge beyond that.
CarterReport carter_subgroups(FiniteGroup const& g, Limits const& limits = {},
                              std::string group_id = {});

/// Nilpotent subgroups up to conjugacy. Throws GroupTooLarge.
std::vector<SubgroupClass> nilpotent_subgroup_classes(FiniteGroup const& g,
                                                      Limits const& limits = {});

struct StarEntry {
  std::size_t factor_index = 0;  // position in the composition series
  std::string factor_label;
  SubgroupHandle nilpotent;      // class representative N
  std::uint64_t induced_group_order = 0;
  std::size_t carter_classes = 0;
  bool carter_conjugate = true;
};

struct StarReport {
  std::string group_id;
  std::vector<FactorDescriptor> factors;
  std::vector<StarEntry> entries;
  bool satisfied = true;
};

/// For each non-abelian composition factor S = A/B and each nilpotent class
/// representative N, whether the Carter subgroups of <Aut_N(S), S> are
/// conjugate. Soluble groups satisfy the condition with no entries.
StarReport check_star(FiniteGroup const& g, Limits const& limits = {},
                      std::string group_id = {});

struct TheoremReport {
  bool star = true;
  bool carter_conjugate = true;
  std::string verdict;  // "consistent" or "COUNTEREXAMPLE"
  StarReport star_report;
  CarterReport carter_report;
};

TheoremReport check_theorem(FiniteGroup const& g, Limits const& limits = {},
                            std::string group_id = {});

}  // namespace carter
