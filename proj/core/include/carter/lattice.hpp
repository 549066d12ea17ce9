#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "carter/group.hpp"

namespace carter {

inline constexpr std::uint64_t kDefaultSubgroupCap = 400;
inline constexpr std::uint64_t kDefaultNormalCap = 10000;

/// A conjugacy class of subgroups. The representative is the conjugate whose
/// sorted element list is lexicographically least.
struct SubgroupClass {
  SubgroupHandle representative;
  std::uint64_t class_size = 0;
};

enum class SubgroupFilter {
  all,
  // Restricts the cyclic extension to nilpotent subgroups, which stays
  // complete because every nilpotent subgroup has a nilpotent maximal
  // normal subgroup of prime index.
  nilpotent,
};

/// Conjugacy classes of subgroups by the cyclic extension method, seeded
/// with the trivial group and (for `all`) the perfect subgroups. Classes are
/// ordered by subgroup order, then by sorted element list. Throws
/// GroupTooLarge when |G| > order_cap.
std::vector<SubgroupClass> subgroup_classes(FiniteGroup const& g,
                                            SubgroupFilter filter,
                                            std::uint64_t order_cap);

std::vector<SubgroupClass> all_subgroup_classes(
    FiniteGroup const& g, std::uint64_t order_cap = kDefaultSubgroupCap);

/// Some g with H^g = K, or nullopt. Throws NotASubgroup.
std::optional<Permutation> are_conjugate(FiniteGroup const& g,
                                         SubgroupHandle const& h,
                                         SubgroupHandle const& k);

/// All normal subgroups, from joins of normal closures of conjugacy
/// classes; ordered by order, then by sorted element list.
std::vector<SubgroupHandle> normal_subgroups(
    FiniteGroup const& g, std::uint64_t order_cap = kDefaultNormalCap);

std::vector<SubgroupHandle> minimal_normal_subgroups(
    FiniteGroup const& g, std::uint64_t order_cap = kDefaultNormalCap);

/// Simple direct factors T_1, ..., T_k of a non-abelian minimal normal
/// subgroup B of its parent. Throws NotMinimalNormal or AbelianFactor.
std::vector<SubgroupHandle> decompose_direct_factors(SubgroupHandle const& b);

/// Factors of B = T_1 x ... x T_k with each T_i non-abelian simple, without
/// requiring minimality in the parent: the minimal normal subgroups of B.
/// Throws AbelianFactor when B is not such a product.
std::vector<SubgroupHandle> simple_direct_factors(SubgroupHandle const& b);

struct OvergroupSearch {
  std::vector<SubgroupHandle> overgroups;  // includes K and G
  bool complete = true;
};

/// Subgroups Y with K <= Y <= G. Exhaustive when |G| <= order_cap;
/// otherwise only K, G and the groups <K, x> for conjugacy class
/// representatives x (complete = false).
OvergroupSearch overgroups(FiniteGroup const& g, SubgroupHandle const& k,
                           std::uint64_t order_cap = kDefaultSubgroupCap);

/// Sorted ranks of the elements of H inside G's element index.
std::vector<ElementIndex::Rank> element_ranks(FiniteGroup const& g,
                                              FiniteGroup const& h);

/// Canonical order on subgroups of a common group: order first, then the
/// sorted element list.
bool subgroup_less(FiniteGroup const& g, FiniteGroup const& a,
                   FiniteGroup const& b);

}  // namespace carter
