#pragma once

// Brute-force reference implementations. They use only permutation
// arithmetic on explicit element lists, never the stabilizer chain or the
// subgroup engine, so agreement with the library is meaningful.

#include <cstddef>
#include <vector>

#include "carter/permutation.hpp"

namespace oracle {

using carter::Permutation;
using Elements = std::vector<Permutation>;  // sorted, duplicate-free

Elements closure(std::size_t degree, std::vector<Permutation> const& gens);

bool contains(Elements const& set, Permutation const& x);
bool is_subset(Elements const& small, Elements const& big);

/// Every subgroup, each as a sorted element list, found by adjoining one
/// element at a time starting from the trivial group.
std::vector<Elements> subgroups(Elements const& g);

Elements centralizer(Elements const& g, Permutation const& z);
Elements normalizer(Elements const& g, Elements const& h);
Elements center(Elements const& g);
bool is_normal(Elements const& g, Elements const& h);

/// Subgroup generated by all commutators [a, b] with a in A, b in B.
Elements commutator(Elements const& a, Elements const& b);
bool is_nilpotent(Elements const& g);
bool is_soluble(Elements const& g);

/// Nilpotent self-normalizing subgroups.
std::vector<Elements> carter_subgroups(Elements const& g);

bool conjugate(Elements const& g, Elements const& h, Elements const& k);

/// Number of conjugacy classes among the given subgroups.
std::size_t conjugacy_class_count(Elements const& g, std::vector<Elements> const& subs);

Elements conjugate_set(Elements const& h, Permutation const& by);

}  // namespace oracle
