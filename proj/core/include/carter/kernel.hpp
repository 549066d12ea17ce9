#pragma once

#include <cstdint>
#include <vector>

#include "carter/group.hpp"

namespace carter {

/// How centralizers and normalizers are searched. `automatic` filters the
/// element list up to kEnumerationThreshold and backtracks over the
/// stabilizer chain above it.
enum class SearchMethod { automatic, enumerate, backtrack };

inline constexpr std::uint64_t kEnumerationThreshold = 10000;

/// C_G(z). Throws NotAMember if z is not in G.
SubgroupHandle centralizer(FiniteGroup const& g, Permutation const& z,
                           SearchMethod method = SearchMethod::automatic);

/// Elements of G commuting with every generator of X; X need not lie in G.
SubgroupHandle centralizer_of(FiniteGroup const& g, FiniteGroup const& x,
                              SearchMethod method = SearchMethod::automatic);

/// N_G(H). Throws NotASubgroup if H is not contained in G.
SubgroupHandle normalizer(FiniteGroup const& g, SubgroupHandle const& h,
                          SearchMethod method = SearchMethod::automatic);

/// {g in G : X^g = X} for an arbitrary X of the same degree.
SubgroupHandle normalizer_of(FiniteGroup const& g, FiniteGroup const& x,
                             SearchMethod method = SearchMethod::automatic);

SubgroupHandle center(FiniteGroup const& g);

SubgroupHandle normal_closure(FiniteGroup const& g,
                              std::vector<Permutation> const& elements);

/// [A, G] for A normalized by G: the normal closure of the commutators of
/// generators.
SubgroupHandle commutator_with(FiniteGroup const& g, FiniteGroup const& a);

SubgroupHandle derived_subgroup(FiniteGroup const& g);

/// G = L_0 >= L_1 >= ... down to the first repeated term.
std::vector<SubgroupHandle> lower_central_series(FiniteGroup const& g);
std::vector<SubgroupHandle> derived_series(FiniteGroup const& g);

bool is_abelian(FiniteGroup const& g);
bool is_nilpotent(FiniteGroup const& g);
bool is_soluble(FiniteGroup const& g);
bool is_perfect(FiniteGroup const& g);

/// True iff every generator of G normalizes X.
bool normalizes(FiniteGroup const& g, FiniteGroup const& x);

/// A ∩ B as a subgroup of A.
SubgroupHandle intersection(FiniteGroup const& a, FiniteGroup const& b);

/// A Sylow p-subgroup, grown deterministically by adjoining the least
/// normalizing p-element at each step.
SubgroupHandle sylow_subgroup(FiniteGroup const& g, std::uint64_t p);

/// O_p(G): generated by the elements whose normal closure is a p-group.
SubgroupHandle p_core(FiniteGroup const& g, std::uint64_t p);

/// Product of the p-cores over primes dividing |G|.
SubgroupHandle fitting_subgroup(FiniteGroup const& g);

std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
bool is_prime_power(std::uint64_t n, std::uint64_t* prime = nullptr);

struct ConjugacyClass {
  Permutation representative;  // lexicographically least member
  std::uint64_t size = 0;
};

/// Element conjugacy classes ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(FiniteGroup const& g);

/// Action of G on the right cosets of U. Coset 0 is U itself; the others
/// are numbered by their lexicographically least element.
struct CosetAction {
  std::vector<Permutation> representatives;
  std::vector<Permutation> generator_images;  // one per generator of G
  FiniteGroup image;

  /// Image of an arbitrary element of G, computed by acting on the cosets.
  Permutation act(Permutation const& g) const;

  // Internal lookup: coset index for each element rank of G.
  FiniteGroup source;
  std::vector<std::uint32_t> coset_of;
};

CosetAction coset_action(FiniteGroup const& g, FiniteGroup const& u);

}  // namespace carter
