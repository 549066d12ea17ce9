#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "carter/group.hpp"

namespace carter {

/// Largest section order |A/B| realized by the action on non-trivial cosets.
inline constexpr std::uint64_t kDefaultElementActionCap = 2500;

/// A homomorphism from `source` onto a permutation realization of a quotient
/// or of the automorphisms induced on a section A/B.
struct SectionMap {
  SubgroupHandle source;
  SubgroupHandle section_top;     // A
  SubgroupHandle section_bottom;  // B, normal in A
  FiniteGroup image_group;        // image of source
  std::vector<Permutation> map;   // image of each source generator
  SubgroupHandle kernel;

  /// Image of any element normalizing A and B, evaluated by the action.
  std::function<Permutation(Permutation const&)> apply;

  /// Subgroup of the realization generated by the images of X's generators.
  FiniteGroup image_of(FiniteGroup const& x) const;
};

/// G acting on the right cosets of N; the kernel is N. Throws NotNormal.
SectionMap quotient(FiniteGroup const& g, SubgroupHandle const& n);

/// N_H(A) ∩ N_H(B). Throws NotNormal when B is not normal in A.
SubgroupHandle section_normalizer(SubgroupHandle const& h,
                                  SubgroupHandle const& a,
                                  SubgroupHandle const& b);

/// N_H(A/B) acting by conjugation on the non-trivial cosets of B in A
/// (degree |A/B| - 1); the image is Aut_H(A/B), the kernel C_H(A/B).
/// Throws NotNormal, NontrivialCenter when Z(A/B) != 1, GroupTooLarge above
/// the cap.
SectionMap induced_on_section(SubgroupHandle const& h, SubgroupHandle const& a,
                              SubgroupHandle const& b,
                              std::uint64_t cap = kDefaultElementActionCap);

/// The section S/1.
SectionMap induced_automorphisms(SubgroupHandle const& h, SubgroupHandle const& s,
                                 std::uint64_t cap = kDefaultElementActionCap);

/// <Aut_H(A/B), Inn(A/B)> inside the realization of the section.
FiniteGroup group_with_induced(SubgroupHandle const& h, SubgroupHandle const& a,
                               SubgroupHandle const& b,
                               std::uint64_t cap = kDefaultElementActionCap);

FiniteGroup group_with_induced(SubgroupHandle const& h, SubgroupHandle const& s,
                               std::uint64_t cap = kDefaultElementActionCap);

}  // namespace carter
