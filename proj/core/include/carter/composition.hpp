#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "carter/group.hpp"

namespace carter {

struct FactorDescriptor {
  std::uint64_t order = 1;
  bool abelian = true;
  std::string label;  // "C_p", "Alt_n", "PSL(2,q)" or "unidentified-simple-<order>"
};

/// G = terms[0] > terms[1] > ... > terms.back() = 1, each term a maximal
/// normal subgroup of the one before.
struct CompositionSeries {
  std::vector<SubgroupHandle> terms;
  std::vector<FactorDescriptor> factors;
};

/// Which maximal normal subgroup to step to, in the canonical subgroup
/// order. Two choices give two independently refined series.
enum class SeriesChoice { least, greatest };

inline constexpr std::uint64_t kIdentificationLimit = 10000;

CompositionSeries composition_series(FiniteGroup const& g,
                                     SeriesChoice choice = SeriesChoice::least);

/// Label of the simple factor A/B (B maximal normal in A).
FactorDescriptor describe_factor(FiniteGroup const& a, FiniteGroup const& b);

/// Label of a simple group from its order and element-order statistics.
std::string identify_simple(FiniteGroup const& s);

}  // namespace carter
