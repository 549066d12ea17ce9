#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace carter {

/// Socle families of the classification of almost simple groups with
/// conjugate Carter subgroups. D_even is D_{2l}, D_odd is D_{2l+1}.
enum class Family {
  alternating, sporadic, A1, B, C, twisted_B2, G2, F4, twisted_F4, E7, E8,
  D_even, triality_D4, twisted_D_even, D_odd, twisted_D_odd, twisted_G2, E6,
  twisted_E6, A, twisted_A,
};

/// Condition imposed on A, with G = Soc(A) and Ĝ the group of inner-diagonal
/// automorphisms.
enum class Condition { none, two_group_or_index_le_2, A_equals_G, between_G_and_Ghat };

struct CatalogEntry {
  int block = 0;           // 1-based row block of the table
  Family family;
  std::string row;         // the family as printed, e.g. "E_7(r^t)"
  std::string parameter_constraints;  // predicate on (l, r, t), "" if none
  Condition condition;
  std::string unevaluated;  // predicate stored verbatim, never evaluated
};

/// Parameters: q = r^t as printed in the row (so 2B_2(2^{2n+1}) has r = 2,
/// t = 2n+1); l is the subscript parameter.
struct FamilyParameters {
  std::uint64_t l = 1;
  std::uint64_t r = 2;
  std::uint64_t t = 1;
};

/// Facts about A that the caller knows; unknown facts stay empty.
struct ExtensionDescriptor {
  std::optional<bool> a_equals_g;
  std::optional<bool> a_within_ghat;                // A <= Ĝ
  std::optional<bool> outer_part_is_two_group;      // A/(A ∩ Ĝ) a 2-group
  std::optional<std::uint64_t> index_in_ghat;       // |Ĝ : A ∩ Ĝ|
};

enum class Verdict { conjugate, conditional, not_guaranteed };

struct CatalogResult {
  Verdict verdict = Verdict::not_guaranteed;
  std::string citation;      // matched row, or empty
  std::string condition;     // text of the row's condition
  std::string unevaluated;   // predicate left open, if any
  std::string reason;
};

std::vector<CatalogEntry> const& catalog_entries();

std::string_view to_string(Family f);
std::string_view to_string(Condition c);
std::string_view to_string(Verdict v);

/// Parses names like "alternating", "E6", "2E6", "3D4", "D2l", "2D2l+1".
/// Throws UnknownFamily.
Family parse_family(std::string_view name);

/// Best verdict over the rows of the family: conjugate, else conditional,
/// else not guaranteed.
CatalogResult catalog_lookup(Family family, FamilyParameters const& params,
                             ExtensionDescriptor const& extension);

}  // namespace carter
