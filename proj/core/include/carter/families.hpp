#pragma once

#include <cstddef>
#include <vector>

#include "carter/group.hpp"

namespace carter {

FiniteGroup symmetric_group(std::size_t n);
FiniteGroup alternating_group(std::size_t n);
FiniteGroup cyclic_group(std::size_t n);

/// Dihedral group of order 2n acting on n points (n >= 3); for n < 3 the
/// regular representation is used.
FiniteGroup dihedral_group(std::size_t n);

/// Dicyclic group <a, x | a^2n, x^2 = a^n, a^x = a^-1> of order 4n, in its
/// regular representation. n a power of 2 gives the generalized quaternion
/// groups; n = 2 is Q8.
FiniteGroup dicyclic_group(std::size_t n);

/// Degrees add; the factors act on disjoint point sets.
FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b);

/// Imprimitive wreath product: `top` (degree p) permutes p copies of the
/// points of `base`.
FiniteGroup wreath_product(FiniteGroup const& base, FiniteGroup const& top);

/// Multiplication table with 0-indexed entries, table[a][b] = a*b.
using CayleyTable = std::vector<std::vector<std::size_t>>;

/// Throws NotALatinSquare unless the table is a Latin square whose row and
/// column 0 are the identity.
void validate_cayley_table(CayleyTable const& table);

/// Right regular representation: element g acts by x -> x*g. Generated by a
/// greedily chosen small generating set.
FiniteGroup from_cayley_table(CayleyTable const& table);

/// Multiplication table of an enumerated group, ranks as indices.
CayleyTable cayley_table(FiniteGroup const& g);

}  // namespace carter
