#include "carter/families.hpp"

#include <numeric>

#include "carter/error.hpp"

namespace carter {

namespace {

Permutation cycle_on(std::size_t degree, std::vector<Point> cycle) {
  return Permutation::from_cycles(degree, {std::move(cycle)});
}

std::vector<Point> range_points(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return v;
}

// Regular representation from a multiplication rule on {0..n-1} with
// identity 0.
template <typename Mult>
CayleyTable table_from_rule(std::size_t n, Mult&& mult) {
  CayleyTable table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a][b] = mult(a, b);
  }
  return table;
}

}  // namespace

FiniteGroup symmetric_group(std::size_t n) {
  std::size_t const degree = n == 0 ? 1 : n;
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(cycle_on(degree, {0, 1}));
    if (n >= 3) gens.push_back(cycle_on(degree, range_points(n)));
  }
  return FiniteGroup(degree, gens);
}

FiniteGroup alternating_group(std::size_t n) {
  std::size_t const degree = n == 0 ? 1 : n;
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) {
    gens.push_back(cycle_on(degree, {0, 1, static_cast<Point>(i)}));
  }
  return FiniteGroup(degree, gens);
}

FiniteGroup cyclic_group(std::size_t n) {
  std::size_t const degree = n == 0 ? 1 : n;
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(cycle_on(degree, range_points(n)));
  return FiniteGroup(degree, gens);
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n < 3) {
    // Orders 2 and 4: C2 and C2 x C2.
    std::size_t const order = 2 * (n == 0 ? 1 : n);
    return from_cayley_table(table_from_rule(
        order, [](std::size_t a, std::size_t b) { return a ^ b; }));
  }
  std::vector<Point> reflection(n);
  for (std::size_t i = 0; i < n; ++i) {
    reflection[i] = static_cast<Point>((n - i) % n);
  }
  return FiniteGroup(n, {cycle_on(n, range_points(n)),
                         Permutation(std::move(reflection))});
}

FiniteGroup dicyclic_group(std::size_t n) {
  if (n < 1) fail(ErrorCode::MalformedPermutation, "dicyclic group needs n >= 1");
  // Element a^i x^j is encoded as i + 2n*j.
  std::size_t const m = 2 * n;
  auto mult = [m, n](std::size_t u, std::size_t v) {
    std::size_t const i = u % m, j = u / m, k = v % m, l = v / m;
    if (j == 0) return (i + k) % m + m * l;
    // a^i x a^k x^l = a^(i-k) x x^l
    std::size_t const e = (i + m - k) % m;
    if (l == 0) return e + m;
    return (e + n) % m;  // x^2 = a^n
  };
  return from_cayley_table(table_from_rule(2 * m, mult));
}

FiniteGroup direct_product(FiniteGroup const& a, FiniteGroup const& b) {
  std::size_t const da = a.degree(), db = b.degree();
  std::size_t const degree = da + db;
  std::vector<Permutation> gens;
  for (auto const& g : a.generators()) {
    std::vector<Point> images = range_points(degree);
    for (std::size_t i = 0; i < da; ++i) images[i] = g[static_cast<Point>(i)];
    gens.emplace_back(std::move(images));
  }
  for (auto const& g : b.generators()) {
    std::vector<Point> images = range_points(degree);
    for (std::size_t i = 0; i < db; ++i) {
      images[da + i] = static_cast<Point>(da + g[static_cast<Point>(i)]);
    }
    gens.emplace_back(std::move(images));
  }
  return FiniteGroup(degree, gens);
}

FiniteGroup wreath_product(FiniteGroup const& base, FiniteGroup const& top) {
  std::size_t const d = base.degree(), p = top.degree();
  std::size_t const degree = d * p;
  std::vector<Permutation> gens;
  for (auto const& g : base.generators()) {
    std::vector<Point> images = range_points(degree);
    for (std::size_t i = 0; i < d; ++i) images[i] = g[static_cast<Point>(i)];
    gens.emplace_back(std::move(images));
  }
  for (auto const& t : top.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t block = 0; block < p; ++block) {
      for (std::size_t i = 0; i < d; ++i) {
        images[block * d + i] =
            static_cast<Point>(t[static_cast<Point>(block)] * d + i);
      }
    }
    gens.emplace_back(std::move(images));
  }
  return FiniteGroup(degree, gens);
}

void validate_cayley_table(CayleyTable const& table) {
  std::size_t const n = table.size();
  if (n == 0) fail(ErrorCode::NotALatinSquare, "empty table");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) fail(ErrorCode::NotALatinSquare, "table is not square");
  }
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), column(n, false);
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t const r = table[a][b], c = table[b][a];
      if (r >= n || c >= n || row[r] || column[c]) {
        fail(ErrorCode::NotALatinSquare,
             "row or column " + std::to_string(a + 1) + " repeats an entry");
      }
      row[r] = column[c] = true;
    }
    if (table[0][a] != a || table[a][0] != a) {
      fail(ErrorCode::NotALatinSquare, "row and column 1 must be the identity");
    }
  }
}

FiniteGroup from_cayley_table(CayleyTable const& table) {
  validate_cayley_table(table);
  std::size_t const n = table.size();
  auto regular = [&](std::size_t g) {
    std::vector<Point> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(table[x][g]);
    return Permutation(std::move(images));
  };
  // Greedy generating set: add g whenever it is not yet generated.
  std::vector<bool> generated(n, false);
  std::vector<std::size_t> closure{0};
  generated[0] = true;
  std::vector<std::size_t> chosen;
  for (std::size_t g = 1; g < n; ++g) {
    if (generated[g]) continue;
    chosen.push_back(g);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (std::size_t s : chosen) {
        std::size_t const y = table[closure[i]][s];
        if (!generated[y]) {
          generated[y] = true;
          closure.push_back(y);
        }
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          fail(ErrorCode::NotALatinSquare, "table is not associative");
        }
      }
    }
  }
  std::vector<Permutation> gens;
  for (std::size_t g : chosen) gens.push_back(regular(g));
  return FiniteGroup(n, gens);
}

CayleyTable cayley_table(FiniteGroup const& g) {
  auto const& index = g.elements();
  std::size_t const n = index.size();
  CayleyTable table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = index.product(static_cast<ElementIndex::Rank>(a),
                                  static_cast<ElementIndex::Rank>(b));
    }
  }
  return table;
}

}  // namespace carter
