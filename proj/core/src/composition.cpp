#include "carter/composition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "carter/kernel.hpp"
#include "carter/lattice.hpp"

namespace carter {

namespace {

using OrderCounts = std::map<std::uint64_t, std::uint64_t>;

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p : prime_divisors(n)) result = result / p * (p - 1);
  return result;
}

void partitions(std::uint64_t m, std::uint64_t max_part,
                std::vector<std::uint64_t>& parts,
                std::vector<std::vector<std::uint64_t>>& out) {
  if (m == 0) {
    out.push_back(parts);
    return;
  }
  for (std::uint64_t k = std::min(m, max_part); k >= 1; --k) {
    parts.push_back(k);
    partitions(m - k, k, parts, out);
    parts.pop_back();
  }
}

// Element-order counts of Alt_m, from cycle types of even permutations.
OrderCounts alternating_counts(std::uint64_t m) {
  std::vector<std::vector<std::uint64_t>> all;
  std::vector<std::uint64_t> parts;
  partitions(m, m, parts, all);
  double factorial = 1;
  for (std::uint64_t i = 2; i <= m; ++i) factorial *= static_cast<double>(i);
  OrderCounts counts;
  for (auto const& p : all) {
    std::uint64_t even_parts = 0, order = 1;
    std::map<std::uint64_t, std::uint64_t> multiplicity;
    for (std::uint64_t k : p) {
      if (k % 2 == 0) ++even_parts;
      order = std::lcm(order, k);
      ++multiplicity[k];
    }
    if (even_parts % 2 != 0) continue;
    double centralizer = 1;
    for (auto [k, c] : multiplicity) {
      for (std::uint64_t i = 0; i < c; ++i) centralizer *= static_cast<double>(k * (i + 1));
    }
    counts[order] += static_cast<std::uint64_t>(factorial / centralizer + 0.5);
  }
  return counts;
}

// Element-order counts of PSL(2,q): unipotents plus the split and
// non-split tori, each non-identity semisimple element in a unique torus.
OrderCounts psl2_counts(std::uint64_t q, std::uint64_t p) {
  std::uint64_t const d = q % 2 == 0 ? 1 : 2;
  OrderCounts counts{{1, 1}, {p, q * q - 1}};
  auto add_torus = [&](std::uint64_t size, std::uint64_t conjugates) {
    for (std::uint64_t m = 2; m <= size; ++m) {
      if (size % m == 0) counts[m] += euler_phi(m) * conjugates;
    }
  };
  add_torus((q - 1) / d, q * (q + 1) / 2);
  add_torus((q + 1) / d, q * (q - 1) / 2);
  return counts;
}

OrderCounts element_order_counts(FiniteGroup const& s) {
  OrderCounts counts;
  auto const& index = s.elements();
  for (ElementIndex::Rank r = 0; r < index.size(); ++r) ++counts[index.element_order(r)];
  return counts;
}

// Picks a maximal proper normal subgroup of `t`, as a group.
FiniteGroup maximal_normal(FiniteGroup const& t, SeriesChoice choice) {
  auto normals = normal_subgroups(t, t.order());
  normals.pop_back();  // t itself is last: largest order
  std::vector<FiniteGroup> maximal;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    bool contained = false;
    for (std::size_t j = i + 1; j < normals.size() && !contained; ++j) {
      contained = normals[j].order() > normals[i].order() &&
                  normals[j].group().contains(normals[i].group());
    }
    if (!contained) maximal.push_back(normals[i].group());
  }
  return choice == SeriesChoice::least ? maximal.front() : maximal.back();
}

}  // namespace

std::string identify_simple(FiniteGroup const& s) {
  std::uint64_t const n = s.order();
  std::uint64_t p = 0;
  if (n > 1 && is_prime_power(n, &p) && p == n) return "C_" + std::to_string(n);
  std::string const fallback = "unidentified-simple-" + std::to_string(n);
  if (n > kIdentificationLimit) return fallback;
  auto const counts = element_order_counts(s);
  std::uint64_t factorial = 1;
  for (std::uint64_t m = 2; factorial / 2 <= n; ++m) {
    factorial *= m;
    if (m >= 5 && factorial / 2 == n && alternating_counts(m) == counts) {
      return "Alt_" + std::to_string(m);
    }
  }
  for (std::uint64_t q = 4; q * (q * q - 1) / 2 <= n; ++q) {
    std::uint64_t r = 0;
    if (!is_prime_power(q, &r)) continue;
    std::uint64_t const order = q * (q * q - 1) / (q % 2 == 0 ? 1 : 2);
    if (order == n && psl2_counts(q, r) == counts) {
      return "PSL(2," + std::to_string(q) + ")";
    }
  }
  return fallback;
}

FactorDescriptor describe_factor(FiniteGroup const& a, FiniteGroup const& b) {
  FactorDescriptor d;
  d.order = a.order() / b.order();
  std::uint64_t p = 0;
  d.abelian = d.order == 1 || (is_prime_power(d.order, &p) && p == d.order);
  if (d.abelian) {
    d.label = "C_" + std::to_string(d.order);
  } else if (d.order > kIdentificationLimit) {
    d.label = "unidentified-simple-" + std::to_string(d.order);
  } else {
    d.label = identify_simple(coset_action(a, b).image);
  }
  return d;
}

CompositionSeries composition_series(FiniteGroup const& g, SeriesChoice choice) {
  CompositionSeries series;
  FiniteGroup current = g;
  series.terms.push_back(SubgroupHandle::whole(g));
  while (!current.is_trivial()) {
    FiniteGroup next = maximal_normal(current, choice);
    series.factors.push_back(describe_factor(current, next));
    series.terms.emplace_back(g, next);
    current = next;
  }
  return series;
}

}  // namespace carter
