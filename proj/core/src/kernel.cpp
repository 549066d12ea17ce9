#include "carter/kernel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "carter/error.hpp"

namespace carter {

namespace {

// Collects accepted elements into a growing subgroup, skipping elements
// already generated.
class SubgroupBuilder {
 public:
  SubgroupBuilder(std::size_t degree, std::vector<Permutation> seed = {})
      : degree_(degree), generators_(std::move(seed)),
        group_(degree, generators_) {}

  bool contains(Permutation const& g) const { return group_.contains(g); }

  void add(Permutation const& g) {
    if (group_.contains(g)) return;
    generators_.push_back(g);
    group_ = FiniteGroup(degree_, generators_);
  }

  FiniteGroup const& group() const { return group_; }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  FiniteGroup group_;
};

template <typename Visit>
void for_each_element(FiniteGroup const& g, Visit&& visit) {
  if (g.order() <= FiniteGroup::kEnumerationLimit) {
    for (auto const& e : g.elements().elements()) visit(e);
    return;
  }
  auto const& chain = g.chain();
  for (std::uint64_t r = 0; r < chain.order(); ++r) visit(chain.element(r));
}

// Elements of G satisfying `accept`, as a subgroup of G. `accept` must
// describe a subgroup; `seed` lists elements already known to satisfy it.
template <typename Accept>
SubgroupHandle filter_subgroup(FiniteGroup const& g, Accept&& accept,
                               std::vector<Permutation> seed = {}) {
  SubgroupBuilder builder(g.degree(), std::move(seed));
  for_each_element(g, [&](Permutation const& e) {
    if (!builder.contains(e) && accept(e)) builder.add(e);
  });
  return SubgroupHandle(g, builder.group());
}

// Depth-first search over the elements of the group with the given chain.
// `keep(level, images)` sees the images of base points 0..level and may cut
// the branch; `leaf` receives complete elements.
template <typename Keep, typename Leaf>
void backtrack(StabilizerChain const& chain, Keep&& keep, Leaf&& leaf) {
  auto const& levels = chain.levels();
  std::size_t const k = levels.size();
  std::size_t const n = chain.degree();
  if (k == 0) {
    leaf(Permutation(n));
    return;
  }
  std::vector<Point> images(k);
  std::vector<Permutation> prefix(k + 1, Permutation(n));
  std::function<void(std::size_t)> descend = [&](std::size_t l) {
    auto const& level = levels[l];
    for (std::size_t j = 0; j < level.orbit.size(); ++j) {
      images[l] = prefix[l][level.orbit[j]];
      if (!keep(l, images)) continue;
      prefix[l + 1] = level.transversal[j] * prefix[l];
      if (l + 1 == k) {
        leaf(prefix[l + 1]);
      } else {
        descend(l + 1);
      }
    }
  };
  descend(0);
}

std::vector<std::int32_t> base_positions(StabilizerChain const& chain) {
  std::vector<std::int32_t> where(chain.degree(), -1);
  auto const& levels = chain.levels();
  for (std::size_t l = 0; l < levels.size(); ++l) {
    where[levels[l].base] = static_cast<std::int32_t>(l);
  }
  return where;
}

bool use_enumeration(FiniteGroup const& g, SearchMethod method) {
  switch (method) {
    case SearchMethod::enumerate: return true;
    case SearchMethod::backtrack: return false;
    case SearchMethod::automatic: return g.order() <= kEnumerationThreshold;
  }
  return true;
}

bool centralizes_all(Permutation const& e, std::vector<Permutation> const& xs) {
  return std::all_of(xs.begin(), xs.end(),
                     [&](Permutation const& x) { return commute(e, x); });
}

SubgroupHandle centralizer_backtrack(FiniteGroup const& g,
                                     std::vector<Permutation> const& xs) {
  // Base adapted to the first element: its cycles, consecutively.
  std::vector<Point> prefix;
  if (!xs.empty()) {
    for (auto const& cycle : xs.front().cycles()) {
      prefix.insert(prefix.end(), cycle.begin(), cycle.end());
    }
  }
  FiniteGroup const rebased(g.degree(), g.generators(), prefix);
  auto const& chain = rebased.chain();
  auto const where = base_positions(chain);
  auto const& levels = chain.levels();
  SubgroupBuilder builder(g.degree());
  backtrack(
      chain,
      [&](std::size_t l, std::vector<Point> const& images) {
        for (auto const& x : xs) {
          for (std::size_t m = 0; m <= l; ++m) {
            std::int32_t const q = where[x[levels[m].base]];
            if (q >= 0 && static_cast<std::size_t>(q) <= l &&
                images[static_cast<std::size_t>(q)] != x[images[m]]) {
              return false;
            }
          }
        }
        return true;
      },
      [&](Permutation const& e) {
        if (!builder.contains(e) && centralizes_all(e, xs)) builder.add(e);
      });
  return SubgroupHandle(g, builder.group());
}

bool normalizes_group(Permutation const& e, FiniteGroup const& x) {
  return std::all_of(x.generators().begin(), x.generators().end(),
                     [&](Permutation const& s) {
                       return x.contains(s.conjugate_by(e));
                     });
}

SubgroupHandle normalizer_backtrack(FiniteGroup const& g, FiniteGroup const& x) {
  std::size_t const n = g.degree();
  // Orbits of X: a normalizing element permutes them.
  std::vector<std::int32_t> orbit_id(n, -1);
  std::vector<std::size_t> orbit_size;
  for (Point start = 0; start < n; ++start) {
    if (orbit_id[start] >= 0) continue;
    auto const id = static_cast<std::int32_t>(orbit_size.size());
    std::vector<Point> orbit{start};
    orbit_id[start] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto const& s : x.generators()) {
        Point const y = s[orbit[i]];
        if (orbit_id[y] < 0) {
          orbit_id[y] = id;
          orbit.push_back(y);
        }
      }
    }
    orbit_size.push_back(orbit.size());
  }
  auto const& levels = g.chain().levels();
  std::vector<Permutation> seed;
  if (g.contains(x)) seed = x.generators();
  SubgroupBuilder builder(n, seed);
  backtrack(
      g.chain(),
      [&](std::size_t l, std::vector<Point> const& images) {
        Point const b = levels[l].base;
        Point const img = images[l];
        if (orbit_size[static_cast<std::size_t>(orbit_id[b])] !=
            orbit_size[static_cast<std::size_t>(orbit_id[img])]) {
          return false;
        }
        for (std::size_t q = 0; q < l; ++q) {
          bool const same_before = orbit_id[levels[q].base] == orbit_id[b];
          bool const same_after = orbit_id[images[q]] == orbit_id[img];
          if (same_before != same_after) return false;
        }
        return true;
      },
      [&](Permutation const& e) {
        if (!builder.contains(e) && normalizes_group(e, x)) builder.add(e);
      });
  return SubgroupHandle(g, builder.group());
}

}  // namespace

SubgroupHandle centralizer(FiniteGroup const& g, Permutation const& z,
                           SearchMethod method) {
  check_same_degree(g.identity(), z);
  if (!g.contains(z)) {
    fail(ErrorCode::NotAMember, z.to_string() + " is not in the group");
  }
  return centralizer_of(g, FiniteGroup(g.degree(), {z}), method);
}

SubgroupHandle centralizer_of(FiniteGroup const& g, FiniteGroup const& x,
                              SearchMethod method) {
  if (x.degree() != g.degree()) fail(ErrorCode::MixedDegree, "centralizer");
  auto const& xs = x.generators();
  if (xs.empty()) return SubgroupHandle::whole(g);
  if (use_enumeration(g, method)) {
    return filter_subgroup(
        g, [&](Permutation const& e) { return centralizes_all(e, xs); });
  }
  return centralizer_backtrack(g, xs);
}

SubgroupHandle normalizer(FiniteGroup const& g, SubgroupHandle const& h,
                          SearchMethod method) {
  if (h.degree() != g.degree() || !g.contains(h.group())) {
    fail(ErrorCode::NotASubgroup, "normalizer: H is not contained in G");
  }
  return normalizer_of(g, h.group(), method);
}

SubgroupHandle normalizer_of(FiniteGroup const& g, FiniteGroup const& x,
                             SearchMethod method) {
  if (x.degree() != g.degree()) fail(ErrorCode::MixedDegree, "normalizer");
  if (x.is_trivial() || normalizes(g, x)) return SubgroupHandle::whole(g);
  if (use_enumeration(g, method)) {
    std::vector<Permutation> seed;
    if (g.contains(x)) seed = x.generators();
    return filter_subgroup(
        g, [&](Permutation const& e) { return normalizes_group(e, x); },
        std::move(seed));
  }
  return normalizer_backtrack(g, x);
}

SubgroupHandle center(FiniteGroup const& g) { return centralizer_of(g, g); }

SubgroupHandle normal_closure(FiniteGroup const& g,
                              std::vector<Permutation> const& elements) {
  std::vector<Permutation> gens;
  for (auto const& e : elements) {
    if (!g.contains(e)) fail(ErrorCode::NotAMember, "normal closure");
    if (!e.is_identity()) gens.push_back(e);
  }
  FiniteGroup k(g.degree(), gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto const& s : g.generators()) {
      Permutation c = gens[i].conjugate_by(s);
      if (!k.contains(c)) {
        gens.push_back(std::move(c));
        k = FiniteGroup(g.degree(), gens);
      }
    }
  }
  return SubgroupHandle(g, k);
}

SubgroupHandle commutator_with(FiniteGroup const& g, FiniteGroup const& a) {
  std::vector<Permutation> commutators;
  for (auto const& x : a.generators()) {
    Permutation const xi = x.inverse();
    for (auto const& s : g.generators()) {
      Permutation c = xi * s.inverse() * x * s;
      if (!c.is_identity()) commutators.push_back(std::move(c));
    }
  }
  return normal_closure(g, commutators);
}

SubgroupHandle derived_subgroup(FiniteGroup const& g) {
  return commutator_with(g, g);
}

std::vector<SubgroupHandle> lower_central_series(FiniteGroup const& g) {
  std::vector<SubgroupHandle> series{SubgroupHandle::whole(g)};
  while (true) {
    auto next = commutator_with(g, series.back().group());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<SubgroupHandle> derived_series(FiniteGroup const& g) {
  std::vector<SubgroupHandle> series{SubgroupHandle::whole(g)};
  while (true) {
    auto next = derived_subgroup(series.back().group());
    if (next.order() == series.back().order()) break;
    series.emplace_back(g, next.group());
  }
  return series;
}

bool is_abelian(FiniteGroup const& g) {
  auto const& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

bool is_nilpotent(FiniteGroup const& g) {
  return lower_central_series(g).back().order() == 1;
}

bool is_soluble(FiniteGroup const& g) {
  return derived_series(g).back().order() == 1;
}

bool is_perfect(FiniteGroup const& g) {
  return derived_subgroup(g).order() == g.order();
}

bool normalizes(FiniteGroup const& g, FiniteGroup const& x) {
  return std::all_of(g.generators().begin(), g.generators().end(),
                     [&](Permutation const& s) { return normalizes_group(s, x); });
}

SubgroupHandle intersection(FiniteGroup const& a, FiniteGroup const& b) {
  if (a.degree() != b.degree()) fail(ErrorCode::MixedDegree, "intersection");
  if (b.contains(a)) return SubgroupHandle::whole(a);
  if (a.contains(b)) return SubgroupHandle(a, b);
  FiniteGroup const& small = a.order() <= b.order() ? a : b;
  FiniteGroup const& other = a.order() <= b.order() ? b : a;
  auto found = filter_subgroup(
      small, [&](Permutation const& e) { return other.contains(e); });
  return SubgroupHandle(a, found.group());
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_prime_power(std::uint64_t n, std::uint64_t* prime) {
  if (n < 2) return false;
  auto const primes = prime_divisors(n);
  if (primes.size() != 1) return false;
  if (prime != nullptr) *prime = primes.front();
  return true;
}

SubgroupHandle sylow_subgroup(FiniteGroup const& g, std::uint64_t p) {
  std::uint64_t target = 1;
  for (std::uint64_t n = g.order(); n % p == 0; n /= p) target *= p;
  auto const& index = g.elements();
  std::vector<Permutation> gens;
  FiniteGroup sylow(g.degree(), {});
  while (sylow.order() < target) {
    bool grown = false;
    for (ElementIndex::Rank r = 0; r < index.size() && !grown; ++r) {
      std::uint64_t q = 0;
      if (!is_prime_power(index.element_order(r), &q) || q != p) continue;
      auto const& e = index[r];
      if (sylow.contains(e) || !normalizes_group(e, sylow)) continue;
      gens.push_back(e);
      sylow = FiniteGroup(g.degree(), gens);
      grown = true;
    }
    if (!grown) fail(ErrorCode::Internal, "Sylow search stalled");
  }
  return SubgroupHandle(g, sylow);
}

SubgroupHandle p_core(FiniteGroup const& g, std::uint64_t p) {
  std::vector<Permutation> gens;
  FiniteGroup core(g.degree(), {});
  for (auto const& cls : conjugacy_classes(g)) {
    std::uint64_t q = 0;
    auto const& x = cls.representative;
    if (!is_prime_power(x.order(), &q) || q != p || core.contains(x)) continue;
    auto closure = normal_closure(g, {x});
    std::uint64_t r = 0;
    if (is_prime_power(closure.order(), &r) && r == p) {
      gens.insert(gens.end(), closure.generators().begin(),
                  closure.generators().end());
      core = FiniteGroup(g.degree(), gens);
    }
  }
  return SubgroupHandle(g, core);
}

SubgroupHandle fitting_subgroup(FiniteGroup const& g) {
  std::vector<Permutation> gens;
  for (auto p : prime_divisors(g.order())) {
    auto core = p_core(g, p);
    gens.insert(gens.end(), core.generators().begin(), core.generators().end());
  }
  return SubgroupHandle(g, FiniteGroup(g.degree(), gens));
}

std::vector<ConjugacyClass> conjugacy_classes(FiniteGroup const& g) {
  auto const& index = g.elements();
  std::size_t const n = index.size();
  std::vector<bool> seen(n, false);
  std::vector<ConjugacyClass> classes;
  std::vector<ElementIndex::Rank> orbit;
  for (ElementIndex::Rank r = 0; r < n; ++r) {
    if (seen[r]) continue;
    orbit.assign(1, r);
    seen[r] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t s = 0; s < index.generator_count(); ++s) {
        auto const y = index.generator_conjugation(s)[orbit[i]];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    classes.push_back({index[r], orbit.size()});
  }
  return classes;
}

CosetAction coset_action(FiniteGroup const& g, FiniteGroup const& u) {
  if (!g.contains(u)) fail(ErrorCode::NotASubgroup, "coset action");
  auto const& index = g.elements();
  auto const& sub = u.elements();
  std::size_t const n = index.size();
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  CosetAction action;
  action.source = g;
  action.coset_of.assign(n, kUnassigned);
  for (ElementIndex::Rank r = 0; r < n; ++r) {
    if (action.coset_of[r] != kUnassigned) continue;
    auto const id = static_cast<std::uint32_t>(action.representatives.size());
    action.representatives.push_back(index[r]);
    for (auto const& x : sub.elements()) {
      action.coset_of[index.rank(x * index[r])] = id;
    }
  }
  std::size_t const cosets = action.representatives.size();
  for (auto const& s : g.generators()) {
    action.generator_images.push_back(action.act(s));
  }
  action.image = FiniteGroup(cosets, action.generator_images);
  return action;
}

Permutation CosetAction::act(Permutation const& g) const {
  auto const& index = source.elements();
  std::vector<Point> images(representatives.size());
  for (std::size_t c = 0; c < representatives.size(); ++c) {
    images[c] = coset_of[index.rank(representatives[c] * g)];
  }
  return Permutation(std::move(images));
}

}  // namespace carter
