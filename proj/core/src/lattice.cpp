#include "carter/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "carter/error.hpp"
#include "carter/kernel.hpp"
#include "detail/element_sets.hpp"

namespace carter {

using Rank = ElementIndex::Rank;
using detail::ElementSet;
using detail::ElementSetHash;
using detail::Marker;

namespace {

class LatticeEngine {
 public:
  LatticeEngine(FiniteGroup const& g, SubgroupFilter filter)
      : group_(g),
        index_(g.elements()),
        filter_(filter),
        in_m_(index_.size()),
        covered_(index_.size()),
        scratch_(index_.size()) {}

  std::vector<SubgroupClass> run() {
    add_class({index_.identity()});
    if (filter_ == SubgroupFilter::all && !is_soluble(group_)) {
      add_perfect_seeds();
    }
    for (std::size_t i = 0; i < records_.size(); ++i) {
      ElementSet const m = records_[i].elements;
      extend(m);
    }
    std::sort(records_.begin(), records_.end(),
              [](Record const& a, Record const& b) {
                if (a.elements.size() != b.elements.size()) {
                  return a.elements.size() < b.elements.size();
                }
                return a.elements < b.elements;
              });
    std::vector<SubgroupClass> result;
    result.reserve(records_.size());
    for (auto const& record : records_) {
      std::vector<Permutation> gens;
      for (Rank r : detail::small_generating_set(index_, record.elements, scratch_)) {
        gens.push_back(index_[r]);
      }
      result.push_back({SubgroupHandle(group_, FiniteGroup(group_.degree(), gens)),
                        record.class_size});
    }
    return result;
  }

 private:
  struct Record {
    ElementSet elements;
    std::uint64_t class_size = 0;
  };

  // Registers the conjugacy class of `elements` (sorted) and queues its
  // least member for extension.
  void add_class(ElementSet elements) {
    auto [it, inserted] = seen_.insert(std::move(elements));
    if (!inserted) return;
    std::vector<ElementSet const*> orbit{&*it};
    ElementSet const* least = &*it;
    ElementSet image;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t s = 0; s < index_.generator_count(); ++s) {
        auto const table = index_.generator_conjugation(s);
        image.clear();
        for (Rank r : *orbit[i]) image.push_back(table[r]);
        std::sort(image.begin(), image.end());
        auto [jt, fresh] = seen_.insert(image);
        if (!fresh) continue;
        orbit.push_back(&*jt);
        if (*jt < *least) least = &*jt;
      }
    }
    records_.push_back({*least, orbit.size()});
  }

  void extend(ElementSet const& m) {
    in_m_.reset();
    for (Rank r : m) in_m_.set(r);
    auto const gens = detail::small_generating_set(index_, m, scratch_);

    std::vector<Rank> normalizer;
    for (Rank r = 0; r < index_.size(); ++r) {
      bool ok = in_m_.test(r);
      if (!ok) {
        ok = std::all_of(gens.begin(), gens.end(), [&](Rank x) {
          return in_m_.test(index_.conjugate(x, r));
        });
      }
      if (ok) normalizer.push_back(r);
    }
    if (normalizer.size() == m.size()) return;

    std::map<std::uint64_t, std::vector<Rank>> coprime_gens;
    auto coprime_part = [&](std::uint64_t p) -> std::vector<Rank> const& {
      auto it = coprime_gens.find(p);
      if (it != coprime_gens.end()) return it->second;
      ElementSet part;
      for (Rank y : m) {
        if (index_.element_order(y) % p != 0) part.push_back(y);
      }
      return coprime_gens[p] =
                 detail::small_generating_set(index_, part, scratch_);
    };

    covered_.reset();
    ElementSet extension;
    for (Rank x : normalizer) {
      if (in_m_.test(x) || covered_.test(x)) continue;
      std::uint64_t p = 0;
      if (!is_prime_power(index_.element_order(x), &p)) continue;
      if (!in_m_.test(index_.power(x, p))) continue;
      if (filter_ == SubgroupFilter::nilpotent) {
        auto const& others = coprime_part(p);
        bool const commutes = std::all_of(others.begin(), others.end(), [&](Rank y) {
          return index_.product(x, y) == index_.product(y, x);
        });
        if (!commutes) continue;
      }
      extension.clear();
      Rank xi = index_.identity();
      for (std::uint64_t i = 0; i < p; ++i) {
        for (Rank y : m) extension.push_back(index_.product(y, xi));
        xi = index_.product(xi, x);
      }
      std::sort(extension.begin(), extension.end());
      for (Rank e : extension) covered_.set(e);
      if (seen_.count(extension) != 0) continue;
      add_class(extension);
    }
  }

  void add_perfect_seeds() {
    std::vector<Rank> reps;
    for (auto const& cls : conjugacy_classes(group_)) {
      reps.push_back(index_.rank(cls.representative));
    }
    std::set<ElementSet> perfect;
    std::unordered_set<ElementSet, ElementSetHash> tried;
    // Non-trivial perfect groups have order at least 60.
    constexpr std::size_t kSmallestPerfect = 60;
    for (Rank x : reps) {
      if (x == index_.identity()) continue;
      for (Rank y = 0; y < index_.size(); ++y) {
        if (y == x || y == index_.identity()) continue;
        auto closure = detail::closure(index_, std::vector<Rank>{x, y}, scratch_);
        if (closure.size() < kSmallestPerfect) continue;
        std::sort(closure.begin(), closure.end());
        if (!tried.insert(closure).second) continue;
        if (is_perfect_set(closure)) perfect.insert(std::move(closure));
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<ElementSet> const current(perfect.begin(), perfect.end());
      for (std::size_t i = 0; i < current.size(); ++i) {
        for (std::size_t j = i + 1; j < current.size(); ++j) {
          auto seeds = detail::small_generating_set(index_, current[i], scratch_);
          auto more = detail::small_generating_set(index_, current[j], scratch_);
          seeds.insert(seeds.end(), more.begin(), more.end());
          auto join = detail::closure(index_, seeds, scratch_);
          std::sort(join.begin(), join.end());
          changed = perfect.insert(std::move(join)).second || changed;
        }
      }
    }
    for (auto const& p : perfect) {
      if (seen_.count(p) == 0) add_class(p);
    }
  }

  bool is_perfect_set(ElementSet const& elements) {
    std::vector<Permutation> gens;
    for (Rank r : detail::small_generating_set(index_, elements, scratch_)) {
      gens.push_back(index_[r]);
    }
    return is_perfect(FiniteGroup(group_.degree(), gens));
  }

  FiniteGroup group_;
  ElementIndex const& index_;
  SubgroupFilter filter_;
  Marker in_m_;
  Marker covered_;
  Marker scratch_;
  std::unordered_set<ElementSet, ElementSetHash> seen_;
  std::vector<Record> records_;
};

std::vector<std::vector<std::uint32_t>> cycle_type_multiset(FiniteGroup const& h) {
  std::vector<std::vector<std::uint32_t>> types;
  for (auto const& e : h.elements().elements()) {
    std::vector<std::uint32_t> lengths;
    for (auto const& c : e.cycles()) lengths.push_back(static_cast<std::uint32_t>(c.size()));
    std::sort(lengths.begin(), lengths.end());
    types.push_back(std::move(lengths));
  }
  std::sort(types.begin(), types.end());
  return types;
}

struct NormalCandidate {
  FiniteGroup group;
  std::vector<bool> classes;
};

std::vector<bool> class_key(FiniteGroup const& n,
                            std::vector<ConjugacyClass> const& classes) {
  std::vector<bool> key(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    key[i] = n.contains(classes[i].representative);
  }
  return key;
}

bool key_subset(std::vector<bool> const& a, std::vector<bool> const& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

// Normal closures of the non-trivial classes, deduplicated.
std::vector<NormalCandidate> class_closures(FiniteGroup const& g,
                                            std::vector<ConjugacyClass> const& classes) {
  std::vector<NormalCandidate> result;
  std::set<std::vector<bool>> keys;
  for (auto const& cls : classes) {
    if (cls.representative.is_identity()) continue;
    auto closure = normal_closure(g, {cls.representative}).group();
    auto key = class_key(closure, classes);
    if (keys.insert(key).second) result.push_back({closure, std::move(key)});
  }
  return result;
}

void check_cap(FiniteGroup const& g, std::uint64_t cap, char const* what) {
  if (g.order() > cap) {
    fail(ErrorCode::GroupTooLarge, std::string(what) + ": group order " +
                                       std::to_string(g.order()) +
                                       " exceeds the limit " +
                                       std::to_string(cap));
  }
}

void sort_canonically(FiniteGroup const& g, std::vector<SubgroupHandle>& subgroups) {
  std::vector<std::pair<ElementSet, SubgroupHandle>> keyed;
  for (auto& s : subgroups) keyed.emplace_back(element_ranks(g, s.group()), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  subgroups.clear();
  for (auto& [key, s] : keyed) subgroups.push_back(std::move(s));
}

}  // namespace

std::vector<SubgroupClass> subgroup_classes(FiniteGroup const& g,
                                            SubgroupFilter filter,
                                            std::uint64_t order_cap) {
  check_cap(g, order_cap, "subgroup enumeration");
  return LatticeEngine(g, filter).run();
}

std::vector<SubgroupClass> all_subgroup_classes(FiniteGroup const& g,
                                                std::uint64_t order_cap) {
  return subgroup_classes(g, SubgroupFilter::all, order_cap);
}

std::optional<Permutation> are_conjugate(FiniteGroup const& g,
                                         SubgroupHandle const& h,
                                         SubgroupHandle const& k) {
  for (auto const* s : {&h, &k}) {
    if (s->degree() != g.degree() || !g.contains(s->group())) {
      fail(ErrorCode::NotASubgroup, "are_conjugate: subgroup not in G");
    }
  }
  if (h.order() != k.order()) return std::nullopt;
  if (h.group() == k.group()) return g.identity();
  if (h.order() <= FiniteGroup::kEnumerationLimit &&
      cycle_type_multiset(h.group()) != cycle_type_multiset(k.group())) {
    return std::nullopt;
  }
  auto maps_onto = [&](Permutation const& x) {
    return std::all_of(h.generators().begin(), h.generators().end(),
                       [&](Permutation const& s) {
                         return k.contains(s.conjugate_by(x));
                       });
  };
  if (g.order() <= FiniteGroup::kEnumerationLimit) {
    for (auto const& x : g.elements().elements()) {
      if (maps_onto(x)) return x;
    }
    return std::nullopt;
  }
  auto const& chain = g.chain();
  for (std::uint64_t r = 0; r < chain.order(); ++r) {
    Permutation x = chain.element(r);
    if (maps_onto(x)) return x;
  }
  return std::nullopt;
}

std::vector<SubgroupHandle> normal_subgroups(FiniteGroup const& g,
                                             std::uint64_t order_cap) {
  check_cap(g, order_cap, "normal subgroups");
  auto const classes = conjugacy_classes(g);
  auto const closures = class_closures(g, classes);
  std::vector<NormalCandidate> found{
      {FiniteGroup(g.degree(), {}), class_key(FiniteGroup(g.degree(), {}), classes)}};
  std::set<std::vector<bool>> keys{found.front().classes};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto const& c : closures) {
      if (key_subset(c.classes, found[i].classes)) continue;
      auto gens = found[i].group.generators();
      gens.insert(gens.end(), c.group.generators().begin(), c.group.generators().end());
      FiniteGroup join(g.degree(), gens);
      auto key = class_key(join, classes);
      if (keys.insert(key).second) found.push_back({join, std::move(key)});
    }
  }
  std::vector<SubgroupHandle> result;
  for (auto const& n : found) result.emplace_back(g, n.group);
  sort_canonically(g, result);
  return result;
}

std::vector<SubgroupHandle> minimal_normal_subgroups(FiniteGroup const& g,
                                                     std::uint64_t order_cap) {
  check_cap(g, order_cap, "minimal normal subgroups");
  auto const classes = conjugacy_classes(g);
  auto const closures = class_closures(g, classes);
  std::vector<SubgroupHandle> result;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < closures.size() && minimal; ++j) {
      if (i != j && key_subset(closures[j].classes, closures[i].classes)) {
        minimal = false;
      }
    }
    if (minimal) result.emplace_back(g, closures[i].group);
  }
  sort_canonically(g, result);
  return result;
}

std::vector<SubgroupHandle> simple_direct_factors(SubgroupHandle const& b) {
  FiniteGroup const& group = b.group();
  if (group.is_trivial() || is_abelian(group)) {
    fail(ErrorCode::AbelianFactor, "B is abelian");
  }
  auto mins = minimal_normal_subgroups(group);
  std::uint64_t product = 1;
  for (auto const& t : mins) {
    if (is_abelian(t.group())) {
      fail(ErrorCode::AbelianFactor, "B has an abelian minimal normal subgroup");
    }
    product *= t.order();
  }
  if (product != group.order()) {
    fail(ErrorCode::HypothesisViolated,
         "B is not a direct product of its minimal normal subgroups");
  }
  std::vector<SubgroupHandle> result;
  for (auto const& t : mins) result.emplace_back(b.parent(), t.group());
  return result;
}

std::vector<SubgroupHandle> decompose_direct_factors(SubgroupHandle const& b) {
  FiniteGroup const& g = b.parent();
  FiniteGroup const& group = b.group();
  if (group.is_trivial() || !normalizes(g, group)) {
    fail(ErrorCode::NotMinimalNormal, "B is not a non-trivial normal subgroup");
  }
  // Minimal normal iff every non-trivial element has normal closure B; one
  // element per G-orbit suffices.
  auto const& index = group.elements();
  std::vector<bool> seen(index.size(), false);
  for (Rank r = 0; r < index.size(); ++r) {
    if (seen[r]) continue;
    std::vector<Rank> orbit{r};
    seen[r] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto const& s : g.generators()) {
        Rank const y = index.rank(index[orbit[i]].conjugate_by(s));
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    if (r == index.identity()) continue;
    if (normal_closure(g, {index[r]}).order() != group.order()) {
      fail(ErrorCode::NotMinimalNormal, "B properly contains a normal subgroup");
    }
  }
  if (is_abelian(group)) {
    fail(ErrorCode::AbelianFactor, "B is an abelian minimal normal subgroup");
  }
  return simple_direct_factors(b);
}

OvergroupSearch overgroups(FiniteGroup const& g, SubgroupHandle const& k,
                           std::uint64_t order_cap) {
  if (!g.contains(k.group())) fail(ErrorCode::NotASubgroup, "overgroups");
  OvergroupSearch search;
  auto const& index = g.elements();
  Marker scratch(index.size());
  auto const base = element_ranks(g, k.group());
  std::set<ElementSet> found{base};
  if (g.order() <= order_cap) {
    std::vector<ElementSet> queue{base};
    Marker inside(index.size());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto const gens = detail::small_generating_set(index, queue[i], scratch);
      inside.reset();
      for (Rank r : queue[i]) inside.set(r);
      for (Rank x = 0; x < index.size(); ++x) {
        if (inside.test(x)) continue;
        auto seeds = gens;
        seeds.push_back(x);
        auto closure = detail::closure(index, seeds, scratch);
        std::sort(closure.begin(), closure.end());
        if (found.insert(closure).second) queue.push_back(std::move(closure));
      }
    }
  } else {
    search.complete = false;
    auto const gens = detail::small_generating_set(index, base, scratch);
    for (auto const& cls : conjugacy_classes(g)) {
      auto seeds = gens;
      seeds.push_back(index.rank(cls.representative));
      auto closure = detail::closure(index, seeds, scratch);
      std::sort(closure.begin(), closure.end());
      found.insert(std::move(closure));
    }
    ElementSet all(index.size());
    for (Rank r = 0; r < index.size(); ++r) all[r] = r;
    found.insert(std::move(all));
  }
  std::vector<ElementSet> ordered(found.begin(), found.end());
  std::sort(ordered.begin(), ordered.end(), [](auto const& a, auto const& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (auto const& set : ordered) {
    std::vector<Permutation> gens;
    for (Rank r : detail::small_generating_set(index, set, scratch)) {
      gens.push_back(index[r]);
    }
    search.overgroups.emplace_back(g, FiniteGroup(g.degree(), gens));
  }
  return search;
}

std::vector<ElementIndex::Rank> element_ranks(FiniteGroup const& g,
                                              FiniteGroup const& h) {
  auto const& index = g.elements();
  std::vector<Rank> ranks;
  ranks.reserve(h.order());
  for (auto const& e : h.elements().elements()) ranks.push_back(index.rank(e));
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

bool subgroup_less(FiniteGroup const& g, FiniteGroup const& a,
                   FiniteGroup const& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return element_ranks(g, a) < element_ranks(g, b);
}

}  // namespace carter
