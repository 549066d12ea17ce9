#include "carter/group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_set>

#include "carter/error.hpp"

namespace carter {

namespace {

std::vector<Permutation> normalized_generators(
    std::size_t degree, std::vector<Permutation> generators) {
  std::vector<Permutation> result;
  std::unordered_set<Permutation> seen;
  for (auto& g : generators) {
    if (g.degree() != degree) {
      fail(ErrorCode::MixedDegree, "generator of degree " +
                                       std::to_string(g.degree()) +
                                       " in a group of degree " +
                                       std::to_string(degree));
    }
    if (g.is_identity() || !seen.insert(g).second) continue;
    result.push_back(std::move(g));
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::size_t degree,
                                 std::span<Permutation const> generators,
                                 std::span<Point const> base_prefix)
    : degree_(degree) {
  build(generators, base_prefix);
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> result;
  result.reserve(levels_.size());
  for (auto const& level : levels_) result.push_back(level.base);
  return result;
}

void StabilizerChain::compute_orbit(Level& level) const {
  level.orbit.assign(1, level.base);
  level.position.assign(degree_, -1);
  level.position[level.base] = 0;
  level.transversal.assign(1, Permutation(degree_));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point const gamma = level.orbit[i];
    for (auto const& s : level.generators) {
      Point const delta = s[gamma];
      if (level.position[delta] >= 0) continue;
      level.position[delta] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(delta);
      level.transversal.push_back(level.transversal[i] * s);
    }
  }
  level.inverse_transversal.clear();
  level.inverse_transversal.reserve(level.transversal.size());
  for (auto const& u : level.transversal) {
    level.inverse_transversal.push_back(u.inverse());
  }
}

void StabilizerChain::build(std::span<Permutation const> generators,
                            std::span<Point const> base_prefix) {
  levels_.clear();
  std::vector<Point> base;
  for (Point b : base_prefix) {
    if (b >= degree_) fail(ErrorCode::MalformedPermutation, "base point out of range");
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  }
  std::vector<Permutation> strong;
  for (auto const& g : generators) {
    if (g.degree() != degree_) {
      fail(ErrorCode::MixedDegree, "generator degree differs from chain degree");
    }
    if (!g.is_identity()) strong.push_back(g);
  }
  // Every generator must move some base point.
  for (auto const& g : strong) {
    bool moves = false;
    for (Point b : base) moves = moves || g[b] != b;
    if (!moves) base.push_back(g.first_moved_point());
  }
  if (strong.empty()) base.clear();

  auto fixes_prefix = [&](Permutation const& g, std::size_t count) {
    for (std::size_t m = 0; m < count; ++m) {
      if (g[base[m]] != base[m]) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < base.size(); ++i) {
    Level level;
    level.base = base[i];
    for (auto const& g : strong) {
      if (fixes_prefix(g, i)) level.generators.push_back(g);
    }
    levels_.push_back(std::move(level));
  }
  for (auto& level : levels_) compute_orbit(level);

  auto sift_from = [&](Permutation g, std::size_t from) {
    std::size_t l = from;
    for (; l < levels_.size(); ++l) {
      auto const& level = levels_[l];
      std::int32_t const pos = level.position[g[level.base]];
      if (pos < 0) break;
      g *= level.inverse_transversal[static_cast<std::size_t>(pos)];
    }
    return std::pair{std::move(g), l};
  };

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    auto& level = levels_[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < level.orbit.size() && !extended; ++j) {
      for (std::size_t si = 0; si < level.generators.size(); ++si) {
        auto const& s = level.generators[si];
        Point const image = s[level.orbit[j]];
        auto const pos = static_cast<std::size_t>(level.position[image]);
        Permutation schreier = level.transversal[j] * s;
        schreier *= level.inverse_transversal[pos];
        if (schreier.is_identity()) continue;
        auto [residue, stop] =
            sift_from(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (residue.is_identity()) continue;
        if (stop == levels_.size()) {
          Level fresh;
          fresh.base = residue.first_moved_point();
          levels_.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= stop; ++l) {
          levels_[l].generators.push_back(residue);
          compute_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }

  strides_.assign(levels_.size(), 1);
  order_ = 1;
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    strides_[l] = order_;
    std::uint64_t const m = levels_[l].orbit.size();
    if (order_ > UINT64_MAX / m) {
      fail(ErrorCode::GroupTooLarge, "group order exceeds 64 bits");
    }
    order_ *= m;
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g) const {
  if (g.degree() != degree_) {
    fail(ErrorCode::MixedDegree, "sifted element has degree " +
                                     std::to_string(g.degree()) +
                                     ", chain has degree " +
                                     std::to_string(degree_));
  }
  std::size_t l = 0;
  for (; l < levels_.size(); ++l) {
    auto const& level = levels_[l];
    std::int32_t const pos = level.position[g[level.base]];
    if (pos < 0) break;
    g *= level.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), l};
}

bool StabilizerChain::contains(Permutation const& g) const {
  auto [residue, stop] = sift(g);
  return stop == levels_.size() && residue.is_identity();
}

std::optional<std::uint64_t> StabilizerChain::rank(Permutation const& g) const {
  if (!contains(g)) return std::nullopt;
  return rank_from_base_images([&](Point b) { return g[b]; });
}

Permutation StabilizerChain::element(std::uint64_t rank) const {
  Permutation result(degree_);
  // g = u_{k-1} * ... * u_0
  for (std::size_t l = levels_.size(); l-- > 0;) {
    auto const m = levels_[l].orbit.size();
    auto const pos = (rank / strides_[l]) % m;
    result *= levels_[l].transversal[pos];
  }
  return result;
}

Permutation StabilizerChain::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, order_ - 1);
  return element(dist(rng));
}

// ---------------------------------------------------------------------------
// FiniteGroup

namespace detail {

struct GroupData {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  StabilizerChain chain;

  mutable std::once_flag index_once;
  mutable std::unique_ptr<ElementIndex> index;
};

}  // namespace detail

FiniteGroup::FiniteGroup() : FiniteGroup(0, {}) {}

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators)
    : FiniteGroup(degree, std::move(generators), {}) {}

FiniteGroup::FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
                         std::span<Point const> base_prefix) {
  auto data = std::make_shared<detail::GroupData>();
  data->degree = degree;
  data->generators = normalized_generators(degree, std::move(generators));
  data->chain = StabilizerChain(degree, data->generators, base_prefix);
  data_ = std::move(data);
}

std::size_t FiniteGroup::degree() const noexcept { return data_->degree; }

std::vector<Permutation> const& FiniteGroup::generators() const noexcept {
  return data_->generators;
}

std::uint64_t FiniteGroup::order() const noexcept {
  return data_->chain.order();
}

StabilizerChain const& FiniteGroup::chain() const noexcept {
  return data_->chain;
}

bool FiniteGroup::contains(Permutation const& g) const {
  return data_->chain.contains(g);
}

bool FiniteGroup::contains(FiniteGroup const& other) const {
  if (other.degree() != degree()) {
    fail(ErrorCode::MixedDegree, "groups of different degree");
  }
  if (order() % other.order() != 0) return false;
  return std::all_of(other.generators().begin(), other.generators().end(),
                     [&](Permutation const& g) { return contains(g); });
}

bool FiniteGroup::operator==(FiniteGroup const& other) const {
  return degree() == other.degree() && order() == other.order() &&
         contains(other);
}

ElementIndex const& FiniteGroup::elements() const {
  if (order() > kEnumerationLimit) {
    fail(ErrorCode::GroupTooLarge,
         "refusing to enumerate a group of order " + std::to_string(order()));
  }
  std::call_once(data_->index_once, [this] {
    data_->index =
        std::make_unique<ElementIndex>(data_->chain, data_->generators);
  });
  return *data_->index;
}

Permutation FiniteGroup::random_element(std::mt19937_64& rng) const {
  return data_->chain.random_element(rng);
}

FiniteGroup generate(std::vector<Permutation> const& perms) {
  if (perms.empty()) {
    fail(ErrorCode::MalformedPermutation,
         "degree must be supplied for an empty generating set");
  }
  return FiniteGroup(perms.front().degree(), perms);
}

FiniteGroup generate(std::size_t degree, std::vector<Permutation> const& perms) {
  return FiniteGroup(degree, perms);
}

// ---------------------------------------------------------------------------
// SubgroupHandle

SubgroupHandle::SubgroupHandle(FiniteGroup parent,
                               std::vector<Permutation> generators)
    : parent_(std::move(parent)) {
  for (auto const& g : generators) {
    if (g.degree() != parent_.degree() || !parent_.contains(g)) {
      fail(ErrorCode::NotASubgroup,
           "generator " + g.to_string() + " is not in the parent group");
    }
  }
  group_ = FiniteGroup(parent_.degree(), std::move(generators));
}

SubgroupHandle::SubgroupHandle(FiniteGroup parent, FiniteGroup group)
    : parent_(std::move(parent)), group_(std::move(group)) {
  if (group_.degree() != parent_.degree() || !parent_.contains(group_)) {
    fail(ErrorCode::NotASubgroup, "group is not contained in the parent");
  }
}

SubgroupHandle SubgroupHandle::whole(FiniteGroup const& parent) {
  return SubgroupHandle(parent, parent);
}

SubgroupHandle SubgroupHandle::trivial(FiniteGroup const& parent) {
  return SubgroupHandle(parent, FiniteGroup(parent.degree(), {}));
}

// ---------------------------------------------------------------------------
// ElementIndex

ElementIndex::ElementIndex(StabilizerChain const& chain,
                           std::vector<Permutation> const& generators)
    : chain_(&chain) {
  std::uint64_t const n = chain.order();
  elements_.reserve(n);
  for (std::uint64_t r = 0; r < n; ++r) elements_.push_back(chain.element(r));
  std::vector<Rank> by_lex(n);
  std::iota(by_lex.begin(), by_lex.end(), Rank{0});
  std::sort(by_lex.begin(), by_lex.end(), [&](Rank a, Rank b) {
    return elements_[a] < elements_[b];
  });
  lex_rank_.resize(n);
  std::vector<Permutation> sorted;
  sorted.reserve(n);
  for (Rank i = 0; i < n; ++i) {
    lex_rank_[by_lex[i]] = i;
    sorted.push_back(std::move(elements_[by_lex[i]]));
  }
  elements_ = std::move(sorted);
  identity_ = 0;  // the identity is lexicographically least

  inverses_.resize(n);
  orders_.resize(n);
  for (Rank r = 0; r < n; ++r) {
    inverses_[r] = rank(elements_[r].inverse());
    orders_[r] = elements_[r].order();
  }
  for (auto const& g : generators) {
    Rank const gr = rank(g);
    generator_ranks_.push_back(gr);
    std::vector<Rank> table(n);
    Permutation const gi = g.inverse();
    for (Rank r = 0; r < n; ++r) {
      auto const& e = elements_[r];
      auto cr = chain.rank_from_base_images(
          [&](Point b) { return g[e[gi[b]]]; });
      table[r] = from_chain_rank(*cr);
    }
    conjugation_.push_back(std::move(table));
  }
}

std::optional<ElementIndex::Rank> ElementIndex::find(Permutation const& g) const {
  if (g.degree() != chain_->degree() || !chain_->contains(g)) return std::nullopt;
  return rank(g);
}

ElementIndex::Rank ElementIndex::rank(Permutation const& g) const {
  auto cr = chain_->rank_from_base_images([&](Point b) { return g[b]; });
  if (!cr) fail(ErrorCode::NotAMember, "element is not in the group");
  return from_chain_rank(*cr);
}

ElementIndex::Rank ElementIndex::product(Rank a, Rank b) const {
  auto const& x = elements_[a];
  auto const& y = elements_[b];
  auto cr = chain_->rank_from_base_images([&](Point p) { return y[x[p]]; });
  return from_chain_rank(*cr);
}

ElementIndex::Rank ElementIndex::conjugate(Rank a, Rank by) const {
  auto const& x = elements_[a];
  auto const& g = elements_[by];
  auto const& gi = elements_[inverses_[by]];
  auto cr =
      chain_->rank_from_base_images([&](Point p) { return g[x[gi[p]]]; });
  return from_chain_rank(*cr);
}

ElementIndex::Rank ElementIndex::power(Rank a, std::uint64_t e) const {
  e %= orders_[a];
  Rank result = identity_;
  Rank base = a;
  while (e > 0) {
    if (e & 1U) result = product(result, base);
    base = product(base, base);
    e >>= 1U;
  }
  return result;
}

}  // namespace carter
