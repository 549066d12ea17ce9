#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "carter/permutation.hpp"

namespace carter {

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Base points are the smallest moved points, in order of need, after an
/// optional caller-supplied prefix.
class StabilizerChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    // position[x] is the index of x in orbit, or -1.
    std::vector<std::int32_t> position;
    // base ^ transversal[i] == orbit[i]
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  StabilizerChain() = default;
  StabilizerChain(std::size_t degree, std::span<Permutation const> generators,
                  std::span<Point const> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  std::vector<Level> const& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;
  std::uint64_t order() const noexcept { return order_; }

  /// Strips `g` through the chain. Returns the residue and the level at
  /// which stripping stopped (levels().size() when it went all the way).
  std::pair<Permutation, std::size_t> sift(Permutation g) const;

  bool contains(Permutation const& g) const;

  /// Mixed-radix index of a member in chain order, nullopt for non-members.
  /// Only the images of base points are inspected.
  template <typename BaseImage>
  std::optional<std::uint64_t> rank_from_base_images(BaseImage&& image) const;

  std::optional<std::uint64_t> rank(Permutation const& g) const;
  Permutation element(std::uint64_t rank) const;

  Permutation random_element(std::mt19937_64& rng) const;

 private:
  void compute_orbit(Level& level) const;
  void build(std::span<Permutation const> generators,
             std::span<Point const> base_prefix);

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t order_ = 1;
};

template <typename BaseImage>
std::optional<std::uint64_t> StabilizerChain::rank_from_base_images(
    BaseImage&& image) const {
  std::size_t const k = levels_.size();
  // Small fixed buffer; chains deeper than this fall back to the heap.
  Point local[32];
  std::vector<Point> heap;
  Point* img = local;
  if (k > 32) {
    heap.resize(k);
    img = heap.data();
  }
  for (std::size_t m = 0; m < k; ++m) img[m] = image(levels_[m].base);
  std::uint64_t result = 0;
  for (std::size_t l = 0; l < k; ++l) {
    auto const& level = levels_[l];
    std::int32_t const pos = level.position[img[l]];
    if (pos < 0) return std::nullopt;
    result += static_cast<std::uint64_t>(pos) * strides_[l];
    auto const& inv = level.inverse_transversal[static_cast<std::size_t>(pos)];
    for (std::size_t m = l + 1; m < k; ++m) img[m] = inv[img[m]];
  }
  return result;
}

class ElementIndex;

namespace detail {
struct GroupData;
}

/// A permutation group given by generators, with its stabilizer chain built
/// at construction. Immutable and cheap to copy; copies share the chain and
/// any cached element index.
class FiniteGroup {
 public:
  /// Groups larger than this are never enumerated element by element.
  static constexpr std::uint64_t kEnumerationLimit = 500000;

  /// Trivial group of degree 0.
  FiniteGroup();

  /// Throws MixedDegree when a generator's degree differs from `degree`.
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators);

  FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
              std::span<Point const> base_prefix);

  std::size_t degree() const noexcept;
  std::vector<Permutation> const& generators() const noexcept;
  std::uint64_t order() const noexcept;
  StabilizerChain const& chain() const noexcept;

  bool is_trivial() const noexcept { return order() == 1; }
  Permutation identity() const { return Permutation(degree()); }

  /// Membership by sifting. Throws MixedDegree.
  bool contains(Permutation const& g) const;

  /// True iff every generator of `other` lies in this group.
  bool contains(FiniteGroup const& other) const;

  /// Same element set.
  bool operator==(FiniteGroup const& other) const;

  /// Sorted element table; built once and shared by copies. Throws
  /// GroupTooLarge beyond kEnumerationLimit.
  ElementIndex const& elements() const;

  Permutation random_element(std::mt19937_64& rng) const;

 private:
  std::shared_ptr<detail::GroupData const> data_;
};

/// Generated group; the degree is taken from the permutations. Throws
/// MixedDegree, or MalformedPermutation when `perms` is empty.
FiniteGroup generate(std::vector<Permutation> const& perms);
FiniteGroup generate(std::size_t degree, std::vector<Permutation> const& perms);

/// A subgroup together with the group it lives in.
class SubgroupHandle {
 public:
  SubgroupHandle() = default;

  /// Throws NotASubgroup if a generator is outside `parent`.
  SubgroupHandle(FiniteGroup parent, std::vector<Permutation> generators);
  SubgroupHandle(FiniteGroup parent, FiniteGroup group);

  static SubgroupHandle whole(FiniteGroup const& parent);
  static SubgroupHandle trivial(FiniteGroup const& parent);

  FiniteGroup const& parent() const noexcept { return parent_; }
  FiniteGroup const& group() const noexcept { return group_; }
  std::vector<Permutation> const& generators() const noexcept {
    return group_.generators();
  }
  std::uint64_t order() const noexcept { return group_.order(); }
  std::size_t degree() const noexcept { return group_.degree(); }
  bool contains(Permutation const& g) const { return group_.contains(g); }

  /// Same subgroup (element sets equal).
  bool operator==(SubgroupHandle const& other) const {
    return group_ == other.group_;
  }

 private:
  FiniteGroup parent_;
  FiniteGroup group_;
};

/// The elements of a group in ascending lexicographic order of their image
/// arrays, addressed by rank. Products, inverses and conjugates are resolved
/// through the stabilizer chain using base images only.
class ElementIndex {
 public:
  using Rank = std::uint32_t;

  ElementIndex(StabilizerChain const& chain,
               std::vector<Permutation> const& generators);

  std::size_t size() const noexcept { return elements_.size(); }
  Permutation const& operator[](Rank r) const noexcept { return elements_[r]; }
  std::vector<Permutation> const& elements() const noexcept { return elements_; }

  Rank identity() const noexcept { return identity_; }

  /// Rank of a member; nullopt for non-members.
  std::optional<Rank> find(Permutation const& g) const;
  /// Rank of a known member (unchecked beyond an assertion-level throw).
  Rank rank(Permutation const& g) const;

  Rank product(Rank a, Rank b) const;
  Rank inverse(Rank a) const noexcept { return inverses_[a]; }
  Rank conjugate(Rank a, Rank by) const;
  Rank power(Rank a, std::uint64_t e) const;
  std::uint64_t element_order(Rank a) const noexcept { return orders_[a]; }

  /// Conjugation table for the i-th group generator g: r -> rank(g^-1 r g).
  std::span<Rank const> generator_conjugation(std::size_t i) const {
    return conjugation_[i];
  }
  std::size_t generator_count() const noexcept { return generator_ranks_.size(); }
  Rank generator_rank(std::size_t i) const { return generator_ranks_[i]; }

 private:
  Rank from_chain_rank(std::uint64_t chain_rank) const {
    return lex_rank_[chain_rank];
  }

  StabilizerChain const* chain_;
  std::vector<Permutation> elements_;
  std::vector<Rank> lex_rank_;
  std::vector<Rank> inverses_;
  std::vector<std::uint64_t> orders_;
  std::vector<Rank> generator_ranks_;
  std::vector<std::vector<Rank>> conjugation_;
  Rank identity_ = 0;
};

}  // namespace carter
