#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carter {

using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, acting on the right: `p[i]` is the
/// image of point i and `(p * q)[i] == q[p[i]]`.
///
/// Cycle notation at the I/O boundary is 1-indexed, everything else is
/// 0-indexed.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Throws MalformedPermutation unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  /// Builds a permutation from 0-indexed cycles. Points not mentioned are
  /// fixed; cycles must be disjoint.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const& cycles);

  /// Parses 1-indexed cycle notation such as "(1 2)(3 4)" or "(1,2,3)".
  /// "()" and the empty string denote the identity.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  std::span<Point const> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// `this` first, then `other`.
  Permutation operator*(Permutation const& other) const;
  Permutation& operator*=(Permutation const& other);

  Permutation pow(std::int64_t exponent) const;

  /// g^-1 * this * g.
  Permutation conjugate_by(Permutation const& g) const;

  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;

  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const noexcept;
  std::size_t support_size() const noexcept;

  /// 1-indexed cycle notation; the identity prints as "()".
  std::string to_string() const;

  bool operator==(Permutation const&) const = default;
  std::strong_ordering operator<=>(Permutation const& other) const;

  std::size_t hash() const noexcept;

 private:
  std::vector<Point> images_;
};

void check_same_degree(Permutation const& a, Permutation const& b);

bool commute(Permutation const& a, Permutation const& b);

}  // namespace carter

template <>
struct std::hash<carter::Permutation> {
  std::size_t operator()(carter::Permutation const& p) const noexcept {
    return p.hash();
  }
};
