#include "carter/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "carter/error.hpp"

namespace carter {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Point const x = images_[i];
    if (x >= images_.size() || seen[x]) {
      fail(ErrorCode::MalformedPermutation,
           "image array is not a bijection (position " + std::to_string(i) +
               ")");
    }
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::vector<std::vector<Point>> const& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point const x = cycle[i];
      if (x >= degree || used[x]) {
        fail(ErrorCode::MalformedPermutation,
             "cycles are not disjoint or exceed the degree");
      }
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto error = [&](std::string const& what) {
    throw ParseError(1, i + 1, what);
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') error("expected '('");
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i >= text.size()) error("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        error("expected a point");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree) error("point exceeds degree");
        ++i;
      }
      if (value == 0) error("points are 1-indexed");
      cycle.push_back(static_cast<Point>(value - 1));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  try {
    return from_cycles(degree, cycles);
  } catch (Error const&) {
    throw ParseError(1, 1, "cycles are not disjoint");
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[images_[i]] = static_cast<Point>(i);
  }
  return result;
}

Permutation Permutation::operator*(Permutation const& other) const {
  check_same_degree(*this, other);
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[i] = other.images_[images_[i]];
  }
  return result;
}

Permutation& Permutation::operator*=(Permutation const& other) {
  check_same_degree(*this, other);
  for (auto& x : images_) x = other.images_[x];
  return *this;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result *= base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

Permutation Permutation::conjugate_by(Permutation const& g) const {
  check_same_degree(*this, g);
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    result.images_[g.images_[i]] = g.images_[images_[i]];
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t length = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    result.push_back(std::move(cycle));
  }
  return result;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::size_t Permutation::support_size() const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += images_[i] != i;
  return n;
}

std::string Permutation::to_string() const {
  auto const cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (auto const& cycle : cs) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out << ' ';
      out << cycle[i] + 1;
    }
    out << ')';
  }
  return out.str();
}

std::strong_ordering Permutation::operator<=>(Permutation const& other) const {
  if (auto c = images_.size() <=> other.images_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      images_.begin(), images_.end(), other.images_.begin(),
      other.images_.end());
}

std::size_t Permutation::hash() const noexcept {
  // FNV-1a over the image array.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

void check_same_degree(Permutation const& a, Permutation const& b) {
  if (a.degree() != b.degree()) {
    fail(ErrorCode::MixedDegree, "degrees " + std::to_string(a.degree()) +
                                     " and " + std::to_string(b.degree()));
  }
}

bool commute(Permutation const& a, Permutation const& b) {
  check_same_degree(a, b);
  for (std::size_t i = 0; i < a.degree(); ++i) {
    if (b[a[static_cast<Point>(i)]] != a[b[static_cast<Point>(i)]]) return false;
  }
  return true;
}

}  // namespace carter
