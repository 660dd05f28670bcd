#ifndef CAYLEY_PERMUTATION_HPP
#define CAYLEY_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cayley {

using Point = std::uint32_t;

/// Largest degree any permutation may carry.
inline constexpr std::size_t kMaxDegree = std::size_t{1} << 16;

/**
 * A bijection of {0, ..., n-1} stored as a dense image table.
 *
 * Products are read left to right: compose(p, q) applies p first, then q,
 * so that i^(pq) = (i^p)^q. Every binary operation checks that both
 * operands carry the same degree.
 */
class Permutation {
 public:
  /// Validates that `images` is a bijection of {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  static Permutation transposition(std::size_t degree, Point i, Point j);
  /// Builds a permutation from disjoint cycles, e.g. {{0, 1, 2}, {4, 5}}.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  Point image(Point i) const;
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  /// Smallest point with images[p] != p, or degree() for the identity.
  Point first_moved_point() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Trusted {};
  Permutation(std::vector<Point> images, Trusted) : images_(std::move(images)) {}

  std::vector<Point> images_;

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);
  friend class PermutationBuilder;
};

/// Incremental construction of image tables whose bijectivity is known by
/// construction (automorphism tables, group products). Validates on build().
class PermutationBuilder {
 public:
  explicit PermutationBuilder(std::size_t degree);
  Point& operator[](Point i) { return images_[i]; }
  std::size_t degree() const { return images_.size(); }
  Permutation build() &&;
  /// Skips the bijectivity scan. Caller guarantees the table is a bijection.
  Permutation build_unchecked() &&;

 private:
  std::vector<Point> images_;
};

enum class Parity { even, odd };

struct CycleDecomposition {
  /// Cycles of length >= 2, each rotated to start at its smallest point,
  /// sorted by that smallest point.
  std::vector<std::vector<Point>> cycles;
  /// Sorted fixed points.
  std::vector<Point> fixed;

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Applies p, then q. Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

template <typename... Rest>
Permutation compose(const Permutation& p, const Permutation& q, const Rest&... rest) {
  return compose(compose(p, q), rest...);
}

Permutation inverse(const Permutation& p);
Parity parity(const Permutation& p);
CycleDecomposition cycle_decomposition(const Permutation& p);
/// Inverse of cycle_decomposition; throws if the cycles are not disjoint or
/// do not together with `fixed` cover {0, ..., degree-1}.
Permutation from_decomposition(std::size_t degree, const CycleDecomposition& d);
Permutation power(const Permutation& p, std::uint64_t k);
std::vector<Point> fixed_points(const Permutation& p);
/// Cycle lengths (including fixed points as 1-cycles), unsorted.
std::vector<std::size_t> cycle_lengths(const Permutation& p);

/// Cycle notation, e.g. "(0 1 2)(4 5)"; "()" for the identity.
std::string cycle_string(const CycleDecomposition& d);

}  // namespace cayley

#endif  // CAYLEY_PERMUTATION_HPP
