#ifndef CAYLEY_H_GROUP_HPP
#define CAYLEY_H_GROUP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cayley/permutation.hpp"

namespace cayley {

/// Smallest and largest supported instance parameter. The upper bound keeps
/// |H| = 2^m within kMaxDegree.
inline constexpr int kMinM = 4;
inline constexpr int kMaxM = 16;

/// Validated instance parameter m.
class HParams {
 public:
  explicit HParams(int m);
  int m() const { return m_; }
  /// |H| = 2^m.
  std::size_t order() const { return std::size_t{1} << m_; }
  /// Number of central involutions c_1, ..., c_{m-3}.
  int c_count() const { return m_ - 3; }
  bool odd() const { return m_ % 2 == 1; }

  friend bool operator==(const HParams&, const HParams&) = default;

 private:
  int m_;
};

/**
 * Element a^i b^j c_1^{v_1} ... c_{m-3}^{v_{m-3}} of
 * H = <a, b | a^4 = b^2 = (ab)^2 = 1> x <c_1> x ... x <c_{m-3}>.
 *
 * Dense index: a_exp + 4*b_exp + 8*c_bits, where bit k-1 of c_bits is the
 * exponent of c_k. The layout is frozen; certificates depend on it.
 */
class HElement {
 public:
  static HElement identity(int m);
  static HElement make(int m, int a_exp, int b_exp, std::uint32_t c_bits);
  /// Throws std::out_of_range unless 0 <= index < 2^m.
  static HElement decode(std::size_t index, int m);

  int m() const { return m_; }
  int a_exp() const { return a_; }
  int b_exp() const { return b_; }
  std::uint32_t c_bits() const { return c_; }
  /// Exponent of c_k (k in 1..m-3).
  int c_exp(int k) const { return static_cast<int>((c_ >> (k - 1)) & 1U); }

  Point index() const { return static_cast<Point>(a_ + 4 * b_ + 8 * c_); }
  bool is_identity() const { return a_ == 0 && b_ == 0 && c_ == 0; }

  /// Canonical word such as "a^2 b c1 c3"; "1" for the identity.
  std::string to_string() const;

  friend bool operator==(const HElement&, const HElement&) = default;

 private:
  HElement(int m, int a, int b, std::uint32_t c) : m_(m), a_(a), b_(b), c_(c) {}

  int m_;
  int a_;
  int b_;
  std::uint32_t c_;
};

inline Point encode(const HElement& g) { return g.index(); }
inline HElement decode(std::size_t index, int m) { return HElement::decode(index, m); }

/// Group law. Throws std::invalid_argument when the operands come from
/// different m.
HElement h_mul(const HElement& g1, const HElement& g2);
HElement h_inv(const HElement& g);
HElement h_pow(const HElement& g, int k);

inline HElement operator*(const HElement& g1, const HElement& g2) { return h_mul(g1, g2); }

HElement gen_a(int m);
HElement gen_b(int m);
/// c_i for 1 <= i <= m-3. Indices below 1 give the identity (c_{-1} = c_0 = 1);
/// indices above m-3 throw.
HElement gen_c(int m, int i);
/// Product of c_i over a list of indices, honouring the same convention.
HElement c_product(int m, const std::vector<int>& indices);

/// h = a * prod c_{2i+1} for i = 0..ceil((m-5)/2).
HElement element_h(int m);
/// h_1 = h * c_{m-3}; only defined for even m.
HElement element_h1(int m);

/**
 * Named elements: "identity", "a", "b", "c<i>" (e.g. "c3"), "h", "h1"
 * (even m only) and "a2h" (a^2 h). Throws std::invalid_argument for an
 * unknown name, an out-of-range c index or h1 at odd m.
 */
HElement special_element(std::string_view name, int m);

/// Index lists for the ranges used by the construction. Empty when the
/// upper bound is below the lower bound.
std::vector<int> int_range(int lo, int hi);
/// ceil(p/2) and floor(p/2) with the mathematical convention on negatives.
int ceil_half(int p);
int floor_half(int p);

/// K = <a^2, b, c_1, ..., c_{m-3}>: a_exp even.
bool in_K(const HElement& g);
/// H_1 = <a, b, c_1, ..., c_{m-4}>: no c_{m-3} factor.
bool in_H1(const HElement& g);
bool in_K1(const HElement& g);

/**
 * Membership in U, a subgroup of <c_1, ..., c_{m-3}> of index 2.
 * Odd m: sum of k_{2j} for j = 1..(m-3)/2 is even.
 * Even m: sum of k_{2j} for j = 1..(m-4)/2 has the parity of k_{m-3}.
 */
bool in_U(const HElement& g);
/// Elements of U sorted by index.
std::vector<HElement> subgroup_U(int m);

/**
 * The subgroup M used in the fixed-point analysis of the connection set:
 *   m = 1 (mod 4): <a^2 b> x <c_1 c_2> x ... x <c_{m-4} c_{m-3}>
 *   m = 3 (mod 4): <b> x <c_1 c_2> x ... x <c_{m-4} c_{m-3}>
 *   m = 2 (mod 4): <c_1> x <c_3> x ... x <c_{m-5}> x <a c_{m-3}>
 * Throws std::invalid_argument for m = 0 (mod 4). Sorted by index.
 */
std::vector<HElement> subgroup_M(int m);

/// Closure of a generating list under multiplication, sorted by index.
std::vector<HElement> generated_subgroup(int m, const std::vector<HElement>& gens);

}  // namespace cayley

#endif  // CAYLEY_H_GROUP_HPP
