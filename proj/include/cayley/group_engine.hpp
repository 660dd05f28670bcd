#ifndef CAYLEY_GROUP_ENGINE_HPP
#define CAYLEY_GROUP_ENGINE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/permutation.hpp"

namespace cayley {

using BigInt = boost::multiprecision::cpp_int;

/// Sequence of generator indices; evaluated left to right.
using Word = std::vector<std::size_t>;

/// A permutation group given by generators, with names used when printing
/// words.
class GeneratedGroup {
 public:
  /// Throws std::invalid_argument on an empty list, mixed degrees, an
  /// identity generator or a label count mismatch. Empty `labels` selects
  /// "g0", "g1", ...
  GeneratedGroup(std::vector<Permutation> generators, std::vector<std::string> labels = {});

  std::size_t degree() const { return generators_.front().degree(); }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Permutation evaluate(const Word& w) const;
  /// Labels joined by '*'; "1" for the empty word.
  std::string format(const Word& w) const;

 private:
  std::vector<Permutation> generators_;
  std::vector<std::string> labels_;
};

struct OrbitResult {
  /// Orbit points in BFS discovery order (generators tried in listed order).
  std::vector<Point> points;
  /// words[i] maps the start point to points[i]; present when requested.
  std::optional<std::vector<Word>> words;
};

OrbitResult orbit(const GeneratedGroup& group, Point point, bool track_words = false);

/// Shortest word w (first in BFS order) with from^w == to, or nullopt when
/// `to` lies outside the orbit of `from`.
std::optional<Word> find_word(const GeneratedGroup& group, Point from, Point to);

class DegreeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ClosureCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SchreierSimsOptions {
  std::size_t degree_cap = 256;
};

/**
 * Base and strong generating set with full transversal tables.
 *
 * Level i stores the basic orbit of base[i] under the strong generators
 * fixing base[0..i-1], and for each orbit point beta the inverse of a coset
 * representative u_beta with base[i]^u_beta = beta.
 */
class StabilizerChain {
 public:
  struct Level {
    Point base_point;
    std::vector<std::size_t> generators;  // indices into strong_generators
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;         // point -> index into orbit, -1 if absent
    std::vector<Permutation> inverse_reps;  // aligned with orbit
  };

  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const { return degree_; }
  std::vector<Point> base() const;
  const std::vector<Permutation>& strong_generators() const { return strong_; }
  const std::vector<Level>& levels() const { return levels_; }
  /// Product of the basic orbit lengths.
  BigInt order() const;

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting stopped; levels().size() if none
  };
  SiftResult sift(const Permutation& g) const;
  /// Appends g to the strong generators and updates levels 0..level (adding a
  /// new base point when level == levels().size()). g must fix the base
  /// points of levels 0..level-1 and must not be the identity.
  void insert(const Permutation& g, std::size_t level);

 private:
  void extend_orbit(Level& level, std::size_t new_generator);

  std::size_t degree_;
  std::vector<Permutation> strong_;
  std::vector<Permutation> strong_inverse_;
  std::vector<Level> levels_;
};

/**
 * Builds a complete stabilizer chain for <generators>.
 *
 * A seeded product-replacement phase feeds elements into the chain until the
 * product of basic orbit lengths reaches the order of the smallest symmetric
 * or alternating group known to contain the group (which proves the chain
 * complete), or until a run of elements sift to the identity. The chain is
 * then closed by sifting every Schreier generator, so the result is exact
 * either way and independent of the heuristic phase.
 *
 * Throws DegreeCapExceeded above options.degree_cap.
 */
StabilizerChain schreier_sims(const GeneratedGroup& group, const SchreierSimsOptions& options = {});

/// Throws std::invalid_argument on degree mismatch.
bool membership(const StabilizerChain& chain, const Permutation& p);

/// n! as an exact integer.
BigInt factorial(unsigned n);

struct AltCertificate {
  enum class Status { proven, inconclusive };
  Status status = Status::inconclusive;
  bool transitive = false;
  bool two_transitive = false;
  bool all_generators_even = false;
  /// Word over the group generators whose value has a cycle of prime length
  /// p with n/2 < p < n-2; empty unless proven.
  Word witness_word;
  std::size_t prime_cycle_length = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::uint64_t words_tried = 0;
  std::size_t word_length = 0;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/**
 * Certifies <generators> = Alt(n) via Jordan's theorem: the group is
 * transitive, the point stabilizer generators (which must all fix
 * stabilized_point and lie in the group) are transitive on the remaining
 * points, every generator is even, and a random word contains a cycle of
 * prime length p with n/2 < p < n-2.
 *
 * Words have length 10*ceil(log2 n) with uniform generator choices drawn
 * from std::mt19937_64 seeded with `seed`. Returns inconclusive (never a
 * false proof) when a structural check fails or `budget` words find no
 * witness.
 */
AltCertificate alternating_certificate(const GeneratedGroup& group,
                                       const std::vector<Permutation>& point_stabilizer_gens,
                                       std::uint64_t seed, std::uint64_t budget,
                                       Point stabilized_point = 0);

/// Re-evaluates the witness word and re-checks the three structural flags.
bool recheck_certificate(const GeneratedGroup& group,
                         const std::vector<Permutation>& point_stabilizer_gens,
                         const AltCertificate& cert, Point stabilized_point = 0);

/// Closure of `seeds` under left and right multiplication by `h_gens`, in BFS
/// order. Throws ClosureCapExceeded once the closure would exceed `cap`.
std::vector<Permutation> double_coset_closure(const std::vector<Permutation>& h_gens,
                                              const std::vector<Permutation>& seeds,
                                              std::size_t cap = std::size_t{1} << 20);

}  // namespace cayley

#endif  // CAYLEY_GROUP_ENGINE_HPP
