#ifndef CAYLEY_CONSTRUCTION_HPP
#define CAYLEY_CONSTRUCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "cayley/h_group.hpp"
#include "cayley/permutation.hpp"

namespace cayley {

/// Images of the generators a, b, c_1, ..., c_{m-3} under a candidate
/// endomorphism of H.
struct GeneratorImages {
  HElement a;
  HElement b;
  std::vector<HElement> c;  // c[i-1] is the image of c_i
};

/// True iff the images satisfy a^4 = b^2 = (ab)^2 = 1, c_i^2 = 1 and every
/// c_i commutes with a, b and the other c_j.
bool satisfies_relations(const GeneratorImages& images);

/**
 * Extends generator images multiplicatively to a table over H. Throws
 * std::invalid_argument if the images violate the defining relations or the
 * resulting map is not bijective.
 */
Permutation extend_automorphism(int m, const GeneratorImages& images);
/// Non-throwing variant for exhaustive searches: nullopt when the images do
/// not define an automorphism.
std::optional<Permutation> try_extend_automorphism(int m, const GeneratorImages& images);

GeneratorImages x_generator_images(int m);
/// The automorphism x of H as a permutation of the 2^m indices.
Permutation build_x(int m);

/// The involutory automorphism tau of the elementary abelian group K.
class KAutomorphism {
 public:
  KAutomorphism(int m, std::vector<Point> table) : m_(m), table_(std::move(table)) {}
  int m() const { return m_; }
  /// Throws std::invalid_argument when g is outside K.
  HElement apply(const HElement& g) const;

 private:
  int m_;
  std::vector<Point> table_;  // indexed by H index; entries outside K unused
};

KAutomorphism build_tau(int m);
Permutation build_y(int m);
Permutation build_z(int m);

/// Right regular representation: point p goes to p*g.
Permutation build_R(const HElement& g);
/// R(a), R(b), R(c_1), ..., R(c_{m-3}) in that order.
std::vector<Permutation> regular_gens(int m);
std::vector<std::string> regular_gen_labels(int m);

/// The three permutations making up the connection set.
struct ConnectionSet {
  Permutation x;
  Permutation y;
  Permutation z;
};

/// Throws std::logic_error if x, y, z are not pairwise distinct nontrivial
/// permutations fixing the identity point 0.
ConnectionSet connection_set(int m);

/// Everything the checks consume for one instance. Plain data so that
/// negative controls can corrupt individual tables.
struct Construction {
  int m;
  Permutation x;
  Permutation y;
  Permutation z;
  std::vector<Permutation> regular;  // regular_gens(m)
};

Construction build_construction(int m);

}  // namespace cayley

#endif  // CAYLEY_CONSTRUCTION_HPP
