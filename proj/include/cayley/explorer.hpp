#ifndef CAYLEY_EXPLORER_HPP
#define CAYLEY_EXPLORER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cayley/check_result.hpp"
#include "cayley/construction.hpp"

namespace cayley {

// The graph is explored as Cay(Alt(H*), {x, y, z}). The neighbour of w along
// s is compose(s, w) (apply s, then w), so the edge (w, w') satisfies
// compose(w', inverse(w)) = s. Every vertex fixes point 0 and is the unique
// such representative of its right coset of R(H).

struct CayleyBall {
  int m = 0;
  std::size_t radius = 0;
  bool truncated = false;
  std::vector<Permutation> vertices;  // BFS order, vertices[0] is the identity
  std::vector<std::string> words;     // shortest word over {x, y, z}; "" for the root
  std::vector<std::size_t> depth;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  std::vector<std::size_t> frontier_sizes;                 // vertices per depth

  /// Largest d such that every vertex at distance <= d is present.
  std::size_t complete_radius() const;
};

/// Breadth-first ball around the identity, generators tried in the order x, y,
/// z. Stops adding vertices once max_vertices is reached and flags truncation.
/// The edge set is the subgraph induced on the collected vertices.
CayleyBall bfs_ball(const Construction& c, std::size_t radius, std::size_t max_vertices = 2000000);
CayleyBall bfs_ball(int m, std::size_t radius, std::size_t max_vertices = 2000000);

/// Evaluates a word over {x, y, z}; "" and "e" give the identity.
Permutation evaluate_word(const Construction& c, const std::string& word);

/// True iff w2 * w1^{-1} is a right translation R(g) of H.
bool coset_equality(const Permutation& w1, const Permutation& w2, int m);

/// Every edge quotient lies in dc and sampled non-adjacent pairs do not.
CheckResult coset_consistency_check(const CayleyBall& ball, const std::vector<Permutation>& dc,
                                    std::size_t max_non_edges = 20000);

struct GirthReport {
  /// Shortest cycle through the root, if one lies inside the complete part.
  std::optional<std::size_t> girth;
  /// Valid when no cycle was found: the girth exceeds 2 * complete radius.
  std::size_t lower_bound = 0;
  std::vector<std::size_t> cycle;  // vertex indices, closing edge implied
  bool cycle_revalidated = false;
};

GirthReport girth_report(const CayleyBall& ball);

/// Element of R(H)p fixing point 0.
Permutation canonical_representative(const Permutation& p, int m);

/// Right multiplication by R(g) maps ball edges to edges whenever both image
/// cosets fall inside the ball.
CheckResult automorphism_action_sample(const CayleyBall& ball, const HElement& g);

/// Simplicity, interior 3-regularity, pairwise coset-distinctness, double
/// coset adjacency and right-multiplication samples for one ball.
CheckResult verify_ball(const Construction& c, std::size_t radius, std::size_t max_vertices = 2000000);
CheckResult verify_ball(int m, std::size_t radius, std::size_t max_vertices = 2000000);

// ---------------------------------------------------------------------------
// Generic coset graphs Cos(G, H, HSH).

struct CosetGraph {
  std::size_t vertex_count = 0;
  std::vector<Permutation> representatives;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
  std::size_t valency = 0;          // |HSH| / |H|
  std::size_t group_order = 0;      // |G|
  std::size_t subgroup_order = 0;   // |H|
  bool connected = false;           // from the graph itself
  bool generates = false;           // <S, H> = G
  std::size_t components = 0;
};

/// Builds the coset graph of the right cosets Hg with Hg ~ Hdg for d in HSH.
/// An empty h_gens means H = 1. Throws ClosureCapExceeded when |G| > cap and
/// std::invalid_argument naming the failed hypothesis when S is not inside
/// G, H is not inside G, S meets H, or HSH is not closed under inverses.
CosetGraph build_coset_graph(const std::vector<Permutation>& g_gens,
                             const std::vector<Permutation>& h_gens,
                             const std::vector<Permutation>& s, std::size_t cap = 1 << 20);

// ---------------------------------------------------------------------------
// Export

enum class ExportFormat { dot, json };

/// Throws std::invalid_argument for anything but "dot" or "json".
ExportFormat parse_export_format(const std::string& s);

std::string export_ball(const CayleyBall& ball, ExportFormat format);
std::string export_coset_graph(const CosetGraph& g, ExportFormat format);

/// Rebuilds a ball from its JSON export by re-evaluating the vertex words.
CayleyBall import_ball_json(const std::string& text);

}  // namespace cayley

#endif  // CAYLEY_EXPLORER_HPP
