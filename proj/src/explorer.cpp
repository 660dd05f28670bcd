#include "cayley/explorer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cayley/group_engine.hpp"

namespace cayley {

namespace {

using nlohmann::json;
using Index = std::unordered_map<Permutation, std::size_t, PermutationHash>;

const char kLetters[3] = {'x', 'y', 'z'};

const Permutation& generator(const Construction& c, std::size_t k) {
  return k == 0 ? c.x : (k == 1 ? c.y : c.z);
}

std::string vertex_word(const std::string& w) { return w.empty() ? "e" : w; }

void finish_edges(CayleyBall& ball, const Construction& c) {
  Index index;
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) index.emplace(ball.vertices[i], i);
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      const auto it = index.find(compose(generator(c, k), ball.vertices[i]));
      if (it != index.end()) edges.emplace(std::min(i, it->second), std::max(i, it->second));
    }
  ball.edges.assign(edges.begin(), edges.end());
  ball.frontier_sizes.clear();
  for (std::size_t d : ball.depth) {
    if (ball.frontier_sizes.size() <= d) ball.frontier_sizes.resize(d + 1, 0);
    ++ball.frontier_sizes[d];
  }
}

std::vector<std::vector<std::size_t>> adjacency(const CayleyBall& ball) {
  std::vector<std::vector<std::size_t>> adj(ball.vertices.size());
  for (const auto& [i, j] : ball.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

}  // namespace

std::size_t CayleyBall::complete_radius() const {
  if (!truncated) return radius;
  const std::size_t deepest = depth.empty() ? 0 : depth.back();
  return deepest == 0 ? 0 : deepest - 1;
}

CayleyBall bfs_ball(const Construction& c, std::size_t radius, std::size_t max_vertices) {
  if (max_vertices == 0) throw std::invalid_argument("max_vertices must be positive");
  CayleyBall ball;
  ball.m = c.m;
  ball.radius = radius;
  Index index;
  ball.vertices.push_back(Permutation::identity(c.x.degree()));
  ball.words.emplace_back();
  ball.depth.push_back(0);
  index.emplace(ball.vertices[0], 0);
  for (std::size_t head = 0; head < ball.vertices.size() && !ball.truncated; ++head) {
    if (ball.depth[head] == radius) break;
    for (std::size_t k = 0; k < 3; ++k) {
      Permutation next = compose(generator(c, k), ball.vertices[head]);
      if (index.count(next)) continue;
      if (ball.vertices.size() == max_vertices) {
        ball.truncated = true;
        break;
      }
      index.emplace(next, ball.vertices.size());
      ball.vertices.push_back(std::move(next));
      ball.words.push_back(kLetters[k] + ball.words[head]);
      ball.depth.push_back(ball.depth[head] + 1);
    }
  }
  finish_edges(ball, c);
  return ball;
}

CayleyBall bfs_ball(int m, std::size_t radius, std::size_t max_vertices) {
  return bfs_ball(build_construction(m), radius, max_vertices);
}

Permutation evaluate_word(const Construction& c, const std::string& word) {
  Permutation p = Permutation::identity(c.x.degree());
  if (word == "e") return p;
  for (char ch : word) {
    const auto k = std::find(std::begin(kLetters), std::end(kLetters), ch) - std::begin(kLetters);
    if (k == 3) throw std::invalid_argument(std::string("bad letter in word: ") + ch);
    p = compose(p, generator(c, static_cast<std::size_t>(k)));
  }
  return p;
}

bool coset_equality(const Permutation& w1, const Permutation& w2, int m) {
  if (w1.degree() != w2.degree()) throw std::invalid_argument("degree mismatch in coset_equality");
  const Permutation q = compose(w2, inverse(w1));
  return q == build_R(decode(q[0], m));
}

CheckResult coset_consistency_check(const CayleyBall& ball, const std::vector<Permutation>& dc,
                                    std::size_t max_non_edges) {
  CheckResult r{"coset-consistency", "adjacent iff w' w^-1 in R(H){x,y}R(H)", CheckStatus::pass,
                ball.m, {}};
  const std::unordered_set<Permutation, PermutationHash> set(dc.begin(), dc.end());
  std::vector<Permutation> inv;
  inv.reserve(ball.vertices.size());
  for (const auto& v : ball.vertices) inv.push_back(inverse(v));

  std::size_t bad_edges = 0;
  json first_bad = json::array();
  for (const auto& [i, j] : ball.edges)
    if (!set.count(compose(ball.vertices[j], inv[i]))) {
      ++bad_edges;
      if (first_bad.size() < 5) first_bad.push_back({vertex_word(ball.words[i]), vertex_word(ball.words[j])});
    }

  const std::set<std::pair<std::size_t, std::size_t>> edges(ball.edges.begin(), ball.edges.end());
  std::size_t sampled = 0, bad_non_edges = 0;
  json first_bad_non = json::array();
  for (std::size_t i = 0; i < ball.vertices.size() && sampled < max_non_edges; ++i)
    for (std::size_t j = i + 1; j < ball.vertices.size() && sampled < max_non_edges; ++j) {
      if (edges.count({i, j})) continue;
      ++sampled;
      if (set.count(compose(ball.vertices[j], inv[i]))) {
        ++bad_non_edges;
        if (first_bad_non.size() < 5)
          first_bad_non.push_back({vertex_word(ball.words[i]), vertex_word(ball.words[j])});
      }
    }
  r.details = {{"edges_checked", ball.edges.size()}, {"edge_violations", bad_edges},
               {"non_edges_sampled", sampled},        {"non_edge_violations", bad_non_edges},
               {"edge_examples", first_bad},          {"non_edge_examples", first_bad_non}};
  r.status = pass_if(bad_edges == 0 && bad_non_edges == 0);
  return r;
}

GirthReport girth_report(const CayleyBall& ball) {
  GirthReport g;
  const std::size_t complete = ball.complete_radius();
  g.lower_bound = 2 * complete + 1;
  const std::size_t n = ball.vertices.size();
  if (n <= 1) return g;
  const auto adj = adjacency(ball);

  // BFS tree inside the ball; branch = child of the root on the tree path.
  std::vector<std::size_t> dist(n, SIZE_MAX), parent(n, SIZE_MAX), branch(n, SIZE_MAX);
  std::deque<std::size_t> queue{0};
  dist[0] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj[v])
      if (dist[w] == SIZE_MAX) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        branch[w] = v == 0 ? w : branch[v];
        queue.push_back(w);
      }
  }
  std::size_t best = SIZE_MAX, bu = 0, bv = 0;
  for (const auto& [u, v] : ball.edges) {
    if (u == 0 || v == 0 || parent[u] == v || parent[v] == u) continue;
    if (dist[u] == SIZE_MAX || dist[v] == SIZE_MAX || branch[u] == branch[v]) continue;
    const std::size_t len = dist[u] + dist[v] + 1;
    if (len < best) std::tie(best, bu, bv) = std::tie(len, u, v);
  }
  // Two distinct tree edges out of the root landing on the same vertex are
  // ruled out above since every vertex has one parent.
  if (best == SIZE_MAX || best > 2 * complete + 1) return g;

  std::vector<std::size_t> left, right;
  for (std::size_t v = bu; v != SIZE_MAX; v = parent[v]) left.push_back(v);
  for (std::size_t v = bv; v != SIZE_MAX; v = parent[v]) right.push_back(v);
  std::reverse(left.begin(), left.end());  // root ... bu
  right.pop_back();                        // drop the root, bv ... child
  g.cycle = left;
  g.cycle.insert(g.cycle.end(), right.begin(), right.end());
  g.girth = g.cycle.size();

  const std::set<std::pair<std::size_t, std::size_t>> edges(ball.edges.begin(), ball.edges.end());
  bool ok = g.cycle.size() == best && g.cycle.size() >= 3;
  for (std::size_t i = 0; i < g.cycle.size() && ok; ++i) {
    const std::size_t a = g.cycle[i], b = g.cycle[(i + 1) % g.cycle.size()];
    ok = edges.count({std::min(a, b), std::max(a, b)}) > 0;
  }
  g.cycle_revalidated = ok;
  return g;
}

Permutation canonical_representative(const Permutation& p, int m) {
  const Permutation pinv = inverse(p);
  return compose(build_R(decode(pinv[0], m)), p);
}

CheckResult automorphism_action_sample(const CayleyBall& ball, const HElement& g) {
  CheckResult r{"automorphism-action", "right multiplication by R(g) preserves adjacency",
                CheckStatus::pass, ball.m, {}};
  Index index;
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) index.emplace(ball.vertices[i], i);
  const Permutation rg = build_R(g);
  std::vector<std::size_t> image(ball.vertices.size(), SIZE_MAX);
  for (std::size_t i = 0; i < ball.vertices.size(); ++i) {
    const auto it = index.find(canonical_representative(compose(ball.vertices[i], rg), ball.m));
    if (it != index.end()) image[i] = it->second;
  }
  const std::set<std::pair<std::size_t, std::size_t>> edges(ball.edges.begin(), ball.edges.end());
  std::size_t testable = 0, violations = 0;
  for (const auto& [i, j] : ball.edges) {
    if (image[i] == SIZE_MAX || image[j] == SIZE_MAX) continue;
    ++testable;
    violations += !edges.count({std::min(image[i], image[j]), std::max(image[i], image[j])});
  }
  r.details = {{"g", g.to_string()},
               {"edges", ball.edges.size()},
               {"testable_edges", testable},
               {"violations", violations}};
  r.status = pass_if(violations == 0);
  return r;
}

CheckResult verify_ball(int m, std::size_t radius, std::size_t max_vertices) {
  return verify_ball(build_construction(m), radius, max_vertices);
}

CheckResult verify_ball(const Construction& c, std::size_t radius, std::size_t max_vertices) {
  const int m = c.m;
  const CayleyBall ball = bfs_ball(c, radius, max_vertices);
  CheckResult r{"ball-adjacency", "Cay(Alt(H*), {x,y,z}) = Cos(Alt(H), R(H), R(H){x,y}R(H))",
                CheckStatus::pass, m, {}};
  const std::size_t n = ball.vertices.size();

  bool simple = true;
  for (std::size_t i = 1; i < ball.edges.size(); ++i) simple = simple && ball.edges[i] != ball.edges[i - 1];
  for (const auto& [i, j] : ball.edges) simple = simple && i != j;

  std::vector<std::size_t> deg(n, 0);
  for (const auto& [i, j] : ball.edges) ++deg[i], ++deg[j];
  const std::size_t complete = ball.complete_radius();
  bool regular = true;
  for (std::size_t i = 0; i < n; ++i)
    if (ball.depth[i] < complete) regular = regular && deg[i] == 3;

  bool fix_zero = true;
  for (const auto& v : ball.vertices) fix_zero = fix_zero && v[0] == 0;
  bool distinct_cosets = true;
  const bool pairwise = n <= 2000;
  if (pairwise) {
    for (std::size_t i = 0; i < n && distinct_cosets; ++i)
      for (std::size_t j = i + 1; j < n && distinct_cosets; ++j)
        distinct_cosets = !coset_equality(ball.vertices[i], ball.vertices[j], m);
  }

  const auto dc = double_coset_closure(c.regular, {c.x, c.y});
  const CheckResult consistency = coset_consistency_check(ball, dc);
  json samples = json::array();
  bool action_ok = true;
  for (const HElement& g : {HElement::identity(m), gen_a(m), gen_b(m), element_h(m), gen_c(m, m - 3)}) {
    const CheckResult s = automorphism_action_sample(ball, g);
    action_ok = action_ok && s.status == CheckStatus::pass;
    samples.push_back(s.details);
  }
  const GirthReport girth = girth_report(ball);

  r.details = {{"radius", radius},
               {"vertices", n},
               {"edges", ball.edges.size()},
               {"truncated", ball.truncated},
               {"frontier_sizes", ball.frontier_sizes},
               {"simple", simple},
               {"interior_3_regular", regular},
               {"vertices_fix_identity", fix_zero},
               {"pairwise_coset_check", pairwise},
               {"pairwise_non_coset_equal", distinct_cosets},
               {"double_coset_adjacency", consistency.details},
               {"right_multiplication", samples}};
  if (girth.girth)
    r.details["girth"] = {{"value", *girth.girth}, {"cycle_revalidated", girth.cycle_revalidated}};
  else
    r.details["girth"] = {{"lower_bound", girth.lower_bound}};
  r.status = pass_if(simple && regular && fix_zero && distinct_cosets &&
                     consistency.status == CheckStatus::pass && action_ok &&
                     (!girth.girth || girth.cycle_revalidated));
  return r;
}

// ---------------------------------------------------------------------------

CosetGraph build_coset_graph(const std::vector<Permutation>& g_gens,
                             const std::vector<Permutation>& h_gens,
                             const std::vector<Permutation>& s, std::size_t cap) {
  if (g_gens.empty()) throw std::invalid_argument("G needs at least one generator");
  const std::size_t degree = g_gens.front().degree();
  const Permutation one = Permutation::identity(degree);
  for (const auto* list : {&g_gens, &h_gens, &s})
    for (const auto& p : *list)
      if (p.degree() != degree) throw std::invalid_argument("generators of mixed degree");

  const auto g_elems = double_coset_closure(g_gens, {one}, cap);
  const auto h_elems = h_gens.empty() ? std::vector<Permutation>{one} : double_coset_closure(h_gens, {one}, cap);
  const std::unordered_set<Permutation, PermutationHash> g_set(g_elems.begin(), g_elems.end());
  const std::unordered_set<Permutation, PermutationHash> h_set(h_elems.begin(), h_elems.end());

  for (const auto& p : h_elems)
    if (!g_set.count(p)) throw std::invalid_argument("hypothesis failed: H is not a subgroup of G");
  for (const auto& p : s) {
    if (!g_set.count(p)) throw std::invalid_argument("hypothesis failed: S is not contained in G");
    if (h_set.count(p)) throw std::invalid_argument("hypothesis failed: S meets H");
  }
  const auto hsh = h_gens.empty() ? double_coset_closure({}, s, cap) : double_coset_closure(h_gens, s, cap);
  const std::unordered_set<Permutation, PermutationHash> hsh_set(hsh.begin(), hsh.end());
  for (const auto& d : hsh)
    if (!hsh_set.count(inverse(d)))
      throw std::invalid_argument("hypothesis failed: HSH is not closed under inverses");

  CosetGraph out;
  out.group_order = g_elems.size();
  out.subgroup_order = h_elems.size();
  out.valency = hsh.size() / h_elems.size();

  Index coset_of;
  for (const auto& g : g_elems) {
    if (coset_of.count(g)) continue;
    const std::size_t id = out.representatives.size();
    out.representatives.push_back(g);
    for (const auto& h : h_elems) coset_of.emplace(compose(h, g), id);
  }
  out.vertex_count = out.representatives.size();

  std::set<std::pair<std::size_t, std::size_t>> edges;
  bool valency_ok = true;
  for (std::size_t v = 0; v < out.vertex_count; ++v) {
    std::set<std::size_t> nbrs;
    for (const auto& d : hsh) nbrs.insert(coset_of.at(compose(d, out.representatives[v])));
    if (nbrs.count(v)) throw std::logic_error("coset graph has a loop");
    valency_ok = valency_ok && nbrs.size() == out.valency;
    for (std::size_t w : nbrs) edges.emplace(std::min(v, w), std::max(v, w));
  }
  if (!valency_ok) throw std::logic_error("coset graph valency differs from |HSH|/|H|");
  out.edges.assign(edges.begin(), edges.end());

  std::vector<std::vector<std::size_t>> adj(out.vertex_count);
  for (const auto& [i, j] : out.edges) adj[i].push_back(j), adj[j].push_back(i);
  std::vector<bool> seen(out.vertex_count, false);
  for (std::size_t start = 0; start < out.vertex_count; ++start) {
    if (seen[start]) continue;
    ++out.components;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t w : adj[v])
        if (!seen[w]) seen[w] = true, queue.push_back(w);
    }
  }
  out.connected = out.components == 1;

  std::vector<Permutation> sh(s.begin(), s.end());
  sh.insert(sh.end(), h_gens.begin(), h_gens.end());
  std::vector<Permutation> nontrivial;
  for (auto& p : sh)
    if (!p.is_identity()) nontrivial.push_back(p);
  const std::size_t generated = nontrivial.empty() ? 1 : double_coset_closure(nontrivial, {one}, cap).size();
  out.generates = generated == out.group_order;
  if (out.generates != out.connected)
    throw std::logic_error("coset graph connectivity disagrees with <S, H> = G");
  return out;
}

// ---------------------------------------------------------------------------

ExportFormat parse_export_format(const std::string& s) {
  if (s == "dot") return ExportFormat::dot;
  if (s == "json") return ExportFormat::json;
  throw std::invalid_argument("unknown export format: " + s);
}

std::string export_ball(const CayleyBall& ball, ExportFormat format) {
  if (format == ExportFormat::json) {
    json vertices = json::array();
    for (std::size_t i = 0; i < ball.vertices.size(); ++i)
      vertices.push_back({{"index", i}, {"word", vertex_word(ball.words[i])}});
    json edges = json::array();
    for (const auto& [i, j] : ball.edges) edges.push_back({i, j});
    const json out{{"m", ball.m},
                   {"radius", ball.radius},
                   {"truncated", ball.truncated},
                   {"vertices", vertices},
                   {"edges", edges}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "graph ball_m" << ball.m << "_r" << ball.radius << " {\n";
  for (std::size_t i = 0; i < ball.vertices.size(); ++i)
    os << "  " << i << " [label=\"v" << i << ":" << vertex_word(ball.words[i]) << "\"];\n";
  for (const auto& [i, j] : ball.edges) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_coset_graph(const CosetGraph& g, ExportFormat format) {
  if (format == ExportFormat::json) {
    json edges = json::array();
    for (const auto& [i, j] : g.edges) edges.push_back({i, j});
    const json out{{"vertices", g.vertex_count}, {"valency", g.valency}, {"group_order", g.group_order},
                   {"subgroup_order", g.subgroup_order}, {"connected", g.connected}, {"edges", edges}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "graph coset_graph {\n";
  for (std::size_t i = 0; i < g.vertex_count; ++i) os << "  " << i << " [label=\"v" << i << "\"];\n";
  for (const auto& [i, j] : g.edges) os << "  " << i << " -- " << j << ";\n";
  os << "}\n";
  return os.str();
}

CayleyBall import_ball_json(const std::string& text) {
  const json j = json::parse(text);
  const int m = j.at("m").get<int>();
  const Construction c = build_construction(m);
  CayleyBall ball;
  ball.m = m;
  ball.radius = j.at("radius").get<std::size_t>();
  ball.truncated = j.at("truncated").get<bool>();
  for (const auto& v : j.at("vertices")) {
    if (v.at("index").get<std::size_t>() != ball.vertices.size())
      throw std::invalid_argument("ball JSON vertices out of order");
    std::string w = v.at("word").get<std::string>();
    if (w == "e") w.clear();
    ball.vertices.push_back(evaluate_word(c, w));
    ball.depth.push_back(w.size());
    ball.words.push_back(std::move(w));
  }
  for (const auto& e : j.at("edges"))
    ball.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  ball.frontier_sizes.clear();
  for (std::size_t d : ball.depth) {
    if (ball.frontier_sizes.size() <= d) ball.frontier_sizes.resize(d + 1, 0);
    ++ball.frontier_sizes[d];
  }
  return ball;
}

}  // namespace cayley
