#include "cayley/group_engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <unordered_set>

namespace cayley {

GeneratedGroup::GeneratedGroup(std::vector<Permutation> generators, std::vector<std::string> labels)
    : generators_(std::move(generators)), labels_(std::move(labels)) {
  if (generators_.empty()) throw std::invalid_argument("a generated group needs a generator");
  for (const auto& g : generators_) {
    if (g.degree() != generators_.front().degree())
      throw std::invalid_argument("generators of different degree");
    if (g.is_identity()) throw std::invalid_argument("identity generator");
  }
  if (labels_.empty()) {
    for (std::size_t i = 0; i < generators_.size(); ++i) labels_.push_back("g" + std::to_string(i));
  } else if (labels_.size() != generators_.size()) {
    throw std::invalid_argument("label count does not match generator count");
  }
}

Permutation GeneratedGroup::evaluate(const Word& w) const {
  Permutation r = Permutation::identity(degree());
  for (std::size_t i : w) r = compose(r, generators_.at(i));
  return r;
}

std::string GeneratedGroup::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '*';
    s += labels_.at(w[i]);
  }
  return s;
}

namespace {

// BFS over points; parent links let callers rebuild minimal words.
struct PointSearch {
  std::vector<Point> order;
  std::vector<std::int64_t> parent;     // -1 for unseen, self for the root
  std::vector<std::size_t> via;         // generator used to reach the point
};

PointSearch point_bfs(const GeneratedGroup& group, Point start, std::optional<Point> stop_at) {
  const std::size_t n = group.degree();
  if (start >= n) throw std::invalid_argument("point outside the domain");
  PointSearch s{{}, std::vector<std::int64_t>(n, -1), std::vector<std::size_t>(n, 0)};
  s.parent[start] = start;
  s.order.push_back(start);
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    const Point p = s.order[head];
    if (stop_at && p == *stop_at) break;
    for (std::size_t g = 0; g < group.generators().size(); ++g) {
      const Point q = group.generators()[g][p];
      if (s.parent[q] >= 0) continue;
      s.parent[q] = p;
      s.via[q] = g;
      s.order.push_back(q);
    }
  }
  return s;
}

Word word_to(const PointSearch& s, Point start, Point target) {
  Word w;
  for (Point p = target; p != start; p = static_cast<Point>(s.parent[p])) w.push_back(s.via[p]);
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

OrbitResult orbit(const GeneratedGroup& group, Point point, bool track_words) {
  PointSearch s = point_bfs(group, point, std::nullopt);
  OrbitResult r{s.order, std::nullopt};
  if (track_words) {
    std::vector<Word> words;
    words.reserve(s.order.size());
    for (Point p : s.order) words.push_back(word_to(s, point, p));
    r.words = std::move(words);
  }
  return r;
}

std::optional<Word> find_word(const GeneratedGroup& group, Point from, Point to) {
  if (to >= group.degree()) throw std::invalid_argument("point outside the domain");
  PointSearch s = point_bfs(group, from, to);
  if (s.parent[to] < 0) return std::nullopt;
  return word_to(s, from, to);
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt r = 1;
  for (const auto& l : levels_) r *= l.orbit.size();
  return r;
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& g) const {
  if (g.degree() != degree_) throw std::invalid_argument("degree mismatch in sift");
  Permutation r = g;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const Level& l = levels_[i];
    const Point beta = r[l.base_point];
    if (beta == l.base_point) continue;
    const std::int32_t k = l.slot[beta];
    if (k < 0) return {std::move(r), i};
    r = compose(r, l.inverse_reps[static_cast<std::size_t>(k)]);
  }
  return {std::move(r), levels_.size()};
}

void StabilizerChain::extend_orbit(Level& level, std::size_t new_generator) {
  // Existing orbit points only need the new generator; new points need all.
  std::deque<std::pair<std::size_t, bool>> queue;  // (orbit slot, only_new)
  for (std::size_t i = 0; i < level.orbit.size(); ++i) queue.emplace_back(i, true);
  while (!queue.empty()) {
    const auto [slot, only_new] = queue.front();
    queue.pop_front();
    const Point gamma = level.orbit[slot];
    auto visit = [&](std::size_t gi) {
      const Point beta = strong_[gi][gamma];
      if (level.slot[beta] >= 0) return;
      level.slot[beta] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(beta);
      level.inverse_reps.push_back(compose(strong_inverse_[gi], level.inverse_reps[slot]));
      queue.emplace_back(level.orbit.size() - 1, false);
    };
    if (only_new) {
      visit(new_generator);
    } else {
      for (std::size_t gi : level.generators) visit(gi);
    }
  }
}

void StabilizerChain::insert(const Permutation& g, std::size_t level) {
  if (g.degree() != degree_) throw std::invalid_argument("degree mismatch in insert");
  if (g.is_identity()) throw std::invalid_argument("cannot insert the identity");
  if (level > levels_.size()) throw std::invalid_argument("level beyond the chain");
  for (std::size_t i = 0; i < level && i < levels_.size(); ++i)
    if (g[levels_[i].base_point] != levels_[i].base_point)
      throw std::invalid_argument("inserted element moves an earlier base point");

  const std::size_t gi = strong_.size();
  strong_.push_back(g);
  strong_inverse_.push_back(inverse(g));
  if (level == levels_.size()) {
    Level l;
    l.base_point = g.first_moved_point();
    l.slot.assign(degree_, -1);
    l.slot[l.base_point] = 0;
    l.orbit.push_back(l.base_point);
    l.inverse_reps.push_back(Permutation::identity(degree_));
    levels_.push_back(std::move(l));
  }
  for (std::size_t i = 0; i <= level; ++i) {
    levels_[i].generators.push_back(gi);
    extend_orbit(levels_[i], gi);
  }
}

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

namespace {

constexpr std::uint64_t kProductReplacementSeed = 0x5eed5c4e1e25137bULL;
constexpr int kIdleSiftLimit = 40;

void sift_and_insert(StabilizerChain& chain, const Permutation& g, bool& changed) {
  auto r = chain.sift(g);
  if (r.residue.is_identity()) return;
  chain.insert(r.residue, r.level);
  changed = true;
}

// Sifts every Schreier generator u_beta * s * u_{beta^s}^{-1}; returns true if
// the chain changed.
bool schreier_pass(StabilizerChain& chain) {
  bool changed = false;
  for (std::size_t i = chain.levels().size(); i-- > 0;) {
    // Levels can grow during the pass; copy what this pass iterates over.
    const auto level = chain.levels()[i];
    const auto strong = chain.strong_generators();
    for (std::size_t slot = 0; slot < level.orbit.size(); ++slot) {
      const Permutation u = inverse(level.inverse_reps[slot]);
      for (std::size_t gi : level.generators) {
        const Point image = strong[gi][level.orbit[slot]];
        const auto& li = chain.levels()[i];
        const Permutation sg =
            compose(u, strong[gi], li.inverse_reps[static_cast<std::size_t>(li.slot[image])]);
        if (sg.is_identity()) continue;
        sift_and_insert(chain, sg, changed);
      }
    }
  }
  return changed;
}

}  // namespace

StabilizerChain schreier_sims(const GeneratedGroup& group, const SchreierSimsOptions& options) {
  const std::size_t n = group.degree();
  if (n > options.degree_cap)
    throw DegreeCapExceeded("degree " + std::to_string(n) + " exceeds the stabilizer chain cap " +
                            std::to_string(options.degree_cap) +
                            "; use alternating_certificate for this group");
  StabilizerChain chain(n);
  bool changed = false;
  for (const auto& g : group.generators()) sift_and_insert(chain, g, changed);

  const bool all_even = std::all_of(group.generators().begin(), group.generators().end(),
                                    [](const Permutation& g) { return parity(g) == Parity::even; });
  const BigInt bound = all_even && n >= 2 ? BigInt(factorial(static_cast<unsigned>(n)) / 2)
                                          : factorial(static_cast<unsigned>(n));
  if (chain.order() == bound) return chain;

  // Product replacement with an accumulator.
  std::mt19937_64 rng(kProductReplacementSeed);
  std::vector<Permutation> state = group.generators();
  while (state.size() < 10) state.push_back(state[state.size() % group.generators().size()]);
  Permutation acc = Permutation::identity(n);
  auto step = [&]() {
    const std::size_t i = rng() % state.size();
    std::size_t j = rng() % (state.size() - 1);
    if (j >= i) ++j;
    state[i] = (rng() & 1U) ? compose(state[i], state[j]) : compose(state[j], state[i]);
    acc = compose(acc, state[i]);
    return acc;
  };
  for (int i = 0; i < 50; ++i) step();
  for (int idle = 0; idle < kIdleSiftLimit && chain.order() < bound;) {
    bool grew = false;
    sift_and_insert(chain, step(), grew);
    idle = grew ? 0 : idle + 1;
  }
  if (chain.order() == bound) return chain;

  while (schreier_pass(chain)) {
  }
  return chain;
}

bool membership(const StabilizerChain& chain, const Permutation& p) {
  if (p.degree() != chain.degree()) throw std::invalid_argument("degree mismatch in membership");
  const auto r = chain.sift(p);
  return r.level == chain.levels().size() && r.residue.is_identity();
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

bool all_fix(const std::vector<Permutation>& gens, Point p) {
  return std::all_of(gens.begin(), gens.end(), [p](const Permutation& g) { return g[p] == p; });
}

bool stabilizer_gens_in_group(const GeneratedGroup& group, const std::vector<Permutation>& gens) {
  return std::all_of(gens.begin(), gens.end(), [&](const Permutation& s) {
    return std::find(group.generators().begin(), group.generators().end(), s) !=
           group.generators().end();
  });
}

void structural_flags(const GeneratedGroup& group, const std::vector<Permutation>& stab,
                      Point fixed, AltCertificate& c) {
  const std::size_t n = group.degree();
  c.transitive = orbit(group, 0).points.size() == n;
  c.two_transitive = false;
  if (c.transitive && !stab.empty() && fixed < n && all_fix(stab, fixed) &&
      stabilizer_gens_in_group(group, stab)) {
    const Point start = fixed == 0 ? 1 : 0;
    if (n == 1) {
      c.two_transitive = true;
    } else if (start < n) {
      try {
        c.two_transitive = orbit(GeneratedGroup(stab), start).points.size() == n - 1;
      } catch (const std::invalid_argument&) {
        c.two_transitive = false;  // identity stabilizer generator
      }
    }
  }
  c.all_generators_even =
      std::all_of(group.generators().begin(), group.generators().end(),
                  [](const Permutation& g) { return parity(g) == Parity::even; });
}

std::size_t jordan_prime_cycle(const Permutation& p) {
  const std::size_t n = p.degree();
  for (std::size_t len : cycle_lengths(p))
    if (2 * len > n && len + 2 < n && is_prime(len)) return len;
  return 0;
}

}  // namespace

AltCertificate alternating_certificate(const GeneratedGroup& group,
                                       const std::vector<Permutation>& point_stabilizer_gens,
                                       std::uint64_t seed, std::uint64_t budget,
                                       Point stabilized_point) {
  AltCertificate c;
  c.seed = seed;
  c.budget = budget;
  const std::size_t n = group.degree();
  c.word_length = 10 * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n))));
  structural_flags(group, point_stabilizer_gens, stabilized_point, c);
  if (!(c.transitive && c.two_transitive && c.all_generators_even)) return c;

  std::mt19937_64 rng(seed);
  const std::size_t k = group.generators().size();
  for (c.words_tried = 0; c.words_tried < budget;) {
    Word w(c.word_length);
    for (auto& letter : w) letter = static_cast<std::size_t>(rng() % k);
    ++c.words_tried;
    const std::size_t p = jordan_prime_cycle(group.evaluate(w));
    if (p) {
      c.status = AltCertificate::Status::proven;
      c.witness_word = std::move(w);
      c.prime_cycle_length = p;
      return c;
    }
  }
  return c;
}

bool recheck_certificate(const GeneratedGroup& group,
                         const std::vector<Permutation>& point_stabilizer_gens,
                         const AltCertificate& cert, Point stabilized_point) {
  if (cert.status != AltCertificate::Status::proven) return false;
  AltCertificate flags;
  structural_flags(group, point_stabilizer_gens, stabilized_point, flags);
  if (!(flags.transitive && flags.two_transitive && flags.all_generators_even)) return false;
  for (std::size_t letter : cert.witness_word)
    if (letter >= group.generators().size()) return false;
  const std::size_t p = jordan_prime_cycle(group.evaluate(cert.witness_word));
  if (p == 0) return false;
  const auto lengths = cycle_lengths(group.evaluate(cert.witness_word));
  return std::find(lengths.begin(), lengths.end(), cert.prime_cycle_length) != lengths.end() &&
         is_prime(cert.prime_cycle_length) && 2 * cert.prime_cycle_length > group.degree() &&
         cert.prime_cycle_length + 2 < group.degree();
}

std::vector<Permutation> double_coset_closure(const std::vector<Permutation>& h_gens,
                                              const std::vector<Permutation>& seeds,
                                              std::size_t cap) {
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> out;
  auto add = [&](Permutation p) {
    if (seen.count(p)) return;
    if (out.size() >= cap)
      throw ClosureCapExceeded("double coset closure exceeds " + std::to_string(cap) +
                               " elements");
    seen.insert(p);
    out.push_back(std::move(p));
  };
  for (const auto& s : seeds) {
    if (!h_gens.empty() && s.degree() != h_gens.front().degree())
      throw std::invalid_argument("degree mismatch in double coset closure");
    add(s);
  }
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& r : h_gens) {
      add(compose(r, out[head]));
      add(compose(out[head], r));
    }
  }
  return out;
}

}  // namespace cayley
