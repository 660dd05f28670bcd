#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "cayley/construction.hpp"
#include "cayley/group_engine.hpp"

using namespace cayley;

namespace {

// Exact values of n!/2, computed outside this code base.
const BigInt kHalf16 = BigInt("10461394944000");
const BigInt kHalf32 = BigInt("131565418466846765083609006080000000");
const BigInt kHalf64 = BigInt(
    "63443466092942082051716694667580740401432758087272596099400947187607352115200000000000000");

GeneratedGroup xy_r_group(int m) {
  const Construction c = build_construction(m);
  std::vector<Permutation> g{c.x, c.y};
  g.insert(g.end(), c.regular.begin(), c.regular.end());
  return GeneratedGroup(std::move(g));
}

// Group generated by `gens` as an explicit element set.
std::set<std::vector<Point>> brute_closure(const std::vector<Permutation>& gens) {
  const std::size_t n = gens.front().degree();
  std::set<std::vector<Point>> seen;
  std::vector<Permutation> queue{Permutation::identity(n)};
  seen.insert({queue[0].images().begin(), queue[0].images().end()});
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& g : gens) {
      Permutation p = compose(queue[head], g);
      if (seen.insert({p.images().begin(), p.images().end()}).second) queue.push_back(p);
    }
  return seen;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(std::move(v));
}

}  // namespace

TEST(GeneratedGroup, Validation) {
  EXPECT_THROW(GeneratedGroup({}), std::invalid_argument);
  EXPECT_THROW(GeneratedGroup({Permutation::identity(3)}), std::invalid_argument);
  EXPECT_THROW(GeneratedGroup({Permutation({1, 0, 2}), Permutation({1, 0})}),
               std::invalid_argument);
  EXPECT_THROW(GeneratedGroup({Permutation({1, 0, 2})}, {"a", "b"}), std::invalid_argument);
  const GeneratedGroup g({Permutation({1, 0, 2}), Permutation({0, 2, 1})}, {"s", "t"});
  EXPECT_EQ(g.format({0, 1, 0}), "s*t*s");
  EXPECT_EQ(g.format({}), "1");
  EXPECT_EQ(g.evaluate({0, 1}), compose(Permutation({1, 0, 2}), Permutation({0, 2, 1})));
}

TEST(Orbit, Examples) {
  const GeneratedGroup single({Permutation({0, 2, 1, 3})});
  EXPECT_EQ(orbit(single, 3).points, (std::vector<Point>{3}));

  const Construction c = build_construction(4);
  const GeneratedGroup xyz({c.x, c.y, c.z});
  const auto o = orbit(xyz, encode(gen_c(4, 1)));
  EXPECT_EQ(o.points.size(), 15u);
  EXPECT_EQ(std::count(o.points.begin(), o.points.end(), 0u), 0);

  EXPECT_EQ(orbit(xy_r_group(4), 0).points.size(), 16u);
}

TEST(Orbit, TrackedWordsAreMinimalAndCorrect) {
  const Construction c = build_construction(5);
  const GeneratedGroup xyz({c.x, c.y, c.z}, {"x", "y", "z"});
  const auto o = orbit(xyz, 1, true);
  ASSERT_TRUE(o.words.has_value());
  std::size_t last = 0;
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    EXPECT_EQ(xyz.evaluate((*o.words)[i])[1], o.points[i]);
    EXPECT_GE((*o.words)[i].size(), last);
    last = (*o.words)[i].size();
  }
}

TEST(OrbitProperty, OrbitsPartitionTheDomain) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      Permutation p = random_permutation(n, rng);
      // Sparse generators keep several orbits around.
      std::vector<Point> v(n);
      std::iota(v.begin(), v.end(), 0);
      const Point i = rng() % n, j = rng() % n;
      std::swap(v[i], v[j]);
      if (i != j) gens.push_back(Permutation(v));
      if (k == 0 && rng() % 3 == 0 && !p.is_identity()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    const GeneratedGroup g(gens);
    std::vector<int> owner(n, -1);
    for (Point p = 0; p < n; ++p) {
      if (owner[p] >= 0) continue;
      for (Point q : orbit(g, p).points) {
        EXPECT_EQ(owner[q], -1);
        owner[q] = static_cast<int>(p);
      }
    }
    EXPECT_TRUE(std::all_of(owner.begin(), owner.end(), [](int o) { return o >= 0; }));
  }
}

TEST(FindWord, Examples) {
  const Construction c5 = build_construction(5);
  const GeneratedGroup xyz5({c5.x, c5.y, c5.z});
  EXPECT_EQ(find_word(xyz5, 7, 7), Word{});
  const Point target5 = encode(gen_c(5, 2));
  int found = 0;
  for (std::size_t i = 0; i < 32; ++i) {
    const HElement g = decode(i, 5);
    if (in_U(g)) continue;
    const auto w = find_word(xyz5, g.index(), target5);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(xyz5.evaluate(*w)[g.index()], target5);
    ++found;
  }
  EXPECT_EQ(found, 30);

  const Construction c6 = build_construction(6);
  const GeneratedGroup xyz6({c6.x, c6.y, c6.z});
  for (std::size_t i = 0; i < 64; ++i) {
    const HElement g = decode(i, 6);
    if (in_U(g)) continue;
    const auto w = find_word(xyz6, g.index(), encode(element_h(6)));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(xyz6.evaluate(*w)[g.index()], encode(element_h(6)));
  }
  EXPECT_EQ(find_word(xyz6, 0, 5), std::nullopt);
}

TEST(SchreierSims, SmallExamples) {
  const auto c3 = schreier_sims(GeneratedGroup({Permutation({1, 2, 0})}));
  EXPECT_EQ(c3.order(), 3);
  const auto s4 = schreier_sims(GeneratedGroup({Permutation({1, 2, 3, 0}), Permutation({1, 0, 2, 3})}));
  EXPECT_EQ(s4.order(), 24);
  const auto regular = schreier_sims(GeneratedGroup(regular_gens(5)));
  EXPECT_EQ(regular.order(), 32);
}

TEST(SchreierSims, FullGroupOrders) {
  EXPECT_EQ(schreier_sims(xy_r_group(4)).order(), kHalf16);
  EXPECT_EQ(schreier_sims(xy_r_group(5)).order(), kHalf32);
  EXPECT_EQ(schreier_sims(xy_r_group(6)).order(), kHalf64);
  EXPECT_EQ(factorial(16) / 2, kHalf16);
  EXPECT_EQ(factorial(5), 120);
}

TEST(SchreierSims, RefusesAboveCap) {
  EXPECT_THROW(schreier_sims(xy_r_group(9)), DegreeCapExceeded);
  SchreierSimsOptions small;
  small.degree_cap = 8;
  EXPECT_THROW(schreier_sims(xy_r_group(4), small), DegreeCapExceeded);
}

TEST(SchreierSims, ChainInvariants) {
  const auto chain = schreier_sims(xy_r_group(5));
  for (const auto& g : chain.strong_generators()) EXPECT_TRUE(membership(chain, g));
  BigInt product = 1;
  for (const auto& l : chain.levels()) product *= l.orbit.size();
  EXPECT_EQ(product, chain.order());
  for (const auto& l : chain.levels())
    for (std::size_t k = 0; k < l.orbit.size(); ++k) EXPECT_EQ(l.inverse_reps[k][l.orbit[k]], l.base_point);
}

TEST(Membership, Examples) {
  const Construction c = build_construction(4);
  const auto chain = schreier_sims(xy_r_group(4));
  EXPECT_TRUE(membership(chain, c.x));
  EXPECT_TRUE(membership(chain, c.z));
  EXPECT_FALSE(membership(chain, Permutation::transposition(16, 0, 1)));
  EXPECT_THROW(membership(chain, Permutation::identity(5)), std::invalid_argument);
}

TEST(SchreierSimsProperty, AgreesWithBruteForceClosure) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<Permutation> gens;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      Permutation p = random_permutation(n, rng);
      // Bias toward proper subgroups by sometimes using a power.
      if (rng() % 2) p = power(p, 2);
      if (!p.is_identity()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    const auto elements = brute_closure(gens);
    const auto chain = schreier_sims(GeneratedGroup(gens));
    EXPECT_EQ(chain.order(), BigInt(elements.size()));
    std::vector<Point> v(n);
    std::iota(v.begin(), v.end(), 0);
    do {
      EXPECT_EQ(membership(chain, Permutation(v)), elements.count(v) == 1);
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST(SchreierSimsProperty, OrderInvariantUnderReorderingAndDuplication) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + rng() % 10;
    std::vector<Permutation> gens;
    for (int i = 0; i < 3; ++i) {
      Permutation p = power(random_permutation(n, rng), 1 + rng() % 3);
      if (!p.is_identity()) gens.push_back(p);
    }
    if (gens.empty()) continue;
    const BigInt base_order = schreier_sims(GeneratedGroup(gens)).order();
    std::vector<Permutation> shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    shuffled.push_back(gens.front());
    EXPECT_EQ(schreier_sims(GeneratedGroup(shuffled)).order(), base_order);
  }
}

TEST(Primes, TrialDivision) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t n = 0; n < 40; ++n)
    EXPECT_EQ(is_prime(n), std::find(primes.begin(), primes.end(), n) != primes.end()) << n;
  EXPECT_TRUE(is_prime(65521));
  EXPECT_FALSE(is_prime(65535));
}

namespace {

struct JordanInput {
  GeneratedGroup group;
  std::vector<Permutation> stabilizer;
};

JordanInput jordan_input(int m) {
  const Construction c = build_construction(m);
  std::vector<Permutation> g{c.x, c.y, c.z};
  g.insert(g.end(), c.regular.begin(), c.regular.end());
  return {GeneratedGroup(std::move(g)), {c.x, c.y, c.z}};
}

}  // namespace

TEST(AlternatingCertificate, ProvenAtM6AndAgreesWithChain) {
  for (int m = 4; m <= 6; ++m) {
    const JordanInput in = jordan_input(m);
    const AltCertificate cert = alternating_certificate(in.group, in.stabilizer, 1, 10000);
    ASSERT_EQ(cert.status, AltCertificate::Status::proven) << "m=" << m;
    EXPECT_TRUE(recheck_certificate(in.group, in.stabilizer, cert));
    const std::size_t n = std::size_t{1} << m;
    EXPECT_EQ(schreier_sims(in.group).order(), factorial(static_cast<unsigned>(n)) / 2);
    EXPECT_EQ(cert.word_length, 10u * static_cast<std::size_t>(m));
  }
}

TEST(AlternatingCertificate, ProvenAtM10) {
  const JordanInput in = jordan_input(10);
  const AltCertificate cert = alternating_certificate(in.group, in.stabilizer, 1, 100000);
  ASSERT_EQ(cert.status, AltCertificate::Status::proven);
  EXPECT_TRUE(recheck_certificate(in.group, in.stabilizer, cert));
  EXPECT_GT(2 * cert.prime_cycle_length, 1024u);
  EXPECT_LT(cert.prime_cycle_length + 2, 1024u);
}

TEST(AlternatingCertificate, Deterministic) {
  const JordanInput in = jordan_input(7);
  const AltCertificate a = alternating_certificate(in.group, in.stabilizer, 99, 10000);
  const AltCertificate b = alternating_certificate(in.group, in.stabilizer, 99, 10000);
  EXPECT_EQ(a.witness_word, b.witness_word);
  EXPECT_EQ(a.words_tried, b.words_tried);
}

TEST(AlternatingCertificate, IntransitiveGroupIsInconclusive) {
  const Construction c = build_construction(5);
  const GeneratedGroup xyz({c.x, c.y, c.z});
  const AltCertificate cert = alternating_certificate(xyz, {c.x, c.y, c.z}, 1, 1000);
  EXPECT_EQ(cert.status, AltCertificate::Status::inconclusive);
  EXPECT_FALSE(cert.transitive);
  EXPECT_EQ(cert.words_tried, 0u);
}

TEST(AlternatingCertificate, OddGeneratorIsInconclusive) {
  const Construction c = build_construction(5);
  std::vector<Permutation> g{c.x, c.y, c.z, Permutation::transposition(32, 0, 1)};
  g.insert(g.end(), c.regular.begin(), c.regular.end());
  const AltCertificate cert = alternating_certificate(GeneratedGroup(g), {c.x, c.y, c.z}, 1, 1000);
  EXPECT_EQ(cert.status, AltCertificate::Status::inconclusive);
  EXPECT_TRUE(cert.transitive);
  EXPECT_FALSE(cert.all_generators_even);
}

TEST(AlternatingCertificate, StabilizerOutsideGroupIsNotTrusted) {
  const JordanInput in = jordan_input(5);
  const AltCertificate cert = alternating_certificate(
      in.group, {in.stabilizer[0], Permutation::from_cycles(32, {{1, 2, 3}})}, 1, 1000);
  EXPECT_EQ(cert.status, AltCertificate::Status::inconclusive);
  EXPECT_FALSE(cert.two_transitive);
}

TEST(AlternatingCertificate, TamperedWitnessFailsRecheck) {
  const JordanInput in = jordan_input(6);
  AltCertificate cert = alternating_certificate(in.group, in.stabilizer, 1, 10000);
  ASSERT_EQ(cert.status, AltCertificate::Status::proven);
  cert.prime_cycle_length = 4;
  EXPECT_FALSE(recheck_certificate(in.group, in.stabilizer, cert));
}

TEST(DoubleCoset, SizeAndContents) {
  const Construction c = build_construction(4);
  const auto dc = double_coset_closure(c.regular, {c.x, c.y});
  EXPECT_EQ(dc.size(), 48u);
  EXPECT_NE(std::find(dc.begin(), dc.end(), c.x), dc.end());
  EXPECT_NE(std::find(dc.begin(), dc.end(), c.y), dc.end());
  const std::unordered_set<Permutation, PermutationHash> set(dc.begin(), dc.end());
  for (const auto& p : dc) EXPECT_TRUE(set.count(inverse(p)));
  for (const auto& p : dc)
    for (const auto& r : c.regular) {
      EXPECT_TRUE(set.count(compose(r, p)));
      EXPECT_TRUE(set.count(compose(p, r)));
    }
}

TEST(DoubleCoset, CapIsEnforced) {
  const Construction c = build_construction(4);
  EXPECT_THROW(double_coset_closure(c.regular, {c.x, c.y}, 40), ClosureCapExceeded);
}
