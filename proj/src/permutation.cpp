#include "cayley/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cayley {

namespace {

void check_degree(std::size_t n) {
  if (n == 0) throw std::invalid_argument("permutation degree must be positive");
  if (n > kMaxDegree)
    throw std::invalid_argument("permutation degree " + std::to_string(n) +
                                " exceeds cap " + std::to_string(kMaxDegree));
}

void check_bijection(const std::vector<Point>& images) {
  check_degree(images.size());
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v])
      throw std::invalid_argument("image table is not a bijection");
    seen[v] = true;
  }
}

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
}

}  // namespace

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  check_bijection(images_);
}

Permutation Permutation::identity(std::size_t degree) {
  check_degree(degree);
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), Point{0});
  return Permutation(std::move(id), Trusted{});
}

Permutation Permutation::transposition(std::size_t degree, Point i, Point j) {
  check_degree(degree);
  if (i >= degree || j >= degree || i == j)
    throw std::invalid_argument("transposition needs two distinct points in range");
  std::vector<Point> t(degree);
  std::iota(t.begin(), t.end(), Point{0});
  std::swap(t[i], t[j]);
  return Permutation(std::move(t), Trusted{});
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  check_degree(degree);
  std::vector<Point> t(degree);
  std::iota(t.begin(), t.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= degree || used[c[k]])
        throw std::invalid_argument("cycles are not disjoint or out of range");
      used[c[k]] = true;
      t[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(t), Trusted{});
}

Point Permutation::image(Point i) const {
  if (i >= images_.size()) throw std::out_of_range("point out of range");
  return images_[i];
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Point Permutation::first_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_string() const { return cycle_string(cycle_decomposition(*this)); }

PermutationBuilder::PermutationBuilder(std::size_t degree) : images_(degree) {
  check_degree(degree);
}

Permutation PermutationBuilder::build() && {
  check_bijection(images_);
  return std::move(*this).build_unchecked();
}

Permutation PermutationBuilder::build_unchecked() && {
  return Permutation(std::move(images_), Permutation::Trusted{});
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  const std::size_t n = p.degree();
  std::vector<Point> r(n);
  const Point* pi = p.images_.data();
  const Point* qi = q.images_.data();
  for (std::size_t i = 0; i < n; ++i) r[i] = qi[pi[i]];
  return Permutation(std::move(r), Permutation::Trusted{});
}

Permutation inverse(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<Point> r(n);
  for (std::size_t i = 0; i < n; ++i) r[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(r), Permutation::Trusted{});
}

std::vector<std::size_t> cycle_lengths(const Permutation& p) {
  const std::size_t n = p.degree();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> lengths;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

Parity parity(const Permutation& p) {
  const std::size_t cycles = cycle_lengths(p).size();
  return (p.degree() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  const std::size_t n = p.degree();
  CycleDecomposition d;
  std::vector<bool> seen(n, false);
  // Scanning points in increasing order starts every cycle at its minimum
  // and emits cycles sorted by minimum.
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    if (p[static_cast<Point>(i)] == i) {
      seen[i] = true;
      d.fixed.push_back(static_cast<Point>(i));
      continue;
    }
    std::vector<Point> cycle;
    for (Point j = static_cast<Point>(i); !seen[j]; j = p[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    d.cycles.push_back(std::move(cycle));
  }
  return d;
}

Permutation from_decomposition(std::size_t degree, const CycleDecomposition& d) {
  for (const auto& c : d.cycles)
    if (c.size() < 2) throw std::invalid_argument("cycle shorter than 2");
  std::vector<bool> covered(degree, false);
  for (Point f : d.fixed) {
    if (f >= degree || covered[f]) throw std::invalid_argument("bad fixed point list");
    covered[f] = true;
  }
  for (const auto& c : d.cycles)
    for (Point v : c) {
      if (v >= degree || covered[v]) throw std::invalid_argument("cycles overlap");
      covered[v] = true;
    }
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw std::invalid_argument("decomposition does not cover every point");
  return Permutation::from_cycles(degree, d.cycles);
}

Permutation power(const Permutation& p, std::uint64_t k) {
  // Each cycle is rotated by k mod its length.
  const std::size_t n = p.degree();
  PermutationBuilder b(n);
  std::vector<bool> seen(n, false);
  std::vector<Point> cycle;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    cycle.clear();
    for (Point j = static_cast<Point>(i); !seen[j]; j = p[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    const std::size_t len = cycle.size();
    const std::size_t shift = static_cast<std::size_t>(k % len);
    for (std::size_t t = 0; t < len; ++t) b[cycle[t]] = cycle[(t + shift) % len];
  }
  return std::move(b).build_unchecked();
}

std::vector<Point> fixed_points(const Permutation& p) {
  std::vector<Point> f;
  for (std::size_t i = 0; i < p.degree(); ++i)
    if (p[static_cast<Point>(i)] == i) f.push_back(static_cast<Point>(i));
  return f;
}

std::string cycle_string(const CycleDecomposition& d) {
  if (d.cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : d.cycles) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? " " : "") << c[k];
    os << ')';
  }
  return os.str();
}

}  // namespace cayley
