#include "cayley/h_group.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cayley {

HParams::HParams(int m) : m_(m) {
  if (m < kMinM || m > kMaxM)
    throw std::invalid_argument("m must lie in [" + std::to_string(kMinM) + ", " +
                                std::to_string(kMaxM) + "], got " + std::to_string(m));
}

HElement HElement::identity(int m) { return make(m, 0, 0, 0); }

HElement HElement::make(int m, int a_exp, int b_exp, std::uint32_t c_bits) {
  const HParams p(m);
  if (c_bits >> p.c_count()) throw std::invalid_argument("c vector wider than m-3 bits");
  return HElement(m, ((a_exp % 4) + 4) % 4, ((b_exp % 2) + 2) % 2, c_bits);
}

HElement HElement::decode(std::size_t index, int m) {
  const HParams p(m);
  if (index >= p.order())
    throw std::out_of_range("index " + std::to_string(index) + " outside H of order " +
                            std::to_string(p.order()));
  return HElement(m, static_cast<int>(index & 3U), static_cast<int>((index >> 2) & 1U),
                  static_cast<std::uint32_t>(index >> 3));
}

std::string HElement::to_string() const {
  std::ostringstream os;
  const char* sep = "";
  if (a_ == 1) { os << "a"; sep = " "; }
  if (a_ == 2) { os << "a^2"; sep = " "; }
  if (a_ == 3) { os << "a^-1"; sep = " "; }
  if (b_) { os << sep << "b"; sep = " "; }
  for (int k = 1; k <= m_ - 3; ++k)
    if (c_exp(k)) { os << sep << "c" << k; sep = " "; }
  const std::string s = os.str();
  return s.empty() ? "1" : s;
}

HElement h_mul(const HElement& g1, const HElement& g2) {
  if (g1.m() != g2.m()) throw std::invalid_argument("elements of H for different m");
  // b a = a^{-1} b, and every c_i is central.
  const int a = g1.b_exp() ? g1.a_exp() - g2.a_exp() : g1.a_exp() + g2.a_exp();
  return HElement::make(g1.m(), a, g1.b_exp() + g2.b_exp(), g1.c_bits() ^ g2.c_bits());
}

HElement h_inv(const HElement& g) {
  // (a^i b)^{-1} = a^i b; (a^i)^{-1} = a^{-i}.
  const int a = g.b_exp() ? g.a_exp() : -g.a_exp();
  return HElement::make(g.m(), a, g.b_exp(), g.c_bits());
}

HElement h_pow(const HElement& g, int k) {
  HElement base = k < 0 ? h_inv(g) : g;
  HElement r = HElement::identity(g.m());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r = h_mul(r, base);
  return r;
}

HElement gen_a(int m) { return HElement::make(m, 1, 0, 0); }
HElement gen_b(int m) { return HElement::make(m, 0, 1, 0); }

HElement gen_c(int m, int i) {
  const HParams p(m);
  if (i < 1) return HElement::identity(m);
  if (i > p.c_count())
    throw std::invalid_argument("c_" + std::to_string(i) + " does not exist for m=" +
                                std::to_string(m));
  return HElement::make(m, 0, 0, std::uint32_t{1} << (i - 1));
}

HElement c_product(int m, const std::vector<int>& indices) {
  HElement r = HElement::identity(m);
  for (int i : indices) r = h_mul(r, gen_c(m, i));
  return r;
}

std::vector<int> int_range(int lo, int hi) {
  std::vector<int> r;
  for (int i = lo; i <= hi; ++i) r.push_back(i);
  return r;
}

int floor_half(int p) { return p >= 0 ? p / 2 : -((-p + 1) / 2); }
int ceil_half(int p) { return p >= 0 ? (p + 1) / 2 : -((-p) / 2); }

HElement element_h(int m) {
  std::vector<int> idx;
  for (int i : int_range(0, ceil_half(m - 5))) idx.push_back(2 * i + 1);
  return h_mul(gen_a(m), c_product(m, idx));
}

HElement element_h1(int m) {
  if (m % 2 != 0) throw std::invalid_argument("h1 is only defined for even m");
  return h_mul(element_h(m), gen_c(m, m - 3));
}

HElement special_element(std::string_view name, int m) {
  const HParams p(m);
  if (name == "identity" || name == "1") return HElement::identity(m);
  if (name == "a") return gen_a(m);
  if (name == "b") return gen_b(m);
  if (name == "h") return element_h(m);
  if (name == "h1") return element_h1(m);
  if (name == "a2h") return h_mul(h_pow(gen_a(m), 2), element_h(m));
  if (name.size() >= 2 && name[0] == 'c') {
    int i = 0;
    const auto* first = name.data() + 1;
    const auto* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, i);
    if (ec == std::errc() && ptr == last) {
      if (i < 1 || i > p.c_count())
        throw std::invalid_argument("c index out of range: " + std::string(name));
      return gen_c(m, i);
    }
  }
  throw std::invalid_argument("unknown element name: " + std::string(name));
}

bool in_K(const HElement& g) { return g.a_exp() % 2 == 0; }

bool in_H1(const HElement& g) { return g.c_exp(g.m() - 3) == 0; }

bool in_K1(const HElement& g) { return in_K(g) && in_H1(g); }

bool in_U(const HElement& g) {
  if (g.a_exp() != 0 || g.b_exp() != 0) return false;
  const int m = g.m();
  int evens = 0;
  if (m % 2 == 1) {
    for (int j : int_range(1, (m - 3) / 2)) evens += g.c_exp(2 * j);
    return evens % 2 == 0;
  }
  for (int j : int_range(1, (m - 4) / 2)) evens += g.c_exp(2 * j);
  return evens % 2 == g.c_exp(m - 3);
}

std::vector<HElement> subgroup_U(int m) {
  const HParams p(m);
  std::vector<HElement> u;
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << p.c_count()); ++v) {
    HElement g = HElement::make(m, 0, 0, v);
    if (in_U(g)) u.push_back(g);
  }
  return u;
}

std::vector<HElement> generated_subgroup(int m, const std::vector<HElement>& gens) {
  std::set<Point> seen{HElement::identity(m).index()};
  std::vector<HElement> frontier{HElement::identity(m)};
  while (!frontier.empty()) {
    std::vector<HElement> next;
    for (const auto& s : frontier)
      for (const auto& g : gens) {
        HElement t = h_mul(s, g);
        if (seen.insert(t.index()).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<HElement> out;
  for (Point i : seen) out.push_back(HElement::decode(i, m));
  return out;
}

std::vector<HElement> subgroup_M(int m) {
  const HParams p(m);
  std::vector<HElement> gens;
  switch (m % 4) {
    case 1:
    case 3:
      gens.push_back(m % 4 == 1 ? h_mul(h_pow(gen_a(m), 2), gen_b(m)) : gen_b(m));
      for (int i : int_range(1, (m - 3) / 2)) gens.push_back(c_product(m, {2 * i - 1, 2 * i}));
      break;
    case 2:
      for (int i : int_range(1, (m - 4) / 2)) gens.push_back(gen_c(m, 2 * i - 1));
      gens.push_back(h_mul(gen_a(m), gen_c(m, m - 3)));
      break;
    default:
      throw std::invalid_argument("M is not defined for m = 0 (mod 4)");
  }
  return generated_subgroup(m, gens);
}

}  // namespace cayley
