#include "cayley/construction.hpp"

#include <stdexcept>

namespace cayley {

namespace {

HElement a_squared(int m) { return h_pow(gen_a(m), 2); }

HElement apply_images(const GeneratorImages& img, const HElement& g) {
  HElement r = h_pow(img.a, g.a_exp());
  if (g.b_exp()) r = h_mul(r, img.b);
  for (int k = 1; k <= g.m() - 3; ++k)
    if (g.c_exp(k)) r = h_mul(r, img.c[k - 1]);
  return r;
}

bool commute(const HElement& g, const HElement& h) { return h_mul(g, h) == h_mul(h, g); }

}  // namespace

bool satisfies_relations(const GeneratorImages& img) {
  const int m = img.a.m();
  if (static_cast<int>(img.c.size()) != m - 3) return false;
  const HElement one = HElement::identity(m);
  if (!(h_pow(img.a, 4) == one) || !(h_pow(img.b, 2) == one) ||
      !(h_pow(h_mul(img.a, img.b), 2) == one))
    return false;
  for (std::size_t i = 0; i < img.c.size(); ++i) {
    if (!(h_pow(img.c[i], 2) == one)) return false;
    if (!commute(img.c[i], img.a) || !commute(img.c[i], img.b)) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!commute(img.c[i], img.c[j])) return false;
  }
  return true;
}

Permutation extend_automorphism(int m, const GeneratorImages& images) {
  if (!satisfies_relations(images))
    throw std::invalid_argument("generator images violate the defining relations of H");
  const HParams p(m);
  std::vector<Point> table(p.order());
  for (std::size_t i = 0; i < p.order(); ++i)
    table[i] = apply_images(images, HElement::decode(i, m)).index();
  // Throws if the endomorphism is not injective.
  return Permutation(std::move(table));
}

std::optional<Permutation> try_extend_automorphism(int m, const GeneratorImages& images) {
  if (!satisfies_relations(images)) return std::nullopt;
  const HParams p(m);
  PermutationBuilder b(p.order());
  std::vector<bool> hit(p.order(), false);
  for (std::size_t i = 0; i < p.order(); ++i) {
    const Point v = apply_images(images, HElement::decode(i, m)).index();
    if (hit[v]) return std::nullopt;
    hit[v] = true;
    b[static_cast<Point>(i)] = v;
  }
  return std::move(b).build_unchecked();
}

GeneratorImages x_generator_images(int m) {
  const HParams p(m);
  GeneratorImages img{h_inv(gen_a(m)), h_mul(gen_a(m), gen_b(m)),
                      std::vector<HElement>(p.c_count(), HElement::identity(m))};
  std::vector<bool> set(p.c_count(), false);
  auto assign = [&](int k, const HElement& v) {
    img.c[k - 1] = v;
    set[k - 1] = true;
  };
  for (int i : int_range(0, floor_half(m - 5))) {
    assign(2 * i + 1, gen_c(m, 2 * i + 1));
    assign(2 * i + 2, h_mul(a_squared(m), c_product(m, {2 * i + 1, 2 * i + 2})));
  }
  if (m % 2 == 0) assign(m - 3, h_mul(a_squared(m), gen_c(m, m - 3)));
  for (bool s : set)
    if (!s) throw std::logic_error("x leaves a generator c_i without an image");
  return img;
}

Permutation build_x(int m) { return extend_automorphism(m, x_generator_images(m)); }

HElement KAutomorphism::apply(const HElement& g) const {
  if (g.m() != m_) throw std::invalid_argument("element from a different m");
  if (!in_K(g)) throw std::invalid_argument("tau is only defined on K; got " + g.to_string());
  return HElement::decode(table_[g.index()], m_);
}

KAutomorphism build_tau(int m) {
  const HParams p(m);
  // K is elementary abelian on the basis a^2, b, c_1, ..., c_{m-3}.
  std::vector<HElement> c_img(p.c_count(), HElement::identity(m));
  std::vector<bool> set(p.c_count(), false);
  auto assign = [&](int k, const HElement& v) {
    c_img[k - 1] = v;
    set[k - 1] = true;
  };
  for (int i : int_range(0, floor_half(m - 5))) {
    assign(2 * i + 1, c_product(m, {2 * i - 1, 2 * i, 2 * i + 2}));
    assign(2 * i + 2, c_product(m, {2 * i - 1, 2 * i, 2 * i + 1}));
  }
  if (m % 2 == 0) assign(m - 3, gen_c(m, m - 3));
  for (bool s : set)
    if (!s) throw std::logic_error("tau leaves a generator c_i without an image");

  std::vector<Point> table(p.order(), 0);
  std::vector<bool> hit(p.order(), false);
  for (std::size_t i = 0; i < p.order(); ++i) {
    const HElement g = HElement::decode(i, m);
    if (!in_K(g)) continue;
    HElement r = HElement::identity(m);
    if (g.a_exp() == 2) r = h_mul(r, gen_b(m));
    if (g.b_exp()) r = h_mul(r, a_squared(m));
    for (int k = 1; k <= p.c_count(); ++k)
      if (g.c_exp(k)) r = h_mul(r, c_img[k - 1]);
    if (!in_K(r) || hit[r.index()]) throw std::logic_error("tau is not a bijection of K");
    hit[r.index()] = true;
    table[i] = r.index();
  }
  return KAutomorphism(m, std::move(table));
}

Permutation build_y(int m) {
  const HParams p(m);
  const KAutomorphism tau = build_tau(m);
  const HElement h = element_h(m);
  const HElement h_inverse = h_inv(h);
  const HElement tail = m % 2 == 0 ? gen_c(m, m - 3) : HElement::identity(m);
  std::vector<Point> table(p.order());
  for (std::size_t i = 0; i < p.order(); ++i) {
    const HElement g = HElement::decode(i, m);
    if (in_K(g)) {
      table[i] = tau.apply(g).index();
    } else {
      const HElement k = h_mul(h_inverse, g);
      table[i] = h_mul(h_mul(h, tau.apply(k)), tail).index();
    }
  }
  return Permutation(std::move(table));
}

Permutation build_R(const HElement& g) {
  const int m = g.m();
  const std::size_t n = HParams(m).order();
  PermutationBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    b[static_cast<Point>(i)] = h_mul(HElement::decode(i, m), g).index();
  return std::move(b).build_unchecked();
}

Permutation build_z(int m) {
  const HElement h = element_h(m);
  HElement right = h_inv(h);
  if (m % 2 == 0) right = h_mul(right, gen_c(m, m - 3));
  return compose(build_R(h), build_y(m), build_R(right));
}

std::vector<Permutation> regular_gens(int m) {
  const HParams p(m);
  std::vector<Permutation> gens{build_R(gen_a(m)), build_R(gen_b(m))};
  for (int i = 1; i <= p.c_count(); ++i) gens.push_back(build_R(gen_c(m, i)));
  return gens;
}

std::vector<std::string> regular_gen_labels(int m) {
  const HParams p(m);
  std::vector<std::string> labels{"R(a)", "R(b)"};
  for (int i = 1; i <= p.c_count(); ++i) labels.push_back("R(c" + std::to_string(i) + ")");
  return labels;
}

ConnectionSet connection_set(int m) {
  ConnectionSet s{build_x(m), build_y(m), build_z(m)};
  for (const Permutation* g : {&s.x, &s.y, &s.z}) {
    if (g->is_identity()) throw std::logic_error("connection set contains the identity");
    if ((*g)[0] != 0) throw std::logic_error("connection set element moves the identity point");
  }
  if (s.x == s.y || s.y == s.z || s.x == s.z)
    throw std::logic_error("connection set elements coincide");
  return s;
}

Construction build_construction(int m) {
  ConnectionSet s = connection_set(m);
  return Construction{m, std::move(s.x), std::move(s.y), std::move(s.z), regular_gens(m)};
}

}  // namespace cayley
