#include "torifold/morse.hpp"

#include <random>
#include <stdexcept>

namespace torifold {

namespace {

void check_direction(const LabeledPolytope& p, const IntVector& xi) {
  if (xi.size() != p.dim()) throw std::invalid_argument("direction has wrong dimension");
  if (content(xi) == 0) throw std::invalid_argument("direction must be nonzero");
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool is_generic(const LabeledPolytope& p, const IntVector& xi) {
  check_direction(p, xi);
  for (std::size_t v = 0; v < p.vertices().size(); ++v)
    for (const auto& e : edge_directions(p, v))
      if (dot(xi, e.direction) == 0) return false;
  return true;
}

int vertex_index(const LabeledPolytope& p, std::size_t vertex, const IntVector& xi) {
  if (!is_generic(p, xi)) throw std::invalid_argument("direction " + format_vector(xi) + " is not generic");
  int down = 0;
  for (const auto& e : edge_directions(p, vertex))
    if (dot(xi, e.direction) < 0) ++down;
  return 2 * down;
}

Polynomial poincare_polynomial(const LabeledPolytope& p, const IntVector& xi) {
  return morse_report(p, xi).morse_poly;
}

Polynomial betti_from_face_numbers(const LabeledPolytope& p) {
  const auto n = static_cast<std::int64_t>(p.dim());
  std::vector<std::int64_t> f(n + 1, 0);
  for (const auto& face : p.faces()) ++f[n - static_cast<std::int64_t>(face.codim())];
  Polynomial betti(2 * n + 1, 0);
  for (std::int64_t k = 0; k <= n; ++k) {
    std::int64_t h = 0;
    for (std::int64_t i = k; i <= n; ++i) {
      const std::int64_t term = f[i] * binomial(i, k);
      h += ((i - k) % 2 == 0) ? term : -term;
    }
    betti[2 * k] = h;
  }
  return betti;
}

std::optional<Polynomial> morse_inequality_check(const Polynomial& morse, const Polynomial& poincare) {
  const std::size_t len = std::max(morse.size(), poincare.size());
  Polynomial diff(len, 0);
  for (std::size_t k = 0; k < morse.size(); ++k) diff[k] += morse[k];
  for (std::size_t k = 0; k < poincare.size(); ++k) diff[k] -= poincare[k];

  // Synthetic division by (1 + x): q_k = d_k - q_{k-1}, remainder q_{len-1}.
  Polynomial q(len, 0);
  std::int64_t prev = 0;
  for (std::size_t k = 0; k < len; ++k) {
    q[k] = diff[k] - prev;
    prev = q[k];
  }
  if (len > 0 && q[len - 1] != 0) return std::nullopt;
  if (len > 0) q.pop_back();
  for (auto c : q)
    if (c < 0) return std::nullopt;
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

MorseReport morse_report(const LabeledPolytope& p, const IntVector& xi) {
  if (!is_generic(p, xi)) throw std::invalid_argument("direction " + format_vector(xi) + " is not generic");
  MorseReport r;
  r.xi = xi;
  r.morse_poly.assign(2 * p.dim() + 1, 0);
  for (std::size_t v = 0; v < p.vertices().size(); ++v) {
    int down = 0;
    for (const auto& e : edge_directions(p, v))
      if (dot(xi, e.direction) < 0) ++down;
    r.indices.push_back(2 * down);
    ++r.morse_poly[2 * down];
  }
  r.poincare = betti_from_face_numbers(p);
  return r;
}

IntVector random_generic_direction(const LabeledPolytope& p, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  while (true) {
    IntVector xi;
    for (std::size_t j = 0; j < p.dim(); ++j) {
      xi.emplace_back(static_cast<long>(rng() % span) - bound);
    }
    if (content(xi) != 0 && is_generic(p, xi)) return xi;
  }
}

}  // namespace torifold
