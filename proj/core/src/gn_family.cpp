#include "tdq/gn_family.hpp"

namespace tdq {
namespace {

void require_gn_params(int k, int n) {
  if (k < 2 || k > n)
    throw InvalidArgumentError("G_k box G_n requires 2 <= k <= n");
}

}  // namespace

GnGraph build_gn(int n) {
  if (n < 1) throw InvalidArgumentError("G_n requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);  // clique on the a_i
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, n + i);        // a_i - b_i
    edges.emplace_back(n + i, 2 * n + i);  // b_i - c_i
  }
  return {n, Graph(3 * n, edges)};
}

VertexSet gn_product_tdset(int k, int n) {
  require_gn_params(k, n);
  int nh = 3 * n;
  VertexSet d(3 * k * nh);
  auto add = [&](int u, int v) { d.add(u * nh + v); };
  int x1 = 0, y1 = n, z1 = 2 * n;
  for (int i = 0; i < k; ++i) {
    add(i, x1);
    add(i, z1);  // A x {x1, z1}
    for (int j = 1; j < n; ++j) {
      add(k + i, n + j);      // B x (Y \ {y1})
      add(k + i, 2 * n + j);  // B x (Z \ {z1})
    }
    add(2 * k + i, x1);
    add(2 * k + i, y1);  // C x {x1, y1}
  }
  return d;
}

GnBounds gn_bounds_check(int k, int n, int kn_cap) {
  require_gn_params(k, n);
  if (k * n > kn_cap)
    throw TooLargeError("exact gamma_t guard: kn <= " + std::to_string(kn_cap) +
                        " (raise the cap to force the search)");
  ProductGraph prod = cartesian_product(build_gn(k).graph, build_gn(n).graph);
  GnBounds out;
  out.lower = 2LL * k * n + k;
  out.upper = 2LL * k * n + 2 * k;
  out.exact = gamma_t(prod.product);
  return out;
}

GnQuotientCheck gn_quotient_check(int k, int n, int kn_cap) {
  GnBounds bounds = gn_bounds_check(k, n, kn_cap);
  GnQuotientCheck out;
  out.qt = Rational(bounds.exact.value, 4LL * k * n);
  out.lower = Rational(1, 2) + Rational(1, 4LL * n);
  out.upper = Rational(1, 2) + Rational(1, 2LL * n);
  out.within = out.lower <= out.qt && out.qt <= out.upper;
  return out;
}

}  // namespace tdq
