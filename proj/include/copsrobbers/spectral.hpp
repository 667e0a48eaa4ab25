#pragma once

// Second adjacency eigenvalue of a connected regular graph.
//
// Lanczos with full reorthogonalisation on the adjacency operator restricted to
// the complement of the trivial eigenvectors (all-ones, plus the bipartition
// sign vector when the graph is bipartite). The tridiagonal problem is solved
// with Eigen; the run restarts from the best Ritz vector until the residual
// meets the tolerance.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "copsrobbers/errors.hpp"
#include "copsrobbers/graph.hpp"
#include "copsrobbers/graph_algorithms.hpp"

namespace copsrobbers {

struct SpectralReport {
  std::size_t n = 0;
  long d = 0;
  double lambda2 = 0.0;
  double residual = 0.0;     // ||A x - lambda2 x|| / ||x||; some eigenvalue lies within this of lambda2
  double alpha = 0.0;        // lambda2^2 / d
  bool ramanujan = false;    // lambda2^2 <= 4(d-1)
  bool bipartite = false;
  double lambda_min = 0.0;   // -d for bipartite graphs (verified exactly)
  double symmetric_partner = 0.0;  // bipartite only: largest eigenvalue of -A on the deflated space
  bool symmetry_ok = true;
};

struct LanczosOptions {
  double tol = 1e-8;
  std::size_t krylov_dim = 160;
  int max_restarts = 200;
};

namespace detail {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline void axpy(double alpha, const Vec& x, Vec& y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

// y = sign * A x, then projected off the deflation vectors (orthonormal).
struct DeflatedOperator {
  const Graph& g;
  double sign;
  std::vector<Vec> deflate;

  void project(Vec& x) const {
    for (const auto& u : deflate) axpy(-dot(u, x), u, x);
  }

  Vec apply(const Vec& x) const {
    Vec y(x.size(), 0.0);
    for (std::size_t v = 0; v < x.size(); ++v) {
      double s = 0.0;
      for (Vertex w : g.neighbors(static_cast<Vertex>(v))) s += x[static_cast<std::size_t>(w)];
      y[v] = sign * s;
    }
    project(y);
    return y;
  }
};

struct RitzResult {
  double value = 0.0;
  Vec vector;
  double residual = 0.0;
};

// Largest eigenvalue of op on the deflated subspace.
inline RitzResult lanczos_max(const DeflatedOperator& op, std::size_t n_eff, const LanczosOptions& opt) {
  const std::size_t n = op.g.order();
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  Vec start(n);
  for (auto& x : start) x = normal(rng);
  op.project(start);

  RitzResult best;
  best.residual = INFINITY;
  const std::size_t m_max = std::min(opt.krylov_dim, n_eff);
  for (int restart = 0; restart <= opt.max_restarts; ++restart) {
    double nrm = norm(start);
    if (nrm == 0.0) throw NumericalError("Lanczos start vector vanished after deflation", best.residual);
    for (auto& x : start) x /= nrm;

    std::vector<Vec> basis{start};
    std::vector<double> alphas;
    std::vector<double> betas;
    while (true) {
      const Vec& q = basis.back();
      Vec w = op.apply(q);
      double a = dot(w, q);
      alphas.push_back(a);
      // Full reorthogonalisation (twice for stability).
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) axpy(-dot(w, b), b, w);
      op.project(w);
      double b = norm(w);
      if (basis.size() >= m_max || b < 1e-12) break;
      betas.push_back(b);
      for (auto& x : w) x /= b;
      basis.push_back(std::move(w));
    }

    const auto m = static_cast<Eigen::Index>(alphas.size());
    Eigen::VectorXd diag(m);
    Eigen::VectorXd sub(std::max<Eigen::Index>(m - 1, 0));
    for (Eigen::Index i = 0; i < m; ++i) diag[i] = alphas[static_cast<std::size_t>(i)];
    for (Eigen::Index i = 0; i + 1 < m; ++i) sub[i] = betas[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    const Eigen::Index top = m - 1;  // eigenvalues ascend
    Vec x(n, 0.0);
    for (Eigen::Index j = 0; j < m; ++j) axpy(tri.eigenvectors()(j, top), basis[static_cast<std::size_t>(j)], x);
    op.project(x);
    double xn = norm(x);
    for (auto& v : x) v /= xn;
    double theta = dot(op.apply(x), x);
    Vec r = op.apply(x);
    axpy(-theta, x, r);
    double res = norm(r);
    if (res < best.residual) best = {theta, x, res};
    if (res <= opt.tol) return best;
    start = std::move(x);
  }
  throw NumericalError("Lanczos did not reach residual " + std::to_string(opt.tol), best.residual);
}

}  // namespace detail

inline SpectralReport second_eigenvalue(const Graph& g, const LanczosOptions& opt = {}) {
  const std::size_t n = g.order();
  if (n < 2) throw PreconditionError("second_eigenvalue: need at least two vertices");
  if (!g.connected()) throw PreconditionError("second_eigenvalue: graph is disconnected");
  long d = g.regular_degree();
  if (d <= 0) throw PreconditionError("second_eigenvalue: graph is not regular");

  SpectralReport rep;
  rep.n = n;
  rep.d = d;
  auto side = bipartition(g);
  rep.bipartite = !side.empty();

  std::vector<detail::Vec> deflate;
  const double inv_sqrt_n = 1.0 / std::sqrt(static_cast<double>(n));
  deflate.emplace_back(n, inv_sqrt_n);
  if (rep.bipartite) {
    detail::Vec s(n);
    for (std::size_t v = 0; v < n; ++v) s[v] = side[v] == 0 ? inv_sqrt_n : -inv_sqrt_n;
    deflate.push_back(std::move(s));
    rep.lambda_min = -static_cast<double>(d);
  }
  const std::size_t n_eff = n - deflate.size();

  if (n_eff == 0) {
    // K_2: spectrum {1, -1}.
    rep.lambda2 = -static_cast<double>(d);
    rep.residual = 0.0;
  } else {
    detail::DeflatedOperator op{g, 1.0, deflate};
    auto ritz = detail::lanczos_max(op, n_eff, opt);
    rep.lambda2 = ritz.value;
    rep.residual = ritz.residual;
    if (rep.bipartite) {
      detail::DeflatedOperator neg{g, -1.0, deflate};
      auto partner = detail::lanczos_max(neg, n_eff, opt);
      rep.symmetric_partner = partner.value;
      rep.symmetry_ok = std::abs(partner.value - rep.lambda2) <= 2 * opt.tol + ritz.residual + partner.residual;
    }
  }
  rep.alpha = rep.lambda2 * rep.lambda2 / static_cast<double>(d);
  rep.ramanujan = rep.lambda2 * rep.lambda2 <= 4.0 * static_cast<double>(d - 1) + 1e-9;
  return rep;
}

// Dense reference spectrum (ascending), for cross-checks on small graphs.
inline std::vector<double> dense_spectrum(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
  return out;
}

}  // namespace copsrobbers
