#include "strongfact/grid.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <utility>

#include "strongfact/error.hpp"

namespace strongfact {

namespace {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// P_n and P_{n-1} at x by the three-term recurrence.
std::pair<double, double> legendre_pair(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    double p2 = ((2.0 * k + 1.0) * x * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return {p1, p0};
}

// L_n and L_{n-1} at x.
std::pair<double, double> laguerre_pair(int n, double x) {
  double l0 = 1.0, l1 = 1.0 - x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    double l2 = ((2.0 * k + 1.0 - x) * l1 - k * l0) / (k + 1.0);
    l0 = l1;
    l1 = l2;
  }
  return {l1, l0};
}

Rule compute_legendre(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      auto [p, pm1] = legendre_pair(n, x);
      dp = n * (x * p - pm1) / (x * x - 1.0);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    auto [p, pm1] = legendre_pair(n, x);
    dp = n * (x * p - pm1) / (x * x - 1.0);
    r.nodes[n - 1 - i] = x;
    r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

// Eigenvalues of the Jacobi matrix seed Newton on L_n; weights come from
// w_i = x_i / ((n+1)^2 L_{n+1}(x_i)^2), which keeps full relative accuracy for
// the tiny weights at the far nodes.
Rule compute_laguerre(int n) {
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    jacobi(k, k) = 2.0 * k + 1.0;
    if (k + 1 < n) {
      jacobi(k, k + 1) = k + 1.0;
      jacobi(k + 1, k) = k + 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = solver.eigenvalues()(i);
    for (int it = 0; it < 50; ++it) {
      auto [l, lm1] = laguerre_pair(n, x);
      const double dl = n * (l - lm1) / x;
      const double dx = l / dl;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, x)) break;
    }
    auto [l_next, l_n] = laguerre_pair(n + 1, x);
    (void)l_n;
    r.nodes[i] = x;
    r.weights[i] = x / ((n + 1.0) * (n + 1.0) * l_next * l_next);
  }
  return r;
}

const Rule& cached_rule(bool laguerre, int n) {
  static std::mutex mu;
  static std::map<std::pair<bool, int>, Rule> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(laguerre, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, laguerre ? compute_laguerre(n) : compute_legendre(n)).first;
  }
  return it->second;
}

}  // namespace

std::string QuadratureRule::describe() const {
  switch (kind) {
    case Kind::GaussLegendrePanels:
      return "gauss-legendre:" + std::to_string(panels) + "x" + std::to_string(order);
    case Kind::CosinePanels: return "cosine:" + std::to_string(panels) + "x" + std::to_string(order);
    case Kind::GaussLaguerre: return "gauss-laguerre:" + std::to_string(order);
  }
  return "?";
}

void gauss_legendre_rule(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "quadrature order must be >= 1");
  const Rule& r = cached_rule(false, order);
  nodes = r.nodes;
  weights = r.weights;
}

void gauss_laguerre_rule(int order, std::vector<double>& nodes, std::vector<double>& weights) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "quadrature order must be >= 1");
  const Rule& r = cached_rule(true, order);
  nodes = r.nodes;
  weights = r.weights;
}

std::shared_ptr<const Grid> Grid::make(double a, double b, const QuadratureRule& rule) {
  if (rule.order < 1 || rule.panels < 1) {
    throw Error(ErrorCode::InvalidArgument, "quadrature needs panels >= 1 and order >= 1");
  }
  std::shared_ptr<Grid> g(new Grid());
  g->a_ = a;
  g->b_ = b;
  g->rule_ = rule;

  std::vector<double> x, w;
  switch (rule.kind) {
    case QuadratureRule::Kind::GaussLegendrePanels: {
      if (!(a < b) || !std::isfinite(b)) {
        throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre panels need a finite interval a < b");
      }
      gauss_legendre_rule(rule.order, x, w);
      const double h = (b - a) / rule.panels;
      for (int k = 0; k < rule.panels; ++k) {
        const double mid = a + (k + 0.5) * h;
        for (std::size_t i = 0; i < x.size(); ++i) {
          g->nodes_.push_back(mid + 0.5 * h * x[i]);
          g->weights_.push_back(0.5 * h * w[i]);
        }
      }
      break;
    }
    case QuadratureRule::Kind::CosinePanels: {
      if (a != -1.0 || b != 1.0) {
        throw Error(ErrorCode::InvalidArgument, "cosine panels are defined on [-1, 1] only");
      }
      gauss_legendre_rule(rule.order, x, w);
      const double h = std::numbers::pi / rule.panels;
      // theta descending gives x ascending.
      for (int k = rule.panels - 1; k >= 0; --k) {
        const double mid = (k + 0.5) * h;
        for (std::size_t i = x.size(); i-- > 0;) {
          const double theta = mid + 0.5 * h * x[i];
          g->nodes_.push_back(std::cos(theta));
          g->weights_.push_back(0.5 * h * w[i] * std::sin(theta));
        }
      }
      break;
    }
    case QuadratureRule::Kind::GaussLaguerre: {
      if (a != 0.0 || !std::isinf(b)) {
        throw Error(ErrorCode::InvalidArgument, "Gauss-Laguerre is defined on (0, inf) only");
      }
      gauss_laguerre_rule(rule.order, x, w);
      for (std::size_t i = 0; i < x.size(); ++i) {
        g->nodes_.push_back(x[i]);
        g->weights_.push_back(std::exp(x[i] + std::log(w[i])));
      }
      break;
    }
  }
  return g;
}

GridFunction::GridFunction(GridPtr grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw Error(ErrorCode::InvalidArgument, "grid function without a grid");
  if (values_.size() != grid_->size()) {
    throw Error(ErrorCode::LengthMismatch, "grid has " + std::to_string(grid_->size()) + " nodes, got " +
                                               std::to_string(values_.size()) + " values");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (!std::isfinite(values_[k])) {
      throw Error(ErrorCode::InvalidArgument, "non-finite value at node " + std::to_string(k));
    }
  }
}

GridFunction GridFunction::sample(GridPtr grid, const std::function<double(double)>& f) {
  std::vector<double> v;
  v.reserve(grid->size());
  for (double x : grid->nodes()) v.push_back(f(x));
  return GridFunction(std::move(grid), std::move(v));
}

GridFunction GridFunction::constant(GridPtr grid, double c) {
  std::vector<double> v(grid->size(), c);
  return GridFunction(std::move(grid), std::move(v));
}

GridFunction GridFunction::times(const GridFunction& other) const {
  if (other.grid_ != grid_) throw Error(ErrorCode::SizeMismatch, "grid functions live on different grids");
  std::vector<double> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = values_[k] * other.values_[k];
  return GridFunction(grid_, std::move(v));
}

GridFunction GridFunction::plus(const GridFunction& other) const {
  if (other.grid_ != grid_) throw Error(ErrorCode::SizeMismatch, "grid functions live on different grids");
  std::vector<double> v(values_.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = values_[k] + other.values_[k];
  return GridFunction(grid_, std::move(v));
}

GridFunction GridFunction::scaled(double c) const {
  std::vector<double> v(values_);
  for (double& y : v) y *= c;
  return GridFunction(grid_, std::move(v));
}

GridFunction GridFunction::map(const std::function<double(double, double)>& f) const {
  std::vector<double> v(values_.size());
  const auto x = grid_->nodes();
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = f(x[k], values_[k]);
  return GridFunction(grid_, std::move(v));
}

double quad_integral(const GridFunction& f) {
  const auto w = f.grid()->weights();
  const auto v = f.values();
  double s = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) s += w[k] * v[k];
  return s;
}

double lp_function_norm(const GridFunction& f, const Exponent& p) {
  if (p.is_infinite()) throw Error(ErrorCode::InvalidArgument, "lp_function_norm needs p < inf");
  const double pv = p.value();
  const auto w = f.grid()->weights();
  const auto v = f.values();
  double s = 0.0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0.0) s += w[k] * std::pow(std::abs(v[k]), pv);
  }
  return std::pow(s, 1.0 / pv);
}

}  // namespace strongfact
