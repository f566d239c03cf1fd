#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "strongfact/exponent.hpp"

namespace strongfact {

/// How the nodes and weights of a grid are generated.
///
/// GaussLegendrePanels   composite Gauss-Legendre on [a, b].
/// CosinePanels          composite Gauss-Legendre in theta on [0, pi], mapped
///                       by x = cos(theta) onto [-1, 1] (weights carry sin(theta)).
///                       Integrands with (1 - x^2)^{+-1/2} factors become smooth.
/// GaussLaguerre         Gauss-Laguerre nodes on (0, inf), weights rescaled by
///                       e^{x} so the rule integrates f(x) dx, not f(x) e^{-x} dx.
///
/// The error of the panel rules behaves like O(h^{2 order}) for smooth
/// integrands, h the panel width.
struct QuadratureRule {
  enum class Kind { GaussLegendrePanels, CosinePanels, GaussLaguerre };

  Kind kind = Kind::GaussLegendrePanels;
  int panels = 32;
  int order = 16;

  static QuadratureRule gauss_legendre(int panels, int order) {
    return {Kind::GaussLegendrePanels, panels, order};
  }
  static QuadratureRule cosine(int panels, int order) { return {Kind::CosinePanels, panels, order}; }
  static QuadratureRule gauss_laguerre(int nodes) { return {Kind::GaussLaguerre, 1, nodes}; }

  std::string describe() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
void gauss_legendre_rule(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// Gauss-Laguerre nodes x_i and weights w_i for the weight e^{-x}, nodes ascending.
void gauss_laguerre_rule(int order, std::vector<double>& nodes, std::vector<double>& weights);

/// Immutable node set with quadrature weights for the plain integral over (a, b).
class Grid {
 public:
  /// b may be +inf only for GaussLaguerre (with a = 0).
  static std::shared_ptr<const Grid> make(double a, double b, const QuadratureRule& rule);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  const QuadratureRule& rule() const noexcept { return rule_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  Grid() = default;
  double a_ = 0.0;
  double b_ = 0.0;
  QuadratureRule rule_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// A function sampled on the nodes of a grid.
class GridFunction {
 public:
  GridFunction(GridPtr grid, std::vector<double> values);

  static GridFunction sample(GridPtr grid, const std::function<double(double)>& f);
  static GridFunction constant(GridPtr grid, double c);

  const GridPtr& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> nodes() const noexcept { return grid_->nodes(); }

  /// Pointwise operations; SizeMismatch unless both live on the same grid.
  GridFunction times(const GridFunction& other) const;
  GridFunction plus(const GridFunction& other) const;
  GridFunction scaled(double c) const;
  GridFunction map(const std::function<double(double, double)>& f) const;  // f(x, value)

 private:
  GridPtr grid_;
  std::vector<double> values_;
};

/// sum_k weight_k f(x_k) in node order.
double quad_integral(const GridFunction& f);

/// (integral |f|^p)^{1/p}; p = inf is rejected with InvalidArgument.
double lp_function_norm(const GridFunction& f, const Exponent& p);

}  // namespace strongfact
