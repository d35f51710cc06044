#pragma once

#include <Eigen/Dense>
#include <vector>

namespace linedg {

/// Nodal grid function over all elements. Storage is contiguous with the
/// component index fastest: value(e, node, c) = data[(e*npe + node)*comps + c].
struct GridFunction {
  int n_elems = 0;
  int nodes_per_elem = 0;
  int comps = 0;
  std::vector<double> data;

  GridFunction() = default;
  GridFunction(int ne, int npe, int m)
      : n_elems(ne), nodes_per_elem(npe), comps(m),
        data(static_cast<size_t>(ne) * npe * m, 0.0) {}

  int size() const { return n_elems * nodes_per_elem * comps; }
  double* at(int e, int node) { return data.data() + (static_cast<size_t>(e) * nodes_per_elem + node) * comps; }
  const double* at(int e, int node) const {
    return data.data() + (static_cast<size_t>(e) * nodes_per_elem + node) * comps;
  }
  double& operator()(int e, int node, int c) { return at(e, node)[c]; }
  double operator()(int e, int node, int c) const { return at(e, node)[c]; }

  Eigen::Map<Eigen::VectorXd> vec() { return {data.data(), static_cast<Eigen::Index>(data.size())}; }
  Eigen::Map<const Eigen::VectorXd> vec() const {
    return {data.data(), static_cast<Eigen::Index>(data.size())};
  }
  void set_zero() { std::fill(data.begin(), data.end(), 0.0); }
};

/// Solution grid function u with m components per node.
using FieldState = GridFunction;
/// Auxiliary gradient grid function q with m x 2 components per node,
/// component index c*2 + d for d/dx_d of solution component c.
using AuxGradient = GridFunction;

}  // namespace linedg
