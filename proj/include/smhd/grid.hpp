#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

namespace smhd {

enum class Bc { periodic, transmissive };

/// Discrete spaces of the complex. node = V0 = dual cells, edge = V1,
/// face = V2, cell = V3.
enum class Space { node, edge, face, cell };

/// Staggering of a DOF along one axis: whole index sits at x_i,
/// half index sits at x_{i-1/2}.
using Stagger = std::array<bool, 3>;  // true = half-shifted

Stagger stagger_of(Space s, int comp);

/// Uniform tensor grid. Cell (i,j,k) is centred at origin + (i,j,k) * d.
/// A collapsed axis has n = 1 and must be periodic.
class Grid {
 public:
  Grid(std::array<int, 3> n, std::array<double, 3> d, std::array<Bc, 3> bc,
       std::array<double, 3> origin = {0.0, 0.0, 0.0});

  int n(int a) const { return n_[a]; }
  double d(int a) const { return d_[a]; }
  Bc bc(int a) const { return bc_[a]; }
  double origin(int a) const { return origin_[a]; }
  bool active(int a) const { return n_[a] > 1; }
  int dim() const;
  std::size_t size() const { return size_; }
  double vol() const { return d_[0] * d_[1] * d_[2]; }
  bool all_periodic() const;

  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(n_[0]) *
               (static_cast<std::size_t>(j) + static_cast<std::size_t>(n_[1]) * k);
  }
  std::array<int, 3> ijk(std::size_t idx) const;

  /// Neighbour along axis a; transmissive ends clamp to themselves.
  std::size_t plus(int a, std::size_t idx) const { return plus_[a][idx]; }
  std::size_t minus(int a, std::size_t idx) const { return minus_[a][idx]; }

  std::size_t dofs(Space s) const;

  /// Physical coordinates of DOF (s, comp) at index (i,j,k).
  std::array<double, 3> location(Space s, int comp, int i, int j, int k) const;
  std::array<double, 3> location(Stagger st, int i, int j, int k) const;

 private:
  std::array<int, 3> n_;
  std::array<double, 3> d_;
  std::array<Bc, 3> bc_;
  std::array<double, 3> origin_;
  std::size_t size_ = 0;
  std::array<std::vector<std::size_t>, 3> plus_, minus_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Grid covering [lo, lo + len] with n cells per axis. Cell centres sit at
/// lo + (i + 1/2) d, so nodes sit at lo + i d.
GridPtr make_grid(std::array<int, 3> n, std::array<double, 3> lo,
                  std::array<double, 3> len, std::array<Bc, 3> bc);

}  // namespace smhd
