#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "hmin/numerics.hpp"

namespace hmin {

// Node classification. Boundary nodes carry Dirichlet data; interior nodes
// carry unknowns / evaluated fields; outside nodes are padding.
enum NodeKind : std::uint8_t { kOutside = 0, kInterior = 1, kBoundary = 2 };

// Lattice alignment. CellCentered puts nodes at (i+1/2)h offsets so midpoint
// quadrature tiles the region exactly; NodeAligned puts nodes at i*h offsets
// (needed when a node must sit exactly on a given point, e.g. the origin).
enum class Alignment { CellCentered, NodeAligned };

// Rebuildable shape descriptor; lets verification sweeps reconstruct the same
// region at several spacings. Custom means "loaded from file, not rebuildable".
struct DomainShape {
  enum Kind { Square, Disk, Annulus, AnnulusWithCut, Custom } kind = Custom;
  double x0 = 0, y0 = 0, side = 0;     // Square
  double radius = 0;                   // Disk
  double r_inner = 0, r_outer = 0;     // Annulus / AnnulusWithCut
  Alignment align = Alignment::CellCentered;
  int nodes_per_side = 0;              // Square + NodeAligned: node count
};

// Rectangular lattice with a mask. Immutable after construction; shared by
// value through shared_ptr so functions/fields can alias it cheaply.
//
// Invariants enforced by the factory functions:
//  - every 4-neighbour of an interior node is interior or boundary,
//  - every boundary node has at least one interior 4-neighbour,
//  - nx, ny >= 3.
class GridDomain {
 public:
  int nx = 0, ny = 0;
  double x0 = 0, y0 = 0;   // coordinates of node (0,0)
  double hx = 0, hy = 0;
  std::vector<std::uint8_t> mask;  // nx*ny, index i*ny + j
  DomainShape shape;

  double x(int i) const { return x0 + i * hx; }
  double y(int j) const { return y0 + j * hy; }
  int idx(int i, int j) const { return i * ny + j; }
  bool in_bounds(int i, int j) const { return i >= 0 && i < nx && j >= 0 && j < ny; }
  NodeKind kind(int i, int j) const {
    return in_bounds(i, j) ? NodeKind(mask[idx(i, j)]) : kOutside;
  }
  bool is_interior(int i, int j) const { return kind(i, j) == kInterior; }
  bool is_defined(int i, int j) const { return kind(i, j) != kOutside; }

  int count(NodeKind k) const {
    int n = 0;
    for (auto m : mask) n += (m == k);
    return n;
  }
  int n_interior() const { return count(kInterior); }
  int n_boundary() const { return count(kBoundary); }

  // Midpoint-rule area of the region: one hx*hy cell per interior node.
  double area() const { return n_interior() * hx * hy; }
};

using DomainPtr = std::shared_ptr<const GridDomain>;

// Factories. All derive the boundary ring by 4-adjacency from the interior
// set, which keeps boundary nodes within one lattice step of the region edge.
DomainPtr make_square(double x0, double y0, double side, double h,
                      Alignment align = Alignment::CellCentered);
DomainPtr make_square_nodes(double x0, double y0, double side, int nodes_per_side);
DomainPtr make_rect(double x0, double y0, double lx, double ly, double h);
DomainPtr make_disk(double radius, double h,
                    Alignment align = Alignment::CellCentered);
DomainPtr make_annulus(double r_inner, double r_outer, double h);
// Annulus with a strip of half-width 2h removed along the negative x axis,
// so single-valued branches of angle-graphs are representable and no stencil
// (reach <= 2 nodes) straddles the atan2 jump.
DomainPtr make_annulus_with_cut(double r_inner, double r_outer, double h);
// Rebuild the same shape at a new spacing; throws for Custom shapes.
DomainPtr rebuild(const GridDomain& dom, double h);

// Validates the ring invariants; throws std::runtime_error on violation.
void check_domain(const GridDomain& dom);

// Scalar samples on interior+boundary nodes; NaN elsewhere.
struct GridFunction {
  DomainPtr dom;
  std::vector<double> v;  // nx*ny

  GridFunction() = default;
  explicit GridFunction(DomainPtr d) : dom(std::move(d)), v(dom->nx * dom->ny, kNaN) {}

  double& at(int i, int j) { return v[dom->idx(i, j)]; }
  double at(int i, int j) const { return v[dom->idx(i, j)]; }
};

// Evaluates f(x,y) at every defined node.
GridFunction sample_function(DomainPtr dom, const std::function<double(double, double)>& f);

// max |a-b| over nodes of the given kind (NaN-free inputs assumed).
double max_diff(const GridFunction& a, const GridFunction& b, NodeKind k);

// Positive regularisation parameter; infinity selects the unregularised limit.
struct Lambda {
  double value = kInf;

  Lambda() = default;
  explicit Lambda(double v) : value(v) {
    if (!(v > 0.0)) throw std::invalid_argument("Lambda must be positive");
  }
  static Lambda infinity() { return Lambda(); }
  bool is_infinite() const { return std::isinf(value); }
  // 1/lambda^2, zero at infinity.
  double inv_sq() const { return is_infinite() ? 0.0 : 1.0 / (value * value); }
};

}  // namespace hmin
