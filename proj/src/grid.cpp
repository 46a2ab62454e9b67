#include "hmin/grid.hpp"

#include <cmath>
#include <functional>

namespace hmin {
namespace {

constexpr int kRingPad = 3;  // lattice margin beyond the region, in nodes

// Builds mask from an interior predicate over node indices, then derives the
// 4-connected boundary ring.
DomainPtr from_predicate(GridDomain proto, const std::function<bool(int, int)>& inside) {
  auto dom = std::make_shared<GridDomain>(std::move(proto));
  dom->mask.assign(static_cast<std::size_t>(dom->nx) * dom->ny, kOutside);
  for (int i = 0; i < dom->nx; ++i)
    for (int j = 0; j < dom->ny; ++j)
      if (inside(i, j)) dom->mask[dom->idx(i, j)] = kInterior;
  static constexpr int d4[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int i = 0; i < dom->nx; ++i)
    for (int j = 0; j < dom->ny; ++j) {
      if (dom->mask[dom->idx(i, j)] != kOutside) continue;
      for (auto& d : d4)
        if (dom->is_interior(i + d[0], j + d[1])) {
          dom->mask[dom->idx(i, j)] = kBoundary;
          break;
        }
    }
  check_domain(*dom);
  return dom;
}

}  // namespace

void check_domain(const GridDomain& dom) {
  if (dom.nx < 3 || dom.ny < 3) throw std::runtime_error("domain too small (nx or ny < 3)");
  static constexpr int d4[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (int i = 0; i < dom.nx; ++i)
    for (int j = 0; j < dom.ny; ++j) {
      if (dom.is_interior(i, j)) {
        for (auto& d : d4)
          if (!dom.is_defined(i + d[0], j + d[1]))
            throw std::runtime_error("interior node with undefined 4-neighbour at (" +
                                     std::to_string(i) + "," + std::to_string(j) + ")");
      } else if (dom.kind(i, j) == kBoundary) {
        bool touches = false;
        for (auto& d : d4) touches |= dom.is_interior(i + d[0], j + d[1]);
        if (!touches)
          throw std::runtime_error("boundary node without interior 4-neighbour at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
}

DomainPtr make_square(double x0, double y0, double side, double h, Alignment align) {
  if (align == Alignment::NodeAligned) {
    int n = static_cast<int>(std::lround(side / h)) + 1;
    return make_square_nodes(x0, y0, side, n);
  }
  const int n = static_cast<int>(std::lround(side / h));
  if (n < 2) throw std::invalid_argument("square side too small for h");
  GridDomain d;
  d.nx = d.ny = n + 2;
  d.hx = d.hy = h;
  d.x0 = x0 + (0.5 - 1.0) * h;  // node 1 sits at x0 + h/2
  d.y0 = y0 + (0.5 - 1.0) * h;
  d.shape = {DomainShape::Square, x0, y0, side, 0, 0, 0, Alignment::CellCentered, 0};
  return from_predicate(std::move(d), [n](int i, int j) {
    return i >= 1 && i <= n && j >= 1 && j <= n;
  });
}

DomainPtr make_square_nodes(double x0, double y0, double side, int nodes_per_side) {
  const int n = nodes_per_side;
  if (n < 3) throw std::invalid_argument("need at least 3 nodes per side");
  GridDomain d;
  d.nx = d.ny = n;
  d.hx = d.hy = side / (n - 1);
  d.x0 = x0;
  d.y0 = y0;
  d.shape = {DomainShape::Square, x0, y0, side, 0, 0, 0, Alignment::NodeAligned, n};
  return from_predicate(std::move(d), [n](int i, int j) {
    return i >= 1 && i <= n - 2 && j >= 1 && j <= n - 2;
  });
}

DomainPtr make_rect(double x0, double y0, double lx, double ly, double h) {
  const int nxc = static_cast<int>(std::lround(lx / h));
  const int nyc = static_cast<int>(std::lround(ly / h));
  if (nxc < 2 || nyc < 2) throw std::invalid_argument("rect too small for h");
  GridDomain d;
  d.nx = nxc + 2;
  d.ny = nyc + 2;
  d.hx = d.hy = h;
  d.x0 = x0 - 0.5 * h;
  d.y0 = y0 - 0.5 * h;
  d.shape.kind = DomainShape::Custom;
  return from_predicate(std::move(d), [nxc, nyc](int i, int j) {
    return i >= 1 && i <= nxc && j >= 1 && j <= nyc;
  });
}

namespace {

DomainPtr radial_domain(double r_lo, double r_hi, double h, Alignment align, bool cut,
                        DomainShape shape) {
  const int m = static_cast<int>(std::ceil(r_hi / h)) + kRingPad;
  GridDomain d;
  d.nx = d.ny = 2 * m + 1;
  d.hx = d.hy = h;
  const double off = (align == Alignment::CellCentered) ? 0.5 : 0.0;
  d.x0 = (-m + off) * h;
  d.y0 = (-m + off) * h;
  d.shape = shape;
  // h^2 inset keeps interior strictly inside the circles so the derived ring
  // stays within the 2h gap bound checked by the nonuniqueness report.
  const double eps = h * h;
  auto dc = d;  // copy for lambda capture of coordinates
  return from_predicate(std::move(d), [=](int i, int j) {
    const double x = dc.x0 + i * h, y = dc.y0 + j * h;
    const double r2 = x * x + y * y;
    if (r2 >= r_hi * r_hi - eps) return false;
    if (r_lo > 0 && r2 <= r_lo * r_lo + eps) return false;
    if (cut && x < 0 && std::abs(y) <= 2 * h) return false;
    return true;
  });
}

}  // namespace

DomainPtr make_disk(double radius, double h, Alignment align) {
  DomainShape s;
  s.kind = DomainShape::Disk;
  s.radius = radius;
  s.align = align;
  return radial_domain(0.0, radius, h, align, false, s);
}

DomainPtr make_annulus(double r_inner, double r_outer, double h) {
  if (!(0 < r_inner && r_inner < r_outer)) throw std::invalid_argument("bad annulus radii");
  DomainShape s;
  s.kind = DomainShape::Annulus;
  s.r_inner = r_inner;
  s.r_outer = r_outer;
  return radial_domain(r_inner, r_outer, h, Alignment::CellCentered, false, s);
}

DomainPtr make_annulus_with_cut(double r_inner, double r_outer, double h) {
  if (!(0 < r_inner && r_inner < r_outer)) throw std::invalid_argument("bad annulus radii");
  DomainShape s;
  s.kind = DomainShape::AnnulusWithCut;
  s.r_inner = r_inner;
  s.r_outer = r_outer;
  return radial_domain(r_inner, r_outer, h, Alignment::CellCentered, true, s);
}

DomainPtr rebuild(const GridDomain& dom, double h) {
  const auto& s = dom.shape;
  switch (s.kind) {
    case DomainShape::Square:
      return make_square(s.x0, s.y0, s.side, h, s.align);
    case DomainShape::Disk:
      return make_disk(s.radius, h, s.align);
    case DomainShape::Annulus:
      return make_annulus(s.r_inner, s.r_outer, h);
    case DomainShape::AnnulusWithCut:
      return make_annulus_with_cut(s.r_inner, s.r_outer, h);
    default:
      throw std::runtime_error("domain loaded from file cannot be rebuilt at a new spacing");
  }
}

GridFunction sample_function(DomainPtr dom, const std::function<double(double, double)>& f) {
  GridFunction u(dom);
  for (int i = 0; i < dom->nx; ++i)
    for (int j = 0; j < dom->ny; ++j)
      if (dom->is_defined(i, j)) u.at(i, j) = f(dom->x(i), dom->y(j));
  return u;
}

double max_diff(const GridFunction& a, const GridFunction& b, NodeKind k) {
  const auto& dom = *a.dom;
  double m = 0.0;
  for (int i = 0; i < dom.nx; ++i)
    for (int j = 0; j < dom.ny; ++j)
      if (dom.kind(i, j) == k) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
  return m;
}

}  // namespace hmin
