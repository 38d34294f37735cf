#include "arr/svg.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace arr {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v + 0.0);  // normalize -0
  return buf;
}

struct Frame {
  RatVec u1, u2, p0;  // plane {chart.v=1} = p0 + span(u1,u2)
};

// 2D coordinates of a point on the slice: solve p - p0 = w1 u1 + w2 u2
// through the Gram system (exact, then rounded for drawing only).
std::pair<double, double> coords(const Frame& fr, const RatVec& p) {
  RatVec diff = vec_sub(p, fr.p0);
  Rat a = dot(fr.u1, fr.u1), b = dot(fr.u2, fr.u1), c = dot(fr.u1, fr.u2),
      d = dot(fr.u2, fr.u2);
  Rat rhs1 = dot(diff, fr.u1), rhs2 = dot(diff, fr.u2);
  Rat det2 = a * d - b * c;
  Rat w1 = (rhs1 * d - b * rhs2) / det2;
  Rat w2 = (a * rhs2 - rhs1 * c) / det2;
  return {w1.get_d(), w2.get_d()};
}

}  // namespace

std::string projective_svg(const Arrangement& a, const RatVec& chart,
                           const std::optional<TriangleWitness>& highlight) {
  if (!a.is_essential() || a.dim() != 3)
    throw std::invalid_argument("projective_svg needs an essential rank-3 arrangement");
  if (int(chart.size()) != 3 || is_zero_vec(chart))
    throw std::invalid_argument("chart functional must be a nonzero 3-vector");
  RatVec cc = canonicalize_normal(chart);
  for (const auto& h : a.hyperplanes())
    if (h.normal == cc)
      throw std::invalid_argument("chart functional proportional to a hyperplane normal");

  Frame fr;
  RatMat ker = kernel_basis(RatMat::from_rows({chart}, 3));
  fr.u1 = ker.row(0);
  fr.u2 = ker.row(1);
  Rat cnorm = dot(chart, chart);
  fr.p0 = vec_scale(1 / cnorm, chart);

  // vertices: rank-2 flats with their multiplicities
  struct Vtx {
    double x, y;
    int mult;
  };
  std::vector<Vtx> vertices;
  {
    auto lat = build_lattice(a);
    for (int fi : lat.rank_stratum(2)) {
      const Flat& f = lat.flat(fi);
      RatVec d = f.subspace.basis().row(0);
      Rat len = dot(chart, d);
      if (len == 0) continue;  // at infinity in this chart
      RatVec p = vec_scale(1 / len, d);
      auto [x, y] = coords(fr, p);
      vertices.push_back({x, y, int(f.loc.size())});
    }
  }

  double lo_x = -1, hi_x = 1, lo_y = -1, hi_y = 1;
  if (!vertices.empty()) {
    lo_x = hi_x = vertices[0].x;
    lo_y = hi_y = vertices[0].y;
    for (const auto& v : vertices) {
      lo_x = std::min(lo_x, v.x);
      hi_x = std::max(hi_x, v.x);
      lo_y = std::min(lo_y, v.y);
      hi_y = std::max(hi_y, v.y);
    }
  }
  double pad_x = 0.2 * std::max(hi_x - lo_x, 0.5), pad_y = 0.2 * std::max(hi_y - lo_y, 0.5);
  lo_x -= pad_x;
  hi_x += pad_x;
  lo_y -= pad_y;
  hi_y += pad_y;

  const double scale = 400.0 / std::max(hi_x - lo_x, hi_y - lo_y);
  auto px = [&](double x) { return (x - lo_x) * scale; };
  auto py = [&](double y) { return (hi_y - y) * scale; };  // svg y grows downward

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 "
      << num(px(hi_x)) << " " << num(py(lo_y)) << "\">\n";

  // shaded witness triangle first, under the lines
  if (highlight) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& vf : highlight->vertex_flats) {
      RatVec d = vf.direction;
      Rat len = dot(chart, d);
      if (len == 0)
        throw std::invalid_argument("triangle vertex at infinity for this chart");
      if (len < 0) d = vec_scale(Rat(-1), d);
      RatVec p = vec_scale(1 / abs(len), d);
      pts.push_back(coords(fr, p));
    }
    svg << "  <polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) svg << " ";
      svg << num(px(pts[i].first)) << "," << num(py(pts[i].second));
    }
    svg << "\" fill=\"#c8c8c8\" stroke=\"none\"/>\n";
  }

  // hyperplane lines, clipped to the padded box
  for (const auto& h : a.hyperplanes()) {
    double la = dot(h.normal, fr.u1).get_d();
    double lb = dot(h.normal, fr.u2).get_d();
    double lc = dot(h.normal, fr.p0).get_d();
    // la*x + lb*y + lc = 0 inside [lo,hi]^2
    std::vector<std::pair<double, double>> hits;
    auto push = [&](double x, double y) {
      for (auto& q : hits)
        if (std::abs(q.first - x) + std::abs(q.second - y) < 1e-9) return;
      hits.push_back({x, y});
    };
    if (std::abs(lb) > 1e-12) {
      for (double x : {lo_x, hi_x}) {
        double y = -(lc + la * x) / lb;
        if (y >= lo_y - 1e-9 && y <= hi_y + 1e-9) push(x, y);
      }
    }
    if (std::abs(la) > 1e-12) {
      for (double y : {lo_y, hi_y}) {
        double x = -(lc + lb * y) / la;
        if (x >= lo_x - 1e-9 && x <= hi_x + 1e-9) push(x, y);
      }
    }
    if (hits.size() < 2) continue;
    svg << "  <line x1=\"" << num(px(hits[0].first)) << "\" y1=\"" << num(py(hits[0].second))
        << "\" x2=\"" << num(px(hits[1].first)) << "\" y2=\"" << num(py(hits[1].second))
        << "\" stroke=\"black\" stroke-width=\"1.5\"";
    if (!h.label.empty()) svg << " data-label=\"" << h.label << "\"";
    svg << "/>\n";
  }

  for (const auto& v : vertices) {
    svg << "  <circle cx=\"" << num(px(v.x)) << "\" cy=\"" << num(py(v.y)) << "\" r=\""
        << num(1.5 + 1.2 * v.mult) << "\" fill=\"black\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_projective_svg(const Arrangement& a, const RatVec& chart,
                         const std::optional<TriangleWitness>& highlight,
                         const std::string& out_path) {
  std::string body = projective_svg(a, chart, highlight);
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << body;
}

}  // namespace arr
