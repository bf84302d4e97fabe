#pragma once

/// @file svg.hpp
/// Deterministic SVG drawings of the rectangle, Sigma, Q, trajectories and the
/// exceptional monotone-ball points.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "splittori/billiard.hpp"

namespace splittori {

struct RenderSpec {
  Scalar alpha{1};
  int width = 640;
  int margin = 20;
  bool show_sigma = true;
  bool show_q = true;
  bool show_bounce_dots = true;
  std::optional<Trajectory> trajectory;
  int monotone_cutoff = 0;  ///< draw ((k-2l-1)/k, +-1/k) for k <= cutoff; 0 disables
};

namespace detail {

class SvgCanvas {
 public:
  explicit SvgCanvas(const RenderSpec& s)
      : alpha_(s.alpha.to_double()),
        margin_(s.margin),
        scale_((s.width - 2.0 * s.margin) / (2.0 * (1.0 + alpha_))),
        width_(s.width),
        height_(static_cast<int>(2.0 * alpha_ * scale_ + 2.0 * s.margin + 0.5)) {}

  std::string px(const Scalar& x) const { return num(margin_ + (x.to_double() + 1.0 + alpha_) * scale_); }
  std::string py(const Scalar& y) const { return num(margin_ + (alpha_ - y.to_double()) * scale_); }
  std::string len(const Scalar& d) const { return num(d.to_double() * scale_); }
  std::string xy(const Point& p) const { return px(p.x) + "," + py(p.y); }
  int width() const { return width_; }
  int height() const { return height_; }

  static std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
  }

 private:
  double alpha_;
  double margin_;
  double scale_;
  int width_;
  int height_;
};

inline std::vector<Point> path_vertices(const Trajectory& t) {
  std::vector<Point> out;
  for (std::int64_t k = t.k_min; k <= t.k_max; ++k) {
    if (k > t.k_min) {
      for (const auto& h : t.corner_hits)
        if ((h.from == k - 1 && h.to == k) || (h.from == k && h.to == k - 1)) out.push_back(h.corner);
    }
    out.push_back(t.at(k));
  }
  return out;
}

}  // namespace detail

/// Monotone-ball points ((k-2l-1)/k, +-1/k), k <= cutoff, inside the open alpha-rectangle.
inline std::vector<Point> monotone_ball_points(int cutoff, const Scalar& alpha) {
  std::vector<Point> out;
  for (int k = 1; k <= cutoff; ++k)
    for (int l = 0; l < k; ++l)
      for (int s : {1, -1}) {
        Point p{Scalar::ratio(k - 2 * l - 1, k), Scalar::ratio(s, k)};
        if (in_interior(p, alpha)) out.push_back(p);
      }
  return out;
}

inline std::string render_svg(const RenderSpec& spec) {
  require_alpha(spec.alpha);
  detail::SvgCanvas c(spec);
  const Scalar& a = spec.alpha;
  Scalar w = Scalar(1) + a;
  Scalar one(1);
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << c.width() << "\" height=\""
    << c.height() << "\" viewBox=\"0 0 " << c.width() << " " << c.height() << "\">\n";
  o << "<rect class=\"table\" x=\"" << c.px(-w) << "\" y=\"" << c.py(a) << "\" width=\""
    << c.len(Scalar(2) * w) << "\" height=\"" << c.len(Scalar(2) * a)
    << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  if (spec.show_q) {
    o << "<polygon class=\"fundamental-domain\" points=\"" << c.xy({-one, Scalar(0)}) << " " << c.xy({one, Scalar(0)})
      << " " << c.xy({w, a}) << " " << c.xy({-w, a}) << "\" fill=\"#cccccc\" fill-opacity=\"0.5\" stroke=\"none\"/>\n";
  }
  if (spec.show_sigma) {
    auto line = [&](const Point& p, const Point& q) {
      o << "<line class=\"sigma\" x1=\"" << c.px(p.x) << "\" y1=\"" << c.py(p.y) << "\" x2=\"" << c.px(q.x)
        << "\" y2=\"" << c.py(q.y) << "\" stroke=\"black\" stroke-dasharray=\"4 3\"/>\n";
    };
    line({-one, Scalar(0)}, {one, Scalar(0)});
    for (int sx : {1, -1})
      for (int sy : {1, -1}) line({Scalar(sx), Scalar(0)}, {w * Scalar(sx), a * Scalar(sy)});
  }
  if (spec.trajectory) {
    const Trajectory& t = *spec.trajectory;
    std::vector<Point> verts = detail::path_vertices(t);
    o << "<polyline class=\"trajectory\" points=\"";
    for (std::size_t i = 0; i < verts.size(); ++i) o << (i ? " " : "") << c.xy(verts[i]);
    o << "\" fill=\"none\" stroke=\"#1f5fbf\" stroke-dasharray=\"2 2\"/>\n";
    if (spec.show_bounce_dots) {
      std::vector<Point> seen;
      for (const Point& p : t.points) {
        if (std::find(seen.begin(), seen.end(), p) != seen.end()) continue;
        seen.push_back(p);
        o << "<circle class=\"bounce\" cx=\"" << c.px(p.x) << "\" cy=\"" << c.py(p.y)
          << "\" r=\"3\" fill=\"#1f5fbf\"/>\n";
      }
    }
    std::vector<Point> corners;
    for (const auto& h : t.corner_hits) {
      if (std::find(corners.begin(), corners.end(), h.corner) != corners.end()) continue;
      corners.push_back(h.corner);
      o << "<circle class=\"corner\" cx=\"" << c.px(h.corner.x) << "\" cy=\"" << c.py(h.corner.y)
        << "\" r=\"6\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const Point& p : monotone_ball_points(spec.monotone_cutoff, a))
    o << "<circle class=\"monotone-ball\" cx=\"" << c.px(p.x) << "\" cy=\"" << c.py(p.y)
      << "\" r=\"1.5\" fill=\"black\"/>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace splittori
