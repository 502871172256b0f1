#pragma once

// Planar pictures of subsets of (Z u {-inf})^3 up to the diagonal action.
//
// Exponential view: barycenter of a fixed triangle with weights
// exp(beta x_i). Orthogonal view: projection onto the plane orthogonal to
// (1, 1, 1). Both are invariant under x -> lambda (x) x. Floating point is
// used here and nowhere else.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ext_int.hpp"
#include "matrix.hpp"

namespace tropilinear {

struct Point2 {
  double x = 0, y = 0;
};

enum class RenderMode { Exponential, Orthogonal, Plane };

struct RenderSpec {
  RenderMode mode = RenderMode::Exponential;
  double beta = 1.0;
  int width = 400;
  int height = 400;
  double point_radius = 3.0;
};

struct Scene {
  std::vector<Point2> points;                 // drawn bold
  std::vector<std::vector<Point2>> polylines; // drawn thin
  std::size_t skipped = 0;                    // inputs that could not be projected
};

namespace detail {

constexpr double kSqrt3Half = 0.86602540378443864676;

// Coordinates relative to the largest finite one, as doubles.
inline std::vector<double> relative(const TropVector& x) {
  std::optional<Integer> top;
  for (const auto& v : x) {
    if (v.is_pos_inf()) throw Error("cannot project +inf coordinates");
    if (v.is_finite() && (!top || v.value() > *top)) top = v.value();
  }
  if (!top) throw Error("cannot project the zero vector");
  std::vector<double> out;
  for (const auto& v : x)
    out.push_back(v.is_finite() ? static_cast<double>(Integer(v.value() - *top))
                                : -std::numeric_limits<double>::infinity());
  return out;
}

inline Point2 barycenter(const std::vector<double>& rel, double beta) {
  static const Point2 vtx[3] = {{0.0, 0.0}, {1.0, 0.0}, {0.5, kSqrt3Half}};
  double w[3], total = 0;
  for (int i = 0; i < 3; ++i) total += w[i] = std::exp(beta * rel[static_cast<std::size_t>(i)]);
  Point2 p;
  for (int i = 0; i < 3; ++i) {
    p.x += w[i] * vtx[i].x / total;
    p.y += w[i] * vtx[i].y / total;
  }
  return p;
}

inline Point2 orthogonal(const std::vector<double>& rel) {
  const double mean = (rel[0] + rel[1] + rel[2]) / 3.0;
  const double u0 = rel[0] - mean, u1 = rel[1] - mean, u2 = rel[2] - mean;
  return {(u0 - u1) / std::sqrt(2.0), (u0 + u1 - 2.0 * u2) / std::sqrt(6.0)};
}

inline std::string num(double v) {
  if (v == 0) v = 0;  // no negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace detail

inline Point2 project_exponential(const TropVector& x, double beta) {
  require_dims(x.size() == 3, "project_exponential: dimension 3 expected");
  if (!(beta > 0)) throw Error("beta must be positive");
  return detail::barycenter(detail::relative(x), beta);
}

inline Point2 project_orthogonal(const TropVector& x) {
  require_dims(x.size() == 3, "project_orthogonal: dimension 3 expected");
  for (const auto& v : x)
    if (!v.is_finite()) throw Error("orthogonal projection needs finite coordinates");
  return detail::orthogonal(detail::relative(x));
}

/// Images of max(g + lambda, h) for `samples` values of lambda between
/// min_i (h_i - g_i) and max_i (h_i - g_i), taken over coordinates finite in
/// both: the tropical segment from h to g.
inline std::vector<Point2> plane_segment(const TropVector& g, const TropVector& h,
                                         const RenderSpec& spec, std::size_t samples = 200) {
  require_dims(g.size() == 3 && h.size() == 3, "plane_segment: dimension 3 expected");
  std::vector<double> rg = detail::relative(g), rh = detail::relative(h);
  // Put both on a common scale: g shifted by its max, h by its max.
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i = 0; i < 3; ++i) {
    if (std::isinf(rg[i]) || std::isinf(rh[i])) continue;
    lo = std::min(lo, rh[i] - rg[i]);
    hi = std::max(hi, rh[i] - rg[i]);
  }
  if (std::isinf(lo)) {
    // No common finite coordinate: the segment runs through the corner max(g, h).
    lo = -20;
    hi = 20;
  }
  std::vector<Point2> out;
  for (std::size_t s = 0; s < samples; ++s) {
    const double lambda = samples == 1 ? lo : lo + (hi - lo) * static_cast<double>(s) / static_cast<double>(samples - 1);
    std::vector<double> v(3);
    for (std::size_t i = 0; i < 3; ++i) v[i] = std::max(rg[i] + lambda, rh[i]);
    const double top = std::max({v[0], v[1], v[2]});
    for (auto& e : v) e -= top;
    out.push_back(spec.mode == RenderMode::Orthogonal ? detail::orthogonal(v)
                                                      : detail::barycenter(v, spec.beta));
  }
  return out;
}

/// Projects points according to the render settings; unprojectable points are counted
/// in `skipped`. In Plane mode the first two coordinates are plotted.
inline Scene make_scene(const std::vector<TropVector>& pts, const RenderSpec& spec,
                        bool segments = false) {
  Scene sc;
  std::vector<TropVector> kept;
  for (const auto& x : pts) {
    try {
      if (spec.mode == RenderMode::Exponential) {
        sc.points.push_back(project_exponential(x, spec.beta));
      } else if (spec.mode == RenderMode::Orthogonal) {
        sc.points.push_back(project_orthogonal(x));
      } else {
        require_dims(x.size() >= 2, "plane view needs two coordinates");
        if (!x[0].is_finite() || !x[1].is_finite()) throw Error("infinite coordinate");
        sc.points.push_back({static_cast<double>(x[0].value()), static_cast<double>(x[1].value())});
      }
      kept.push_back(x);
    } catch (const Error&) {
      ++sc.skipped;
    }
  }
  if (segments && spec.mode != RenderMode::Plane)
    for (std::size_t i = 0; i < kept.size(); ++i)
      for (std::size_t j = i + 1; j < kept.size(); ++j)
        sc.polylines.push_back(plane_segment(kept[i], kept[j], spec));
  return sc;
}

/// Deterministic SVG with 6-decimal coordinates.
inline std::string render_svg(const Scene& sc, const RenderSpec& spec) {
  const double w = spec.width, h = spec.height, margin = 20;
  double x0, x1, y0, y1;
  if (spec.mode == RenderMode::Exponential) {
    x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  } else {
    x0 = y0 = std::numeric_limits<double>::infinity();
    x1 = y1 = -x0;
    auto grow = [&](const Point2& p) {
      x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    };
    for (const auto& p : sc.points) grow(p);
    for (const auto& l : sc.polylines)
      for (const auto& p : l) grow(p);
    if (std::isinf(x0)) x0 = y0 = -1, x1 = y1 = 1;
    if (x1 - x0 < 1e-12) x0 -= 1, x1 += 1;
    if (y1 - y0 < 1e-12) y0 -= 1, y1 += 1;
  }
  const double scale = std::min((w - 2 * margin) / (x1 - x0), (h - 2 * margin) / (y1 - y0));
  auto map = [&](const Point2& p) {
    return Point2{margin + (p.x - x0) * scale, h - margin - (p.y - y0) * scale};
  };
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
                  "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " +
                  std::to_string(spec.width) + " " + std::to_string(spec.height) + "\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (spec.mode == RenderMode::Exponential) {
    Point2 a = map({0, 0}), b = map({1, 0}), c = map({0.5, detail::kSqrt3Half});
    s += "<polygon points=\"" + detail::num(a.x) + "," + detail::num(a.y) + " " + detail::num(b.x) +
         "," + detail::num(b.y) + " " + detail::num(c.x) + "," + detail::num(c.y) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  } else {
    Point2 a = map({x0, y0}), b = map({x1, y0}), c = map({x0, y1});
    s += "<line x1=\"" + detail::num(a.x) + "\" y1=\"" + detail::num(a.y) + "\" x2=\"" + detail::num(b.x) +
         "\" y2=\"" + detail::num(b.y) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    s += "<line x1=\"" + detail::num(a.x) + "\" y1=\"" + detail::num(a.y) + "\" x2=\"" + detail::num(c.x) +
         "\" y2=\"" + detail::num(c.y) + "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (const auto& l : sc.polylines) {
    s += "<polyline fill=\"none\" stroke=\"gray\" stroke-width=\"0.5\" points=\"";
    for (std::size_t i = 0; i < l.size(); ++i) {
      Point2 p = map(l[i]);
      if (i) s += ' ';
      s += detail::num(p.x) + "," + detail::num(p.y);
    }
    s += "\"/>\n";
  }
  for (const auto& p0 : sc.points) {
    Point2 p = map(p0);
    s += "<circle cx=\"" + detail::num(p.x) + "\" cy=\"" + detail::num(p.y) + "\" r=\"" +
         detail::num(spec.point_radius) + "\" fill=\"black\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace tropilinear
