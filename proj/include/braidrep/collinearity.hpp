#pragma once

// Geometric derivation of braid words: n points move piecewise linearly in the
// plane; every moment three of them become collinear contributes one letter.
// Floating point is confined to this header; only discrete words leave it.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "braidrep/error.hpp"
#include "braidrep/gn3.hpp"
#include "braidrep/permutation.hpp"

namespace braidrep {

struct Point2 {
  double x = 0, y = 0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

struct Breakpoint {
  double time = 0;
  Point2 pos;

  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

using Path = std::vector<Breakpoint>;

// Paths are indexed so that path p starts at start position p. Each point is
// labelled by the start position it occupies at t = 1 (the braid boundary
// condition guarantees one exists); letters are written in these labels.
class TrajectorySet {
 public:
  static constexpr double kCoincidence = 1e-9;

  explicit TrajectorySet(std::vector<Path> paths) : paths_(std::move(paths)) { validate(); }

  std::size_t points() const noexcept { return paths_.size(); }
  const std::vector<Path>& paths() const noexcept { return paths_; }
  const Path& path(std::size_t p) const { return paths_.at(p - 1); }

  // Path p ends at the start position of path final_labels()(p).
  const Permutation& final_labels() const noexcept { return final_; }

  Point2 position(std::size_t p, double t) const {
    const Path& path = paths_.at(p - 1);
    if (t <= path.front().time) return path.front().pos;
    if (t >= path.back().time) return path.back().pos;
    auto it = std::upper_bound(path.begin(), path.end(), t, [](double v, const Breakpoint& b) { return v < b.time; });
    const Breakpoint& b = *it;
    const Breakpoint& a = *(it - 1);
    const double u = (t - a.time) / (b.time - a.time);
    return a.pos + u * (b.pos - a.pos);
  }

  // Sorted union of all breakpoint times.
  std::vector<double> grid() const {
    std::vector<double> g;
    for (const Path& p : paths_)
      for (const Breakpoint& b : p) g.push_back(b.time);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  }

  // The same motion run backwards, re-indexed so path q starts at position q.
  TrajectorySet reversed() const {
    std::vector<Path> out(points());
    for (std::size_t p = 1; p <= points(); ++p) {
      Path r;
      for (auto it = path(p).rbegin(); it != path(p).rend(); ++it) r.push_back({1.0 - it->time, it->pos});
      r.front().time = 0.0;
      r.back().time = 1.0;
      out[final_(p) - 1] = std::move(r);
    }
    return TrajectorySet(std::move(out));
  }

 private:
  void validate() {
    const std::size_t n = paths_.size();
    if (n < 1) throw DomainError("trajectory set has no points");
    for (std::size_t p = 0; p < n; ++p) {
      const Path& path = paths_[p];
      const std::string who = "path " + std::to_string(p + 1);
      if (path.size() < 2) throw DomainError(who + " needs at least two breakpoints");
      if (path.front().time != 0.0) throw DomainError(who + " must start at time 0");
      if (path.back().time != 1.0) throw DomainError(who + " must end at time 1");
      for (std::size_t b = 0; b < path.size(); ++b) {
        if (!std::isfinite(path[b].pos.x) || !std::isfinite(path[b].pos.y)) throw DomainError(who + " has a non-finite coordinate");
        if (b > 0 && !(path[b].time > path[b - 1].time)) throw DomainError(who + " breakpoint times are not strictly increasing");
      }
    }
    for (double t : grid()) {
      for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b)
          if (norm(position(a, t) - position(b, t)) < kCoincidence) {
            throw DomainError("points " + std::to_string(a) + " and " + std::to_string(b) + " coincide at t=" + std::to_string(t));
          }
    }
    std::vector<std::size_t> images(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        if (norm(paths_[p].back().pos - paths_[q].front().pos) < kCoincidence) images[p] = q + 1;
      }
      if (images[p] == 0) throw DomainError("path " + std::to_string(p + 1) + " does not end at a start position");
    }
    final_ = Permutation::from_images(std::move(images));
  }

  std::vector<Path> paths_;
  Permutation final_;
};

// Start configuration: point p at angle -2 pi (p - 1) / n on the unit circle.
inline Point2 circle_position(std::size_t n, std::size_t p) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(p - 1) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

// Points i and i+1 make a counterclockwise half-turn about the midpoint of
// their chord, sampled at `segments` equal steps; the rest stay put.
inline TrajectorySet sigma_motion(std::size_t n, std::size_t i, std::size_t segments = 256) {
  if (n < 3 || i < 1 || i >= n) throw DomainError("sigma motion index " + std::to_string(i) + " out of range for n=" + std::to_string(n));
  if (segments < 2) throw DomainError("sigma motion needs at least 2 segments");
  std::vector<Path> paths(n);
  for (std::size_t p = 1; p <= n; ++p) {
    const Point2 start = circle_position(n, p);
    paths[p - 1] = {{0.0, start}, {1.0, start}};
  }
  const Point2 a = circle_position(n, i);
  const Point2 b = circle_position(n, i + 1);
  const Point2 mid = 0.5 * (a + b);
  auto rotate = [&](Point2 v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return mid + Point2{c * (v.x - mid.x) - s * (v.y - mid.y), s * (v.x - mid.x) + c * (v.y - mid.y)};
  };
  Path pa, pb;
  for (std::size_t step = 0; step <= segments; ++step) {
    const double u = static_cast<double>(step) / static_cast<double>(segments);
    pa.push_back({u, rotate(a, std::numbers::pi * u)});
    pb.push_back({u, rotate(b, std::numbers::pi * u)});
  }
  pa.back().pos = b;
  pb.back().pos = a;
  paths[i - 1] = std::move(pa);
  paths[i] = std::move(pb);
  return TrajectorySet(std::move(paths));
}

struct CollinearityEvent {
  double time = 0;
  // Path indices in slot order: outer, middle, outer.
  std::array<std::size_t, 3> paths{};
  // The same points in final-position labels; this is the emitted letter.
  GnGenerator triple;
};

namespace detail {

// Orientation of (a, m, b) normalized by the lengths of the two edges at a.
inline double orientation(const TrajectorySet& ts, std::size_t a, std::size_t m, std::size_t b, double t) {
  const Point2 pa = ts.position(a, t);
  const Point2 u = ts.position(m, t) - pa;
  const Point2 v = ts.position(b, t) - pa;
  const double scale = norm(u) * norm(v);
  return scale == 0 ? 0.0 : cross(u, v) / scale;
}

inline int sign_of(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

}  // namespace detail

// Finds every time in (0, 1) at which three points are collinear. Between
// grid times the orientation determinant is quadratic in t; each piece is
// split at its extremum, and sign changes are refined by bisection to
// `tolerance`. A letter a_{x m y} has the geometrically middle point m in the
// middle slot, and its outer points ordered so that the orientation of
// (x, m, y) turns from negative to positive through the event.
inline std::vector<CollinearityEvent> detect_events(const TrajectorySet& ts, double tolerance = 1e-12) {
  if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
  constexpr double kZero = 1e-12;
  const std::size_t n = ts.points();
  const std::vector<double> grid = ts.grid();
  std::vector<CollinearityEvent> events;

  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = a + 1; b <= n; ++b)
      for (std::size_t c = b + 1; c <= n; ++c) {
        auto f = [&](double t) { return detail::orientation(ts, a, b, c, t); };
        // Sample nodes: grid times plus the extremum of each quadratic piece.
        std::vector<double> nodes{grid.front()};
        for (std::size_t g = 1; g < grid.size(); ++g) {
          const double t0 = grid[g - 1], t1 = grid[g], tm = 0.5 * (t0 + t1);
          auto raw = [&](double t) {
            const Point2 pa = ts.position(a, t);
            return cross(ts.position(b, t) - pa, ts.position(c, t) - pa);
          };
          const double f0 = raw(t0), fm = raw(tm), f1 = raw(t1);
          // Quadratic through the three samples, in u = (t - t0) / (t1 - t0).
          const double qa = 2 * f0 - 4 * fm + 2 * f1;
          const double qb = -3 * f0 + 4 * fm - f1;
          if (qa != 0) {
            const double u = -qb / (2 * qa);
            if (u > 1e-9 && u < 1 - 1e-9) nodes.push_back(t0 + u * (t1 - t0));
          }
          nodes.push_back(t1);
        }
        std::vector<int> signs;
        signs.reserve(nodes.size());
        for (double t : nodes) signs.push_back(detail::sign_of(f(t), kZero));

        auto triple_name = [&] { return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")"; };
        std::vector<double> roots;
        for (std::size_t s = 0; s < nodes.size(); ++s) {
          if (signs[s] != 0) {
            if (s + 1 < nodes.size() && signs[s + 1] != 0 && signs[s + 1] != signs[s]) {
              double lo = nodes[s], hi = nodes[s + 1];
              const int slo = signs[s];
              while (hi - lo > tolerance) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const int sm = detail::sign_of(f(mid), 0.0);
                if (sm == 0) {
                  lo = hi = mid;
                  break;
                }
                (sm == slo ? lo : hi) = mid;
              }
              roots.push_back(0.5 * (lo + hi));
            }
            continue;
          }
          // A zero node: an event only if the signs on both sides differ.
          std::size_t e = s;
          while (e < nodes.size() && signs[e] == 0) ++e;
          if (s == 0 || e == nodes.size()) {
            throw DegenerateEventError("points " + triple_name() + " are collinear at the start or end of the motion");
          }
          if (e != s + 1) throw DegenerateEventError("points " + triple_name() + " stay collinear over an interval");
          if (signs[s - 1] == signs[e]) {
            throw DegenerateEventError("points " + triple_name() + " touch collinearity without crossing near t=" +
                                       std::to_string(nodes[s]));
          }
          roots.push_back(nodes[s]);
          s = e - 1;
        }

        for (double t : roots) {
          const std::array<std::size_t, 3> ids{a, b, c};
          // The middle point is the one outside the farthest pair.
          double best = -1;
          std::size_t middle = 0;
          for (std::size_t x = 0; x < 3; ++x) {
            const std::size_t p = ids[(x + 1) % 3], q = ids[(x + 2) % 3];
            const double d = norm(ts.position(p, t) - ts.position(q, t));
            if (d > best) {
              best = d;
              middle = ids[x];
            }
          }
          std::size_t x = 0, y = 0;
          for (std::size_t id : ids) {
            if (id == middle) continue;
            (x == 0 ? x : y) = id;
          }
          const double before = std::max(0.0, t - std::max(tolerance, 1e-9));
          if (detail::orientation(ts, x, middle, y, before) > 0) std::swap(x, y);
          const Permutation& label = ts.final_labels();
          events.push_back({t, {x, middle, y}, {label(x), label(middle), label(y)}});
        }
      }

  std::sort(events.begin(), events.end(), [](const auto& l, const auto& r) { return l.time < r.time; });
  for (std::size_t e = 1; e < events.size(); ++e) {
    if (events[e].time - events[e - 1].time <= tolerance) {
      throw DegenerateEventError("two collinearity events coincide near t=" + std::to_string(events[e].time));
    }
  }
  return events;
}

// One positive letter per event, in time order.
inline GnWord events_to_word(const std::vector<CollinearityEvent>& events, std::size_t n) {
  GnWord w(n);
  for (const CollinearityEvent& e : events) w.push_back({e.triple, 1});
  return w;
}

enum class CalibrationStatus { exact, up_to_triple_order, mismatch };

inline std::string to_string(CalibrationStatus s) {
  switch (s) {
    case CalibrationStatus::exact: return "exact";
    case CalibrationStatus::up_to_triple_order: return "up-to-triple-order";
    case CalibrationStatus::mismatch: return "mismatch";
  }
  return "mismatch";
}

struct CalibrationEntry {
  std::size_t generator = 0;
  GnWord geometric;
  GnWord algebraic;
  std::size_t events = 0;
  CalibrationStatus status = CalibrationStatus::mismatch;
};

struct CalibrationReport {
  std::size_t n = 0;
  std::vector<CalibrationEntry> entries;

  bool all_exact() const {
    return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.status == CalibrationStatus::exact; });
  }
};

// Compares the event word of sigma_motion(n, i) with the word part of
// phi_generator(n, i) for every i.
inline CalibrationReport calibrate_against_phi(std::size_t n, std::size_t segments = 256, double tolerance = 1e-12) {
  if (n < 3) throw DomainError("calibration needs n >= 3");
  CalibrationReport report{n, {}};
  for (std::size_t i = 1; i < n; ++i) {
    const auto events = detect_events(sigma_motion(n, i, segments), tolerance);
    CalibrationEntry entry{i, events_to_word(events, n), phi_generator(n, i, 1).word, events.size(),
                           CalibrationStatus::mismatch};
    if (entry.geometric == entry.algebraic) {
      entry.status = CalibrationStatus::exact;
    } else if (entry.geometric.length() == entry.algebraic.length()) {
      auto unordered = [](const GnGenerator& g) {
        std::array<std::size_t, 3> s{g.i, g.j, g.k};
        std::sort(s.begin(), s.end());
        return s;
      };
      bool same = true;
      for (std::size_t k = 0; k < entry.geometric.length(); ++k) {
        same = same && unordered(entry.geometric.letters()[k].gen) == unordered(entry.algebraic.letters()[k].gen);
      }
      if (same) entry.status = CalibrationStatus::up_to_triple_order;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace braidrep
