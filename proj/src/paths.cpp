#include "citer/paths.hpp"

#include <algorithm>
#include <cmath>

#include "citer/error.hpp"

namespace citer {

namespace {

constexpr double kMaxArcPiece = kPi / 8.0;

double scale_of(Complex a, Complex b) { return std::max({1.0, std::abs(a), std::abs(b)}); }

bool near(Complex a, Complex b) { return std::abs(a - b) <= 1e-12 * scale_of(a, b); }

double angle_at(const PathSegment& s, Param p) {
  const double span = s.angle_to - s.angle_from;
  return p.t <= 0.5 ? s.angle_from + p.t * span : s.angle_to - p.rest * span;
}

}  // namespace

// ------------------------------------------------------------------ segment

PathSegment PathSegment::line(Complex a, Complex b) {
  PathSegment s;
  s.kind = Kind::Line;
  s.from = a;
  s.to = b;
  return s;
}

PathSegment PathSegment::arc(Complex c, double r, double a0, double a1) {
  if (!(r > 0.0)) fail(ErrorCode::InvalidArgument, "arc radius must be positive");
  PathSegment s;
  s.kind = Kind::Arc;
  s.center = c;
  s.radius = r;
  s.angle_from = a0;
  s.angle_to = a1;
  return s;
}

Complex PathSegment::start() const {
  return kind == Kind::Line ? from : center + std::polar(radius, angle_from);
}

Complex PathSegment::end() const {
  return kind == Kind::Line ? to : center + std::polar(radius, angle_to);
}

Complex PathSegment::point(Param p) const {
  if (kind == Kind::Line) return p.t <= 0.5 ? from + p.t * (to - from) : to - p.rest * (to - from);
  return center + std::polar(radius, angle_at(*this, p));
}

Complex PathSegment::offset(Param p, Complex c) const {
  if (kind == Kind::Line)
    return p.t <= 0.5 ? (from - c) + p.t * (to - from) : (to - c) - p.rest * (to - from);
  const double span = angle_to - angle_from;
  if (p.t <= 0.5)
    return (start() - c) + std::polar(radius, angle_from) * citer::expm1(Complex(0, p.t * span));
  return (end() - c) + std::polar(radius, angle_to) * citer::expm1(Complex(0, -p.rest * span));
}

Complex PathSegment::velocity(Param p) const {
  if (kind == Kind::Line) return to - from;
  return kI * (angle_to - angle_from) * std::polar(radius, angle_at(*this, p));
}

PathSegment PathSegment::reversed() const {
  PathSegment s = *this;
  std::swap(s.from, s.to);
  std::swap(s.angle_from, s.angle_to);
  return s;
}

// --------------------------------------------------------------------- path

Path Path::polyline(const std::vector<Complex>& v) {
  if (v.size() < 2) fail(ErrorCode::InvalidArgument, "polyline needs at least two vertices");
  Path p;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) p.segments.push_back(PathSegment::line(v[i], v[i + 1]));
  return p;
}

Complex Path::start() const {
  if (segments.empty()) fail(ErrorCode::InvalidArgument, "empty path");
  return segments.front().start();
}

Complex Path::end() const {
  if (segments.empty()) fail(ErrorCode::InvalidArgument, "empty path");
  return segments.back().end();
}

Complex Path::point(double t) const {
  if (segments.empty()) fail(ErrorCode::InvalidArgument, "empty path");
  const double n = static_cast<double>(segments.size());
  const std::size_t i = std::min(segments.size() - 1, static_cast<std::size_t>(std::max(0.0, t) * n));
  const double local = t * n - static_cast<double>(i);
  return segments[i].point(Param::at(std::clamp(local, 0.0, 1.0)));
}

Path reverse(const Path& p) {
  Path r;
  for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it) r.segments.push_back(it->reversed());
  return r;
}

Path concat(const Path& a, const Path& b) {
  if (a.segments.empty()) return b;
  if (b.segments.empty()) return a;
  if (!near(a.end(), b.start())) fail(ErrorCode::DiscontinuousConcat, "paths do not join");
  Path r = a;
  r.segments.insert(r.segments.end(), b.segments.begin(), b.segments.end());
  return r;
}

// -------------------------------------------------------------------- forms

FormSpec FormSpec::weighted(SeriesModel f) {
  return {Kind::Weighted, std::make_shared<const SeriesModel>(std::move(f))};
}

Complex form_density(const FormSpec& form, const PathSegment& s, Param p) {
  switch (form.kind) {
    case FormSpec::Kind::Log:
      return 1.0 / s.offset(p, 0.0);
    case FormSpec::Kind::OneMinus:
      return -1.0 / s.offset(p, 1.0);
    case FormSpec::Kind::Weighted: {
      const Complex z = s.offset(p, 0.0);
      if (z == 0.0) return form.weight->coefficient(1);
      return eval(*form.weight, z) / z;
    }
  }
  return 0.0;
}

namespace {

std::vector<Complex> singular_points(const FormSpec& form) {
  switch (form.kind) {
    case FormSpec::Kind::Log: return {0.0};
    case FormSpec::Kind::OneMinus: return {1.0};
    case FormSpec::Kind::Weighted:
      if (form.weight->rational && form.weight->rational->order_at_1 >= 0) return {};
      return {1.0};
  }
  return {};
}

/// Distance from c to the segment, ignoring the endpoints themselves.
bool passes_through(const PathSegment& s, Complex c) {
  constexpr double tol = 1e-13;
  if (s.kind == PathSegment::Kind::Line) {
    const Complex d = s.to - s.from;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return false;
    const double t = ((c - s.from) * std::conj(d)).real() / len2;
    if (t <= tol || t >= 1.0 - tol) return false;
    return std::abs(s.from + t * d - c) <= tol * scale_of(s.from, s.to);
  }
  if (std::abs(std::abs(c - s.center) - s.radius) > tol * scale_of(s.center, s.radius)) return false;
  const double phi = std::arg(c - s.center);
  const double lo = std::min(s.angle_from, s.angle_to), hi = std::max(s.angle_from, s.angle_to);
  for (int k = -4; k <= 4; ++k) {
    const double a = phi + 2.0 * kPi * k;
    if (a > lo + tol && a < hi - tol) return true;
  }
  return false;
}

/// Exact integral of dz/(z - c) from a to b (sign handled by the caller),
/// i.e. the accumulated log of the ratio.
Complex log_increment(const PathSegment& s, Complex c, Param a, Param b) {
  if (s.kind == PathSegment::Kind::Arc && near(s.center, c))
    return kI * (angle_at(s, b) - angle_at(s, a));
  if (s.kind == PathSegment::Kind::Line) {
    const Complex za = s.offset(a, c);
    if (za == 0.0) fail(ErrorCode::DivergentIntegral, "logarithmic singularity at a path endpoint");
    const double dt = (a.t <= 0.5 && b.t <= 0.5) ? b.t - a.t : a.rest - b.rest;
    return citer::log1p(dt * (s.to - s.from) / za);
  }
  // arc about another centre: principal logs of short pieces
  const double t0 = a.t, t1 = b.t;
  const int pieces = std::max(
      1, static_cast<int>(std::ceil(std::abs((t1 - t0) * (s.angle_to - s.angle_from)) / kMaxArcPiece)));
  Complex total = 0;
  Param prev = a;
  for (int i = 1; i <= pieces; ++i) {
    const Param next = i == pieces ? b : Param::at(t0 + (t1 - t0) * i / pieces);
    const Complex zp = s.offset(prev, c);
    if (zp == 0.0) fail(ErrorCode::DivergentIntegral, "logarithmic singularity at a path endpoint");
    const double dtheta = angle_at(s, next) - angle_at(s, prev);
    const Complex diff = std::polar(s.radius, angle_at(s, prev)) * citer::expm1(Complex(0, dtheta));
    total += citer::log1p(diff / zp);
    prev = next;
  }
  return total;
}

Complex exact_or_quadrature(const PathSegment& s, const FormSpec& form, Param a, Param b,
                            const QuadratureConfig& cfg) {
  switch (form.kind) {
    case FormSpec::Kind::Log:
      return log_increment(s, 0.0, a, b);
    case FormSpec::Kind::OneMinus:
      return -log_increment(s, 1.0, a, b);
    case FormSpec::Kind::Weighted: {
      const double lo = a.t, span = b.t - a.t;
      auto f = [&](double, double left, double right) {
        // local parameter = a.t + left * span, complement from the right end
        const Param p{lo + left * span, b.rest + right * span};
        return form_density(form, s, p) * s.velocity(p) * span;
      };
      return quad_finite(EndpointIntegrand(f), 0.0, 1.0, cfg).value;
    }
  }
  return 0.0;
}

/// Canonical orientation so that reversing a segment negates its integral
/// bit for bit.
bool canonical(const PathSegment& s) {
  if (s.kind == PathSegment::Kind::Arc) return s.angle_from <= s.angle_to;
  if (s.from.real() != s.to.real()) return s.from.real() < s.to.real();
  return s.from.imag() <= s.to.imag();
}

}  // namespace

void check_avoids_singularities(const Path& path, const FormSpec& form) {
  for (const Complex c : singular_points(form)) {
    for (std::size_t i = 0; i < path.segments.size(); ++i) {
      const auto& s = path.segments[i];
      bool hit = passes_through(s, c);
      if (i > 0 && near(s.start(), c)) hit = true;
      if (i + 1 < path.segments.size() && near(s.end(), c)) hit = true;
      if (hit)
        fail(ErrorCode::PathThroughSingularity,
             "path meets the singular point " + std::to_string(c.real()) + " of the form");
    }
  }
}

Complex segment_integral(const PathSegment& s, const FormSpec& form, Param a, Param b,
                         const QuadratureConfig& cfg) {
  return exact_or_quadrature(s, form, a, b, cfg);
}

Complex integrate_form(const Path& path, const FormSpec& form, const QuadratureConfig& cfg) {
  check_avoids_singularities(path, form);
  std::vector<Complex> parts;
  for (const auto& s : path.segments) {
    if (canonical(s))
      parts.push_back(exact_or_quadrature(s, form, Param::start(), Param::end(), cfg));
    else
      parts.push_back(-exact_or_quadrature(s.reversed(), form, Param::start(), Param::end(), cfg));
  }
  // summation order depends only on magnitudes, so a reversed path sums the
  // negated parts in the same order
  std::sort(parts.begin(), parts.end(), [](Complex a, Complex b) {
    const double ar = std::abs(a.real()), br = std::abs(b.real());
    return ar != br ? ar < br : std::abs(a.imag()) < std::abs(b.imag());
  });
  Complex total = 0;
  for (const auto& v : parts) total += v;
  return total;
}

std::function<Complex(double)> cumulative_form_integral(const Path& path, const FormSpec& form,
                                                        const QuadratureConfig& cfg) {
  check_avoids_singularities(path, form);
  // prefix sums over whole segments, accumulated once
  std::vector<Complex> prefix{0.0};
  for (const auto& s : path.segments)
    prefix.push_back(prefix.back() + exact_or_quadrature(s, form, Param::start(), Param::end(), cfg));
  return [path, form, cfg, prefix](double t) -> Complex {
    if (t <= 0.0) return 0.0;
    const double n = static_cast<double>(path.segments.size());
    if (t >= 1.0) return prefix.back();
    const std::size_t i = std::min(path.segments.size() - 1, static_cast<std::size_t>(t * n));
    const double local = t * n - static_cast<double>(i);
    return prefix[i] + exact_or_quadrature(path.segments[i], form, Param::start(), Param::at(local), cfg);
  };
}

Complex suffix_integral(const Path& path, const FormSpec& form, std::size_t segment, Param p,
                        const QuadratureConfig& cfg) {
  if (segment >= path.segments.size()) fail(ErrorCode::InvalidArgument, "segment index out of range");
  Complex total = exact_or_quadrature(path.segments[segment], form, p, Param::end(), cfg);
  for (std::size_t i = segment + 1; i < path.segments.size(); ++i)
    total += exact_or_quadrature(path.segments[i], form, Param::start(), Param::end(), cfg);
  return total;
}

}  // namespace citer
