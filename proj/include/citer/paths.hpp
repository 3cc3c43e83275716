#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "citer/numerics.hpp"
#include "citer/series.hpp"

namespace citer {

/// Local parameter on a segment, carried together with its complement
/// rest = 1 - t so that points near either end are formed without
/// cancellation.
struct Param {
  double t = 0.0;
  double rest = 1.0;

  static Param at(double t) { return {t, 1.0 - t}; }
  static Param start() { return {0.0, 1.0}; }
  static Param end() { return {1.0, 0.0}; }
};

struct PathSegment {
  enum class Kind { Line, Arc };

  Kind kind = Kind::Line;
  Complex from, to;     // Line
  Complex center;       // Arc
  double radius = 0.0;  // Arc
  double angle_from = 0.0, angle_to = 0.0;

  static PathSegment line(Complex a, Complex b);
  static PathSegment arc(Complex center, double radius, double angle_from, double angle_to);

  Complex start() const;
  Complex end() const;
  Complex point(Param p) const;
  /// point(p) - c, accurate when point(p) is close to c and c is an endpoint.
  Complex offset(Param p, Complex c) const;
  Complex velocity(Param p) const;  // d point / dt
  PathSegment reversed() const;
  bool operator==(const PathSegment&) const = default;
};

struct Path {
  std::vector<PathSegment> segments;

  static Path line(Complex a, Complex b) { return {{PathSegment::line(a, b)}}; }
  static Path arc(Complex c, double r, double a0, double a1) {
    return {{PathSegment::arc(c, r, a0, a1)}};
  }
  /// Polygon through the given vertices.
  static Path polyline(const std::vector<Complex>& vertices);

  Complex start() const;
  Complex end() const;
  /// Uniform rescaling: segment i covers [i/n, (i+1)/n].
  Complex point(double t) const;
  bool operator==(const Path&) const = default;
};

Path reverse(const Path& p);
/// Throws DiscontinuousConcat when a does not end where b starts.
Path concat(const Path& a, const Path& b);

/// The 1-forms the engine iterates: dz/z, dz/(1-z) and F(z) dz/z.
struct FormSpec {
  enum class Kind { Log, OneMinus, Weighted };

  Kind kind = Kind::Log;
  std::shared_ptr<const SeriesModel> weight;  // Weighted only

  static FormSpec log() { return {Kind::Log, nullptr}; }
  static FormSpec one_minus() { return {Kind::OneMinus, nullptr}; }
  static FormSpec weighted(SeriesModel f);
};

/// Coefficient of dz in the form at the point p of segment s.
Complex form_density(const FormSpec& form, const PathSegment& s, Param p);

/// Throws PathThroughSingularity when the path meets a singular point of the
/// form anywhere other than its own start or end.
void check_avoids_singularities(const Path& path, const FormSpec& form);

/// Integral of the form over segment s between the local parameters a and b.
Complex segment_integral(const PathSegment& s, const FormSpec& form, Param a, Param b,
                         const QuadratureConfig& cfg = {});

Complex integrate_form(const Path& path, const FormSpec& form, const QuadratureConfig& cfg = {});

/// B(t) = integral from the start of the path to path.point(t); the branch
/// of log is carried by accumulation over segments.
std::function<Complex(double)> cumulative_form_integral(const Path& path, const FormSpec& form,
                                                        const QuadratureConfig& cfg = {});

/// Integral from point p of segment i to the end of the path.
Complex suffix_integral(const Path& path, const FormSpec& form, std::size_t segment, Param p,
                        const QuadratureConfig& cfg = {});

}  // namespace citer
