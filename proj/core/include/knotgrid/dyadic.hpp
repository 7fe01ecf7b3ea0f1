#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace knotgrid {

/// Exact dyadic rational m / 2^s with arbitrary-precision mantissa.
///
/// All ball centers, radii and clearance gaps in the grid construction are
/// dyadic, so comparisons between squared distances and squared radius sums
/// can be decided exactly, without tolerances. Supported operations are
/// addition, subtraction, multiplication and ordering; division never occurs
/// in the predicates.
class Dyadic {
 public:
  using Int = boost::multiprecision::cpp_int;

  Dyadic() : num_(0), scale_(0) {}
  Dyadic(long long value) : num_(value), scale_(0) {}
  Dyadic(Int mantissa, std::int32_t scale);

  /// 2^exponent for any (possibly negative) exponent.
  static Dyadic pow2(std::int64_t exponent);

  /// Parses an exact terminating decimal like "-0.0625". Throws
  /// std::invalid_argument if the string is malformed or the value is not
  /// a dyadic rational.
  static Dyadic parse_decimal(const std::string& text);

  /// Exact terminating decimal representation (inverse of parse_decimal).
  std::string to_decimal() const;

  /// Nearest double; underflows gracefully to 0 for very deep scales.
  double to_double() const;

  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  const Int& mantissa() const { return num_; }
  std::int32_t scale() const { return scale_; }

  Dyadic operator-() const;
  Dyadic operator+(const Dyadic& o) const;
  Dyadic operator-(const Dyadic& o) const;
  Dyadic operator*(const Dyadic& o) const;

  bool operator==(const Dyadic& o) const { return compare(o) == 0; }
  bool operator!=(const Dyadic& o) const { return compare(o) != 0; }
  bool operator<(const Dyadic& o) const { return compare(o) < 0; }
  bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
  bool operator>(const Dyadic& o) const { return compare(o) > 0; }
  bool operator>=(const Dyadic& o) const { return compare(o) >= 0; }

  int compare(const Dyadic& o) const;

 private:
  void normalize();

  Int num_;             // value = num_ / 2^scale_
  std::int32_t scale_;  // >= 0
};

inline Dyadic sqr(const Dyadic& d) { return d * d; }

/// Point in R^3 with exact dyadic coordinates.
struct DyadicVec3 {
  Dyadic x, y, z;

  bool operator==(const DyadicVec3& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
};

Dyadic distance_squared(const DyadicVec3& a, const DyadicVec3& b);

/// Squared distance from point p to the vertical segment
/// {(sx, sy, t) : z0 <= t <= z1}, all coordinates exact.
Dyadic distance_squared_to_vertical_segment(const DyadicVec3& p,
                                            const Dyadic& sx, const Dyadic& sy,
                                            const Dyadic& z0, const Dyadic& z1);

}  // namespace knotgrid
