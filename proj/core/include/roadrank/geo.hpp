#pragma once

#include <cmath>
#include <numbers>

namespace roadrank::geo {

/// Mean Earth radius (IUGG), in kilometers.
inline constexpr double kEarthRadiusKm = 6371.0088;

struct GeoPoint {
  double lat_deg = 0.0;
  double lon_deg = 0.0;

  bool valid() const noexcept {
    return lat_deg >= -90.0 && lat_deg <= 90.0 && lon_deg >= -180.0 && lon_deg <= 180.0;
  }
  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

constexpr double deg_to_rad(double angle_deg) noexcept {
  return angle_deg * std::numbers::pi / 180.0;
}

/// hav(theta) = sin^2(theta / 2).
inline double haversine(double theta) noexcept {
  const double s = std::sin(theta / 2.0);
  return s * s;
}

/// Great-circle distance in kilometers between two valid points.
///
/// Uses the haversine form, which stays accurate for very short road links
/// where the law of cosines loses all significant digits. The result is
/// bitwise symmetric in its arguments.
double great_circle_distance(const GeoPoint& a, const GeoPoint& b) noexcept;

}  // namespace roadrank::geo
