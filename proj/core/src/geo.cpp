#include "roadrank/geo.hpp"

#include <algorithm>

namespace roadrank::geo {

double great_circle_distance(const GeoPoint& a, const GeoPoint& b) noexcept {
  const double phi1 = deg_to_rad(a.lat_deg);
  const double phi2 = deg_to_rad(b.lat_deg);
  // hav is even, so |delta| keeps the result identical when a and b swap.
  const double dphi = std::abs(phi2 - phi1);
  const double dlambda = std::abs(deg_to_rad(b.lon_deg) - deg_to_rad(a.lon_deg));
  // Order the cosine product so the operands are commutative bit-for-bit.
  const double cos_lo = std::cos(std::min(phi1, phi2));
  const double cos_hi = std::cos(std::max(phi1, phi2));
  double h = haversine(dphi) + cos_lo * cos_hi * haversine(dlambda);
  h = std::clamp(h, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

}  // namespace roadrank::geo
