#pragma once

#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace mapforge {

/// WGS84 semi-major axis, meters.
inline constexpr double kEarthRadiusMeters = 6378137.0;
inline constexpr double kDegToRad = std::numbers::pi / 180.0;
inline constexpr double kRadToDeg = 180.0 / std::numbers::pi;

/// A global WGS84 position, latitude/longitude in decimal degrees,
/// elevation in meters above the ellipsoid.
struct GeoPoint {
  double latitude = 0.0;
  double longitude = 0.0;
  double elevation = 0.0;

  bool operator==(const GeoPoint&) const = default;
};

/// A position in the local metric frame anchored by a Datum.
/// East-north-up: x east, y north, z up.
struct LocalPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const LocalPoint&) const = default;
};

struct MapSize {
  double width = 0.0;   // meters
  double height = 0.0;  // meters

  bool operator==(const MapSize&) const = default;
};

/// Georeference anchoring the local metric frame to WGS84, with an
/// optional GNSS fence polygon bounding the region of interest.
///
/// `extras` carries pass-through fields (mapviz origins, navsat points,
/// gmapping sizes, ...) keyed by their document key; values hold the
/// field's YAML text so re-emission preserves them unchanged.
struct Datum {
  GeoPoint origin;
  std::vector<GeoPoint> fence;  // empty, or >= 3 vertices, implicitly closed
  std::optional<MapSize> map_size;
  std::map<std::string, std::string> extras;

  bool has_fence() const { return !fence.empty(); }
  bool operator==(const Datum&) const = default;
};

bool is_valid(const GeoPoint& p);

/// Throws Error{InvalidCoordinate} when out of range or non-finite.
void validate(const GeoPoint& p);

/// Throws Error{InvalidCoordinate} for a bad origin or fence vertex,
/// Error{InvalidArgument} for fence shape violations (< 3 vertices,
/// repeated consecutive vertices including the implicit closing pair).
void validate(const Datum& d);

/// Equirectangular local-tangent-plane projection about datum.origin:
///   x = wrap(lon - lon0) * pi/180 * R * cos(lat0)
///   y = (lat - lat0) * pi/180 * R
///   z = elevation - origin elevation
/// Longitude differences take the short way around the antimeridian.
LocalPoint geo_to_local(const Datum& datum, const GeoPoint& p);

/// Algebraic inverse of geo_to_local under the same constants. Throws
/// Error{ProjectionDomain} when the resulting latitude leaves [-90, 90].
GeoPoint local_to_geo(const Datum& datum, const LocalPoint& p);

/// Normalizes a degree value into [-180, 180).
double wrap_degrees(double degrees);

}  // namespace mapforge
