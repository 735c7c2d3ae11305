#include "mapforge/geo.hpp"

#include <cmath>
#include <sstream>

#include "mapforge/error.hpp"

namespace mapforge {

bool is_valid(const GeoPoint& p) {
  return std::isfinite(p.latitude) && std::isfinite(p.longitude) &&
         std::isfinite(p.elevation) && p.latitude >= -90.0 && p.latitude <= 90.0 &&
         p.longitude >= -180.0 && p.longitude <= 180.0;
}

void validate(const GeoPoint& p) {
  if (!is_valid(p)) {
    std::ostringstream msg;
    msg << "latitude " << p.latitude << ", longitude " << p.longitude
        << " outside [-90,90] x [-180,180]";
    throw Error(ErrorCode::InvalidCoordinate, msg.str());
  }
}

void validate(const Datum& d) {
  validate(d.origin);
  if (d.fence.empty()) return;
  if (d.fence.size() < 3) {
    throw Error(ErrorCode::InvalidArgument, "fence needs at least 3 vertices");
  }
  for (const GeoPoint& v : d.fence) validate(v);
  for (std::size_t i = 0; i < d.fence.size(); ++i) {
    const GeoPoint& a = d.fence[i];
    const GeoPoint& b = d.fence[(i + 1) % d.fence.size()];
    if (a.latitude == b.latitude && a.longitude == b.longitude) {
      throw Error(ErrorCode::InvalidArgument,
                  "fence repeats consecutive vertex " + std::to_string(i));
    }
  }
}

double wrap_degrees(double degrees) {
  double wrapped = std::fmod(degrees + 180.0, 360.0);
  if (wrapped < 0.0) wrapped += 360.0;
  return wrapped - 180.0;
}

LocalPoint geo_to_local(const Datum& datum, const GeoPoint& p) {
  validate(datum);
  validate(p);
  const double lat0 = datum.origin.latitude * kDegToRad;
  const double dlon = wrap_degrees(p.longitude - datum.origin.longitude);
  const double dlat = p.latitude - datum.origin.latitude;
  return LocalPoint{dlon * kDegToRad * kEarthRadiusMeters * std::cos(lat0),
                    dlat * kDegToRad * kEarthRadiusMeters,
                    p.elevation - datum.origin.elevation};
}

GeoPoint local_to_geo(const Datum& datum, const LocalPoint& p) {
  validate(datum);
  if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
    throw Error(ErrorCode::InvalidArgument, "local point must be finite");
  }
  const double lat0 = datum.origin.latitude * kDegToRad;
  const double latitude = datum.origin.latitude + (p.y / kEarthRadiusMeters) * kRadToDeg;
  if (latitude < -90.0 || latitude > 90.0) {
    throw Error(ErrorCode::ProjectionDomain,
                "latitude " + std::to_string(latitude) + " outside [-90, 90]");
  }
  const double scale = kEarthRadiusMeters * std::cos(lat0);
  if (scale == 0.0 && p.x != 0.0) {
    throw Error(ErrorCode::ProjectionDomain, "east offset undefined at a polar datum");
  }
  const double dlon = (p.x == 0.0) ? 0.0 : (p.x / scale) * kRadToDeg;
  GeoPoint out;
  out.latitude = latitude;
  out.longitude = wrap_degrees(datum.origin.longitude + dlon);
  // wrap_degrees maps +180 to -180; keep an exact echo of an in-range input.
  if (out.longitude == -180.0 && datum.origin.longitude + dlon == 180.0) {
    out.longitude = 180.0;
  }
  out.elevation = datum.origin.elevation + p.z;
  return out;
}

}  // namespace mapforge
