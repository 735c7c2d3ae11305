#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace mapforge {

/// The map formats this toolkit understands. Names are stable and
/// lowercase; they appear in CLI flags, plans, and diagnostics.
enum class FormatId {
  datum,
  occgrid,
  topomap,
  navgraph,
  osm,
  openrmf,
  kml,
  tilegrid,
};

inline constexpr int kFormatCount = 8;

inline constexpr std::array<FormatId, kFormatCount> kAllFormats = {
    FormatId::datum,   FormatId::occgrid, FormatId::topomap, FormatId::navgraph,
    FormatId::osm,     FormatId::openrmf, FormatId::kml,     FormatId::tilegrid,
};

std::string_view to_string(FormatId id);
std::optional<FormatId> format_from_string(std::string_view name);

/// Deterministic structural classification of a document. Probes the
/// content (XML root element, YAML key shapes); the filename hint is
/// consulted only to break a tie between multiple matching probes.
/// Throws Error{UnknownFormat} when no probe matches — never guesses.
FormatId detect_format(std::string_view bytes, std::string_view filename_hint = {});

}  // namespace mapforge
