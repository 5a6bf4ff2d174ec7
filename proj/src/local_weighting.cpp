#include "termweight/local_weighting.hpp"

#include <cmath>

#include "termweight/error.hpp"

namespace termweight {

std::string_view to_string(LocalSchemeId id) {
  switch (id) {
    case LocalSchemeId::Presence: return "tp";
    case LocalSchemeId::RawFrequency: return "tf";
    case LocalSchemeId::Augmented: return "atf";
    case LocalSchemeId::LogFrequency: return "logtf";
  }
  return "?";
}

LocalSchemeId parse_local_scheme(std::string_view name) {
  for (auto id : kAllLocalSchemes) {
    if (to_string(id) == name) return id;
  }
  throw ConfigError("unknown local scheme '" + std::string(name) +
                    "' (expected one of: tp, tf, atf, logtf)");
}

void LocalScheme::validate() const {
  if (!(k >= 0.0 && k <= 1.0)) throw ConfigError("atf constant k must lie in [0,1]");
}

double local_weight(const LocalScheme& scheme, long tf, long max_tf) {
  if (max_tf <= 0) throw ContractViolation("local_weight: max_tf must be positive");
  if (tf < 0 || tf > max_tf) throw ContractViolation("local_weight: tf outside [0, max_tf]");
  switch (scheme.id) {
    case LocalSchemeId::Presence:
      return tf > 0 ? 1.0 : 0.0;
    case LocalSchemeId::RawFrequency:
      return static_cast<double>(tf);
    case LocalSchemeId::Augmented:
      return scheme.k + (1.0 - scheme.k) * static_cast<double>(tf) / static_cast<double>(max_tf);
    case LocalSchemeId::LogFrequency:
      return std::log(static_cast<double>(tf) + 1.0);
  }
  return 0.0;
}

}  // namespace termweight
