#pragma once

#include <array>
#include <string>
#include <string_view>

namespace termweight {

enum class LocalSchemeId { Presence, RawFrequency, Augmented, LogFrequency };

inline constexpr std::array<LocalSchemeId, 4> kAllLocalSchemes = {
    LocalSchemeId::Presence, LocalSchemeId::RawFrequency, LocalSchemeId::Augmented,
    LocalSchemeId::LogFrequency};

/// "tp", "tf", "atf", "logtf".
std::string_view to_string(LocalSchemeId id);
LocalSchemeId parse_local_scheme(std::string_view name);

struct LocalScheme {
  LocalSchemeId id = LocalSchemeId::Presence;
  double k = 0.5;  // augmentation constant, atf only; must lie in [0,1]

  void validate() const;
};

/// Within-document weight of a term occurring `tf` times in a document whose
/// most frequent term occurs `max_tf` times. Throws ContractViolation if
/// max_tf == 0 or tf > max_tf.
///
/// atf is only meaningful for present terms; the vectorizer never asks for
/// an absent one.
double local_weight(const LocalScheme& scheme, long tf, long max_tf);

}  // namespace termweight
