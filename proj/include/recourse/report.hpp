#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recourse/result.hpp"

namespace recourse {

enum class Subgroup {
  Women,
  Seniors,
  LgbtqPlus,
  Newcomers,
  AfricanDiaspora,
  NeighborhoodOrgs,
};

inline constexpr std::array<Subgroup, 6> kSubgroups = {
    Subgroup::Women,          Subgroup::Seniors,         Subgroup::LgbtqPlus,
    Subgroup::Newcomers,      Subgroup::AfricanDiaspora, Subgroup::NeighborhoodOrgs,
};

enum class HarmType {
  Stereotyping,
  Omission,
  Erasure,
  ToxicMotif,
  Misrepresentation,
};

inline constexpr std::array<HarmType, 5> kHarmTypes = {
    HarmType::Stereotyping, HarmType::Omission, HarmType::Erasure,
    HarmType::ToxicMotif,   HarmType::Misrepresentation,
};

// Stable serialization tokens.
std::string_view subgroup_token(Subgroup g);
std::string_view harm_type_token(HarmType h);
// Human-facing table labels ("African diaspora", "Neighborhood orgs", ...).
std::string_view subgroup_label(Subgroup g);

std::optional<Subgroup> parse_subgroup(std::string_view token);
std::optional<HarmType> parse_harm_type(std::string_view token);

struct EvidenceItem {
  std::string kind;    // e.g. image_set, prompt_log, testimony
  std::string detail;  // free text or URI; no image payloads are stored
  bool operator==(const EvidenceItem&) const = default;
};

// One community visual bug report. severity, representativeness and
// evidence_quality live in [0,1]; reporters >= 1; prompts non-empty.
struct Report {
  std::string id;
  Subgroup subgroup = Subgroup::Women;
  std::string context;  // opaque borough/typology/program key
  std::vector<std::string> prompts;
  std::vector<EvidenceItem> evidence;
  HarmType harm_type = HarmType::Stereotyping;
  double severity = 0.0;
  int reporters = 1;
  double representativeness = 0.0;
  double evidence_quality = 0.0;

  bool operator==(const Report&) const = default;
};

// Candidate fields as parsed from external input, before any invariant holds.
struct RawReport {
  std::string id;
  std::string subgroup;
  std::string context;
  std::vector<std::string> prompts;
  std::vector<EvidenceItem> evidence;
  std::string harm_type;
  double severity = 0.0;
  long long reporters = 0;
  double representativeness = 0.0;
  double evidence_quality = 0.0;
};

struct FieldError {
  enum class Code { Range, Count, Enum, EmptyPrompts };
  Code code = Code::Range;
  std::string field;
  std::string message;
};

using ValidationErrors = std::vector<FieldError>;

// All field errors are collected; a Report is only constructed when every
// invariant holds.
Result<Report, ValidationErrors> validate_report(const RawReport& raw);

// Re-validation of an in-memory Report; returns the same value unchanged
// when it is already valid.
Result<Report, ValidationErrors> validate_report(const Report& report);

}  // namespace recourse
