#include "recourse/report.hpp"

#include <cmath>

namespace recourse {

std::string_view subgroup_token(Subgroup g) {
  switch (g) {
    case Subgroup::Women: return "Women";
    case Subgroup::Seniors: return "Seniors";
    case Subgroup::LgbtqPlus: return "LGBTQ+";
    case Subgroup::Newcomers: return "Newcomers";
    case Subgroup::AfricanDiaspora: return "AfricanDiaspora";
    case Subgroup::NeighborhoodOrgs: return "NeighborhoodOrgs";
  }
  return "?";
}

std::string_view subgroup_label(Subgroup g) {
  switch (g) {
    case Subgroup::Women: return "Women";
    case Subgroup::Seniors: return "Seniors";
    case Subgroup::LgbtqPlus: return "LGBTQ+";
    case Subgroup::Newcomers: return "Newcomers";
    case Subgroup::AfricanDiaspora: return "African diaspora";
    case Subgroup::NeighborhoodOrgs: return "Neighborhood orgs";
  }
  return "?";
}

std::string_view harm_type_token(HarmType h) {
  switch (h) {
    case HarmType::Stereotyping: return "Stereotyping";
    case HarmType::Omission: return "Omission";
    case HarmType::Erasure: return "Erasure";
    case HarmType::ToxicMotif: return "ToxicMotif";
    case HarmType::Misrepresentation: return "Misrepresentation";
  }
  return "?";
}

std::optional<Subgroup> parse_subgroup(std::string_view token) {
  for (const Subgroup g : kSubgroups) {
    if (subgroup_token(g) == token) return g;
  }
  return std::nullopt;
}

std::optional<HarmType> parse_harm_type(std::string_view token) {
  for (const HarmType h : kHarmTypes) {
    if (harm_type_token(h) == token) return h;
  }
  return std::nullopt;
}

namespace {

bool in_unit_interval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

void check_common(const Report& r, ValidationErrors& errors) {
  using Code = FieldError::Code;
  if (!in_unit_interval(r.severity)) {
    errors.push_back({Code::Range, "severity", "severity must be in [0,1]"});
  }
  if (!in_unit_interval(r.representativeness)) {
    errors.push_back({Code::Range, "representativeness", "representativeness must be in [0,1]"});
  }
  if (!in_unit_interval(r.evidence_quality)) {
    errors.push_back({Code::Range, "evidence_quality", "evidence_quality must be in [0,1]"});
  }
  if (r.reporters < 1) {
    errors.push_back({Code::Count, "reporters", "reporters must be >= 1"});
  }
  if (r.prompts.empty()) {
    errors.push_back({Code::EmptyPrompts, "prompts", "at least one prompt is required"});
  }
}

}  // namespace

Result<Report, ValidationErrors> validate_report(const RawReport& raw) {
  using Code = FieldError::Code;
  ValidationErrors errors;

  Report report;
  report.id = raw.id;
  report.context = raw.context;
  report.prompts = raw.prompts;
  report.evidence = raw.evidence;
  report.severity = raw.severity;
  report.representativeness = raw.representativeness;
  report.evidence_quality = raw.evidence_quality;

  if (const auto g = parse_subgroup(raw.subgroup)) {
    report.subgroup = *g;
  } else {
    errors.push_back({Code::Enum, "subgroup", "unknown subgroup: " + raw.subgroup});
  }
  if (const auto h = parse_harm_type(raw.harm_type)) {
    report.harm_type = *h;
  } else {
    errors.push_back({Code::Enum, "harm_type", "unknown harm_type: " + raw.harm_type});
  }
  if (raw.reporters < 1 || raw.reporters > 1000000000LL) {
    errors.push_back({Code::Count, "reporters", "reporters must be in [1, 1e9]"});
    report.reporters = 1;
  } else {
    report.reporters = static_cast<int>(raw.reporters);
  }

  ValidationErrors field_errors;
  check_common(report, field_errors);
  for (auto& e : field_errors) {
    if (e.field == "reporters") continue;  // already reported above
    errors.push_back(std::move(e));
  }

  if (!errors.empty()) return errors;
  return report;
}

Result<Report, ValidationErrors> validate_report(const Report& report) {
  ValidationErrors errors;
  check_common(report, errors);
  if (!errors.empty()) return errors;
  return report;
}

}  // namespace recourse
