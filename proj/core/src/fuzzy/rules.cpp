#include "fuzzysched/fuzzy/rules.hpp"

namespace fuzzysched::fuzzy {

std::string_view to_string(InputLabel label) noexcept {
  switch (label) {
    case InputLabel::kNB: return "NB";
    case InputLabel::kNS: return "NS";
    case InputLabel::kZE: return "ZE";
    case InputLabel::kPS: return "PS";
    case InputLabel::kPB: return "PB";
  }
  return "?";
}

std::string_view to_string(OutputLabel label) noexcept {
  switch (label) {
    case OutputLabel::kNB: return "NB";
    case OutputLabel::kNM: return "NM";
    case OutputLabel::kNS: return "NS";
    case OutputLabel::kZE: return "ZE";
    case OutputLabel::kPS: return "PS";
    case OutputLabel::kPM: return "PM";
    case OutputLabel::kPB: return "PB";
  }
  return "?";
}

RuleBase utilization_rules() {
  using O = OutputLabel;
  // Rows: E = NB..PB. Columns: EC = NB..PB.
  return RuleBase(RuleBase::Matrix{{
      {O::kPB, O::kPB, O::kPB, O::kPB, O::kPM},
      {O::kPB, O::kPB, O::kPM, O::kPS, O::kZE},
      {O::kPM, O::kPS, O::kZE, O::kZE, O::kNS},
      {O::kPS, O::kZE, O::kZE, O::kNS, O::kNM},
      {O::kZE, O::kNS, O::kNM, O::kNB, O::kNB},
  }});
}

}  // namespace fuzzysched::fuzzy
