#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relogic/varieties.hpp"

namespace relogic {

enum class FragmentId {
  FO1, MOD1, FO, FO2, MOD, FOMOD, SIGMA2_AND_PI2, UTL, LTL, STARFREE,
  PIECEWISE_TESTABLE, WEAK_FOMOD2_MSOL, WEAK_FOMOD2_AB, FOMOD2,
};

constexpr FragmentId kAllFragments[] = {
    FragmentId::FO1,  FragmentId::MOD1, FragmentId::FO,
    FragmentId::FO2,  FragmentId::MOD,  FragmentId::FOMOD,
    FragmentId::SIGMA2_AND_PI2, FragmentId::UTL, FragmentId::LTL,
    FragmentId::STARFREE, FragmentId::PIECEWISE_TESTABLE,
    FragmentId::WEAK_FOMOD2_MSOL, FragmentId::WEAK_FOMOD2_AB, FragmentId::FOMOD2,
};

std::string to_string(FragmentId f);

enum class Answer { Yes, No, Unknown };

std::string to_string(Answer a);

struct FragmentVerdict {
  Answer answer = Answer::Unknown;
  std::optional<Witness> witness;  // populated on No when a witness exists
  std::string reason;              // deciding condition, or why it is open
};

struct MonoidSummary {
  std::size_t size = 0;
  std::size_t idempotent_count = 0;
  bool aperiodic = false;
  std::size_t nontrivial_subgroups = 0;
  std::size_t largest_subgroup = 1;
  std::vector<char> neutral_letters;
};

struct ClassificationReport {
  std::string language;  // regex text, or a description for direct inputs
  std::string alphabet;
  MonoidSummary monoid;
  std::vector<std::pair<FragmentId, FragmentVerdict>> fragments;  // declaration order

  const FragmentVerdict& verdict(FragmentId f) const;
};

/// Per-fragment definability from the variety verdicts of the syntactic
/// monoid. The FOMOD2 entry is three-valued: its deciding class has no known
/// membership algorithm, so only a sufficient and a necessary condition are
/// applied.
ClassificationReport classify(const Monoid& monoid, const MonoidLimits& limits = {});
ClassificationReport classify(std::string_view regex_text, const Alphabet& alphabet,
                              const MonoidLimits& limits = {});

std::string report_to_json(const ClassificationReport& report, const Monoid& monoid,
                           int indent = 2);
std::string report_to_text(const ClassificationReport& report, const Monoid& monoid);

}  // namespace relogic
