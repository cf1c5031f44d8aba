#include "relogic/classify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace relogic {

std::string to_string(FragmentId f) {
  switch (f) {
    case FragmentId::FO1: return "FO1";
    case FragmentId::MOD1: return "MOD1";
    case FragmentId::FO: return "FO";
    case FragmentId::FO2: return "FO2";
    case FragmentId::MOD: return "MOD";
    case FragmentId::FOMOD: return "FOMOD";
    case FragmentId::SIGMA2_AND_PI2: return "SIGMA2_AND_PI2";
    case FragmentId::UTL: return "UTL";
    case FragmentId::LTL: return "LTL";
    case FragmentId::STARFREE: return "STARFREE";
    case FragmentId::PIECEWISE_TESTABLE: return "PIECEWISE_TESTABLE";
    case FragmentId::WEAK_FOMOD2_MSOL: return "WEAK_FOMOD2_MSOL";
    case FragmentId::WEAK_FOMOD2_AB: return "WEAK_FOMOD2_AB";
    case FragmentId::FOMOD2: return "FOMOD2";
  }
  return "?";
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "?";
}

const FragmentVerdict& ClassificationReport::verdict(FragmentId f) const {
  for (const auto& [id, v] : fragments)
    if (id == f) return v;
  throw Error("fragment missing from report");
}

namespace {

FragmentVerdict from_variety(const Verdict& v, const std::string& yes_reason,
                             const std::string& no_reason) {
  FragmentVerdict out;
  out.answer = v.member ? Answer::Yes : Answer::No;
  out.witness = v.witness;
  out.reason = v.member ? yes_reason : no_reason;
  return out;
}

}  // namespace

ClassificationReport classify(const Monoid& monoid, const MonoidLimits& limits) {
  ClassificationReport report;

  const Verdict sl = check_variety(monoid, VarietyId::SL, limits);
  const Verdict ab = check_variety(monoid, VarietyId::Ab, limits);
  const Verdict aperiodic = check_variety(monoid, VarietyId::A, limits);
  const Verdict da = check_variety(monoid, VarietyId::DA, limits);
  const Verdict gsol = check_variety(monoid, VarietyId::Gsol, limits);
  const Verdict msol = check_variety(monoid, VarietyId::Msol, limits);
  const Verdict jtriv = check_variety(monoid, VarietyId::J, limits);
  const Verdict do_msol = check_variety(monoid, VarietyId::DOandMsol, limits);
  const Verdict do_ab = check_variety(monoid, VarietyId::DOandAbBar, limits);

  report.monoid.size = monoid.size;
  report.monoid.idempotent_count = monoid.idempotents().size();
  report.monoid.aperiodic = aperiodic.member;
  for (const auto& g : maximal_subgroups(monoid)) {
    if (!g.trivial()) ++report.monoid.nontrivial_subgroups;
    report.monoid.largest_subgroup = std::max(report.monoid.largest_subgroup, g.carrier.size());
  }
  report.monoid.neutral_letters = neutral_letters(monoid);

  auto add = [&](FragmentId f, FragmentVerdict v) {
    report.fragments.emplace_back(f, std::move(v));
  };

  add(FragmentId::FO1,
      from_variety(sl, "syntactic monoid is an idempotent commutative monoid (SL)",
                   "syntactic monoid is not in SL"));
  add(FragmentId::MOD1, from_variety(ab, "syntactic monoid is an abelian group",
                                     "syntactic monoid is not an abelian group"));
  add(FragmentId::FO, from_variety(aperiodic, "syntactic monoid is aperiodic (A)",
                                   "syntactic monoid is not aperiodic"));
  add(FragmentId::FO2, from_variety(da, "syntactic monoid lies in DA",
                                    "syntactic monoid is not in DA"));
  add(FragmentId::MOD, from_variety(gsol, "syntactic monoid is a solvable group",
                                    "syntactic monoid is not a solvable group"));
  add(FragmentId::FOMOD, from_variety(msol, "all subgroups of the syntactic monoid are solvable",
                                      "syntactic monoid has a non-solvable subgroup"));
  add(FragmentId::SIGMA2_AND_PI2,
      from_variety(da, "syntactic monoid lies in DA", "syntactic monoid is not in DA"));
  add(FragmentId::UTL,
      from_variety(da, "syntactic monoid lies in DA", "syntactic monoid is not in DA"));
  add(FragmentId::LTL, from_variety(aperiodic, "syntactic monoid is aperiodic (A)",
                                    "syntactic monoid is not aperiodic"));
  add(FragmentId::STARFREE, from_variety(aperiodic, "syntactic monoid is aperiodic (A)",
                                         "syntactic monoid is not aperiodic"));
  add(FragmentId::PIECEWISE_TESTABLE,
      from_variety(jtriv, "syntactic monoid is J-trivial",
                   "syntactic monoid is not J-trivial"));
  add(FragmentId::WEAK_FOMOD2_MSOL,
      from_variety(do_msol, "syntactic monoid lies in DO and has solvable subgroups",
                   "syntactic monoid is not in DO with solvable subgroups"));
  add(FragmentId::WEAK_FOMOD2_AB,
      from_variety(do_ab, "syntactic monoid lies in DO and has abelian subgroups",
                   "syntactic monoid is not in DO with abelian subgroups"));

  // FOMOD2 <-> DA box G_sol, which has no known membership algorithm.
  // Sufficient: DA, or DO with solvable subgroups. Necessary: all subgroups
  // solvable (the class is contained in M_sol).
  FragmentVerdict fomod2;
  if (da.member) {
    fomod2.answer = Answer::Yes;
    fomod2.reason = "syntactic monoid lies in DA, a subclass of the deciding class";
  } else if (do_msol.member) {
    fomod2.answer = Answer::Yes;
    fomod2.reason =
        "syntactic monoid lies in DO with solvable subgroups, a subclass of the deciding class";
  } else if (!msol.member) {
    fomod2.answer = Answer::No;
    fomod2.witness = msol.witness;
    fomod2.reason = "syntactic monoid has a non-solvable subgroup, which the deciding class forbids";
  } else {
    fomod2.answer = Answer::Unknown;
    fomod2.reason =
        "membership in DA box G_sol is an open problem; no implemented procedure decides it";
  }
  add(FragmentId::FOMOD2, std::move(fomod2));

  return report;
}

ClassificationReport classify(std::string_view regex_text, const Alphabet& alphabet,
                              const MonoidLimits& limits) {
  Monoid m = syntactic_monoid(regex_text, alphabet, limits);
  ClassificationReport report = classify(m, limits);
  report.language = std::string(regex_text);
  report.alphabet = alphabet.letters();
  return report;
}

namespace {

nlohmann::ordered_json witness_json(const IdentityWitness& iw, const Monoid& monoid) {
  nlohmann::ordered_json out;
  out["identity"] = to_string(iw.identity);
  nlohmann::ordered_json assignment;
  for (const auto& [var, elem] : iw.assignment) {
    assignment[var] = {{"element", elem}, {"word", monoid.element_name(elem)}};
  }
  out["assignment"] = assignment;
  return out;
}

}  // namespace

std::string report_to_json(const ClassificationReport& report, const Monoid& monoid,
                           int indent) {
  nlohmann::ordered_json j;
  j["language"] = report.language;
  j["alphabet"] = report.alphabet;
  j["monoid"] = {
      {"size", report.monoid.size},
      {"aperiodic", report.monoid.aperiodic},
      {"neutral_letters", [&] {
         std::vector<std::string> out;
         for (char c : report.monoid.neutral_letters) out.emplace_back(1, c);
         return out;
       }()},
  };
  nlohmann::ordered_json fragments;
  for (const auto& [id, v] : report.fragments) {
    nlohmann::ordered_json entry;
    entry["verdict"] = to_string(v.answer);
    std::string reason = v.reason;
    if (v.witness) {
      // the witness field carries identity counterexamples; structural
      // witnesses (subgroups, J-pairs) are spelled out in the reason
      if (const auto* iw = std::get_if<IdentityWitness>(&*v.witness))
        entry["witness"] = witness_json(*iw, monoid);
      else
        reason += " (" + describe(*v.witness, monoid) + ")";
    }
    entry["reason"] = reason;
    fragments[to_string(id)] = entry;
  }
  j["fragments"] = fragments;
  return j.dump(indent);
}

std::string report_to_text(const ClassificationReport& report, const Monoid& monoid) {
  std::ostringstream out;
  out << "language: " << report.language << "\n";
  out << "alphabet: " << report.alphabet << "\n";
  out << "monoid: size " << report.monoid.size << ", " << report.monoid.idempotent_count
      << " idempotents, " << (report.monoid.aperiodic ? "aperiodic" : "not aperiodic")
      << ", largest subgroup " << report.monoid.largest_subgroup;
  out << ", neutral letters {";
  for (std::size_t i = 0; i < report.monoid.neutral_letters.size(); ++i)
    out << (i ? ", " : "") << report.monoid.neutral_letters[i];
  out << "}\n";
  for (const auto& [id, v] : report.fragments) {
    out << "  " << to_string(id) << ": " << to_string(v.answer);
    if (v.witness) out << "  [" << describe(*v.witness, monoid) << "]";
    out << "  (" << v.reason << ")\n";
  }
  return out.str();
}

}  // namespace relogic
