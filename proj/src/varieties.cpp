#include "relogic/varieties.hpp"

#include <algorithm>

namespace relogic {

std::string to_string(VarietyId v) {
  switch (v) {
    case VarietyId::SL: return "SL";
    case VarietyId::Ab: return "Ab";
    case VarietyId::G: return "G";
    case VarietyId::Gsol: return "G_sol";
    case VarietyId::A: return "A";
    case VarietyId::DA: return "DA";
    case VarietyId::DO: return "DO";
    case VarietyId::J: return "J";
    case VarietyId::Msol: return "M_sol";
    case VarietyId::DOandMsol: return "DO_and_Msol";
    case VarietyId::DOandAbBar: return "DO_and_AbBar";
  }
  return "?";
}

std::optional<VarietyId> variety_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (VarietyId v : kAllVarieties) {
    std::string s = to_string(v);
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == lower) return v;
  }
  return std::nullopt;
}

namespace {

OmegaTerm v(const char* name) { return OmegaTerm::variable(name); }

}  // namespace

MonoidIdentity identity_idempotent() {
  return {OmegaTerm::concat({v("x"), v("x")}), v("x")};
}
MonoidIdentity identity_commutative() {
  return {OmegaTerm::concat({v("x"), v("y")}), OmegaTerm::concat({v("y"), v("x")})};
}
MonoidIdentity identity_aperiodic() {
  return {OmegaTerm::concat({OmegaTerm::omega(v("x")), v("x")}), OmegaTerm::omega(v("x"))};
}
MonoidIdentity identity_group_left() {
  return {OmegaTerm::concat({OmegaTerm::omega(v("x")), v("y")}), v("y")};
}
MonoidIdentity identity_group_right() {
  return {OmegaTerm::concat({v("y"), OmegaTerm::omega(v("x"))}), v("y")};
}
MonoidIdentity identity_da() {
  OmegaTerm xyw = OmegaTerm::omega(OmegaTerm::concat({v("x"), v("y")}));
  return {OmegaTerm::concat({xyw, v("y"), xyw}), xyw};
}
MonoidIdentity identity_do() {
  OmegaTerm xyw = OmegaTerm::omega(OmegaTerm::concat({v("x"), v("y")}));
  OmegaTerm yxw = OmegaTerm::omega(OmegaTerm::concat({v("y"), v("x")}));
  return {OmegaTerm::concat({xyw, yxw, xyw}), xyw};
}

bool is_group(const Monoid& monoid) {
  auto idems = monoid.idempotents();
  return idems.size() == 1 && idems[0] == monoid.identity;
}

std::string describe(const Witness& w, const Monoid& monoid) {
  if (const auto* iw = std::get_if<IdentityWitness>(&w)) {
    std::string out = "identity " + to_string(iw->identity) + " fails with";
    bool first = true;
    for (const auto& [var, elem] : iw->assignment) {
      out += first ? " " : ", ";
      out += var + "=" + monoid.element_name(elem);
      first = false;
    }
    return out;
  }
  if (const auto* sw = std::get_if<SubgroupWitness>(&w)) {
    std::string out = "subgroup {";
    for (std::size_t i = 0; i < sw->subgroup.carrier.size(); ++i) {
      if (i) out += ", ";
      out += monoid.element_name(sw->subgroup.carrier[i]);
    }
    out += "} is " + sw->property;
    return out;
  }
  const auto& jp = std::get<JPairWitness>(w);
  return "elements " + monoid.element_name(jp.a) + " and " + monoid.element_name(jp.b) +
         " are distinct but J-equivalent";
}

namespace {

std::optional<Witness> identity_failure(const MonoidIdentity& id, const Monoid& monoid,
                                        const MonoidLimits& limits) {
  IdentityCheck c = check_identity(id, monoid, limits);
  if (c.holds) return std::nullopt;
  return Witness{IdentityWitness{id, c.counterexample}};
}

std::optional<Witness> first_failure(std::initializer_list<MonoidIdentity> ids,
                                     const Monoid& monoid, const MonoidLimits& limits) {
  for (const auto& id : ids)
    if (auto w = identity_failure(id, monoid, limits)) return w;
  return std::nullopt;
}

Verdict from_failure(std::optional<Witness> w) {
  if (w) return {false, std::move(w)};
  return {true, std::nullopt};
}

std::optional<Witness> subgroup_failure(const Monoid& monoid,
                                        bool (*good)(const Subgroup&, const Monoid&),
                                        const char* property) {
  for (const auto& g : maximal_subgroups(monoid))
    if (!good(g, monoid)) return Witness{SubgroupWitness{g, property}};
  return std::nullopt;
}

std::optional<Witness> group_failure(const Monoid& monoid, const MonoidLimits& limits) {
  auto w = first_failure({identity_group_left(), identity_group_right()}, monoid, limits);
  // The structural test (unique idempotent = identity) must agree with the
  // identity-based one.
  if (is_group(monoid) != !w.has_value())
    throw Error("group tests disagree; monoid table is inconsistent");
  return w;
}

}  // namespace

Verdict check_variety(const Monoid& monoid, VarietyId variety, const MonoidLimits& limits) {
  switch (variety) {
    case VarietyId::SL:
      return from_failure(
          first_failure({identity_idempotent(), identity_commutative()}, monoid, limits));
    case VarietyId::A:
      return from_failure(identity_failure(identity_aperiodic(), monoid, limits));
    case VarietyId::G:
      return from_failure(group_failure(monoid, limits));
    case VarietyId::Ab: {
      if (auto w = group_failure(monoid, limits)) return {false, std::move(w)};
      return from_failure(identity_failure(identity_commutative(), monoid, limits));
    }
    case VarietyId::Gsol: {
      if (auto w = group_failure(monoid, limits)) return {false, std::move(w)};
      return from_failure(subgroup_failure(monoid, is_solvable, "not solvable"));
    }
    case VarietyId::Msol:
      return from_failure(subgroup_failure(monoid, is_solvable, "not solvable"));
    case VarietyId::DA:
      return from_failure(identity_failure(identity_da(), monoid, limits));
    case VarietyId::DO:
      return from_failure(identity_failure(identity_do(), monoid, limits));
    case VarietyId::J: {
      GreenData g = green_relations(monoid);
      if (g.j_trivial(monoid.size)) return {true, std::nullopt};
      // First pair of distinct J-equivalent elements.
      for (Element a = 0; a < monoid.size; ++a)
        for (Element b = a + 1; b < monoid.size; ++b)
          if (g.j_class[a] == g.j_class[b]) return {false, Witness{JPairWitness{a, b}}};
      throw Error("J-partition inconsistent");
    }
    case VarietyId::DOandMsol: {
      if (auto w = identity_failure(identity_do(), monoid, limits)) return {false, std::move(w)};
      return from_failure(subgroup_failure(monoid, is_solvable, "not solvable"));
    }
    case VarietyId::DOandAbBar: {
      if (auto w = identity_failure(identity_do(), monoid, limits)) return {false, std::move(w)};
      return from_failure(subgroup_failure(monoid, is_abelian, "not abelian"));
    }
  }
  throw Error("unknown variety");
}

}  // namespace relogic
