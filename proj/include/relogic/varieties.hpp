#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relogic/monoid.hpp"

namespace relogic {

enum class VarietyId {
  SL,          // idempotent and commutative
  Ab,          // abelian groups
  G,           // groups
  Gsol,        // solvable groups
  A,           // aperiodic: x^w x = x^w
  DA,          // (xy)^w y (xy)^w = (xy)^w
  DO,          // (xy)^w (yx)^w (xy)^w = (xy)^w
  J,           // J-trivial
  Msol,        // all subgroups solvable
  DOandMsol,   // DO with solvable subgroups
  DOandAbBar,  // DO with abelian subgroups
};

constexpr VarietyId kAllVarieties[] = {
    VarietyId::SL,   VarietyId::Ab, VarietyId::G,         VarietyId::Gsol,
    VarietyId::A,    VarietyId::DA, VarietyId::DO,        VarietyId::J,
    VarietyId::Msol, VarietyId::DOandMsol, VarietyId::DOandAbBar,
};

std::string to_string(VarietyId v);
std::optional<VarietyId> variety_from_string(std::string_view name);

// Negative verdicts carry one of three witness shapes.
struct IdentityWitness {
  MonoidIdentity identity;
  Assignment assignment;  // variable -> element
};
struct SubgroupWitness {
  Subgroup subgroup;
  std::string property;  // "nontrivial", "not solvable", "not abelian"
};
struct JPairWitness {
  Element a, b;  // distinct elements in the same J-class
};
using Witness = std::variant<IdentityWitness, SubgroupWitness, JPairWitness>;

std::string describe(const Witness& w, const Monoid& monoid);

struct Verdict {
  bool member = false;
  std::optional<Witness> witness;  // present iff !member
};

// The defining identities, shared with the classifier and the tests.
MonoidIdentity identity_idempotent();   // x x = x
MonoidIdentity identity_commutative();  // x y = y x
MonoidIdentity identity_aperiodic();    // x^w x = x^w
MonoidIdentity identity_group_left();   // x^w y = y
MonoidIdentity identity_group_right();  // y x^w = y
MonoidIdentity identity_da();           // (x y)^w y (x y)^w = (x y)^w
MonoidIdentity identity_do();           // (x y)^w (y x)^w (x y)^w = (x y)^w

/// Membership of the monoid in the named pseudovariety, with a replayable
/// witness on failure.
Verdict check_variety(const Monoid& monoid, VarietyId v, const MonoidLimits& limits = {});

/// True iff the monoid is a group: its only idempotent is the identity.
/// (Kept alongside the identity-based test; check_variety asserts agreement.)
bool is_group(const Monoid& monoid);

}  // namespace relogic
