#pragma once

// Update structures: a system S, a property p, an overwrite Put : S⊗p → S,
// a read-out Get : S → S⊗p, a mix magma and a copy comagma on p.
//
// Axiom catalogue (diagrammatic order, composition written ";"):
//
//   overwrite-then-read (PutGet), on S⊗p → S⊗p:
//     put ; get   ==   (id_S ⊗ copy) ; assoc⁻¹ ; (put ⊗ id_p)
//     reading back after an overwrite emits the overwritten property: copy
//     the incoming property, put one copy, emit the other.
//
//   read-then-overwrite (GetPut), on S → S:
//     get ; put   ==   identity wire of the system
//     feeding the read-out property straight back is trivial. In the
//     envelope the system's identity wire is its idempotent.
//
//   overwrite-twice (PutPut), on (S⊗p)⊗p → S:
//     (put ⊗ id_p) ; put   ==   assoc ; (id_S ⊗ mix) ; put
//     two successive overwrites collapse to mixing the two properties first.
//
//   read-twice (GetGet), on S → (S⊗p)⊗p:
//     get ; (get ⊗ id_p)   ==   get ; (id_S ⊗ copy) ; assoc⁻¹
//     a second read returns a copy of the first.
//
//   repeat-update, on S⊗p → S:
//     (id_S ⊗ copy) ; assoc⁻¹ ; (put ⊗ id_p) ; put   ==   put
//     overwriting again with a property the system was just overwritten
//     with does nothing more.
//
// Every check conjugates both sides by the domain/codomain idempotents of
// the system and property objects (identity for ordinary structures), so the
// same recipes decide the laws both in the base category and in the Karoubi
// envelope.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relcat/algebra.hpp"
#include "relcat/finrel.hpp"

namespace relcat {

class PreconditionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct UpdateStructure {
  std::string name;
  FiniteSet system;
  FiniteSet property;
  Relation put;        // S⊗p → S
  Relation get;        // S → S⊗p
  Magma mix;           // on p
  Comagma copy;        // on p; must be cocommutative and coassociative
  Relation sys_idem;   // envelope identity of the system object
  Relation prop_idem;  // envelope identity of the property object

  /// Validates all morphism types, the copy co-laws (cocommutativity and
  /// coassociativity are part of the definition and are rejected eagerly),
  /// and that the idempotents are idempotent endo-relations of the right
  /// carriers. The five update axioms are left to the explicit checks.
  static UpdateStructure make(std::string name, FiniteSet system,
                              FiniteSet property, Relation put, Relation get,
                              Magma mix, Comagma copy,
                              std::optional<Relation> sys_idem = std::nullopt,
                              std::optional<Relation> prop_idem = std::nullopt);
};

enum class Classification { Strong, Weak, Neither };
std::string to_string(Classification c);

struct AxiomVerdicts {
  LawReport putget;
  LawReport getput;
  LawReport putput;
  LawReport getget;
  LawReport repeat_update;
  Classification classification = Classification::Neither;
};

LawReport check_putget(const UpdateStructure& u);
LawReport check_getput(const UpdateStructure& u);
LawReport check_putput(const UpdateStructure& u);
LawReport check_getget(const UpdateStructure& u);
LawReport check_repeat_update(const UpdateStructure& u);

/// Runs all five checks. Strong iff PutGet∧GetPut∧PutPut∧GetGet;
/// Weak iff PutGet∧PutPut∧GetGet∧repeat-update (Strong implies Weak; the
/// classification reports the strongest verdict).
AxiomVerdicts classify(const UpdateStructure& u);

/// Puts and gets of two structures on the same system commute, up to a
/// braid on the property wires. Throws on different systems.
LawReport check_commuting(const UpdateStructure& u1,
                          const UpdateStructure& u2);

/// get ; put on the system (the plain composite, before any envelope
/// conjugation).
Relation getput_composite(const UpdateStructure& u);

/// The componentwise structure on an explicit product system for factor
/// `which`: put replaces the field, get reads it out, mix is the
/// right-projection magma, copy is canonical.
UpdateStructure product_system_updates(const std::vector<FiniteSet>& factors,
                                       std::size_t which);

}  // namespace relcat
