#pragma once

// Magma/comagma structures on finite sets and the law checkers for them.
// No law is assumed by the types themselves: associativity, units and their
// duals are separate checkable properties, reported with witnesses.

#include <optional>
#include <string>

#include "relcat/finrel.hpp"

namespace relcat {

/// A binary operation carrier⊗carrier → carrier. Shape is validated;
/// laws are not.
struct Magma {
  FiniteSet carrier;
  Relation mult;

  static Magma make(FiniteSet carrier, Relation mult);
};

/// A co-operation carrier → carrier⊗carrier. Shape only.
struct Comagma {
  FiniteSet carrier;
  Relation comult;

  static Comagma make(FiniteSet carrier, Relation comult);
};

/// Verdict of one law check. When the law fails, `witness` holds the
/// lexicographically first input whose images differ under the two composite
/// relations, together with both image sets (re-checkable).
struct LawReport {
  std::string law;
  bool holds = false;
  std::optional<Difference> witness;
};

/// Compare two composites as a law; lhs/rhs must have equal doms and cods.
LawReport compare_as_law(std::string law, const Relation& lhs,
                         const Relation& rhs);

LawReport check_associative(const Magma& m);

/// Both unit triangles for a candidate unit state u : I → carrier.
LawReport check_unital(const Magma& m, const Relation& u);

LawReport check_coassociative(const Comagma& c);
LawReport check_cocommutative(const Comagma& c);

/// Both counit triangles for a candidate counit effect e : carrier → I.
LawReport check_counital(const Comagma& c, const Relation& e);

/// Multiplication square only: (h⊗h);mult_cod vs mult_dom;h.
LawReport check_magma_hom(const Relation& h, const Magma& m_dom,
                          const Magma& m_cod);

/// Dual square: h;comult_cod vs comult_dom;(h⊗h).
LawReport check_comagma_hom(const Relation& h, const Comagma& c_dom,
                            const Comagma& c_cod);

/// i ↦ (i,i).
Comagma canonical_copy(const FiniteSet& a);

/// dagger of the canonical copy: {((i,i),i)}.
Magma canonical_mult(const FiniteSet& a);

/// (x, x') ↦ x'.
Magma right_projection_magma(const FiniteSet& a);

/// Componentwise structure on the product, with the middle interchange:
/// mult = interchange ; (mult_a ⊗ mult_b), comult dually.
Magma induced_magma(const Magma& a, const Magma& b);
Comagma induced_comagma(const Comagma& a, const Comagma& b);

}  // namespace relcat
