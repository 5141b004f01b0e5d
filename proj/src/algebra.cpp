#include "relcat/algebra.hpp"

namespace relcat {

Magma Magma::make(FiniteSet carrier, Relation mult) {
  if (mult.dom() != tensor_set(carrier, carrier))
    throw TypeError("magma on " + carrier.name() +
                    ": mult must have dom carrier⊗carrier, got " +
                    mult.dom().name());
  if (mult.cod() != carrier)
    throw TypeError("magma on " + carrier.name() +
                    ": mult must have cod carrier, got " + mult.cod().name());
  return Magma{std::move(carrier), std::move(mult)};
}

Comagma Comagma::make(FiniteSet carrier, Relation comult) {
  if (comult.dom() != carrier)
    throw TypeError("comagma on " + carrier.name() +
                    ": comult must have dom carrier, got " +
                    comult.dom().name());
  if (comult.cod() != tensor_set(carrier, carrier))
    throw TypeError("comagma on " + carrier.name() +
                    ": comult must have cod carrier⊗carrier, got " +
                    comult.cod().name());
  return Comagma{std::move(carrier), std::move(comult)};
}

LawReport compare_as_law(std::string law, const Relation& lhs,
                         const Relation& rhs) {
  LawReport r;
  r.law = std::move(law);
  r.witness = first_difference(lhs, rhs);
  r.holds = !r.witness.has_value();
  return r;
}

LawReport check_associative(const Magma& m) {
  const FiniteSet& a = m.carrier;
  auto lhs = seq(tensor(m.mult, identity(a)), m.mult);
  auto rhs = seq(reassociate(a, a, a), tensor(identity(a), m.mult), m.mult);
  return compare_as_law("associativity", lhs, rhs);
}

LawReport check_unital(const Magma& m, const Relation& u) {
  const FiniteSet& a = m.carrier;
  if (u.dom() != FiniteSet::unit() || u.cod() != a)
    throw TypeError("unit candidate must be a state I -> " + a.name());
  auto left = compare_as_law(
      "unit (left)",
      seq(dagger(drop_unit_left(a)), tensor(u, identity(a)), m.mult),
      identity(a));
  if (!left.holds) return left;
  auto right = compare_as_law(
      "unit (right)",
      seq(dagger(drop_unit(a)), tensor(identity(a), u), m.mult),
      identity(a));
  if (!right.holds) return right;
  return LawReport{"unitality", true, std::nullopt};
}

LawReport check_coassociative(const Comagma& c) {
  const FiniteSet& a = c.carrier;
  auto lhs = seq(c.comult, tensor(c.comult, identity(a)));
  auto rhs = seq(c.comult, tensor(identity(a), c.comult),
                 dagger(reassociate(a, a, a)));
  return compare_as_law("coassociativity", lhs, rhs);
}

LawReport check_cocommutative(const Comagma& c) {
  return compare_as_law("cocommutativity", c.comult,
                        seq(c.comult, braid(c.carrier, c.carrier)));
}

LawReport check_counital(const Comagma& c, const Relation& e) {
  const FiniteSet& a = c.carrier;
  if (e.dom() != a || e.cod() != FiniteSet::unit())
    throw TypeError("counit candidate must be an effect " + a.name() +
                    " -> I");
  auto left = compare_as_law(
      "counit (left)",
      seq(c.comult, tensor(e, identity(a)), drop_unit_left(a)), identity(a));
  if (!left.holds) return left;
  auto right = compare_as_law(
      "counit (right)",
      seq(c.comult, tensor(identity(a), e), drop_unit(a)), identity(a));
  if (!right.holds) return right;
  return LawReport{"counitality", true, std::nullopt};
}

LawReport check_magma_hom(const Relation& h, const Magma& m_dom,
                          const Magma& m_cod) {
  if (h.dom() != m_dom.carrier || h.cod() != m_cod.carrier)
    throw TypeError("hom candidate must map " + m_dom.carrier.name() +
                    " -> " + m_cod.carrier.name());
  auto lhs = seq(tensor(h, h), m_cod.mult);
  auto rhs = seq(m_dom.mult, h);
  return compare_as_law("magma homomorphism", lhs, rhs);
}

LawReport check_comagma_hom(const Relation& h, const Comagma& c_dom,
                            const Comagma& c_cod) {
  if (h.dom() != c_dom.carrier || h.cod() != c_cod.carrier)
    throw TypeError("hom candidate must map " + c_dom.carrier.name() +
                    " -> " + c_cod.carrier.name());
  auto lhs = seq(h, c_cod.comult);
  auto rhs = seq(c_dom.comult, tensor(h, h));
  return compare_as_law("comagma homomorphism", lhs, rhs);
}

Comagma canonical_copy(const FiniteSet& a) {
  std::vector<Relation::Pair> ps;
  ps.reserve(a.size());
  const auto n = static_cast<std::uint32_t>(a.size());
  for (std::uint32_t i = 0; i < n; ++i) ps.emplace_back(i, i * n + i);
  return Comagma{a, Relation::from_pairs(a, tensor_set(a, a), std::move(ps))};
}

Magma canonical_mult(const FiniteSet& a) {
  return Magma{a, dagger(canonical_copy(a).comult)};
}

Magma right_projection_magma(const FiniteSet& a) {
  std::vector<Relation::Pair> ps;
  const auto n = static_cast<std::uint32_t>(a.size());
  ps.reserve(n * n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) ps.emplace_back(x * n + y, y);
  return Magma{a, Relation::from_pairs(tensor_set(a, a), a, std::move(ps))};
}

Magma induced_magma(const Magma& a, const Magma& b) {
  FiniteSet carrier = tensor_set(a.carrier, b.carrier);
  Relation mult = seq(interchange(a.carrier, b.carrier, a.carrier, b.carrier),
                      tensor(a.mult, b.mult));
  return Magma{std::move(carrier), std::move(mult)};
}

Comagma induced_comagma(const Comagma& a, const Comagma& b) {
  FiniteSet carrier = tensor_set(a.carrier, b.carrier);
  Relation comult =
      seq(tensor(a.comult, b.comult),
          interchange(a.carrier, a.carrier, b.carrier, b.carrier));
  return Comagma{std::move(carrier), std::move(comult)};
}

}  // namespace relcat
