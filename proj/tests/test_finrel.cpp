#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "relcat/finrel.hpp"

using namespace relcat;

namespace {

FiniteSet colour() { return FiniteSet::make("Colour", {"yellow", "green"}); }
FiniteSet taste() { return FiniteSet::make("Taste", {"bitter", "sweet"}); }

Relation p_colour_taste() {
  return Relation::from_labels(colour(), taste(),
                               {{"yellow", "sweet"}, {"green", "bitter"}});
}

Relation copy_diag(const FiniteSet& a) {
  std::vector<Relation::Pair> ps;
  for (std::uint32_t i = 0; i < a.size(); ++i)
    ps.emplace_back(i, i * static_cast<std::uint32_t>(a.size()) + i);
  return Relation::from_pairs(a, tensor_set(a, a), std::move(ps));
}

}  // namespace

TEST_CASE("FiniteSet construction invariants") {
  CHECK_THROWS_AS(FiniteSet::make("E", {}), InvariantError);
  CHECK_THROWS_AS(FiniteSet::make("D", {"a", "a"}), InvariantError);
  CHECK_THROWS_AS(FiniteSet::make("B", {"a b"}), InvariantError);
  CHECK_THROWS_AS(FiniteSet::make("B", {"a,b"}), InvariantError);

  auto c = colour();
  CHECK(c.size() == 2);
  CHECK(c.label(0) == "yellow");
  CHECK(c.index_of("green") == 1);
  CHECK_FALSE(c.index_of("red").has_value());
}

TEST_CASE("products are lexicographic with the last factor fastest") {
  auto ct = tensor_set(colour(), taste());
  REQUIRE(ct.size() == 4);
  CHECK(ct.label(0) == "(yellow,bitter)");
  CHECK(ct.label(1) == "(yellow,sweet)");
  CHECK(ct.label(2) == "(green,bitter)");
  CHECK(ct.label(3) == "(green,sweet)");

  auto triple = FiniteSet::product({colour(), taste(), colour()});
  CHECK(triple.size() == 8);
  CHECK(triple.label(0) == "(yellow,bitter,yellow)");
  CHECK(triple.label(7) == "(green,sweet,green)");

  // nested product renders nested tuples
  auto nested = tensor_set(ct, colour());
  CHECK(nested.label(0) == "((yellow,bitter),yellow)");
}

TEST_CASE("set equality is by element sequence, not by name or size") {
  auto a = FiniteSet::make("A", {"x", "y"});
  auto b = FiniteSet::make("B", {"x", "y"});
  auto c = FiniteSet::make("C", {"y", "x"});
  auto d = FiniteSet::make("D", {"u", "v"});
  CHECK(a == b);
  CHECK(a != c);  // order matters
  CHECK(a != d);  // same size is not enough
}

TEST_CASE("identity") {
  CHECK(identity(FiniteSet::unit()).pair_count() == 1);
  CHECK(identity(colour()).pair_count() == 2);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto a = oracle::random_set(rng, 5, "a");
    auto b = oracle::random_set(rng, 5, "b");
    auto f = oracle::random_relation(rng, a, b);
    CHECK(compose(identity(a), f) == f);
    CHECK(compose(f, identity(b)) == f);
  }
}

TEST_CASE("compose matches the paper's copy-then-apply example") {
  auto c = colour();
  auto p = p_colour_taste();
  // copy ; (id ⊗ P) : Colour -> Colour⊗Taste
  auto r = compose(copy_diag(c), tensor(identity(c), p));
  auto expected = Relation::from_labels(
      c, tensor_set(c, taste()),
      {{"yellow", "(yellow,sweet)"}, {"green", "(green,bitter)"}});
  CHECK(r == expected);
}

TEST_CASE("compose agrees with the brute-force oracle and is associative") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    auto a = oracle::random_set(rng, 5, "a");
    auto b = oracle::random_set(rng, 5, "b");
    auto c = oracle::random_set(rng, 5, "c");
    auto d = oracle::random_set(rng, 5, "d");
    auto f = oracle::random_relation(rng, a, b);
    auto g = oracle::random_relation(rng, b, c);
    auto h = oracle::random_relation(rng, c, d);

    CHECK(oracle::to_label_rel(compose(f, g)) ==
          oracle::compose(oracle::to_label_rel(f), oracle::to_label_rel(g)));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
  }
}

TEST_CASE("compose type mismatch names both sets") {
  auto f = identity(colour());
  auto g = identity(taste());
  CHECK_THROWS_WITH_AS(compose(f, g),
                       doctest::Contains("Colour"), TypeError);
  CHECK_THROWS_WITH_AS(compose(f, g),
                       doctest::Contains("Taste"), TypeError);
}

TEST_CASE("tensor basics") {
  auto a = colour();
  auto b = taste();
  CHECK(tensor(identity(a), identity(b)) == identity(tensor_set(a, b)));

  // tensor(P, id_Taste) applied to (yellow, bitter) gives (sweet, bitter)
  auto t = tensor(p_colour_taste(), identity(b));
  auto dom = tensor_set(a, b);
  auto cod = tensor_set(b, b);
  auto i = dom.index_of("(yellow,bitter)");
  REQUIRE(i.has_value());
  auto img = t.image_of(static_cast<std::uint32_t>(*i));
  REQUIRE(img.size() == 1);
  CHECK(cod.label(img[0]) == "(sweet,bitter)");
}

TEST_CASE("tensor agrees with the oracle and satisfies interchange") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 30; ++i) {
    auto a = oracle::random_set(rng, 4, "a");
    auto b = oracle::random_set(rng, 4, "b");
    auto c = oracle::random_set(rng, 4, "c");
    auto d = oracle::random_set(rng, 4, "d");
    auto e = oracle::random_set(rng, 4, "e");
    auto w = oracle::random_set(rng, 4, "w");

    auto f = oracle::random_relation(rng, a, b);
    auto h = oracle::random_relation(rng, b, c);
    auto g = oracle::random_relation(rng, d, e);
    auto k = oracle::random_relation(rng, e, w);

    CHECK(oracle::to_label_rel(tensor(f, g)) ==
          oracle::tensor(oracle::to_label_rel(f), oracle::to_label_rel(g)));
    // (f;h) ⊗ (g;k) == (f⊗g) ; (h⊗k)
    CHECK(tensor(compose(f, h), compose(g, k)) ==
          compose(tensor(f, g), tensor(h, k)));
  }
}

TEST_CASE("braid") {
  auto a = colour();
  auto b = taste();
  auto br = braid(a, b);
  auto i = br.dom().index_of("(yellow,sweet)");
  REQUIRE(i.has_value());
  auto img = br.image_of(static_cast<std::uint32_t>(*i));
  REQUIRE(img.size() == 1);
  CHECK(br.cod().label(img[0]) == "(sweet,yellow)");

  // symmetry: braid(B,A) ; braid(A,B)… composed the other way round is id
  CHECK(compose(braid(a, b), braid(b, a)) == identity(tensor_set(a, b)));

  // braid against the unit is a relabeling of the identity
  auto bu = braid(FiniteSet::unit(), a);
  CHECK(bu.pair_count() == a.size());
  CHECK(compose(bu, dagger(bu)) == identity(tensor_set(FiniteSet::unit(), a)));

  // naturality: (f⊗g) ; braid == braid ; (g⊗f)
  std::mt19937_64 rng(17);
  for (int i2 = 0; i2 < 20; ++i2) {
    auto sa = oracle::random_set(rng, 4, "x");
    auto sb = oracle::random_set(rng, 4, "y");
    auto sc = oracle::random_set(rng, 4, "z");
    auto sd = oracle::random_set(rng, 4, "v");
    auto f = oracle::random_relation(rng, sa, sb);
    auto g = oracle::random_relation(rng, sc, sd);
    CHECK(compose(tensor(f, g), braid(sb, sd)) ==
          compose(braid(sa, sc), tensor(g, f)));
  }
}

TEST_CASE("dagger") {
  auto c = colour();
  // dagger of the copy map is the mult relation {((i,i),i)}
  auto mult = dagger(copy_diag(c));
  auto expected = Relation::from_labels(
      tensor_set(c, c), c,
      {{"(yellow,yellow)", "yellow"}, {"(green,green)", "green"}});
  CHECK(mult == expected);

  CHECK(dagger(identity(c)) == identity(c));

  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    auto a = oracle::random_set(rng, 5, "a");
    auto b = oracle::random_set(rng, 5, "b");
    auto d = oracle::random_set(rng, 5, "d");
    auto f = oracle::random_relation(rng, a, b);
    auto g = oracle::random_relation(rng, b, d);
    CHECK(dagger(dagger(f)) == f);
    CHECK(oracle::to_label_rel(dagger(f)) ==
          oracle::dagger(oracle::to_label_rel(f)));
    // contravariance: dagger(f;g) == dagger(g);dagger(f)
    CHECK(dagger(compose(f, g)) == compose(dagger(g), dagger(f)));
  }
}

TEST_CASE("relations_equal") {
  auto f = p_colour_taste();
  CHECK(relations_equal(f, f));
  CHECK_THROWS_AS(relations_equal(f, identity(colour())), TypeError);
  CHECK_THROWS_AS(relations_equal(f, identity(taste())), TypeError);
}

TEST_CASE("unitors and associators") {
  auto a = colour();
  auto du = drop_unit(a);
  CHECK(du.pair_count() == a.size());
  CHECK(compose(du, dagger(du)) == identity(tensor_set(a, FiniteSet::unit())));
  CHECK(drop_unit_left(a).pair_count() == a.size());

  // triangle: reassociate(A,I,B) ; (id_A ⊗ unitor) == unitor ⊗ id_B
  auto b = taste();
  auto lhs = compose(reassociate(a, FiniteSet::unit(), b),
                     tensor(identity(a), drop_unit_left(b)));
  auto rhs = tensor(drop_unit(a), identity(b));
  CHECK(lhs == rhs);
}

TEST_CASE("pentagon composite is the same relabeling along both paths") {
  auto sets = std::vector<FiniteSet>{
      FiniteSet::make("A", {"a0", "a1", "a2"}),
      FiniteSet::make("B", {"b0", "b1"}),
      FiniteSet::make("C", {"c0", "c1", "c2"}),
      FiniteSet::make("D", {"d0", "d1"}),
  };
  const auto &A = sets[0], &B = sets[1], &C = sets[2], &D = sets[3];
  auto ab = tensor_set(A, B);
  auto cd = tensor_set(C, D);

  auto path1 = compose(reassociate(ab, C, D), reassociate(A, B, cd));
  auto path2 = seq(tensor(reassociate(A, B, C), identity(D)),
                   reassociate(A, tensor_set(B, C), D),
                   tensor(identity(A), reassociate(B, C, D)));
  CHECK(path1 == path2);

  // the relabelings compose to the identity once the nesting is undone
  CHECK(compose(path1, dagger(path1)) ==
        identity(tensor_set(tensor_set(ab, C), D)));
}

TEST_CASE("coherence requires matching leaf sequences") {
  auto a = colour();
  auto b = taste();
  CHECK_THROWS_AS(coherence(tensor_set(a, b), tensor_set(b, a)), TypeError);
  CHECK(coherence(tensor_set(a, b), FiniteSet::product({a, b})).pair_count() ==
        4);
}

TEST_CASE("interchange shuffles the middle factors") {
  auto a = colour();
  auto t = taste();
  auto x = interchange(a, t, a, t);
  auto i = x.dom().index_of("((yellow,bitter),(green,sweet))");
  REQUIRE(i.has_value());
  auto img = x.image_of(static_cast<std::uint32_t>(*i));
  REQUIRE(img.size() == 1);
  CHECK(x.cod().label(img[0]) == "((yellow,green),(bitter,sweet))");
}

TEST_CASE("pair and matrix backends agree") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    auto a = oracle::random_set(rng, 64, "a");
    auto b = oracle::random_set(rng, 64, "b");
    auto c = oracle::random_set(rng, 64, "c");
    auto f = oracle::random_relation(rng, a, b, 0.3);
    auto g = oracle::random_relation(rng, b, c, 0.3);
    CHECK(detail::compose_pairs(f, g) == detail::compose_matrix(f, g));
    CHECK(detail::dagger_pairs(f) == detail::dagger_matrix(f));
  }
  for (int i = 0; i < 20; ++i) {
    auto a = oracle::random_set(rng, 12, "a");
    auto b = oracle::random_set(rng, 12, "b");
    auto c = oracle::random_set(rng, 12, "c");
    auto d = oracle::random_set(rng, 12, "d");
    auto f = oracle::random_relation(rng, a, b, 0.4);
    auto g = oracle::random_relation(rng, c, d, 0.4);
    CHECK(detail::tensor_pairs(f, g) == detail::tensor_matrix(f, g));
  }
}

TEST_CASE("canonical serialization is sorted by (dom, cod) index") {
  auto r = Relation::from_labels(
      colour(), taste(),
      {{"green", "bitter"}, {"yellow", "sweet"}, {"yellow", "bitter"}});
  CHECK(r.to_lines() ==
        "yellow -> bitter\n"
        "yellow -> sweet\n"
        "green -> bitter\n");
}

TEST_CASE("first_difference reports the lexicographically first witness") {
  auto c = colour();
  auto f = identity(c);
  auto g = Relation::from_labels(c, c, {{"yellow", "yellow"}});
  auto d = first_difference(f, g);
  REQUIRE(d.has_value());
  CHECK(d->input == "green");
  CHECK(d->lhs_image == std::vector<std::string>{"green"});
  CHECK(d->rhs_image.empty());
  CHECK_FALSE(first_difference(f, f).has_value());
}
