#include <doctest.h>

#include "cohomlim/action.hpp"

using namespace cohomlim;

TEST_CASE("trivial and inversion actions validate") {
  FiniteGroup z2 = make_cyclic(2), z3 = make_cyclic(3);
  GAction triv = trivial_action(z2, z3);
  for (int s = 0; s < 2; ++s)
    for (int x = 0; x < 3; ++x) CHECK(triv.apply(s, x) == x);

  GAction inv = inversion_action(z2, z3);
  CHECK(inv.apply(1, 1) == 2);
  CHECK(inv.apply(1, 2) == 1);
  CHECK(inv.apply(0, 1) == 1);

  // negation written out by hand gives the same action
  GAction negation = validate_action(z2, z3, {{0, 1, 2}, {0, 2, 1}});
  CHECK(negation == inv);
}

TEST_CASE("validate_action reports the first violated axiom") {
  FiniteGroup z2 = make_cyclic(2), z4 = make_cyclic(4);
  // the shift x -> x+1 respects nothing multiplicative: s(0+0) = 1 but s0+s0 = 2
  CHECK_THROWS_WITH_AS(validate_action(z2, z4, {{0, 1, 2, 3}, {1, 2, 3, 0}}),
                       "AutomorphismAxiom: (1,0,0)", validation_error);
  // broken identity row
  CHECK_THROWS_WITH_AS(validate_action(z2, z4, {{1, 0, 3, 2}, {0, 1, 2, 3}}),
                       "IdentityAxiom: (0)", validation_error);
  // rows are automorphisms but do not compose: s*s should act as negation twice
  CHECK_THROWS_WITH_AS(validate_action(z4, z4, {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 3, 2, 1}, {0, 3, 2, 1}}),
                       "CompositionAxiom: (1,1,1)", validation_error);
  CHECK_THROWS_AS(validate_action(z2, z4, {{0, 1, 2, 3}}), validation_error);  // shape
}

TEST_CASE("inversion requires an abelian coefficient group and |G| = 2") {
  CHECK_THROWS_WITH_AS(inversion_action(make_cyclic(2), make_symmetric(3)),
                       "NotAbelian: inversion is not an automorphism here", validation_error);
  CHECK_THROWS_AS(inversion_action(make_cyclic(3), make_cyclic(3)), validation_error);
}

TEST_CASE("conjugation action validates and its fixed points are the center") {
  FiniteGroup s3 = make_symmetric(3);
  GAction conj = conjugation_action(s3);
  CHECK(fixed_points(conj).members == std::vector<int>{0});

  FiniteGroup d4 = make_dihedral(4);
  Subgroup center = fixed_points(conjugation_action(d4));
  CHECK(center.size() == 2);
  for (int z : center.members)
    for (int x = 0; x < 8; ++x) CHECK(d4.op(z, x) == d4.op(x, z));
}

TEST_CASE("fixed points of standard actions") {
  FiniteGroup z2 = make_cyclic(2), z3 = make_cyclic(3);
  CHECK(fixed_points(trivial_action(z2, z3)).size() == 3);
  CHECK(fixed_points(inversion_action(z2, z3)).members == std::vector<int>{0});
  CHECK(fixed_points(inversion_action(z2, make_cyclic(8))).members == std::vector<int>{0, 4});
}

TEST_CASE("actions round-trip through their automorphism homs") {
  for (const GAction& act :
       {inversion_action(make_cyclic(2), make_cyclic(8)), conjugation_action(make_symmetric(3)),
        trivial_action(make_cyclic(4), make_cyclic(2))}) {
    std::vector<GroupHom> rho = hom_from_action(act);
    for (const GroupHom& r : rho) validate_hom(act.a, act.a, r);
    CHECK(action_from_hom(act.g, act.a, rho) == act);
  }
}

TEST_CASE("induced action on a quotient") {
  FiniteGroup s3 = make_symmetric(3);
  GAction conj = conjugation_action(s3);

  // dividing by the trivial subgroup changes nothing
  QuotientAction same = induced_action_on_quotient(conj, trivial_subgroup(s3));
  CHECK(same.act == conj);

  // conjugation induces the trivial action on S3 / A3
  QuotientAction ab = induced_action_on_quotient(conj, commutator_subgroup(s3));
  CHECK(ab.act.a.order == 2);
  CHECK(ab.act == trivial_action(s3, ab.act.a));

  // inversion on Z/8 descends to inversion on Z/4
  GAction inv8 = inversion_action(make_cyclic(2), make_cyclic(8));
  QuotientAction inv4 = induced_action_on_quotient(inv8, Subgroup{{0, 4}});
  CHECK(inv4.act == inversion_action(make_cyclic(2), make_cyclic(4)));
}

TEST_CASE("induced action commutes with the projection") {
  GAction inv8 = inversion_action(make_cyclic(2), make_cyclic(8));
  QuotientAction qa = induced_action_on_quotient(inv8, Subgroup{{0, 4}});
  for (int s = 0; s < 2; ++s)
    for (int x = 0; x < 8; ++x) CHECK(qa.proj(inv8.apply(s, x)) == qa.act.apply(s, qa.proj(x)));
}

TEST_CASE("a normal subgroup not preserved by the action is rejected") {
  FiniteGroup z2 = make_cyclic(2);
  FiniteGroup klein = direct_product(z2, z2);
  // swap the two factors; the first factor {0, 1} is normal but moves
  GAction swap = validate_action(z2, klein, {{0, 1, 2, 3}, {0, 2, 1, 3}});
  CHECK_THROWS_WITH_AS(induced_action_on_quotient(swap, Subgroup{{0, 1}}),
                       "NotPreserved: (1)", validation_error);
}

TEST_CASE("equivariance checks") {
  FiniteGroup z2 = make_cyclic(2), z4 = make_cyclic(4);
  GAction inv4 = inversion_action(z2, z4), triv4 = trivial_action(z2, z4);
  GroupHom id = identity_hom(z4);
  CHECK(is_equivariant(inv4, inv4, id));
  int ws = -1, wx = -1;
  CHECK_FALSE(is_equivariant(inv4, triv4, id, &ws, &wx));
  CHECK(ws == 1);
  CHECK(wx == 1);
  CHECK_THROWS_AS(validate_equivariant_hom(inv4, triv4, id), validation_error);
}
