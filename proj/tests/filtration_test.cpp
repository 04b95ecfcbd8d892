#include <doctest.h>

#include "cohomlim/filtration.hpp"

using namespace cohomlim;

namespace {

std::vector<int> level_orders(const PresentationTower& pt) {
  std::vector<int> out;
  for (const GAction& obj : pt.system.objects) out.push_back(obj.a.order);
  return out;
}

}  // namespace

TEST_CASE("derived tower of an abelian group is the group itself") {
  GAction inv = inversion_action(make_cyclic(2), make_cyclic(8));
  PresentationTower pt = derived_tower(inv);
  CHECK(level_orders(pt) == std::vector<int>{8});
  CHECK(pt.system.objects[0] == inv);
}

TEST_CASE("derived tower of S3 under conjugation") {
  GAction conj = conjugation_action(make_symmetric(3));
  PresentationTower pt = derived_tower(conj);
  CHECK(level_orders(pt) == std::vector<int>{2, 6});
  // the induced action on the abelianization is trivial
  CHECK(pt.system.objects[0] == trivial_action(make_symmetric(3), pt.system.objects[0].a));
}

TEST_CASE("derived tower refuses non-solvable coefficients") {
  GAction act = trivial_action(make_cyclic(2), make_symmetric(5, 128));
  CHECK_THROWS_WITH_AS(derived_tower(act),
                       "NotSolvable: derived series is stationary at order 60", validation_error);
}

TEST_CASE("filtration towers from explicit chains") {
  GAction inv = inversion_action(make_cyclic(2), make_cyclic(8));
  FiniteGroup z8 = make_cyclic(8);

  Filtration whole_to_one{{full_subgroup(z8), trivial_subgroup(z8)}};
  PresentationTower pt = filtration_tower(inv, whole_to_one);
  CHECK(level_orders(pt) == std::vector<int>{1, 8});

  Filtration two_adic{{full_subgroup(z8), Subgroup{{0, 2, 4, 6}}, Subgroup{{0, 4}},
                       trivial_subgroup(z8)}};
  PresentationTower pt2 = filtration_tower(inv, two_adic);
  CHECK(level_orders(pt2) == std::vector<int>{1, 2, 4, 8});
  // each level carries the induced inversion action
  CHECK(pt2.system.objects[2] == inversion_action(make_cyclic(2), make_cyclic(4)));
}

TEST_CASE("filtration chain preconditions") {
  FiniteGroup klein = direct_product(make_cyclic(2), make_cyclic(2));
  GAction triv = trivial_action(make_cyclic(2), klein);

  Filtration not_characteristic{{full_subgroup(klein), Subgroup{{0, 1}}, trivial_subgroup(klein)}};
  CHECK_THROWS_WITH_AS(filtration_tower(triv, not_characteristic), "NotCharacteristic: (1)",
                       validation_error);

  FiniteGroup z8 = make_cyclic(8);
  GAction inv = inversion_action(make_cyclic(2), z8);
  Filtration not_nested{{Subgroup{{0, 4}}, Subgroup{{0, 2, 4, 6}}, trivial_subgroup(z8)}};
  CHECK_THROWS_WITH_AS(filtration_tower(inv, not_nested), "NotNested: (0)", validation_error);

  Filtration no_bottom{{full_subgroup(z8), Subgroup{{0, 4}}}};
  CHECK_THROWS_AS(filtration_tower(inv, no_bottom), validation_error);
}

TEST_CASE("presentation of Z/8 by its 2-adic tower") {
  GAction inv = inversion_action(make_cyclic(2), make_cyclic(8));
  FiniteGroup z8 = make_cyclic(8);
  Filtration two_adic{{full_subgroup(z8), Subgroup{{0, 2, 4, 6}}, Subgroup{{0, 4}},
                       trivial_subgroup(z8)}};
  PresentationReport rep = verify_presentation(filtration_tower(inv, two_adic));
  CHECK(rep.canonical_total);
  CHECK(rep.canonical_bijective);
  CHECK(rep.canonical_equivariant_hom);
  CHECK(rep.theta1.pass());
  CHECK(rep.classes_match);
  CHECK(rep.pass());
}

TEST_CASE("presentation along the derived tower of S3") {
  GAction conj = conjugation_action(make_symmetric(3));
  PresentationReport rep = verify_presentation(derived_tower(conj));
  CHECK(rep.pass());
  CHECK(rep.direct_h1_classes == 3);  // endomorphisms of S3 up to conjugacy
}

TEST_CASE("a trivial filtration presents trivially") {
  GAction triv = trivial_action(make_cyclic(2), make_cyclic(4));
  FiniteGroup z4 = make_cyclic(4);
  Filtration f{{full_subgroup(z4), trivial_subgroup(z4)}};
  CHECK(verify_presentation(filtration_tower(triv, f)).pass());
}

TEST_CASE("canonical maps into the tower are the quotient projections") {
  GAction inv = inversion_action(make_cyclic(2), make_cyclic(8));
  FiniteGroup z8 = make_cyclic(8);
  Filtration f{{full_subgroup(z8), Subgroup{{0, 4}}, trivial_subgroup(z8)}};
  PresentationTower pt = filtration_tower(inv, f);
  REQUIRE(pt.canonical.size() == 3);
  for (std::size_t r = 0; r < 3; ++r) {
    validate_hom(z8, pt.system.objects[r].a, pt.canonical[r]);
    // surjective, with kernel the chain member
    std::vector<int> kernel;
    for (int x = 0; x < 8; ++x)
      if (pt.canonical[r](x) == 0) kernel.push_back(x);
    CHECK(kernel == f.chain[r].members);
  }
}
