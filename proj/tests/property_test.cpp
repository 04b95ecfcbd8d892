#include <doctest.h>

#include <set>

#include "cohomlim/cochain.hpp"
#include "cohomlim/torsor.hpp"

using namespace cohomlim;

namespace {

// every valid action of g on a, found by filtering all candidate tables
// with the identity row pinned
std::vector<GAction> every_action(const FiniteGroup& g, const FiniteGroup& a) {
  std::vector<GAction> out;
  std::vector<int> id(a.order);
  std::iota(id.begin(), id.end(), 0);
  const long long rows = g.order - 1;
  const long long row_space = checked_pow(a.order, a.order, 1 << 30);
  std::vector<long long> odo(rows, 0);
  while (true) {
    std::vector<std::vector<int>> table{id};
    for (long long r = 0; r < rows; ++r) {
      std::vector<int> row(a.order);
      long long code = odo[r];
      for (int x = 0; x < a.order; ++x) {
        row[x] = static_cast<int>(code % a.order);
        code /= a.order;
      }
      table.push_back(row);
    }
    try {
      out.push_back(validate_action(g, a, table));
    } catch (const validation_error&) {
    }
    long long k = 0;
    while (k < rows && ++odo[k] == row_space) {
      odo[k] = 0;
      ++k;
    }
    if (k == rows || rows == 0) break;
  }
  return out;
}

std::vector<GAction> sweep_pool() {
  std::vector<GAction> pool;
  for (int ng = 1; ng <= 3; ++ng)
    for (int na = 1; na <= 3; ++na)
      for (GAction& act : every_action(make_cyclic(ng), make_cyclic(na)))
        pool.push_back(std::move(act));
  for (GAction& act : every_action(make_cyclic(2), make_cyclic(4))) pool.push_back(std::move(act));
  for (GAction& act : every_action(make_cyclic(2), direct_product(make_cyclic(2), make_cyclic(2))))
    pool.push_back(std::move(act));
  return pool;
}

}  // namespace

TEST_CASE("every small action: enumerators agree and the coboundary laws hold") {
  for (const GAction& act : sweep_pool()) {
    CocycleSet z1 = enumerate_z1_bruteforce(act);
    CHECK(z1 == enumerate_z1_backtracking(act, {}));
    for (const Cocycle& a : z1) {
      CHECK(cb_act(act, a, 0) == a);
      for (int x = 0; x < act.a.order; ++x) {
        CHECK(z1.count(cb_act(act, a, x)));
        for (int y = 0; y < act.a.order; ++y)
          CHECK(cb_act(act, cb_act(act, a, x), y) == cb_act(act, a, act.a.op(x, y)));
      }
    }
  }
}

TEST_CASE("every small action: orbit-stabilizer and the fixed-point identity") {
  for (const GAction& act : sweep_pool()) {
    CHECK(stabilizer(act, trivial_cocycle(act)) == fixed_points(act));
    for (const Cocycle& a : enumerate_z1_bruteforce(act))
      CHECK(orbit(act, a).size() * stabilizer(act, a).size() ==
            static_cast<std::size_t>(act.a.order));
  }
}

TEST_CASE("every small action: torsor classes realize the class set") {
  for (const GAction& act : sweep_pool()) {
    H1Set h = h1(act);
    std::vector<Cocycle> all;
    for (const auto& [c, idx] : h.class_of) all.push_back(c);
    int iso_classes = 0;
    for (std::size_t i = 0; i < all.size(); ++i) {
      Torsor ti = torsor_from_cocycle(act, all[i]);
      bool fresh = true;
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i == j) continue;
        bool iso = are_isomorphic(ti, torsor_from_cocycle(act, all[j])).has_value();
        CHECK(iso == (h.class_of.at(all[i]) == h.class_of.at(all[j])));
        if (iso && j < i) fresh = false;
      }
      if (fresh) ++iso_classes;
    }
    CHECK(iso_classes == h.num_classes());
  }
}

TEST_CASE("every small abelian action: orbit and coset partitions coincide") {
  for (const GAction& act : sweep_pool()) {
    H1Set orbits = h1(act);
    CohomologyGroup quot = h_n(act, 1);
    REQUIRE(orbits.num_classes() == quot.h_size);
    std::set<std::set<std::vector<int>>> a_part, b_part;
    for (const auto& cls : orbits.classes)
      a_part.insert(std::set<std::vector<int>>(cls.begin(), cls.end()));
    for (const auto& cls : quot.classes) {
      std::set<std::vector<int>> one;
      for (const Cochain& f : cls) one.insert(f.values);
      b_part.insert(one);
    }
    CHECK(a_part == b_part);
  }
}

TEST_CASE("every small action: base-point independence of torsor readout") {
  for (const GAction& act : sweep_pool()) {
    H1Set h = h1(act);
    for (const auto& [a, cls] : h.class_of) {
      Torsor t = torsor_from_cocycle(act, a);
      for (int p0 = 0; p0 < t.points(); ++p0)
        CHECK(h.class_of.at(cocycle_from_torsor(t, p0)) == cls);
    }
  }
}
