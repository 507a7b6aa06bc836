#include <doctest.h>

#include <algorithm>

#include "charzero/constructions.hpp"
#include "charzero/errors.hpp"
#include "charzero/structure.hpp"

using namespace charzero;

namespace {

std::vector<long long> series_orders(const std::vector<Group>& s) {
  std::vector<long long> out;
  for (const auto& g : s) out.push_back(g.order());
  return out;
}

}  // namespace

TEST_CASE("abelian detection") {
  CHECK(is_abelian(cyclic(12)));
  CHECK(is_abelian(elementary_abelian(5, 2)));
  CHECK(is_abelian(trivial_group()));
  CHECK(!is_abelian(symmetric(3)));
  CHECK(!is_abelian(extraspecial(2, 1, ExtraspecialType::plus)));
}

TEST_CASE("derived series of S4 steps through A4 and V4") {
  CHECK(series_orders(derived_series(symmetric(4))) == std::vector<long long>{24, 12, 4, 1});
  CHECK(series_orders(derived_series(symmetric(3))) == std::vector<long long>{6, 3, 1});
  CHECK(series_orders(derived_series(cyclic(6))) == std::vector<long long>{6, 1});
}

TEST_CASE("A5 is perfect and not solvable") {
  const Group a5 = alternating(5);
  CHECK(same_subgroup(derived_subgroup(a5), a5));
  CHECK(!is_solvable(a5));
  CHECK(is_solvable(symmetric(4)));
  CHECK(is_solvable(g75()));
  CHECK(!is_solvable(psl2(7)));
}

TEST_CASE("lower central series and nilpotence") {
  // S3 stalls at A3, so it is solvable but not nilpotent
  CHECK(series_orders(lower_central_series(symmetric(3))) == std::vector<long long>{6, 3});
  CHECK(!is_nilpotent(symmetric(3)));
  CHECK(is_nilpotent(extraspecial(2, 2, ExtraspecialType::minus)));
  CHECK(is_nilpotent(cyclic(12)));
  CHECK(!is_nilpotent(alternating(4)));
  CHECK(!is_nilpotent(g75()));
}

TEST_CASE("normality and normal closures in S4") {
  const Group s4 = symmetric(4);
  const Group v4(4, {Permutation::from_cycles("(1,2)(3,4)", 4),
                     Permutation::from_cycles("(1,3)(2,4)", 4)});
  const Group c2(4, {Permutation::from_cycles("(1,2)", 4)});
  CHECK(is_normal(s4, v4));
  CHECK(!is_normal(s4, c2));
  // the normal closure of one double transposition is all of V4
  const Group closure = normal_closure(s4, {Permutation::from_cycles("(1,2)(3,4)", 4)});
  CHECK(same_subgroup(closure, v4));
  // a transposition normally generates the whole of S4
  CHECK(normal_closure(s4, {Permutation::from_cycles("(1,2)", 4)}).order() == 24);
}

TEST_CASE("minimal normal subgroups") {
  // C6 has exactly the subgroups of orders 2 and 3 as minimal normals
  auto orders = [](const std::vector<Group>& v) {
    std::vector<long long> out;
    for (const auto& g : v) out.push_back(g.order());
    return out;
  };
  CHECK(orders(minimal_normal_subgroups(cyclic(6))) == std::vector<long long>{2, 3});
  CHECK(orders(minimal_normal_subgroups(symmetric(4))) == std::vector<long long>{4});
  CHECK(orders(minimal_normal_subgroups(alternating(5))) == std::vector<long long>{60});
  CHECK(minimal_normal_subgroups(trivial_group()).empty());
}

TEST_CASE("quotients act on cosets") {
  const Group s4 = symmetric(4);
  const Group v4(4, {Permutation::from_cycles("(1,2)(3,4)", 4),
                     Permutation::from_cycles("(1,3)(2,4)", 4)});
  const Group q = quotient_group(s4, v4);
  CHECK(q.order() == 6);
  CHECK(q.degree() == 6);
  CHECK(!is_abelian(q));  // S4/V4 is S3
  const Group a4 = alternating(4);
  const Group q2 = quotient_group(a4, normal_closure(a4, {Permutation::from_cycles("(1,2)(3,4)", 4)}));
  CHECK(q2.order() == 3);
  CHECK(is_abelian(q2));
  CHECK_THROWS_AS(quotient_group(s4, Group(4, {Permutation::from_cycles("(1,2)", 4)})),
                  std::invalid_argument);
}

TEST_CASE("supersolvability separates the classics") {
  CHECK(is_supersolvable(symmetric(3)));
  CHECK(is_supersolvable(dihedral(6)));
  CHECK(is_supersolvable(cyclic(12)));
  CHECK(is_supersolvable(extraspecial(3, 1, ExtraspecialType::exp3)));
  CHECK(!is_supersolvable(alternating(4)));  // chief factor V4 is not prime
  CHECK(!is_supersolvable(g75()));           // chief factor 5^2 is not prime
  CHECK(!is_supersolvable(symmetric(5)));
  CHECK(is_supersolvable(agl1(13)));
}

TEST_CASE("centers") {
  CHECK(center(extraspecial(2, 1, ExtraspecialType::minus)).order() == 2);
  CHECK(center(extraspecial(3, 1, ExtraspecialType::exp9)).order() == 3);
  CHECK(center(symmetric(4)).order() == 1);
  CHECK(center(cyclic(8)).order() == 8);
  CHECK(center(dihedral(6)).order() == 2);
}

TEST_CASE("sylow subgroups have the full prime part") {
  const Group s4 = symmetric(4);
  const Group syl2 = sylow_subgroup(s4, 2);
  CHECK(syl2.order() == 8);
  CHECK(contains_subgroup(s4, syl2));
  CHECK(sylow_subgroup(s4, 3).order() == 3);
  CHECK(sylow_subgroup(s4, 5).order() == 1);
  CHECK(sylow_subgroup(alternating(5), 2).order() == 4);
  CHECK(sylow_subgroup(g75(), 5).order() == 25);
  CHECK(sylow_subgroup(psl2(7), 7).order() == 7);
  CHECK_THROWS_AS(sylow_subgroup(s4, 6), std::invalid_argument);
}

TEST_CASE("sylow results agree across seeds up to order") {
  const Group g = symmetric(5);
  for (std::uint64_t seed : {1ULL, 7ULL, 99ULL})
    CHECK(sylow_subgroup(g, 2, seed).order() == 8);
}

TEST_CASE("normalizers") {
  const Group s4 = symmetric(4);
  const Group v4(4, {Permutation::from_cycles("(1,2)(3,4)", 4),
                     Permutation::from_cycles("(1,3)(2,4)", 4)});
  CHECK(normalizer(s4, v4).order() == 24);  // V4 is normal
  const Group c3(4, {Permutation::from_cycles("(1,2,3)", 4)});
  CHECK(normalizer(s4, c3).order() == 6);  // N_S4(<3-cycle>) = S3 on its support
  const Group a5 = alternating(5);
  const Group syl5 = sylow_subgroup(a5, 5);
  CHECK(normalizer(a5, syl5).order() == 10);
  CHECK_THROWS_AS(normalizer(s4, Group(5, {Permutation::from_cycles("(1,2)", 5)})),
                  std::invalid_argument);
}

TEST_CASE("classification flags respect the implication chain") {
  auto f = classify(cyclic(9));
  CHECK(f.abelian);
  CHECK(f.nilpotent);
  CHECK(f.supersolvable);
  CHECK(f.solvable);
  CHECK(f.odd_order);

  f = classify(extraspecial(2, 1, ExtraspecialType::plus));
  CHECK(!f.abelian);
  CHECK(f.nilpotent);
  CHECK(f.supersolvable);
  CHECK(!f.odd_order);

  f = classify(symmetric(3));
  CHECK(!f.nilpotent);
  CHECK(f.supersolvable);

  f = classify(alternating(4));
  CHECK(!f.supersolvable);
  CHECK(f.solvable);

  f = classify(g75());
  CHECK(!f.supersolvable);
  CHECK(f.solvable);
  CHECK(f.odd_order);

  f = classify(alternating(5));
  CHECK(!f.solvable);
  CHECK(!f.supersolvable);
  CHECK(!f.abelian);
}
