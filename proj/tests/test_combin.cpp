#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heckecenter/combin.hpp"
#include "heckecenter/cosets.hpp"
#include "heckecenter/render.hpp"
#include "heckecenter/symgroup.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace hecke;

namespace {

Composition C(std::vector<int> v) { return Composition(std::move(v)); }
Partition Pt(std::vector<int> v) { return Partition(std::move(v)); }

Multipartition MP(std::vector<std::vector<int>> blocks) {
  std::vector<Partition> b;
  for (auto& x : blocks) b.emplace_back(std::move(x));
  return Multipartition(std::move(b));
}

/// Count elements of the parabolic whose per-block cycle types match theta.
Int class_size_by_enumeration(const Composition& lam, const Multipartition& theta) {
  Int count = 0;
  for (const auto& w : parabolic_elements(ParabolicSpec{lam.total(), lam})) {
    int offset = 0;
    bool match = true;
    for (size_t bi = 0; bi < theta.blocks().size() && match; ++bi) {
      const int p = lam.part(static_cast<int>(bi));
      std::vector<int> img(static_cast<size_t>(p));
      for (int i = 1; i <= p; ++i) img[static_cast<size_t>(i - 1)] = w(offset + i) - offset;
      match = cycle_type(Permutation::from_images(std::move(img))) == theta.blocks()[bi];
      offset += p;
    }
    if (match) ++count;
  }
  return count;
}

/// Character value by counting w-invariant ordered set partitions of {1..n}
/// with block sizes lam; independent of the class-size formulas.
Int character_by_invariant_blocks(int n, const Composition& lam, const Partition& alpha) {
  const Permutation w = canonical_coxeter(n, Composition(alpha.parts()));
  std::function<Int(std::vector<int>&, size_t)> rec = [&](std::vector<int>& free_pts,
                                                          size_t bi) -> Int {
    if (bi == lam.parts().size()) return free_pts.empty() ? 1 : 0;
    const int k = lam.part(static_cast<int>(bi));
    Int total = 0;
    const size_t m = free_pts.size();
    std::vector<int> pick(static_cast<size_t>(k));
    std::function<void(size_t, int)> choose = [&](size_t idx, int start) {
      if (idx == static_cast<size_t>(k)) {
        std::set<int> blk(pick.begin(), pick.end());
        for (int x : blk)
          if (!blk.count(w(x))) return;
        std::vector<int> rest;
        for (int x : free_pts)
          if (!blk.count(x)) rest.push_back(x);
        total += rec(rest, bi + 1);
        return;
      }
      for (int i = start; i < static_cast<int>(m); ++i) {
        pick[idx] = free_pts[static_cast<size_t>(i)];
        choose(idx + 1, i + 1);
      }
    };
    choose(0, 0);
    return total;
  };
  std::vector<int> all;
  for (int i = 1; i <= n; ++i) all.push_back(i);
  return rec(all, 0);
}

}  // namespace

TEST_CASE("refinement order") {
  CHECK(refinement_leq(C({2, 1, 1}), C({2, 1, 1})));
  CHECK(refinement_leq(C({2, 1, 1}), C({3, 1})));
  CHECK_FALSE(refinement_leq(C({2, 2}), C({3, 1})));
  CHECK_THROWS_AS(refinement_leq(C({2, 1}), C({2, 2})), std::invalid_argument);
}

TEST_CASE("refinement is a partial order") {
  for (int n = 2; n <= 6; ++n) {
    const auto comps = compositions_of(n);
    for (const auto& a : comps) {
      CHECK(refinement_leq(a, a));
      for (const auto& b : comps) {
        if (refinement_leq(a, b) && refinement_leq(b, a)) CHECK(a == b);
        for (const auto& c : comps)
          if (refinement_leq(a, b) && refinement_leq(b, c)) CHECK(refinement_leq(a, c));
      }
    }
  }
}

TEST_CASE("splitting parts") {
  CHECK(lambda_minus_one(C({3, 4, 1, 7})) == C({2, 1, 3, 1, 1, 6, 1}));
  CHECK(lambda_minus_one(C({1, 1})) == C({1, 1}));
  CHECK(lambda_minus_one(C({2})) == C({1, 1}));
}

TEST_CASE("minimal class length statistic") {
  CHECK(l_lambda(C({1, 1, 1})) == 0);
  CHECK(l_lambda(C({5, 3, 2})) == 7);
  CHECK(l_lambda(C({3, 2, 2, 1, 1, 1})) == 4);
  for (int n = 2; n <= 6; ++n)
    for (const auto& lam : compositions_of(n))
      CHECK(l_lambda(lam) == canonical_coxeter(n, lam).length());
}

TEST_CASE("conjugate compositions") {
  CHECK(conjugate_compositions(C({2, 1}), C({1, 2})));
  CHECK_FALSE(conjugate_compositions(C({3}), C({2, 1})));
  CHECK(conjugate_compositions(C({2, 1, 1}), C({1, 2, 1})));
}

TEST_CASE("multipartitions of a shape") {
  CHECK(multipartitions_of_shape(C({5})).size() == partitions_of(5).size());
  CHECK(multipartitions_of_shape(C({2, 1})).size() == 2);
  CHECK(multipartitions_of_shape(C({2, 2})).size() == 4);
}

TEST_CASE("multipartitions with prescribed parts") {
  CHECK(multipartitions_of(C({3, 2}), Pt({4, 1})).empty());

  auto l1 = multipartitions_of(C({3, 5, 2}), Pt({3, 2, 2, 1, 1, 1}));
  CHECK(std::find(l1.begin(), l1.end(), MP({{2, 1}, {3, 1, 1}, {2}})) != l1.end());

  auto l2 = multipartitions_of(C({5, 3, 2}), Pt({3, 2, 2, 1, 1, 1}));
  REQUIRE(l2.size() == 5);
  CHECK(l2[0] == MP({{3, 2}, {2, 1}, {1, 1}}));
  CHECK(l2[1] == MP({{3, 2}, {1, 1, 1}, {2}}));
  CHECK(l2[2] == MP({{3, 1, 1}, {2, 1}, {2}}));
  CHECK(l2[3] == MP({{2, 2, 1}, {3}, {1, 1}}));
  CHECK(l2[4] == MP({{2, 1, 1, 1}, {3}, {2}}));
  CHECK_THROWS_AS(multipartitions_of(C({2, 1}), Pt({2, 2})), std::invalid_argument);
}

TEST_CASE("shape counts split by parts") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& lam : compositions_of(n)) {
      size_t total = 0;
      for (const auto& alpha : partitions_of(n)) total += multipartitions_of(lam, alpha).size();
      CHECK(total == multipartitions_of_shape(lam).size());
    }
  }
}

TEST_CASE("class sizes inside a parabolic") {
  const Composition lam = C({5, 3, 2});
  CHECK(class_size_in_parabolic(lam, MP({{3, 2}, {2, 1}, {1, 1}})) == 60);
  CHECK(class_size_in_parabolic(lam, MP({{2, 1, 1, 1}, {3}, {2}})) == 20);
  CHECK(class_size_in_parabolic(lam, MP({{3, 2}, {1, 1, 1}, {2}})) == 20);
  CHECK(class_size_in_parabolic(lam, MP({{3, 1, 1}, {2, 1}, {2}})) == 60);
  CHECK(class_size_in_parabolic(lam, MP({{2, 2, 1}, {3}, {1, 1}})) == 30);
  CHECK(class_size_in_parabolic(C({3, 2}), MP({{1, 1, 1}, {1, 1}})) == 1);
  CHECK_THROWS_AS(class_size_in_parabolic(C({3, 2}), MP({{2, 1}, {3}})), std::invalid_argument);
}

TEST_CASE("class sizes inside a parabolic match enumeration") {
  for (const auto& lam : {C({2, 2}), C({3, 2}), C({2, 1, 2}), C({3, 3}), C({4, 2})}) {
    for (const auto& theta : multipartitions_of_shape(lam))
      CHECK(class_size_in_parabolic(lam, theta) == class_size_by_enumeration(lam, theta));
  }
  // the S_(5,3,2) sizes used above, against direct enumeration (1440 elements)
  const Composition big = C({5, 3, 2});
  CHECK(class_size_by_enumeration(big, MP({{3, 2}, {2, 1}, {1, 1}})) == 60);
  CHECK(class_size_by_enumeration(big, MP({{2, 2, 1}, {3}, {1, 1}})) == 30);
}

TEST_CASE("permutation characters") {
  CHECK(perm_character(3, C({1, 1, 1}), Pt({1, 1, 1})) == 6);
  CHECK(perm_character(4, C({2, 2}), Pt({3, 1})) == 0);
  CHECK(perm_character(4, C({2, 2}), Pt({2, 1, 1})) == 2);
  CHECK(perm_character(10, C({5, 3, 2}), Pt({3, 2, 2, 1, 1, 1})) == 19);
  CHECK_THROWS_AS(perm_character(4, C({2, 1}), Pt({2, 2})), std::invalid_argument);
}

TEST_CASE("characters agree with the fixed-coset oracle") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& lam : compositions_of(n))
      for (const auto& alpha : partitions_of(n))
        CHECK(perm_character(n, lam, alpha) == perm_character_oracle(n, lam, alpha));
  CHECK(perm_character_oracle(3, C({2, 1}), Pt({2, 1})) == 1);
  CHECK(perm_character_oracle(3, C({2, 1}), Pt({1, 1, 1})) == 3);
  CHECK(perm_character_oracle(4, C({2, 2}), Pt({2, 1, 1})) == 2);
  CHECK_THROWS_AS(perm_character_oracle(10, C({5, 3, 2}), Pt({3, 2, 2, 1, 1, 1})),
                  std::invalid_argument);
}

TEST_CASE("characters agree with invariant-block counting, including degree ten") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& lam : compositions_of(n))
      for (const auto& alpha : partitions_of(n))
        CHECK(perm_character(n, lam, alpha) == character_by_invariant_blocks(n, lam, alpha));
  CHECK(character_by_invariant_blocks(10, C({5, 3, 2}), Pt({3, 2, 2, 1, 1, 1})) == 19);
}

TEST_CASE("character symmetries") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& alpha : partitions_of(n)) {
      CHECK(perm_character(n, C({n}), alpha) == 1);
      for (const auto& lam : compositions_of(n)) {
        // invariant under conjugate shapes
        std::vector<int> sorted = lam.parts();
        std::sort(sorted.begin(), sorted.end());
        CHECK(perm_character(n, lam, alpha) == perm_character(n, C(sorted), alpha));
      }
    }
    Int index_sum = 0;
    for (const auto& lam : compositions_of(n)) {
      Int idx = factorial(n);
      for (int p : lam.parts()) idx /= factorial(p);
      CHECK(perm_character(n, lam, Pt(std::vector<int>(static_cast<size_t>(n), 1))) == idx);
      index_sum += idx;
    }
    CHECK(index_sum > 0);
  }
}

TEST_CASE("renderers for index objects") {
  CHECK(to_text(C({3, 2, 2, 1, 1, 1})) == "(3,2,2,1,1,1)");
  CHECK(to_text(MP({{2, 1}, {3, 1, 1}, {2}})) == "((2,1),(3,1,1),(2))");
  CHECK(to_text(Pt({5, 3, 2})) == "(5,3,2)");
}
