#include <doctest.h>

#include "symorb/koszul.hpp"
#include "symorb/series.hpp"

using namespace symorb;

namespace {

SignedPermutationMatrix apply_then(const SignedPermutationMatrix& first,
                                   const SignedPermutationMatrix& then) {
  SignedPermutationMatrix out;
  out.dimension = first.dimension;
  out.target.resize(first.dimension);
  out.sign.resize(first.dimension);
  for (std::size_t i = 0; i < first.dimension; ++i) {
    out.target[i] = then.target[first.target[i]];
    out.sign[i] = first.sign[i] * then.sign[first.target[i]];
  }
  return out;
}

bool is_identity(const SignedPermutationMatrix& a) {
  for (std::size_t i = 0; i < a.dimension; ++i)
    if (a.target[i] != i || a.sign[i] != 1) return false;
  return true;
}

}  // namespace

TEST_CASE("tensor word space indexing") {
  const GradedDimension phi = GradedDimension::from_list({1, 1});
  const TensorWordSpace space(phi, 3);
  CHECK(space.generator_count() == 2);
  CHECK(space.word_count() == 8);
  CHECK(space.generator_degree(0) == 0);
  CHECK(space.generator_degree(1) == 1);
  for (std::size_t w = 0; w < space.word_count(); ++w)
    CHECK(space.index_of(space.word_at(w)) == w);
  CHECK(space.word_degree(0) == 0);
  CHECK(space.word_degree(space.word_count() - 1) == 3);
}

TEST_CASE("single even generator acts trivially") {
  const GradedDimension phi = GradedDimension::from_list({1});
  for (int m = 1; m <= 4; ++m) {
    const TensorWordSpace space(phi, m);
    for (const Permutation& sigma : all_permutations(m))
      CHECK(is_identity(koszul_action(space, sigma)));
  }
}

TEST_CASE("odd-odd swap picks up a sign") {
  const GradedDimension phi = GradedDimension::from_list({0, 1});
  const TensorWordSpace space(phi, 2);
  const SignedPermutationMatrix swap =
      koszul_action(space, Permutation::transposition(2, 0, 1));
  REQUIRE(swap.dimension == 1);
  CHECK(swap.target[0] == 0);
  CHECK(swap.sign[0] == -1);
}

TEST_CASE("mixed-parity swap has exactly one sign flip") {
  const GradedDimension phi = GradedDimension::from_list({1, 1});
  const TensorWordSpace space(phi, 2);
  const SignedPermutationMatrix swap =
      koszul_action(space, Permutation::transposition(2, 0, 1));
  REQUIRE(swap.dimension == 4);
  int minus = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (swap.sign[i] == -1) ++minus;
  CHECK(minus == 1);
  // the odd|odd word is the last one and stays in place with the flip
  CHECK(swap.target[3] == 3);
  CHECK(swap.sign[3] == -1);
}

TEST_CASE("word action composes as a group action") {
  const GradedDimension phi = GradedDimension::from_list({1, 1});
  for (int m = 2; m <= 3; ++m) {
    const TensorWordSpace space(phi, m);
    const std::vector<Permutation> group = all_permutations(m);
    for (const Permutation& a : group)
      for (const Permutation& b : group) {
        const SignedPermutationMatrix lhs = koszul_action(space, compose(a, b));
        const SignedPermutationMatrix rhs =
            apply_then(koszul_action(space, a), koszul_action(space, b));
        CHECK(lhs.target == rhs.target);
        CHECK(lhs.sign == rhs.sign);
      }
  }
}

TEST_CASE("averaging projector is idempotent with matching rank") {
  const GradedDimension phi = GradedDimension::from_list({1, 1});
  for (int m = 1; m <= 3; ++m) {
    const RatMat p = averaging_projector(phi, m);
    CHECK(equal(RatMat(p * p), p));
    const GradedDimension dims = invariant_dimension(phi, m);
    CHECK(rank_exact(p) == dims.total_dimension());
  }
}

TEST_CASE("invariant dimensions of small powers") {
  const GradedDimension sphere = GradedDimension::from_list({1, 0, 1});
  const GradedDimension sq = invariant_dimension(sphere, 2);
  CHECK(sq.betti(0) == 1);
  CHECK(sq.betti(2) == 1);
  CHECK(sq.betti(4) == 1);
  CHECK(sq.total_dimension() == 3);

  const GradedDimension line = GradedDimension::from_list({0, 1});
  CHECK(invariant_dimension(line, 2).total_dimension() == 0);

  const GradedDimension point = GradedDimension::point();
  for (int m = 0; m <= 6; ++m) {
    const GradedDimension dims = invariant_dimension(point, m);
    CHECK(dims.betti(0) == 1);
    CHECK(dims.total_dimension() == 1);
  }
}

TEST_CASE("brute-force counts match the series") {
  CHECK(verify_macdonald(GradedDimension::from_list({1, 0, 1}), 3).pass);
  CHECK(verify_macdonald(GradedDimension::from_list({2, 1}), 3).pass);
  CHECK(verify_macdonald(GradedDimension::point(), 6).pass);
  CHECK(verify_macdonald(GradedDimension::from_list({1, 2, 1}), 3).pass);
}

TEST_CASE("size caps are hard errors") {
  const GradedDimension big = GradedDimension::from_list({101});
  CHECK_THROWS_AS(TensorWordSpace(big, 3), std::invalid_argument);
  CHECK_THROWS_AS(invariant_dimension(GradedDimension::point(), 7),
                  std::invalid_argument);
  CHECK_NOTHROW(TensorWordSpace(big, 3, 101L * 101L * 101L));
}

TEST_CASE("report text lists one case per power and degree") {
  const MacdonaldReport report =
      verify_macdonald(GradedDimension::from_list({1, 0, 1}), 2);
  CHECK(report.pass);
  CHECK(!report.cases.empty());
  for (const MacdonaldCheck& c : report.cases) {
    CHECK(c.pass);
    CHECK(c.expected == c.got);
  }
  CHECK(report.str().find("pass") != std::string::npos);
}
