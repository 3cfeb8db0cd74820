#include <catch2/catch_amalgamated.hpp>
#include <cinfty/linalg.hpp>

using namespace cinfty;

TEST_CASE("identity system returns input, empty kernel") {
  Mat I = Mat::identity(3);
  std::vector<Scalar> b = {rat(1), rat(-2, 3), rat(5)};
  auto r = solve_exact(I, b);
  REQUIRE(r.particular.has_value());
  CHECK(*r.particular == b);
  CHECK(r.kernel.empty());
}

TEST_CASE("zero matrix, zero vector: zero solution, full kernel") {
  Mat Z(2, 4);
  auto r = solve_exact(Z, {rat(0), rat(0)});
  REQUIRE(r.particular.has_value());
  CHECK(r.kernel.size() == 4);
  for (const auto& q : *r.particular) CHECK(is_zero(q));
}

TEST_CASE("2x2 rational system verified by substitution") {
  Mat A(2, 2);
  A.at(0, 0) = rat(1, 2);
  A.at(0, 1) = rat(3);
  A.at(1, 0) = rat(-2);
  A.at(1, 1) = rat(1, 5);
  std::vector<Scalar> b = {rat(7, 3), rat(-1)};
  auto r = solve_exact(A, b);
  REQUIRE(r.particular.has_value());
  CHECK(A.apply(*r.particular) == b);
  CHECK(r.kernel.empty());
}

TEST_CASE("kernel vectors map to zero; substitution reproduces b") {
  // rank-1 3x3
  Mat A(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A.at(i, j) = rat((i + 1) * (j + 1));
  std::vector<Scalar> b = {rat(2), rat(4), rat(6)};
  auto r = solve_exact(A, b);
  REQUIRE(r.particular.has_value());
  CHECK(A.apply(*r.particular) == b);
  CHECK(r.kernel.size() == 2);
  for (const auto& k : r.kernel) {
    auto z = A.apply(k);
    for (const auto& q : z) CHECK(is_zero(q));
  }
}

TEST_CASE("inconsistent system reported") {
  Mat A(2, 1);
  A.at(0, 0) = rat(1);
  A.at(1, 0) = rat(1);
  auto r = solve_exact(A, {rat(1), rat(2)});
  CHECK_FALSE(r.particular.has_value());
}

TEST_CASE("free variables get zeros (deterministic witnesses)") {
  Mat A(1, 3);
  A.at(0, 0) = rat(1);
  A.at(0, 1) = rat(1);
  A.at(0, 2) = rat(1);
  auto r = solve_exact(A, {rat(3)});
  REQUIRE(r.particular.has_value());
  CHECK((*r.particular)[0] == rat(3));
  CHECK(is_zero((*r.particular)[1]));
  CHECK(is_zero((*r.particular)[2]));
}

TEST_CASE("subspace membership") {
  auto s = Subspace::span(3, {{rat(1), rat(0), rat(1)}, {rat(0), rat(1), rat(1)}});
  CHECK(s.dim() == 2);
  CHECK(s.contains({rat(2), rat(3), rat(5)}));
  CHECK_FALSE(s.contains({rat(0), rat(0), rat(1)}));
}
