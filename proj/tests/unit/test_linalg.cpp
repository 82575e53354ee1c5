#include <doctest.h>

#include "generators.hpp"
#include "koszul/errors.hpp"
#include "koszul/field.hpp"
#include "koszul/linalg.hpp"
#include "oracles.hpp"

using namespace koszul;

TEST_CASE("fields") {
  CHECK(Field::rationals().name() == "Q");
  CHECK(Field::prime(7).name() == "F_7");
  CHECK(Field::of_characteristic(0).is_rational());
  CHECK_THROWS_AS(Field::prime(4), Error);
  CHECK_THROWS_AS(Field::prime(1), Error);
  CHECK(Field::prime(2147483647).characteristic() == 2147483647u);
}

TEST_CASE("rank of small matrices") {
  SparseMatrix m(2, 2);
  m.add(0, 0, 2);
  m.add(1, 1, 2);
  CHECK(rank(m, Field::rationals()) == 2);
  CHECK(rank(m, Field::prime(2)) == 0);
  CHECK(rank(m, Field::prime(3)) == 2);

  SparseMatrix dup(1, 1);
  dup.add(0, 0, 1);
  dup.add(0, 0, -1);
  CHECK(rank(dup, Field::rationals()) == 0);
  CHECK(rank(SparseMatrix(0, 4), Field::rationals()) == 0);
}

TEST_CASE("sparse rank matches dense elimination on random matrices") {
  gen::Rng rng(0x5eed0001);
  const Field fields[] = {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(101)};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
    auto m = gen::random_matrix(rng, rows, cols, 0.35, trial % 3 == 0 ? 1 : 9);
    for (const auto& f : fields) {
      INFO("trial " << trial << " field " << f.name());
      CHECK(rank(m, f) == oracle::dense_rank(m, f));
    }
  }
}
