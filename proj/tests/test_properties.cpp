#include <doctest.h>

#include "lmm/properties.hpp"

using namespace lmm;

TEST_SUITE("properties") {
  TEST_CASE("Leibniz rule for diff") {
    auto r = check_leibniz_diff(11, 200);
    INFO(r.first_failure);
    CHECK(r.ok());
  }
  TEST_CASE("Leibniz rule for loop_apply") {
    auto r = check_leibniz_loop(13, 200);
    INFO(r.first_failure);
    CHECK(r.ok());
  }
  TEST_CASE("projector algebra") {
    auto r = check_projectors(17, 100);
    INFO(r.first_failure);
    CHECK(r.ok());
  }
  TEST_CASE("Z convolution") { CHECK(check_z_convolution(8).ok()); }
  TEST_CASE("grading and cutoff") {
    CouplingTable t;
    auto r = check_lambda_grading(10, t);
    INFO(r.first_failure);
    CHECK(r.ok());
  }
}
