#include <doctest.h>

#include "properties.hpp"

using namespace fuzzysched::testing;

namespace {

void check(const PropertyReport& r) {
  INFO(r.name, ": ", r.first_failure);
  CHECK(r.cases >= 1000);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("fuzzy outputs stay in range") { check(fuzzy_range_property(1000, 11)); }
TEST_CASE("fuzzy table is antisymmetric") { check(fuzzy_symmetry_property(1000, 12)); }
TEST_CASE("centroid lies within the support") {
  check(fuzzy_centroid_bounds_property(1000, 13));
}
TEST_CASE("kernel is work conserving") {
  check(kernel_work_conservation_property(1000, 14));
}
TEST_CASE("kernel always runs the highest-priority ready job") {
  check(kernel_priority_property(1000, 15));
}
TEST_CASE("kernel window accounting") { check(kernel_accounting_property(1000, 16)); }
TEST_CASE("plant steps compose") { check(plant_semigroup_property(1000, 17)); }
TEST_CASE("reference stays on the half circle") {
  check(reference_circle_property(1000, 18));
}

}  // TEST_SUITE
