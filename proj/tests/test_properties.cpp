#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "property_suites.hpp"

using ngit_tests::PropertyReport;

namespace {

void check_report(const PropertyReport& rep, std::size_t expected_cases) {
  CAPTURE(rep.name);
  CAPTURE(rep.first_failure);
  CHECK(rep.cases >= expected_cases);
  CHECK(rep.failures == 0);
}

}  // namespace

TEST_CASE("randomized reduced-basis checks") {
  check_report(ngit_tests::run_groebner_suite(1000, 0x5eed5001), 1000);
}

TEST_CASE("randomized membership witness checks") {
  check_report(ngit_tests::run_membership_suite(1000, 0x5eed5002), 1000);
}

TEST_CASE("randomized series coherence checks") {
  check_report(ngit_tests::run_series_suite(1000, 0x5eed5003), 1000);
}

TEST_CASE("randomized derivation rule checks") {
  check_report(ngit_tests::run_leibniz_suite(1000, 0x5eed5004), 1000);
}

TEST_CASE("suites are reproducible for a fixed seed") {
  PropertyReport a = ngit_tests::run_series_suite(50, 42);
  PropertyReport b = ngit_tests::run_series_suite(50, 42);
  CHECK(a.cases == b.cases);
  CHECK(a.failures == b.failures);
}
