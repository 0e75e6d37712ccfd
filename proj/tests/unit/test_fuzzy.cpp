#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fuzzysched/error.hpp"
#include "fuzzysched/fuzzy/inference.hpp"
#include "fuzzysched/fuzzy/lookup_table.hpp"
#include "fuzzysched/fuzzy/membership.hpp"
#include "fuzzysched/fuzzy/rules.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"

using namespace fuzzysched;
using namespace fuzzysched::fuzzy;
using fuzzysched::testing::kExpectedRules;
using fuzzysched::testing::kExpectedTable;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::kInvariant;
}

std::vector<double> shape_of(const MembershipFamily& f, OutputLabel label) {
  const auto s = f.shape(static_cast<std::size_t>(label));
  return {s.begin(), s.end()};
}

}  // namespace

TEST_SUITE("fuzzy") {

TEST_CASE("universes are symmetric with the documented spans") {
  const auto in = input_universe();
  CHECK(in.min_level() == -6);
  CHECK(in.max_level() == 6);
  CHECK(in.size() == 13);
  CHECK(in.to_value(-6) == doctest::Approx(-0.3));
  CHECK(in.to_value(6) == doctest::Approx(0.3));

  const auto out = output_universe();
  CHECK(out.size() == 15);
  CHECK(out.to_value(-7) == doctest::Approx(0.5));
  CHECK(out.to_value(0) == doctest::Approx(1.0));
  CHECK(out.to_value(7) == doctest::Approx(1.5));
  CHECK(kind_of([&] { (void)in.index_of(7); }) == ErrorKind::kOutOfRange);
}

TEST_CASE("membership shapes match direct piecewise-linear evaluation") {
  const auto in = default_input_family();
  const std::array<double, 5> ip{-6, -3, 0, 3, 6};
  for (std::size_t i = 0; i < 5; ++i) {
    const double left = i == 0 ? ip[0] : ip[i - 1];
    const double right = i == 4 ? ip[4] : ip[i + 1];
    for (int x = -6; x <= 6; ++x) {
      CHECK(in.degree(i, x) == doctest::Approx(testing::triangle(x, left, ip[i], right)));
    }
  }
  const auto out = default_output_family();
  const std::array<double, 7> op{-6, -4, -2, 0, 2, 4, 6};
  for (std::size_t i = 0; i < 7; ++i) {
    const double left = i == 0 ? op[0] : op[i - 1];
    const double right = i == 6 ? op[6] : op[i + 1];
    for (int x = -7; x <= 7; ++x) {
      CHECK(out.degree(i, x) == doctest::Approx(testing::triangle(x, left, op[i], right)));
    }
  }
}

TEST_CASE("membership family invariants") {
  for (const auto& family : {default_input_family(), default_output_family()}) {
    const auto& u = family.universe();
    for (int x = u.min_level(); x <= u.max_level(); ++x) {
      double sum = 0.0;
      for (std::size_t i = 0; i < family.label_count(); ++i) sum += family.degree(i, x);
      CHECK(sum > 0.0);
      CHECK(sum <= 2.0);
    }
    // Interior labels peak at exactly one level.
    for (std::size_t i = 1; i + 1 < family.label_count(); ++i) {
      const auto s = family.shape(i);
      CHECK(std::count(s.begin(), s.end(), 1.0) == 1);
    }
  }
}

TEST_CASE("membership family rejects bad peaks") {
  CHECK(kind_of([] {
          MembershipFamily(input_universe(), {"A", "B"}, {2, 1});
        }) == ErrorKind::kOutOfRange);
  CHECK(kind_of([] {
          MembershipFamily(input_universe(), {"A", "B"}, {0, 9});
        }) == ErrorKind::kOutOfRange);
}

TEST_CASE("fuzzify examples") {
  const auto in = default_input_family();
  CHECK(fuzzify(0, in) == MembershipVector{0, 0, 1, 0, 0});
  CHECK(fuzzify(-6, in) == MembershipVector{1, 0, 0, 0, 0});

  // Between the NS (-3) and ZE (0) peaks the two degrees interpolate linearly.
  const auto m1 = fuzzify(-1, in);
  CHECK(m1[1] == doctest::Approx(1.0 / 3.0));
  CHECK(m1[2] == doctest::Approx(2.0 / 3.0));
  const auto m2 = fuzzify(-2, in);
  CHECK(m2[1] == doctest::Approx(2.0 / 3.0));
  CHECK(m2[2] == doctest::Approx(1.0 / 3.0));

  // On the output family the NS-ZE midpoint is a level of its own.
  const auto mid = fuzzify(-1, default_output_family());
  CHECK(mid == MembershipVector{0, 0, 0.5, 0.5, 0, 0, 0});

  CHECK(kind_of([&] { (void)fuzzify(7, in); }) == ErrorKind::kOutOfRange);
}

TEST_CASE("rule base matches the expected matrix") {
  const auto rules = utilization_rules();
  for (std::size_t e = 0; e < 5; ++e) {
    for (std::size_t ec = 0; ec < 5; ++ec) {
      CHECK(to_string(rules.consequent(e, ec)) == kExpectedRules[e][ec]);
    }
  }
  // Overload (E = NB) enlarges periods.
  CHECK(rules.consequent(InputLabel::kNB, InputLabel::kZE) == OutputLabel::kPB);
}

TEST_CASE("infer: a single rule at full strength reproduces its consequent") {
  const auto out = default_output_family();
  const auto rules = utilization_rules();
  const std::vector<double> e{0, 0, 0, 1, 0};   // PS
  const std::vector<double> ec{0, 0, 0, 0, 1};  // PB -> NM
  const auto agg = infer(e, ec, rules, out);
  CHECK(agg.degrees == shape_of(out, OutputLabel::kNM));
}

TEST_CASE("infer: two rules clip and combine by pointwise max") {
  const auto out = default_output_family();
  const auto rules = utilization_rules();
  // (ZE, ZE) -> ZE at 0.5 and (ZE, PB) -> NS at 0.25.
  const std::vector<double> e{0, 0, 0.5, 0, 0};
  const std::vector<double> ec{0, 0, 1, 0, 0.25};
  const auto agg = infer(e, ec, rules, out);

  // Levels -7..7: NS peaks at -2 over [-4, 0], ZE peaks at 0 over [-2, 2].
  const std::vector<double> expected{0, 0, 0, 0, 0.25, 0.25, 0.5, 0.5,
                                     0.5, 0, 0, 0, 0, 0, 0};
  REQUIRE(agg.degrees.size() == expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CHECK(agg.degrees[k] == doctest::Approx(expected[k]));
  }
}

TEST_CASE("infer rejects inputs where nothing fires") {
  const std::vector<double> zero(5, 0.0);
  const std::vector<double> some{0, 0, 1, 0, 0};
  CHECK(kind_of([&] {
          (void)infer(zero, some, utilization_rules(), default_output_family());
        }) == ErrorKind::kDegenerateSet);
}

TEST_CASE("centroid examples") {
  OutputSet set{output_universe(), std::vector<double>(15, 0.0)};
  auto at = [&](int level) -> double& { return set.degrees[set.universe.index_of(level)]; };

  at(-3) = 0.7;
  at(3) = 0.7;
  CHECK(defuzzify_centroid(set) == doctest::Approx(0.0));

  std::fill(set.degrees.begin(), set.degrees.end(), 0.0);
  at(4) = 1.0;
  CHECK(defuzzify_centroid(set) == 4.0);

  at(4) = 1.0;
  at(2) = 0.5;
  CHECK(defuzzify_centroid(set) == doctest::Approx(10.0 / 3.0));

  std::fill(set.degrees.begin(), set.degrees.end(), 0.0);
  CHECK(kind_of([&] { (void)defuzzify_centroid(set); }) == ErrorKind::kDegenerateSet);
}

TEST_CASE("round half away from zero") {
  CHECK(round_half_away(2.5) == 3);
  CHECK(round_half_away(-2.5) == -3);
  CHECK(round_half_away(0.49) == 0);
  CHECK(round_half_away(-0.5) == -1);
}

TEST_CASE("golden table equals the expected grid on every cell") {
  const auto& golden = golden_lookup_table();
  CHECK(golden.provenance() == Provenance::kGolden);
  for (int e = -6; e <= 6; ++e) {
    for (int ec = -6; ec <= 6; ++ec) {
      CHECK(golden.at(e, ec) == kExpectedTable[e + 6][ec + 6]);
    }
  }
  CHECK(golden.is_monotone());
  CHECK(golden.at(-6, -6) == -golden.at(6, 6));
}

TEST_CASE("lookup examples and range errors") {
  const auto& t = golden_lookup_table();
  CHECK(lookup(t, -3, 6) == 0);
  CHECK(lookup(t, 2, -6) == 3);
  CHECK(lookup(t, 0, 0) == 0);
  CHECK(kind_of([&] { (void)lookup(t, 7, 0); }) == ErrorKind::kOutOfRange);
  CHECK(kind_of([&] { (void)lookup(t, 0, -7); }) == ErrorKind::kOutOfRange);
}

TEST_CASE("compiled table: corners, centre, monotone, close to golden") {
  const auto compiled = compile_lookup_table(utilization_rules(), default_input_family(),
                                             default_output_family());
  CHECK(compiled.provenance() == Provenance::kCompiled);
  CHECK(compiled.at(-6, -6) == 6);
  CHECK(compiled.at(0, 0) == 0);
  CHECK(compiled.at(6, 6) == -6);
  CHECK(compiled.is_monotone());

  const auto diff = diff_tables(compiled, golden_lookup_table());
  CHECK(diff.fraction_within_one() >= 0.85);
  CHECK(diff.max_abs_delta <= 2);

  const std::string report = format_diff_report(compiled, golden_lookup_table(), diff);
  CHECK(report.find("cells_within_one") != std::string::npos);
  CHECK(report.find("compiled_monotone true") != std::string::npos);
}

TEST_CASE("table text round-trips and malformed text is rejected") {
  const auto& golden = golden_lookup_table();
  CHECK(parse_lookup_table(golden.to_text(), Provenance::kGolden) == golden);
  CHECK(parse_lookup_table(golden_lookup_table_text(), Provenance::kGolden) == golden);

  CHECK(kind_of([] { (void)parse_lookup_table("1 2 3", Provenance::kGolden); }) ==
        ErrorKind::kConfigSyntax);
  std::string bad(golden.to_text());
  bad.replace(bad.find('6'), 1, "9");
  CHECK(kind_of([&] { (void)parse_lookup_table(bad, Provenance::kGolden); }) ==
        ErrorKind::kOutOfRange);
  CHECK(kind_of([] {
          (void)load_lookup_table("/nonexistent/table.txt", Provenance::kGolden);
        }) == ErrorKind::kIo);
}

TEST_CASE("table monotonicity detects a violation") {
  auto cells = golden_lookup_table().cells();
  cells[6][6] = 7;
  CHECK_FALSE(LookupTable(cells, Provenance::kCompiled).is_monotone());
}

}  // TEST_SUITE
