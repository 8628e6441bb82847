#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "lacost/error.hpp"
#include "lacost/scenario.hpp"

using namespace lacost;

namespace {

Scenario parse(const std::string& text, const std::filesystem::path& base = {}) {
  std::istringstream in(text);
  return Scenario::parse(in, base);
}

std::size_t column(const CsvTable& t, const std::string& name) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) return i;
  }
  FAIL("missing column " << name);
  return 0;
}

}  // namespace

TEST_CASE("defaults round-trip through dump") {
  const Scenario d = Scenario::defaults();
  const Scenario again = parse(d.dump());
  CHECK(again == d);
  CHECK(again.dump() == d.dump());
  d.validate();
}

TEST_CASE("modified scenario round-trips") {
  Scenario s;
  s.geometry = Geometry::Hexagonal;
  s.m = 12;
  s.partition = PartitionScheme::blocks(3, 4);
  s.algorithm = TallySelection::Both;
  s.network.lambda_t1 = 0.35;
  s.network.lambda_t2 = 0.1 / 3.0;
  s.alphas = {0.7, 0.2};
  s.bytes.set("fixed", {1, 2, 3, 4.25, 5});
  s.radio.cost_next_paging = 0.2;
  s.fixed.rc_values = {25, 75};
  s.seed = 123456789012345ull;
  CHECK(parse(s.dump()) == s);
}

TEST_CASE("scenario defaults and derived values") {
  const Scenario s = parse("traffic.lambda_t1 = 1.2\n");
  CHECK(s.network.lambda_t2 == doctest::Approx(0.012));
  const Scenario t = parse("traffic.lambda_t1 = 1.2\ntraffic.lambda_t2 = 0.5\n");
  CHECK(t.network.lambda_t2 == 0.5);
  const Scenario u = parse("# comment only\n\nlist.alphas =\n");
  CHECK(u.alphas.empty());
  const Scenario v = parse("bytes.radio.nbp1 = 30  # trailing comment\n");
  CHECK(v.bytes.at("radio").nbp1 == 30);
  CHECK(v.bytes.at("radio").nbp2 == 83);
}

TEST_CASE("unknown keys are reported by name") {
  try {
    (void)parse("grid.m = 10\ngrid.colour = red\nbytes.radio.nbx = 3\n");
    FAIL("expected config error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Config);
    const std::string what = e.what();
    CHECK(what.find("grid.colour") != std::string::npos);
    CHECK(what.find("bytes.radio.nbx") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("grid.m = ten\n"), Error);
  CHECK_THROWS_AS(parse("just some words\n"), Error);
}

TEST_CASE("validation catches bad probabilities and partitions") {
  CHECK_THROWS_AS(parse("list.alphas = 0.8,0.5\n").validate(), Error);
  CHECK_THROWS_AS(parse("grid.m = 7\npartition.scheme = quadrants\n").validate(), Error);
  CHECK_THROWS_AS(parse("partition.scheme = explicit\n").validate(), Error);
  CHECK_THROWS_AS(parse("cost.interface = fixed\n").validate(), Error);
}

TEST_CASE("explicit partition path resolves against the scenario directory") {
  const auto dir = std::filesystem::temp_directory_path() / "lacost_scenario_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream map(dir / "zone.txt");
    map << "square 4 2\n";
    for (int r = 0; r < 4; ++r) map << "0 0 1 1\n";
  }
  {
    std::ofstream sc(dir / "s.txt");
    sc << "grid.m = 4\npartition.scheme = explicit\npartition.file = zone.txt\n";
  }
  const Scenario s = Scenario::load(dir / "s.txt");
  s.validate();
  CHECK(s.make_partition().la_count() == 2);
  CHECK(parse(s.dump()) == s);
}

TEST_CASE("betas command") {
  Scenario s;
  const CsvTable t = cmd_betas(s);
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][column(t, "x_total")] == "116");
  CHECK(t.rows[0][column(t, "dot_total")] == "108");
  CHECK(t.rows[0][column(t, "beta1")].starts_with("0.48214"));
  CHECK(t.rows[0][column(t, "beta1_2dp")] == "0.48");
  CHECK(t.rows[0][column(t, "la_sizes")] == "25;25;25;25");

  s.geometry = Geometry::Hexagonal;
  s.partition = PartitionScheme::halves();
  s.algorithm = TallySelection::Both;
  const CsvTable h = cmd_betas(s);
  REQUIRE(h.rows.size() == 2);
  CHECK(h.rows[1][column(h, "algorithm")] == "advanced");
  CHECK(h.rows[1][column(h, "x_total")] == "78");
  CHECK(h.rows[1][column(h, "dot_total")] == "38");

  s.partition = PartitionScheme::single();
  s.algorithm = TallySelection::Advanced;
  CHECK(cmd_betas(s).rows[0][column(h, "beta2")] == "1");
}

TEST_CASE("costs command") {
  Scenario s;
  s.alphas = {};
  CsvTable t = cmd_costs(s);
  REQUIRE(t.rows.size() == 2);
  CHECK(std::stod(t.rows[0][column(t, "cost_paging")]) == doctest::Approx(133.98));

  s.alphas = {0.8, 0.1, 0.05};
  t = cmd_costs(s);
  const double cs_update = std::stod(t.rows[0][column(t, "cost_update")]);
  const double as_update = std::stod(t.rows[1][column(t, "cost_update")]);
  CHECK(as_update == doctest::Approx(0.05 * cs_update));

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> a(1 + trial % 6);
    double sum = 0.0;
    for (auto& v : a) sum += (v = u(rng));
    for (auto& v : a) v = v / sum * u(rng);
    std::sort(a.begin(), a.end(), std::greater<>());
    s.alphas = a;
    s.cells_per_la = 1 + trial % 30;
    s.reading = trial % 2 ? PagingReading::Literal : PagingReading::Principled;
    const CsvTable r = cmd_costs(s);
    CHECK(std::stod(r.rows[1][column(r, "cost_paging")]) >= std::stod(r.rows[0][column(r, "cost_paging")]));
  }
}

TEST_CASE("sweep command") {
  const Scenario s;
  const SweepOutput out = cmd_sweep(s, {"F", {0.2, 0.8, 1.0, 1.5}});
  REQUIRE(out.summary.rows.size() == 4);
  const std::vector<std::string> expected{"14", "6", "5", "4"};
  for (std::size_t i = 0; i < 4; ++i) CHECK(out.summary.rows[i][1] == expected[i]);
  CHECK(out.curves.rows.size() == 4 * 30);

  const SweepOutput fixed = cmd_sweep(s, {"fixed", {}});
  CHECK(fixed.summary.rows.size() == 25);

  CHECK(cmd_sweep(s, {"calls_per_update", {5, 50}}).summary.rows.size() == 2);
  CHECK_THROWS_AS(cmd_sweep(s, {"speed", {1}}), Error);
  CHECK_THROWS_AS(cmd_sweep(s, {"F", {}}), Error);
}

TEST_CASE("simulate command is deterministic") {
  Scenario s;
  s.walk_steps = 200'000;
  s.paging_trials = 20'000;
  const std::string a = cmd_simulate(s).str();
  CHECK(a == cmd_simulate(s).str());
  s.seed += 1;
  CHECK(a != cmd_simulate(s).str());
}

TEST_CASE("number formatting is shortest round-trip") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(133.98) == "133.98");
  CHECK(format_number(-0.0) == "0");
  CHECK(std::stod(format_number(1.0 / 3.0)) == 1.0 / 3.0);
  CHECK(format_fixed(0.4821428, 2) == "0.48");
}
