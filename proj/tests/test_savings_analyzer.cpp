#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lacost/error.hpp"
#include "lacost/savings_analyzer.hpp"

using namespace lacost;

namespace {

SavingsParams radio(double f) {
  SavingsParams p;
  p.cost_next_paging = f;
  return p;
}

const KRange kWide{1, 200};

}  // namespace

TEST_CASE("savings examples") {
  SavingsParams p = radio(0.8);
  p.k = 6;
  p.e_n = 3.5;
  // 17(1 - 1/sqrt 6) - 1.549*0.8*2.5
  CHECK(savings(p) == doctest::Approx(17.0 * (1.0 - 1.0 / std::sqrt(6.0)) - 1.549 * 0.8 * 2.5));
  CHECK(savings(p) == doctest::Approx(6.96).epsilon(1e-3));

  p.p_inside = 0.0;
  CHECK(savings(p) == 0.0);
  p.include_list_cost = true;
  CHECK(savings(p) == doctest::Approx(-list_cost_term(p)));
  CHECK(list_cost_term(p) == doctest::Approx(2.0 / 10.0 * 6 * 17.0 / 30.0));

  SavingsParams one = radio(0.8);
  one.k = 1;
  one.e_n = 1.0;
  CHECK(savings(one) == 0.0);
  one.include_list_cost = true;
  CHECK(savings(one) == doctest::Approx(-list_cost_term(one)));

  SavingsParams bad = radio(0.8);
  bad.k = 0;
  CHECK_THROWS_AS(savings(bad), Error);
}

TEST_CASE("optimum list sizes for the fraction costs") {
  CHECK(optimum_k(radio(0.8), {1, 30}, Distribution::uniform()).k == 6);
  // Near-flat top at F = 0.2: s(14) - s(15) is about 8e-4.
  const auto low_f = optimum_k(radio(0.2), {1, 30}, Distribution::uniform());
  CHECK(low_f.k == 14);
  SavingsParams at15 = params_for_k(radio(0.2), 15, Distribution::uniform());
  CHECK(low_f.savings - savings(at15) == doctest::Approx(8.4e-4).epsilon(0.05));
  CHECK(optimum_k(radio(1.5), {1, 30}, Distribution::uniform()).k == 4);
  CHECK(optimum_k(radio(1.0), {1, 30}, Distribution::uniform()).k == 5);
  CHECK_THROWS_AS(optimum_k(radio(0.8), {5, 4}, Distribution::uniform()), Error);
}

TEST_CASE("ties resolve toward the smaller list") {
  SavingsParams flat = radio(0.8);
  flat.cost_update = 0.0;
  flat.cost_next_paging = 0.0;
  CHECK(optimum_k(flat, {1, 10}, Distribution::uniform()).k == 1);
}

TEST_CASE("zero crossings") {
  const auto f02 = savings_zero_crossing(radio(0.2), kWide, Distribution::uniform());
  REQUIRE(f02.has_value());
  CHECK(*f02 >= 95);
  CHECK(*f02 <= 105);
  const auto f08 = savings_zero_crossing(radio(0.8), kWide, Distribution::uniform());
  REQUIRE(f08.has_value());
  CHECK(*f08 >= 20);
  CHECK(*f08 <= 24);
  const auto huge = savings_zero_crossing(radio(100.0), kWide, Distribution::uniform());
  CHECK((!huge.has_value() || *huge <= 2));
}

TEST_CASE("rate ratio sweep") {
  const double ratios[] = {0.5, 0.1, 12.0};
  const auto curves = sweep_rate_ratio(radio(0.8), ratios, kWide);
  REQUIRE(curves.size() == 3);
  CHECK(curves[0].result.best_k() >= 11);
  CHECK(curves[0].result.best_k() <= 14);
  CHECK(curves[1].result.best_k() >= 35);
  CHECK(curves[1].result.best_k() <= 41);
  for (std::size_t i = 0; i < curves[2].result.k_values.size(); ++i) {
    if (curves[2].result.k_values[i] >= 3) CHECK(curves[2].result.savings[i] <= 0.0);
  }
  const double bad[] = {0.0};
  CHECK_THROWS_AS(sweep_rate_ratio(radio(0.8), bad, kWide), Error);
}

TEST_CASE("fixed network sweep") {
  const FixedNetworkConfig config;
  const auto grid = sweep_fixed_network(radio(0.8), config);
  CHECK(grid.size() == config.rc_values.size() * config.p_inside_values.size());
  bool any_positive_above_30 = false;
  for (const auto& point : grid) {
    for (std::size_t i = 0; i < point.result.savings.size(); ++i) {
      if (point.rc <= 30) CHECK(point.result.savings[i] <= 0.0);
      if (point.rc > 30 && point.result.savings[i] > 0.0) any_positive_above_30 = true;
      if (point.rc == 50 && point.result.savings[i] > 0.0) {
        CHECK(point.p_inside > 0.6);
        CHECK(point.result.k_values[i] <= 5);
      }
    }
  }
  CHECK(any_positive_above_30);

  // Optimum k is non-decreasing in p_inside for each rc.
  for (std::size_t r = 0; r < config.rc_values.size(); ++r) {
    for (std::size_t j = 1; j < config.p_inside_values.size(); ++j) {
      const auto& lo = grid[r * config.p_inside_values.size() + j - 1].result;
      const auto& hi = grid[r * config.p_inside_values.size() + j].result;
      CHECK(lo.best_k() <= hi.best_k());
    }
  }

  // ...and in calls_per_list_update.
  for (double rc : config.rc_values) {
    int previous = 0;
    for (double calls : {1.0, 5.0, 10.0, 20.0, 50.0, 100.0}) {
      FixedNetworkConfig c = config;
      c.rc_values = {rc};
      c.p_inside_values = {0.8};
      c.calls_per_list_update = calls;
      const int k = sweep_fixed_network(radio(0.8), c).front().result.best_k();
      CHECK(k >= previous);
      previous = k;
    }
  }

  // A vanishing list cost recovers the radio curve.
  FixedNetworkConfig c = config;
  c.rc_values = {1e15};
  c.p_inside_values = {1.0};
  c.rate_update = 1.0;
  const auto limit = sweep_fixed_network(radio(0.8), c).front().result;
  const auto plain = sweep_k(radio(0.8), config.k_range, Distribution::uniform());
  for (std::size_t i = 0; i < plain.savings.size(); ++i) {
    CHECK(limit.savings[i] == doctest::Approx(plain.savings[i]));
  }
}

TEST_CASE("radio savings are unimodal for the uniform distribution") {
  for (double f : {0.05, 0.2, 0.5, 0.8, 1.0, 1.5, 3.0}) {
    const auto r = sweep_k(radio(f), kWide, Distribution::uniform());
    const std::size_t top = r.argmax;
    for (std::size_t i = 1; i <= top; ++i) CHECK(r.savings[i] > r.savings[i - 1]);
    for (std::size_t i = top + 1; i < r.savings.size(); ++i) CHECK(r.savings[i] < r.savings[i - 1]);
  }
}

TEST_CASE("scan optimum matches the first-order condition") {
  for (double f : {0.2, 0.5, 0.8, 1.0, 1.5}) {
    // 17 / (2 k^1.5) = 1.549 F / 2
    const double k_cont = std::pow(17.0 / (1.549 * f), 2.0 / 3.0);
    const int lo = static_cast<int>(std::floor(k_cont));
    auto value = [&](int k) {
      return 17.0 * (1.0 - 1.0 / std::sqrt(k)) - 1.549 * f * (k - 1) / 2.0;
    };
    const int best = value(lo) >= value(lo + 1) ? lo : lo + 1;
    CHECK(optimum_k(radio(f), kWide, Distribution::uniform()).k == best);
  }
}

TEST_CASE("savings scale with costs and keep the optimum") {
  for (double f : {0.2, 0.8, 1.5}) {
    SavingsParams p = radio(f);
    const Optimum base = optimum_k(p, kWide, Distribution::uniform());
    p.cost_update *= 7.0;
    p.cost_paging_area *= 7.0;
    const Optimum scaled = optimum_k(p, kWide, Distribution::uniform());
    CHECK(scaled.k == base.k);
    CHECK(scaled.savings == doctest::Approx(7.0 * base.savings));
  }
}

TEST_CASE("savings monotonicity") {
  SavingsParams p = radio(0.8);
  p.k = 6;
  p.e_n = 3.5;
  p.include_list_cost = true;
  const double s = savings(p);
  SavingsParams q = p;
  q.cost_update *= 1.1;
  q.rc *= 1.1;  // keep the list cost fixed
  CHECK(savings(q) > s);
  q = p;
  q.cost_next_paging = 0.9;
  CHECK(savings(q) < s);
  q = p;
  q.e_n = 4.0;
  CHECK(savings(q) < s);
  q = p;
  q.rc = 20.0;
  CHECK(savings(q) < s);
}

TEST_CASE("explicit distribution uses list prefixes") {
  const Distribution d = Distribution::explicit_list({0.5, 0.2, 0.1, 0.05});
  const SavingsParams p = params_for_k(radio(0.8), 3, d);
  CHECK(p.p_inside == doctest::Approx(0.8));
  CHECK(p.e_n == doctest::Approx((0.5 + 0.4 + 0.3) / 0.8));
  CHECK_THROWS_AS(params_for_k(radio(0.8), 5, d), Error);
  CHECK(optimum_k(radio(0.8), {1, 4}, d).k >= 1);
}

TEST_CASE("figure data") {
  FigureContext ctx;

  SUBCASE("figure 6 starts at Cp*Rp") {
    const CsvTable t = figure_data(6, ctx);
    bool seen = false;
    for (const auto& row : t.rows) {
      if (row[0] == "1.5" && row[2] == "1") {
        CHECK(std::stod(row[3]) == doctest::Approx(ctx.radio.cost_paging_area * ctx.radio.rate_paging));
        seen = true;
      }
    }
    CHECK(seen);
  }

  SUBCASE("figure 8 optimum at k = 6 for F = 0.8") {
    const CsvTable t = figure_data(8, ctx);
    int best = 0;
    for (const auto& row : t.rows) {
      if (row[0] == "0.8" && row[4] == "1") best = std::stoi(row[1]);
    }
    CHECK(best == 6);
  }

  SUBCASE("figure 3 statistics-based curve is 5% of the classical one") {
    const CsvTable t = figure_data(3, ctx);
    int rows = 0;
    for (const auto& row : t.rows) {
      if (row[0] != "k3_a1_0.8") continue;
      CHECK(std::stod(row[6]) == doctest::Approx(0.05 * std::stod(row[5])));
      ++rows;
    }
    CHECK(rows == 50);
  }

  SUBCASE("every known figure renders deterministically") {
    for (int id : known_figures()) {
      const CsvTable a = figure_data(id, ctx);
      CHECK(!a.rows.empty());
      CHECK(a.str() == figure_data(id, ctx).str());
      CHECK(a.metadata.front() == "figure: " + std::to_string(id));
    }
  }

  SUBCASE("unknown figure") {
    try {
      (void)figure_data(4, ctx);
      FAIL("expected usage error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Usage);
    }
  }
}
