#include "lacost/savings_analyzer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "lacost/error.hpp"

namespace lacost {

void SavingsParams::validate() const {
  if (k < 1) throw Error(ErrorKind::Domain, "list size k must be at least 1");
  if (!(p_inside >= 0.0 && p_inside <= 1.0)) {
    throw Error(ErrorKind::InvalidProbability, "p_inside must lie in [0,1]");
  }
  if (cost_update < 0 || cost_paging_area < 0 || rate_update < 0 || rate_paging < 0 ||
      cost_next_paging < 0) {
    throw Error(ErrorKind::Domain, "costs and rates must be non-negative");
  }
  if (e_n < 1.0 || e_n > static_cast<double>(k) + 1e-9) {
    throw Error(ErrorKind::Domain, "expected LAs paged must lie in [1, k]");
  }
  if (include_list_cost) {
    if (!(rc > 0.0)) throw Error(ErrorKind::Domain, "cost ratio rc must be positive");
    if (calls_per_list_update < 1.0) {
      throw Error(ErrorKind::Domain, "calls per list update must be at least 1");
    }
    if (lambda_sum < 0.0) throw Error(ErrorKind::Domain, "call rates must be non-negative");
  }
}

double list_cost_term(const SavingsParams& p) {
  if (!p.include_list_cost) return 0.0;
  // One list update costs cost_update / rc per managed LA.
  const double cost_list = static_cast<double>(p.k) * p.cost_update / p.rc;
  return p.lambda_sum / p.calls_per_list_update * cost_list;
}

double savings(const SavingsParams& p) {
  p.validate();
  const double update_gain =
      p.cost_update * p.rate_update * (1.0 - 1.0 / std::sqrt(static_cast<double>(p.k)));
  const double paging_loss = p.cost_paging_area * p.rate_paging * p.cost_next_paging * (p.e_n - 1.0);
  return p.p_inside * (update_gain - paging_loss) - list_cost_term(p);
}

SavingsParams params_for_k(const SavingsParams& tmpl, int k, const Distribution& dist) {
  if (k < 1) throw Error(ErrorKind::Domain, "list size k must be at least 1");
  SavingsParams p = tmpl;
  p.k = k;
  if (dist.kind == Distribution::Kind::UniformConditional) {
    p.e_n = (static_cast<double>(k) + 1.0) / 2.0;
    return p;
  }
  if (static_cast<std::size_t>(k) > dist.alphas.size()) {
    throw Error(ErrorKind::Domain, "list size " + std::to_string(k) + " exceeds the " +
                                       std::to_string(dist.alphas.size()) +
                                       " probabilities supplied");
  }
  const ProbabilityList list(std::vector<double>(dist.alphas.begin(), dist.alphas.begin() + k));
  p.p_inside = std::min(list.p_inside(), 1.0);
  p.e_n = list.p_inside() > 0.0 ? expected_las_paged(list) : 1.0;
  return p;
}

namespace {

void check_range(KRange range) {
  if (range.empty()) throw Error(ErrorKind::Domain, "empty list-size range");
  if (range.first < 1) throw Error(ErrorKind::Domain, "list sizes start at 1");
  if (range.last > kMaxListSize) {
    throw Error(ErrorKind::Domain, "list sizes above " + std::to_string(kMaxListSize) +
                                       " are not searched");
  }
}

}  // namespace

SweepResult sweep_k(const SavingsParams& tmpl, KRange range, const Distribution& dist) {
  check_range(range);
  SweepResult r;
  r.k_values.reserve(range.size());
  r.savings.reserve(range.size());
  for (int k = range.first; k <= range.last; ++k) {
    const double s = savings(params_for_k(tmpl, k, dist));
    r.k_values.push_back(k);
    r.savings.push_back(s);
    // Strict comparison keeps the smallest k among ties.
    if (s > r.savings[r.argmax]) r.argmax = r.savings.size() - 1;
    if (s > 0.0) r.zero_crossing = k;
  }
  return r;
}

Optimum optimum_k(const SavingsParams& tmpl, KRange range, const Distribution& dist) {
  const SweepResult r = sweep_k(tmpl, range, dist);
  return {r.best_k(), r.best_savings()};
}

std::optional<int> savings_zero_crossing(const SavingsParams& tmpl, KRange range,
                                         const Distribution& dist) {
  return sweep_k(tmpl, range, dist).zero_crossing;
}

std::vector<RateRatioCurve> sweep_rate_ratio(const SavingsParams& tmpl,
                                             std::span<const double> ratios, KRange range) {
  std::vector<RateRatioCurve> out;
  out.reserve(ratios.size());
  for (double ratio : ratios) {
    if (!(ratio > 0.0)) throw Error(ErrorKind::Domain, "rate ratios must be positive");
    SavingsParams p = tmpl;
    p.rate_paging = ratio * p.rate_update;
    out.push_back({ratio, sweep_k(p, range, Distribution::uniform())});
  }
  return out;
}

std::vector<FixedNetworkPoint> sweep_fixed_network(const SavingsParams& tmpl,
                                                   const FixedNetworkConfig& config) {
  if (!(tmpl.rate_update > 0.0)) throw Error(ErrorKind::Domain, "rate_update must be positive");
  SavingsParams base = tmpl;
  base.include_list_cost = true;
  base.lambda_sum = config.lambda_sum;
  base.calls_per_list_update = config.calls_per_list_update;
  base.rate_paging = tmpl.rate_paging / tmpl.rate_update * config.rate_update;
  base.rate_update = config.rate_update;

  std::vector<FixedNetworkPoint> out;
  out.reserve(config.rc_values.size() * config.p_inside_values.size());
  for (double rc : config.rc_values) {
    if (!(rc > 0.0)) throw Error(ErrorKind::Domain, "cost ratio rc must be positive");
    for (double p_inside : config.p_inside_values) {
      SavingsParams p = base;
      p.rc = rc;
      p.p_inside = p_inside;
      out.push_back({rc, p_inside, sweep_k(p, config.k_range, Distribution::uniform())});
    }
  }
  return out;
}

const std::vector<std::vector<double>>& reference_alpha_sets() {
  static const std::vector<std::vector<double>> sets = [] {
    std::vector<std::vector<double>> s;
    const std::array<double, 5> firsts{0.4, 0.5, 0.6, 0.7, 0.8};
    const std::vector<double> tail3{0.1, 0.05};
    const std::vector<double> tail5{0.1, 0.05, 0.02, 0.01};
    const std::vector<double> tail9{0.05, 0.03, 0.02, 0.01, 0.008, 0.005, 0.003, 0.002};
    for (const auto* tail : {&tail3, &tail5, &tail9}) {
      for (double a1 : firsts) {
        std::vector<double> set{a1};
        set.insert(set.end(), tail->begin(), tail->end());
        s.push_back(std::move(set));
      }
    }
    return s;
  }();
  return sets;
}

std::span<const int> known_figures() {
  static constexpr std::array<int, 7> ids{3, 5, 6, 7, 8, 9, 10};
  return ids;
}

namespace {

std::string join(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ';';
    out += format_number(values[i]);
  }
  return out;
}

std::string series_label(const std::vector<double>& alphas) {
  return "k" + std::to_string(alphas.size()) + "_a1_" + format_number(alphas.front());
}

constexpr int kMaxCellsPerLa = 50;
constexpr std::array<double, 5> kFractionCosts{0.2, 0.5, 0.8, 1.0, 1.5};
constexpr std::array<double, 5> kInsideProbabilities{0.2, 0.4, 0.6, 0.8, 1.0};
constexpr std::array<double, 7> kRateRatios{0.1, 0.5, 1.0, 1.549, 5.0, 10.0, 12.0};

void describe_network(CsvTable& t, const FigureContext& c) {
  const InterfaceBytes& b = c.bytes.at(c.interface_id);
  t.add_meta("geometry", to_string(c.geometry));
  t.add_meta("interface", c.interface_id);
  t.add_meta("v_kmh", format_number(c.network.v));
  t.add_meta("R_km", format_number(c.network.R));
  t.add_meta("lambda_t1", format_number(c.network.lambda_t1));
  t.add_meta("lambda_t2", format_number(c.network.lambda_t2));
  t.add_meta("nbl", format_number(b.nbl1) + ";" + format_number(b.nbl21) + ";" + format_number(b.nbl22));
  t.add_meta("nbp", format_number(b.nbp1) + ";" + format_number(b.nbp2));
  t.add_meta("betas", format_number(c.betas.beta1) + ";" + format_number(c.betas.beta21) + ";" +
                          format_number(c.betas.beta22));
}

void describe_radio(CsvTable& t, const SavingsParams& r) {
  t.add_meta("cost_update", format_number(r.cost_update));
  t.add_meta("cost_paging_area", format_number(r.cost_paging_area));
  t.add_meta("rate_update", format_number(r.rate_update));
  t.add_meta("rate_paging", format_number(r.rate_paging));
}

CsvTable update_cost_figure(const FigureContext& c) {
  CsvTable t;
  t.add_meta("figure", "3");
  t.add_meta("abscissa", "cells per LA");
  describe_network(t, c);
  t.header = {"series", "k", "alpha1", "p_inside", "N", "cost_update_cs", "cost_update_as"};
  for (const auto& alphas : reference_alpha_sets()) {
    const ProbabilityList list(alphas);
    for (int n = 1; n <= kMaxCellsPerLa; ++n) {
      const double cs = update_cost_cs(c.network, c.bytes, c.interface_id, n, c.betas);
      t.add_row({series_label(alphas), format_number(static_cast<int>(list.k())),
                 format_number(alphas.front()), format_number(list.p_inside()), format_number(n),
                 format_number(cs), format_number(update_cost_as(cs, list))});
    }
  }
  return t;
}

CsvTable paging_cost_figure(const FigureContext& c) {
  CsvTable t;
  t.add_meta("figure", "5");
  t.add_meta("abscissa", "cells per LA");
  t.add_meta("reading", to_string(c.reading));
  describe_network(t, c);
  t.header = {"series", "k", "alpha1", "p_inside", "N", "cost_paging_cs", "cost_paging_as"};
  for (const auto& alphas : reference_alpha_sets()) {
    const ProbabilityList list(alphas);
    for (int n = 1; n <= kMaxCellsPerLa; ++n) {
      t.add_row({series_label(alphas), format_number(static_cast<int>(list.k())),
                 format_number(alphas.front()), format_number(list.p_inside()), format_number(n),
                 format_number(paging_cost_cs(c.network, c.bytes, c.interface_id, n)),
                 format_number(paging_cost_as(c.network, c.bytes, c.interface_id, n, list,
                                              c.reading))});
    }
  }
  return t;
}

CsvTable normalized_paging_figure(int id, const FigureContext& c) {
  CsvTable t;
  t.add_meta("figure", std::to_string(id));
  t.add_meta("abscissa", "expected LAs paged");
  describe_radio(t, c.radio);
  t.header = {"F", "p_inside", "e_n", "cost_normalized_paging"};
  auto emit = [&](double f, double p) {
    for (int step = 0; step <= 18; ++step) {
      const double e_n = 1.0 + 0.5 * step;
      t.add_row({format_number(f), format_number(p), format_number(e_n),
                 format_number(normalized_paging_cost(c.radio.cost_paging_area,
                                                      c.radio.rate_paging, p, f, e_n))});
    }
  };
  if (id == 6) {
    t.add_meta("p_inside", format_number(c.radio.p_inside));
    for (double f : kFractionCosts) emit(f, c.radio.p_inside);
  } else {
    t.add_meta("F", format_number(c.radio.cost_next_paging));
    for (double p : kInsideProbabilities) emit(c.radio.cost_next_paging, p);
  }
  return t;
}

void add_sweep_rows(CsvTable& t, const std::vector<std::string>& prefix, const SavingsParams& tmpl,
                    const SweepResult& r) {
  for (std::size_t i = 0; i < r.k_values.size(); ++i) {
    const SavingsParams p = params_for_k(tmpl, r.k_values[i], Distribution::uniform());
    std::vector<std::string> row = prefix;
    row.push_back(format_number(r.k_values[i]));
    row.push_back(format_number(p.e_n));
    row.push_back(format_number(r.savings[i]));
    row.push_back(i == r.argmax ? "1" : "0");
    t.add_row(std::move(row));
  }
}

CsvTable radio_savings_figure(const FigureContext& c) {
  CsvTable t;
  t.add_meta("figure", "8");
  t.add_meta("distribution", "uniform-conditional");
  describe_radio(t, c.radio);
  t.add_meta("p_inside", format_number(c.radio.p_inside));
  t.header = {"F", "k", "e_n", "savings", "is_optimum"};
  for (double f : kFractionCosts) {
    SavingsParams p = c.radio;
    p.cost_next_paging = f;
    p.include_list_cost = false;
    add_sweep_rows(t, {format_number(f)}, p, sweep_k(p, c.k_range, Distribution::uniform()));
  }
  return t;
}

CsvTable rate_ratio_figure(const FigureContext& c) {
  CsvTable t;
  t.add_meta("figure", "9");
  t.add_meta("distribution", "uniform-conditional");
  SavingsParams p = c.radio;
  p.include_list_cost = false;
  describe_radio(t, p);
  t.add_meta("F", format_number(p.cost_next_paging));
  t.header = {"rate_ratio", "k", "e_n", "savings", "is_optimum"};
  for (const auto& curve : sweep_rate_ratio(p, kRateRatios, c.k_range)) {
    SavingsParams q = p;
    q.rate_paging = curve.ratio * q.rate_update;
    add_sweep_rows(t, {format_number(curve.ratio)}, q, curve.result);
  }
  return t;
}

CsvTable fixed_network_figure(const FigureContext& c) {
  CsvTable t;
  t.add_meta("figure", "10");
  t.add_meta("distribution", "uniform-conditional");
  t.add_meta("lambda_sum", format_number(c.fixed.lambda_sum));
  t.add_meta("calls_per_list_update", format_number(c.fixed.calls_per_list_update));
  t.add_meta("rate_update", format_number(c.fixed.rate_update));
  t.add_meta("rc_values", join(c.fixed.rc_values));
  t.add_meta("p_inside_values", join(c.fixed.p_inside_values));
  t.add_meta("F", format_number(c.radio.cost_next_paging));
  t.header = {"rc", "p_inside", "k", "e_n", "savings", "is_optimum"};
  for (const auto& point : sweep_fixed_network(c.radio, c.fixed)) {
    SavingsParams q = c.radio;
    q.p_inside = point.p_inside;
    add_sweep_rows(t, {format_number(point.rc), format_number(point.p_inside)}, q, point.result);
  }
  return t;
}

}  // namespace

CsvTable figure_data(int figure_id, const FigureContext& context) {
  switch (figure_id) {
    case 3: return update_cost_figure(context);
    case 5: return paging_cost_figure(context);
    case 6:
    case 7: return normalized_paging_figure(figure_id, context);
    case 8: return radio_savings_figure(context);
    case 9: return rate_ratio_figure(context);
    case 10: return fixed_network_figure(context);
    default: break;
  }
  throw Error(ErrorKind::Usage, "unknown figure " + std::to_string(figure_id) +
                                    " (known: 3, 5, 6, 7, 8, 9, 10)");
}

}  // namespace lacost
