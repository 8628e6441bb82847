#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lacost/beta_engine.hpp"
#include "lacost/cost_models.hpp"
#include "lacost/csv.hpp"

namespace lacost {

// Inputs of the savings function of the statistics-based strategy over the
// classical one. Costs and rates share whatever units the caller picks; the
// result is in cost per unit time.
struct SavingsParams {
  double cost_update = 17.0;
  double cost_paging_area = 1.0;
  double rate_update = 1.0;
  double rate_paging = 1.549;
  double cost_next_paging = 0.8;  // F
  double p_inside = 1.0;
  int k = 1;
  double e_n = 1.0;
  double rc = 30.0;  // cost_update / single list-update cost
  double lambda_sum = 2.0;
  double calls_per_list_update = 10.0;
  bool include_list_cost = false;

  void validate() const;
  friend bool operator==(const SavingsParams&, const SavingsParams&) = default;
};

double savings(const SavingsParams& params);

// List maintenance term of the savings, zero on the radio interface.
double list_cost_term(const SavingsParams& params);

struct KRange {
  int first = 1;
  int last = 30;

  bool empty() const noexcept { return last < first; }
  std::size_t size() const noexcept { return empty() ? 0 : static_cast<std::size_t>(last - first + 1); }
  friend bool operator==(const KRange&, const KRange&) = default;
};

inline constexpr int kMaxListSize = 10000;

// How the list probabilities are laid out as k varies.
struct Distribution {
  enum class Kind { UniformConditional, Explicit } kind = Kind::UniformConditional;
  // Explicit: the first k entries form the list of size k.
  std::vector<double> alphas;

  static Distribution uniform() { return {}; }
  static Distribution explicit_list(std::vector<double> alphas) {
    return {Kind::Explicit, std::move(alphas)};
  }
};

// The template with k, e_n (and p_inside for explicit lists) set for list size k.
SavingsParams params_for_k(const SavingsParams& tmpl, int k, const Distribution& dist);

struct SweepResult {
  std::vector<int> k_values;
  std::vector<double> savings;
  std::size_t argmax = 0;
  std::optional<int> zero_crossing;  // largest k with positive savings

  int best_k() const { return k_values.at(argmax); }
  double best_savings() const { return savings.at(argmax); }
};

SweepResult sweep_k(const SavingsParams& tmpl, KRange range, const Distribution& dist);

struct Optimum {
  int k = 0;
  double savings = 0.0;
};

// Exhaustive scan; ties resolve to the smaller k.
Optimum optimum_k(const SavingsParams& tmpl, KRange range, const Distribution& dist);

std::optional<int> savings_zero_crossing(const SavingsParams& tmpl, KRange range,
                                         const Distribution& dist);

struct RateRatioCurve {
  double ratio = 0.0;
  SweepResult result;
};

// rate_paging is set to ratio * rate_update for each ratio.
std::vector<RateRatioCurve> sweep_rate_ratio(const SavingsParams& tmpl, std::span<const double> ratios,
                                             KRange range);

struct FixedNetworkConfig {
  std::vector<double> rc_values{10, 20, 30, 50, 100};
  std::vector<double> p_inside_values{0.2, 0.4, 0.6, 0.8, 1.0};
  KRange k_range{1, 30};
  double lambda_sum = 2.0;
  double calls_per_list_update = 10.0;
  // Per-hour rate of LA-border updates in the fixed-network setting.
  double rate_update = 0.05;

  friend bool operator==(const FixedNetworkConfig&, const FixedNetworkConfig&) = default;
};

struct FixedNetworkPoint {
  double rc = 0.0;
  double p_inside = 0.0;
  SweepResult result;
};

// Savings with the list maintenance term, over (rc, p_inside, k), rc-major.
// The template's rate ratio (rate_paging / rate_update) is preserved.
std::vector<FixedNetworkPoint> sweep_fixed_network(const SavingsParams& tmpl,
                                                   const FixedNetworkConfig& config);

// Inputs shared by the figure generators.
struct FigureContext {
  NetworkParams network;
  ByteTable bytes = ByteTable::defaults();
  std::string interface_id{kRadioInterface};
  Geometry geometry = Geometry::Square;
  BetaSet betas = betas_from_counts(116, 108);
  PagingReading reading = PagingReading::Principled;
  SavingsParams radio;
  KRange k_range{1, 30};
  FixedNetworkConfig fixed;
};

// Probability sets of 3, 5 and 9 LAs with alpha1 from 0.4 to 0.8.
const std::vector<std::vector<double>>& reference_alpha_sets();

std::span<const int> known_figures();

// Curve data for figures 3, 5, 6, 7, 8, 9 and 10.
CsvTable figure_data(int figure_id, const FigureContext& context);

}  // namespace lacost
