#include "lacost/cost_models.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "lacost/error.hpp"

namespace lacost {

namespace {

constexpr double kProbabilitySlack = 1e-12;

void require(bool ok, ErrorKind kind, const char* message) {
  if (!ok) throw Error(kind, message);
}

// Cost of a successful page per cell, per hour: lambda_t1*nbp1 + lambda_t2*nbp2.
double success_term(const NetworkParams& p, const InterfaceBytes& b) {
  return p.lambda_t1 * b.nbp1 + p.lambda_t2 * b.nbp2;
}

// Cost of paging one LA without finding the user, per cell and hour.
double failure_term(const NetworkParams& p, const InterfaceBytes& b) {
  return b.nbp2 * (p.lambda_t1 + p.lambda_t2);
}

}  // namespace

void NetworkParams::validate() const {
  require(v >= 0.0, ErrorKind::Domain, "speed must be non-negative");
  require(R > 0.0, ErrorKind::Domain, "cell side R must be positive");
  require(lambda_t1 >= 0.0 && lambda_t2 >= 0.0 && lambda_mo >= 0.0, ErrorKind::Domain,
          "call rates must be non-negative");
  require(calls_per_list_update >= 1.0, ErrorKind::Domain,
          "calls per list update must be at least 1");
  require(cost_list_unit >= 0.0, ErrorKind::Domain, "list update cost must be non-negative");
}

ByteTable ByteTable::defaults() {
  ByteTable t;
  t.set(std::string(kRadioInterface), {130.0, 150.0, 170.0, 21.5, 83.0});
  return t;
}

void ByteTable::set(std::string interface_id, InterfaceBytes bytes) {
  require(bytes.nbl1 >= 0 && bytes.nbl21 >= 0 && bytes.nbl22 >= 0 && bytes.nbp1 >= 0 &&
              bytes.nbp2 >= 0,
          ErrorKind::Domain, "byte counts must be non-negative");
  table_[std::move(interface_id)] = bytes;
}

const InterfaceBytes& ByteTable::at(std::string_view interface_id) const {
  auto it = table_.find(interface_id);
  if (it == table_.end()) {
    throw Error(ErrorKind::Config, "no byte table for interface '" + std::string(interface_id) + "'");
  }
  return it->second;
}

bool ByteTable::contains(std::string_view interface_id) const {
  return table_.find(interface_id) != table_.end();
}

ByteTable ByteTable::scaled(double c) const {
  ByteTable t;
  for (const auto& [id, bytes] : table_) t.table_[id] = bytes.scaled(c);
  return t;
}

ProbabilityList::ProbabilityList(std::vector<double> alphas) : alphas_(std::move(alphas)) {
  for (std::size_t i = 0; i < alphas_.size(); ++i) {
    if (!(alphas_[i] >= 0.0) || !std::isfinite(alphas_[i])) {
      throw Error(ErrorKind::InvalidProbability, "LA probabilities must be finite and non-negative");
    }
    if (i > 0 && alphas_[i] > alphas_[i - 1]) {
      throw Error(ErrorKind::InvalidProbability,
                  "LA probabilities must be listed in non-increasing order");
    }
  }
  p_inside_ = std::accumulate(alphas_.begin(), alphas_.end(), 0.0);
  if (p_inside_ > 1.0 + kProbabilitySlack) {
    throw Error(ErrorKind::InvalidProbability,
                "LA probabilities sum to " + std::to_string(p_inside_) + " > 1");
  }
}

ProbabilityList ProbabilityList::uniform(std::size_t k, double p_inside) {
  if (!(p_inside >= 0.0 && p_inside <= 1.0)) {
    throw Error(ErrorKind::InvalidProbability, "p_inside must lie in [0,1]");
  }
  if (k == 0) return {};
  return ProbabilityList(std::vector<double>(k, p_inside / static_cast<double>(k)));
}

double cell_area(Geometry geometry, double R) {
  require(R > 0.0, ErrorKind::Domain, "cell side R must be positive");
  return geometry == Geometry::Square ? R * R : 1.5 * std::numbers::sqrt3 * R * R;
}

double cell_perimeter(Geometry geometry, double R) {
  require(R > 0.0, ErrorKind::Domain, "cell side R must be positive");
  return geometry == Geometry::Square ? 4.0 * R : 6.0 * R;
}

double update_cost_cs(const NetworkParams& params, const ByteTable& bytes,
                      std::string_view interface_id, double N, const BetaSet& betas) {
  require(N >= 1.0, ErrorKind::Domain, "cells per LA must be at least 1");
  require(params.R > 0.0, ErrorKind::Domain, "cell side R must be positive");
  const InterfaceBytes& b = bytes.at(interface_id);
  const double prefactor = 8.0 * params.v / (std::numbers::pi * params.R * std::sqrt(N));
  return prefactor * (betas.beta1 * b.nbl1 + betas.beta21 * b.nbl21 + betas.beta22 * b.nbl22);
}

double update_cost_as(double cs_cost, const ProbabilityList& list) {
  return (1.0 - list.p_inside()) * cs_cost;
}

double update_rate(const NetworkParams& params, Geometry geometry, double N) {
  require(N >= 1.0, ErrorKind::Domain, "cells per LA must be at least 1");
  const double perimeter = cell_perimeter(geometry, params.R) * std::sqrt(N);
  return params.v * perimeter / (N * std::numbers::pi * cell_area(geometry, params.R));
}

double update_rate_inside_list(double rate, std::size_t k) {
  require(k >= 1, ErrorKind::Domain, "list size must be at least 1");
  return rate / std::sqrt(static_cast<double>(k));
}

double paging_cost_cs(const NetworkParams& params, const ByteTable& bytes,
                      std::string_view interface_id, double N) {
  require(N >= 1.0, ErrorKind::Domain, "cells per LA must be at least 1");
  return N * success_term(params, bytes.at(interface_id));
}

const char* to_string(PagingReading r) noexcept {
  return r == PagingReading::Literal ? "literal" : "principled";
}

PagingReading parse_reading(std::string_view text) {
  if (text == "literal") return PagingReading::Literal;
  if (text == "principled") return PagingReading::Principled;
  throw Error(ErrorKind::Usage, "unknown paging reading '" + std::string(text) + "'");
}

double paging_cost_as(const NetworkParams& params, const ByteTable& bytes,
                      std::string_view interface_id, double N, const ProbabilityList& list,
                      PagingReading reading) {
  require(N >= 1.0, ErrorKind::Domain, "cells per LA must be at least 1");
  const InterfaceBytes& b = bytes.at(interface_id);
  const double success = success_term(params, b);
  const double fail = failure_term(params, b);
  const auto alphas = list.alphas();
  const double p_inside = list.p_inside();
  const double p_outside = 1.0 - p_inside;

  double per_cell = 0.0;
  if (reading == PagingReading::Principled) {
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      per_cell += alphas[i] * (static_cast<double>(i) * fail + success);
    }
    per_cell += p_outside * (static_cast<double>(alphas.size()) * fail + success);
  } else {
    const double lambda_sum = params.lambda_t1 + params.lambda_t2;
    const double not_unsuccessful =
        lambda_sum > 0.0 ? 1.0 - params.lambda_t2 / lambda_sum : 0.0;
    double inner = 0.0;
    double before = 0.0;
    for (double a : alphas) {
      inner += a * success + (1.0 - a) * fail * (1.0 - before) * not_unsuccessful;
      before += a;
    }
    per_cell = p_inside * inner + p_outside * success;
  }
  return N * per_cell;
}

double expected_las_paged(const ProbabilityList& list) {
  require(list.p_inside() > 0.0, ErrorKind::Domain,
          "expected LAs paged is undefined when the user is never inside the list");
  const auto alphas = list.alphas();
  double weighted = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    weighted += static_cast<double>(i + 1) * alphas[i];
  }
  return weighted / list.p_inside();
}

double normalized_paging_cost(double cost_paging_area, double rate_paging, double p_inside,
                              double cost_next_paging, double e_n) {
  require(e_n >= 1.0, ErrorKind::Domain, "expected LAs paged must be at least 1");
  require(p_inside >= 0.0 && p_inside <= 1.0, ErrorKind::InvalidProbability,
          "p_inside must lie in [0,1]");
  return cost_paging_area * rate_paging * (1.0 + p_inside * cost_next_paging * (e_n - 1.0));
}

double list_maintenance_cost(const NetworkParams& params) {
  require(params.calls_per_list_update >= 1.0, ErrorKind::Domain,
          "calls per list update must be at least 1");
  return (params.lambda_t1 + params.lambda_mo) / params.calls_per_list_update *
         params.cost_list_unit;
}

}  // namespace lacost
