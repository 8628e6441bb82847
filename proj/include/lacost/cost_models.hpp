#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lacost/beta_engine.hpp"
#include "lacost/grid_topology.hpp"

namespace lacost {

// Mobility and traffic of one user. Rates are per hour, speed in km/h and
// the cell side in km.
struct NetworkParams {
  double v = 30.0;
  double R = 1.0;
  double lambda_t1 = 0.6;    // mobile terminating calls
  double lambda_t2 = 0.006;  // unsuccessful attempts
  double lambda_mo = 1.4;    // mobile originated calls
  double calls_per_list_update = 10.0;
  double cost_list_unit = 50.0;

  void validate() const;
  friend bool operator==(const NetworkParams&, const NetworkParams&) = default;
};

// Bytes per procedure at one interface: location updates for case 1 (same
// VLR), 2.1 (new VLR, TMSI) and 2.2 (new VLR, IMSI); paging for case 1
// (successful) and case 2 (unsuccessful).
struct InterfaceBytes {
  double nbl1 = 0.0;
  double nbl21 = 0.0;
  double nbl22 = 0.0;
  double nbp1 = 0.0;
  double nbp2 = 0.0;

  InterfaceBytes scaled(double c) const { return {c * nbl1, c * nbl21, c * nbl22, c * nbp1, c * nbp2}; }
  friend bool operator==(const InterfaceBytes&, const InterfaceBytes&) = default;
};

inline constexpr std::string_view kRadioInterface = "radio";

class ByteTable {
 public:
  // Radio interface only: nbp = (21.5, 83), nbl = (130, 150, 170).
  static ByteTable defaults();

  void set(std::string interface_id, InterfaceBytes bytes);
  const InterfaceBytes& at(std::string_view interface_id) const;
  bool contains(std::string_view interface_id) const;
  const std::map<std::string, InterfaceBytes, std::less<>>& interfaces() const { return table_; }
  ByteTable scaled(double c) const;

  friend bool operator==(const ByteTable&, const ByteTable&) = default;

 private:
  std::map<std::string, InterfaceBytes, std::less<>> table_;
};

// LA residence probabilities of a user's list, most probable first.
class ProbabilityList {
 public:
  ProbabilityList() = default;
  explicit ProbabilityList(std::vector<double> alphas);

  // k LAs sharing p_inside equally.
  static ProbabilityList uniform(std::size_t k, double p_inside);

  std::span<const double> alphas() const noexcept { return alphas_; }
  std::size_t k() const noexcept { return alphas_.size(); }
  double p_inside() const noexcept { return p_inside_; }
  bool empty() const noexcept { return alphas_.empty(); }

  friend bool operator==(const ProbabilityList&, const ProbabilityList&) = default;

 private:
  std::vector<double> alphas_;
  double p_inside_ = 0.0;
};

double cell_area(Geometry geometry, double R);
double cell_perimeter(Geometry geometry, double R);

// Classical-strategy location update cost, bytes/hour.
double update_cost_cs(const NetworkParams& params, const ByteTable& bytes,
                      std::string_view interface_id, double N, const BetaSet& betas);

// Statistics-based update cost: updates happen only when leaving the list.
double update_cost_as(double cs_cost, const ProbabilityList& list);

// LA border crossings per hour for an LA of N cells (perimeter L * sqrt(N)).
double update_rate(const NetworkParams& params, Geometry geometry, double N);
double update_rate_inside_list(double rate, std::size_t k);

double paging_cost_cs(const NetworkParams& params, const ByteTable& bytes,
                      std::string_view interface_id, double N);

enum class PagingReading { Literal, Principled };

const char* to_string(PagingReading r) noexcept;
PagingReading parse_reading(std::string_view text);

// Sequential paging over the user's list.
//
// Principled: a user in the rank-i LA costs (i-1) unsuccessful pages plus
// one successful page; a user outside the list costs k unsuccessful pages
// followed by the page of the LA it registered in.
//
// Literal: the original closed form evaluated term by term, kept for audit.
double paging_cost_as(const NetworkParams& params, const ByteTable& bytes,
                      std::string_view interface_id, double N, const ProbabilityList& list,
                      PagingReading reading);

// Expected number of LAs paged given the user is inside the list.
double expected_las_paged(const ProbabilityList& list);

double normalized_paging_cost(double cost_paging_area, double rate_paging, double p_inside,
                              double cost_next_paging, double e_n);

double list_maintenance_cost(const NetworkParams& params);

}  // namespace lacost
