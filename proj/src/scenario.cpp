#include "lacost/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "lacost/error.hpp"
#include "lacost/mc_validator.hpp"

namespace lacost {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view text, std::string_view key) {
  text = trim(text);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::Config,
                "key " + std::string(key) + ": '" + std::string(text) + "' is not a number");
  }
  return v;
}

template <typename Int>
Int parse_int(std::string_view text, std::string_view key) {
  text = trim(text);
  Int v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::Config,
                "key " + std::string(key) + ": '" + std::string(text) + "' is not an integer");
  }
  return v;
}

std::string join_numbers(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_number(values[i]);
  }
  return out;
}

using Setter = std::function<void(Scenario&, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"grid.geometry", [](Scenario& s, std::string_view v) { s.geometry = parse_geometry(v); }},
      {"grid.m", [](Scenario& s, std::string_view v) { s.m = parse_int<int>(v, "grid.m"); }},
      {"partition.scheme",
       [](Scenario& s, std::string_view v) {
         auto file = s.partition.map_file;
         s.partition = PartitionScheme::parse(v);
         s.partition.map_file = file;
       }},
      {"partition.file",
       [](Scenario& s, std::string_view v) { s.partition.map_file = std::string(v); }},
      {"tally.algorithm",
       [](Scenario& s, std::string_view v) { s.algorithm = parse_tally_selection(v); }},
      {"mobility.v", [](Scenario& s, std::string_view v) { s.network.v = parse_double(v, "mobility.v"); }},
      {"mobility.R", [](Scenario& s, std::string_view v) { s.network.R = parse_double(v, "mobility.R"); }},
      {"traffic.lambda_t1",
       [](Scenario& s, std::string_view v) { s.network.lambda_t1 = parse_double(v, "traffic.lambda_t1"); }},
      {"traffic.lambda_t2",
       [](Scenario& s, std::string_view v) { s.network.lambda_t2 = parse_double(v, "traffic.lambda_t2"); }},
      {"traffic.lambda_mo",
       [](Scenario& s, std::string_view v) { s.network.lambda_mo = parse_double(v, "traffic.lambda_mo"); }},
      {"list.alphas", [](Scenario& s, std::string_view v) { s.alphas = parse_number_list(v); }},
      {"list.calls_per_update",
       [](Scenario& s, std::string_view v) {
         s.network.calls_per_list_update = parse_double(v, "list.calls_per_update");
       }},
      {"list.cost_unit",
       [](Scenario& s, std::string_view v) { s.network.cost_list_unit = parse_double(v, "list.cost_unit"); }},
      {"cost.cells_per_la",
       [](Scenario& s, std::string_view v) { s.cells_per_la = parse_double(v, "cost.cells_per_la"); }},
      {"cost.interface", [](Scenario& s, std::string_view v) { s.interface_id = std::string(v); }},
      {"cost.reading", [](Scenario& s, std::string_view v) { s.reading = parse_reading(v); }},
      {"savings.cost_update",
       [](Scenario& s, std::string_view v) { s.radio.cost_update = parse_double(v, "savings.cost_update"); }},
      {"savings.cost_paging_area",
       [](Scenario& s, std::string_view v) {
         s.radio.cost_paging_area = parse_double(v, "savings.cost_paging_area");
       }},
      {"savings.rate_update",
       [](Scenario& s, std::string_view v) { s.radio.rate_update = parse_double(v, "savings.rate_update"); }},
      {"savings.rate_paging",
       [](Scenario& s, std::string_view v) { s.radio.rate_paging = parse_double(v, "savings.rate_paging"); }},
      {"savings.F",
       [](Scenario& s, std::string_view v) { s.radio.cost_next_paging = parse_double(v, "savings.F"); }},
      {"savings.p_inside",
       [](Scenario& s, std::string_view v) { s.radio.p_inside = parse_double(v, "savings.p_inside"); }},
      {"savings.k_min",
       [](Scenario& s, std::string_view v) { s.k_range.first = parse_int<int>(v, "savings.k_min"); }},
      {"savings.k_max",
       [](Scenario& s, std::string_view v) { s.k_range.last = parse_int<int>(v, "savings.k_max"); }},
      {"savings.distribution",
       [](Scenario& s, std::string_view v) {
         if (v == "uniform") {
           s.distribution = Distribution::Kind::UniformConditional;
         } else if (v == "explicit") {
           s.distribution = Distribution::Kind::Explicit;
         } else {
           throw Error(ErrorKind::Config, "savings.distribution must be uniform or explicit");
         }
       }},
      {"fixed.rc_values",
       [](Scenario& s, std::string_view v) { s.fixed.rc_values = parse_number_list(v); }},
      {"fixed.p_inside_values",
       [](Scenario& s, std::string_view v) { s.fixed.p_inside_values = parse_number_list(v); }},
      {"fixed.k_min",
       [](Scenario& s, std::string_view v) { s.fixed.k_range.first = parse_int<int>(v, "fixed.k_min"); }},
      {"fixed.k_max",
       [](Scenario& s, std::string_view v) { s.fixed.k_range.last = parse_int<int>(v, "fixed.k_max"); }},
      {"fixed.lambda_sum",
       [](Scenario& s, std::string_view v) { s.fixed.lambda_sum = parse_double(v, "fixed.lambda_sum"); }},
      {"fixed.calls_per_update",
       [](Scenario& s, std::string_view v) {
         s.fixed.calls_per_list_update = parse_double(v, "fixed.calls_per_update");
       }},
      {"fixed.rate_update",
       [](Scenario& s, std::string_view v) { s.fixed.rate_update = parse_double(v, "fixed.rate_update"); }},
      {"sim.seed",
       [](Scenario& s, std::string_view v) { s.seed = parse_int<std::uint64_t>(v, "sim.seed"); }},
      {"sim.steps",
       [](Scenario& s, std::string_view v) { s.walk_steps = parse_int<std::uint64_t>(v, "sim.steps"); }},
      {"sim.trials",
       [](Scenario& s, std::string_view v) { s.paging_trials = parse_int<std::uint64_t>(v, "sim.trials"); }},
  };
  return table;
}

// bytes.<interface>.<field>
bool set_bytes(Scenario& s, std::string_view key, std::string_view value,
               std::map<std::string, InterfaceBytes>& pending) {
  if (!key.starts_with("bytes.")) return false;
  const auto rest = key.substr(6);
  const auto dot = rest.rfind('.');
  if (dot == std::string_view::npos || dot == 0) return false;
  const std::string iface(rest.substr(0, dot));
  const auto field = rest.substr(dot + 1);
  auto it = pending.find(iface);
  if (it == pending.end()) {
    it = pending.emplace(iface, s.bytes.contains(iface) ? s.bytes.at(iface) : InterfaceBytes{}).first;
  }
  InterfaceBytes& b = it->second;
  double* slot = field == "nbl1"    ? &b.nbl1
                 : field == "nbl21" ? &b.nbl21
                 : field == "nbl22" ? &b.nbl22
                 : field == "nbp1"  ? &b.nbp1
                 : field == "nbp2"  ? &b.nbp2
                                    : nullptr;
  if (!slot) return false;
  *slot = parse_double(value, key);
  return true;
}

}  // namespace

TallySelection parse_tally_selection(std::string_view text) {
  if (text == "simple") return TallySelection::Simple;
  if (text == "advanced") return TallySelection::Advanced;
  if (text == "both") return TallySelection::Both;
  throw Error(ErrorKind::Usage, "algorithm must be simple, advanced or both");
}

const char* to_string(TallySelection s) noexcept {
  switch (s) {
    case TallySelection::Simple: return "simple";
    case TallySelection::Advanced: return "advanced";
    case TallySelection::Both: return "both";
  }
  return "?";
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_double(text.substr(start, comma - start), "list"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Scenario Scenario::parse(std::istream& in, const std::filesystem::path& base_dir) {
  Scenario s;
  std::vector<std::string> unknown;
  std::map<std::string, InterfaceBytes> pending_bytes;
  bool lambda_t2_set = false;
  std::string line;
  int line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view view = line;
      if (const auto hash = view.find('#'); hash != std::string_view::npos) {
        view = view.substr(0, hash);
      }
      view = trim(view);
      if (view.empty()) continue;
      const auto eq = view.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorKind::Config, "line " + std::to_string(line_no) + ": expected 'key = value'");
      }
      const auto key = trim(view.substr(0, eq));
      const auto value = trim(view.substr(eq + 1));
      if (auto it = setters().find(key); it != setters().end()) {
        it->second(s, value);
        if (key == "traffic.lambda_t2") lambda_t2_set = true;
      } else if (!set_bytes(s, key, value, pending_bytes)) {
        unknown.emplace_back(key);
      }
    }
  } catch (const Error& e) {
    throw Error(ErrorKind::Config, e.what());
  }
  if (!unknown.empty()) {
    std::string msg = "unknown scenario key(s): ";
    for (std::size_t i = 0; i < unknown.size(); ++i) msg += (i ? ", " : "") + unknown[i];
    throw Error(ErrorKind::Config, msg);
  }
  for (auto& [iface, bytes] : pending_bytes) s.bytes.set(iface, bytes);
  if (!lambda_t2_set) s.network.lambda_t2 = s.network.lambda_t1 / 100.0;
  if (!s.partition.map_file.empty() && s.partition.map_file.is_relative() && !base_dir.empty()) {
    s.partition.map_file = base_dir / s.partition.map_file;
  }
  if (s.partition.kind != SchemeKind::Explicit) s.partition.map_file.clear();
  return s;
}

Scenario Scenario::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorKind::Config, "cannot open scenario " + file.string());
  return parse(in, file.parent_path());
}

void Scenario::dump(std::ostream& out) const {
  auto kv = [&](std::string_view k, const std::string& v) { out << k << " = " << v << '\n'; };
  out << "# location management scenario\n";
  kv("grid.geometry", to_string(geometry));
  kv("grid.m", std::to_string(m));
  kv("partition.scheme", partition.label());
  if (partition.kind == SchemeKind::Explicit) kv("partition.file", partition.map_file.string());
  kv("tally.algorithm", to_string(algorithm));
  kv("mobility.v", format_number(network.v));
  kv("mobility.R", format_number(network.R));
  kv("traffic.lambda_t1", format_number(network.lambda_t1));
  kv("traffic.lambda_t2", format_number(network.lambda_t2));
  kv("traffic.lambda_mo", format_number(network.lambda_mo));
  kv("list.alphas", join_numbers(alphas));
  kv("list.calls_per_update", format_number(network.calls_per_list_update));
  kv("list.cost_unit", format_number(network.cost_list_unit));
  kv("cost.cells_per_la", format_number(cells_per_la));
  kv("cost.interface", interface_id);
  kv("cost.reading", to_string(reading));
  for (const auto& [iface, b] : bytes.interfaces()) {
    const std::string p = "bytes." + iface + ".";
    kv(p + "nbl1", format_number(b.nbl1));
    kv(p + "nbl21", format_number(b.nbl21));
    kv(p + "nbl22", format_number(b.nbl22));
    kv(p + "nbp1", format_number(b.nbp1));
    kv(p + "nbp2", format_number(b.nbp2));
  }
  kv("savings.cost_update", format_number(radio.cost_update));
  kv("savings.cost_paging_area", format_number(radio.cost_paging_area));
  kv("savings.rate_update", format_number(radio.rate_update));
  kv("savings.rate_paging", format_number(radio.rate_paging));
  kv("savings.F", format_number(radio.cost_next_paging));
  kv("savings.p_inside", format_number(radio.p_inside));
  kv("savings.k_min", std::to_string(k_range.first));
  kv("savings.k_max", std::to_string(k_range.last));
  kv("savings.distribution",
     distribution == Distribution::Kind::UniformConditional ? "uniform" : "explicit");
  kv("fixed.rc_values", join_numbers(fixed.rc_values));
  kv("fixed.p_inside_values", join_numbers(fixed.p_inside_values));
  kv("fixed.k_min", std::to_string(fixed.k_range.first));
  kv("fixed.k_max", std::to_string(fixed.k_range.last));
  kv("fixed.lambda_sum", format_number(fixed.lambda_sum));
  kv("fixed.calls_per_update", format_number(fixed.calls_per_list_update));
  kv("fixed.rate_update", format_number(fixed.rate_update));
  kv("sim.seed", std::to_string(seed));
  kv("sim.steps", std::to_string(walk_steps));
  kv("sim.trials", std::to_string(paging_trials));
}

std::string Scenario::dump() const {
  std::ostringstream os;
  dump(os);
  return os.str();
}

void Scenario::validate() const {
  const CellGrid g = grid();
  if (partition.kind == SchemeKind::Explicit && partition.map_file.empty()) {
    throw Error(ErrorKind::Config, "partition.scheme = explicit needs partition.file");
  }
  (void)lacost::make_partition(g, partition);
  network.validate();
  (void)bytes.at(interface_id);
  if (cells_per_la < 1.0) throw Error(ErrorKind::Config, "cost.cells_per_la must be at least 1");
  (void)probability_list();
  SavingsParams r = radio;
  r.validate();
  if (k_range.empty() || k_range.first < 1 || k_range.last > kMaxListSize) {
    throw Error(ErrorKind::Config, "savings.k_min..k_max must be a non-empty range within 1.." +
                                       std::to_string(kMaxListSize));
  }
  if (distribution == Distribution::Kind::Explicit && alphas.size() < static_cast<std::size_t>(k_range.last)) {
    throw Error(ErrorKind::Config, "explicit distribution needs at least savings.k_max probabilities");
  }
  if (fixed.k_range.empty() || fixed.k_range.first < 1 || fixed.k_range.last > kMaxListSize) {
    throw Error(ErrorKind::Config, "fixed.k_min..k_max must be a non-empty range");
  }
  for (double rc : fixed.rc_values) {
    if (!(rc > 0.0)) throw Error(ErrorKind::Config, "fixed.rc_values must be positive");
  }
  for (double p : fixed.p_inside_values) {
    if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::Config, "fixed.p_inside_values must lie in [0,1]");
  }
  if (fixed.calls_per_list_update < 1.0 || fixed.lambda_sum < 0.0 || !(fixed.rate_update > 0.0)) {
    throw Error(ErrorKind::Config, "fixed-network parameters out of range");
  }
  if (walk_steps < 1 || paging_trials < 1) {
    throw Error(ErrorKind::Config, "sim.steps and sim.trials must be at least 1");
  }
}

CellGrid Scenario::grid() const { return build_grid(geometry, m); }

Partition Scenario::make_partition() const { return lacost::make_partition(grid(), partition); }

ProbabilityList Scenario::probability_list() const { return ProbabilityList(alphas); }

Distribution Scenario::savings_distribution() const {
  if (distribution == Distribution::Kind::UniformConditional) return Distribution::uniform();
  return Distribution::explicit_list(alphas);
}

BetaSet Scenario::betas() const {
  const CellGrid g = grid();
  const TallyAlgorithm a =
      algorithm == TallySelection::Simple ? TallyAlgorithm::Simple : TallyAlgorithm::Advanced;
  return betas_from_tally(tally(g, lacost::make_partition(g, partition), a));
}

FigureContext Scenario::figure_context() const {
  FigureContext c;
  c.network = network;
  c.bytes = bytes;
  c.interface_id = interface_id;
  c.geometry = geometry;
  c.betas = betas();
  c.reading = reading;
  c.radio = radio;
  c.k_range = k_range;
  c.fixed = fixed;
  return c;
}

CsvTable cmd_betas(const Scenario& s) {
  const CellGrid g = s.grid();
  const Partition p = s.make_partition();
  CsvTable t;
  t.add_meta("partition", s.partition.label());
  t.header = {"geometry", "m", "la_count", "la_sizes", "algorithm", "x_total", "dot_total",
              "beta1", "beta2", "beta21", "beta22",
              "beta1_2dp", "beta2_2dp", "beta21_3dp", "beta22_3dp"};
  std::vector<TallyAlgorithm> algorithms;
  if (s.algorithm != TallySelection::Advanced) algorithms.push_back(TallyAlgorithm::Simple);
  if (s.algorithm != TallySelection::Simple) algorithms.push_back(TallyAlgorithm::Advanced);
  for (TallyAlgorithm a : algorithms) {
    const BoundaryTally tl = tally(g, p, a);
    const BetaSet b = betas_from_tally(tl);
    t.add_row({to_string(g.geometry()), format_number(g.dimension()),
               format_number(static_cast<std::uint64_t>(p.la_count())), p.sizes_label(), to_string(a),
               format_number(tl.x_total), format_number(tl.dot_total), format_number(b.beta1),
               format_number(b.beta2), format_number(b.beta21), format_number(b.beta22),
               format_fixed(b.beta1, 2), format_fixed(b.beta2, 2), format_fixed(b.beta21, 3),
               format_fixed(b.beta22, 3)});
  }
  return t;
}

CsvTable cmd_costs(const Scenario& s) {
  const BetaSet betas = s.betas();
  const ProbabilityList list = s.probability_list();
  const double n = s.cells_per_la;

  CsvTable t;
  t.add_meta("geometry", to_string(s.geometry));
  t.add_meta("m", std::to_string(s.m));
  t.add_meta("partition", s.partition.label());
  t.add_meta("algorithm", s.algorithm == TallySelection::Simple ? "simple" : "advanced");
  t.add_meta("alphas", join_numbers(s.alphas));
  t.header = {"strategy", "N", "k", "p_inside", "cost_update", "cost_paging", "cost_list",
              "cost_total", "beta1", "beta21", "beta22", "v", "R", "lambda_t1", "lambda_t2",
              "lambda_mo", "interface", "reading"};
  auto echo = [&](std::vector<std::string> row) {
    for (const std::string& v :
         {format_number(betas.beta1), format_number(betas.beta21), format_number(betas.beta22),
          format_number(s.network.v), format_number(s.network.R), format_number(s.network.lambda_t1),
          format_number(s.network.lambda_t2), format_number(s.network.lambda_mo), s.interface_id,
          std::string(to_string(s.reading))}) {
      row.push_back(v);
    }
    t.add_row(std::move(row));
  };

  const double update_cs = update_cost_cs(s.network, s.bytes, s.interface_id, n, betas);
  const double paging_cs = paging_cost_cs(s.network, s.bytes, s.interface_id, n);
  echo({"CS", format_number(n), "0", "0", format_number(update_cs), format_number(paging_cs), "0",
        format_number(update_cs + paging_cs)});

  const double update_as = update_cost_as(update_cs, list);
  const double paging_as =
      paging_cost_as(s.network, s.bytes, s.interface_id, n, list, s.reading);
  const double list_cost = list_maintenance_cost(s.network);
  echo({"AS", format_number(n), format_number(static_cast<std::uint64_t>(list.k())),
        format_number(list.p_inside()), format_number(update_as), format_number(paging_as),
        format_number(list_cost), format_number(update_as + paging_as + list_cost)});
  return t;
}

namespace {

void sweep_tables(SweepOutput& out, const SweepResult& r, const std::vector<std::string>& prefix) {
  std::vector<std::string> row = prefix;
  row.push_back(format_number(r.best_k()));
  row.push_back(format_number(r.best_savings()));
  row.push_back(r.zero_crossing ? format_number(*r.zero_crossing) : "");
  out.summary.add_row(std::move(row));
  for (std::size_t i = 0; i < r.k_values.size(); ++i) {
    std::vector<std::string> c = prefix;
    c.push_back(format_number(r.k_values[i]));
    c.push_back(format_number(r.savings[i]));
    out.curves.add_row(std::move(c));
  }
}

}  // namespace

SweepOutput cmd_sweep(const Scenario& s, const SweepSpec& spec) {
  SweepOutput out;
  const SavingsParams base = s.radio;
  for (CsvTable* t : {&out.summary, &out.curves}) {
    t->add_meta("parameter", spec.parameter);
    t->add_meta("cost_update", format_number(base.cost_update));
    t->add_meta("cost_paging_area", format_number(base.cost_paging_area));
    t->add_meta("rate_update", format_number(base.rate_update));
    t->add_meta("rate_paging", format_number(base.rate_paging));
    t->add_meta("F", format_number(base.cost_next_paging));
    t->add_meta("p_inside", format_number(base.p_inside));
  }

  if (spec.parameter == "fixed") {
    out.summary.header = {"rc", "p_inside", "k_opt", "savings_opt", "k_max_positive"};
    out.curves.header = {"rc", "p_inside", "k", "savings"};
    for (CsvTable* t : {&out.summary, &out.curves}) {
      t->add_meta("lambda_sum", format_number(s.fixed.lambda_sum));
      t->add_meta("calls_per_list_update", format_number(s.fixed.calls_per_list_update));
      t->add_meta("fixed_rate_update", format_number(s.fixed.rate_update));
    }
    for (const auto& point : sweep_fixed_network(base, s.fixed)) {
      sweep_tables(out, point.result,
                   {format_number(point.rc), format_number(point.p_inside)});
    }
    return out;
  }

  static const std::vector<std::string> known{"F", "rate_ratio", "p_inside", "cost_ratio",
                                              "calls_per_update"};
  if (std::find(known.begin(), known.end(), spec.parameter) == known.end()) {
    throw Error(ErrorKind::Usage, "unknown sweep parameter '" + spec.parameter +
                                      "' (F, rate_ratio, p_inside, cost_ratio, calls_per_update, fixed)");
  }
  if (spec.values.empty()) throw Error(ErrorKind::Usage, "sweep needs at least one value");

  out.summary.header = {spec.parameter, "k_opt", "savings_opt", "k_max_positive"};
  out.curves.header = {spec.parameter, "k", "savings"};
  const Distribution dist = s.savings_distribution();
  for (double v : spec.values) {
    SavingsParams p = base;
    KRange range = s.k_range;
    if (spec.parameter == "F") {
      p.cost_next_paging = v;
    } else if (spec.parameter == "rate_ratio") {
      p.rate_paging = v * p.rate_update;
    } else if (spec.parameter == "p_inside") {
      p.p_inside = v;
    } else if (spec.parameter == "cost_ratio") {
      p.cost_update = v * p.cost_paging_area;
    } else {
      // List maintenance only exists on the fixed-network side.
      p.include_list_cost = true;
      p.calls_per_list_update = v;
      p.lambda_sum = s.fixed.lambda_sum;
      p.rate_paging = p.rate_paging / p.rate_update * s.fixed.rate_update;
      p.rate_update = s.fixed.rate_update;
      range = s.fixed.k_range;
    }
    sweep_tables(out, sweep_k(p, range, dist), {format_number(v)});
  }
  return out;
}

CsvTable cmd_figure(const Scenario& s, int figure_id) {
  return figure_data(figure_id, s.figure_context());
}

CsvTable cmd_simulate(const Scenario& s) {
  const CellGrid g = s.grid();
  const Partition p = s.make_partition();
  const BetaSet analytic = betas_from_tally(tally_advanced(g, p));

  const CrossingStats walk = walk_crossing_stats({g, p, s.walk_steps, s.seed});
  const double n = static_cast<double>(walk.crossings());
  std::vector<ValidationRow> rows;
  rows.push_back({"walk_beta1", analytic.beta1, walk.empirical_beta1,
                  n > 0 ? std::sqrt(analytic.beta1 * (1.0 - analytic.beta1) / n) : 0.0});
  if (walk.batch_std_error > 0.0) {
    rows.push_back({"walk_beta1_batch", analytic.beta1, walk.empirical_beta1, walk.batch_std_error});
  }

  const ProbabilityList list = s.probability_list();
  const double expected = paging_cost_as(s.network, s.bytes, s.interface_id, s.cells_per_la, list,
                                         PagingReading::Principled);
  const PagingSimResult sim = simulate_paging(list, s.network, s.bytes, s.interface_id,
                                              s.cells_per_la, s.paging_trials, derive_seed(s.seed, 1u << 20));
  rows.push_back({"paging_as_principled", expected, sim.mean, sim.std_error});

  CsvTable t = validation_report(rows);
  t.add_meta("geometry", to_string(s.geometry));
  t.add_meta("m", std::to_string(s.m));
  t.add_meta("partition", s.partition.label());
  t.add_meta("seed", std::to_string(s.seed));
  t.add_meta("walk_steps", std::to_string(s.walk_steps));
  t.add_meta("paging_trials", std::to_string(s.paging_trials));
  t.add_meta("cells_per_la", format_number(s.cells_per_la));
  t.add_meta("alphas", join_numbers(s.alphas));
  return t;
}

}  // namespace lacost
