// akor: regulator synthesis for fractional-order oscillators.
//
//   akor synth        --config job.json [--out result.json]
//   akor modes        (--config job.json | --input result.json) [--out modes.json]
//   akor respond      --config job.json [--csv traj.csv] [--out summary.json]
//   akor approx-order --num 1 --den 2 --tol 0.08
//   akor sweep        --config job.json [--param a --from 0 --to 5 --n 11] [--csv sweep.csv]
//
// Exit codes: 0 ok, 2 invalid configuration, 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "akor/akor.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitInternal = 1;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  ApiError(akor_status s, const std::string& msg) : std::runtime_error(msg), status(s) {}
  akor_status status;
};

void check(akor_status s) {
  if (s != AKOR_OK) throw ApiError(s, akor_last_error());
}

template <class T, void (*Destroy)(T)>
struct Handle {
  T h = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (h) Destroy(h);
  }
  T get() const { return h; }
  T* put() { return &h; }
};

using Design = Handle<akor_design, akor_design_destroy>;
using Modes = Handle<akor_modes, akor_modes_destroy>;
using Solution = Handle<akor_solution, akor_solution_destroy>;
using Trajectory = Handle<akor_trajectory, akor_trajectory_destroy>;

// Calls an array getter twice: once for the length, once to fill.
template <class H, class Fn>
std::vector<double> fetch(H handle, Fn fn, size_t per_item = 1) {
  size_t len = 0;
  check(fn(handle, nullptr, 0, &len));
  std::vector<double> out(len * per_item);
  if (len) check(fn(handle, out.data(), out.size(), &len));
  return out;
}

// ---- configuration ----------------------------------------------------

struct Job {
  akor_design_params params{};
  std::string plant_kind = "second_order";
  std::string solver = "spectral";
  json plant = json::object();
  double x0 = 0.1;
  double ic_value = 1.0;
  double x_start = 0.0;
  double x_end = 0.0;
  int n = 0;
  json sweep = json::object();
};

double number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError(std::string("'") + key + "' must be finite");
  return d;
}

std::int64_t integer(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer())
    throw ConfigError(std::string("'") + key + "' must be an integer");
  return obj.at(key).get<std::int64_t>();
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Job load_job(const std::string& path) {
  const json cfg = read_json(path);
  if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
  Job job;
  akor_design_params_init(&job.params);

  if (!cfg.contains("alpha") || !cfg["alpha"].is_object()) throw ConfigError("missing 'alpha'");
  job.params.num = integer(cfg["alpha"], "num");
  job.params.den = integer(cfg["alpha"], "den");

  job.plant_kind = cfg.value("plant_kind", std::string("second_order"));
  job.plant = cfg.value("plant", json::object());
  if (!job.plant.is_object()) throw ConfigError("'plant' must be an object");
  if (job.plant_kind == "second_order") {
    job.params.kind = AKOR_PLANT_SECOND_ORDER;
    if (job.plant.contains("m")) {
      double a = 0.0, b = 0.0;
      const auto s = akor_plant_coeffs_physical(
          number(job.plant, "m", 1.0), number(job.plant, "s", 0.0), number(job.plant, "rho", 0.0),
          number(job.plant, "mu", 0.0), number(job.plant, "k", 0.0), &a, &b);
      if (s != AKOR_OK) throw ConfigError(akor_last_error());
      job.params.a = a;
      job.params.b = b;
    } else {
      job.params.a = number(job.plant, "a", 0.0);
      job.params.b = number(job.plant, "b", 0.0);
    }
  } else if (job.plant_kind == "first_order") {
    job.params.kind = AKOR_PLANT_FIRST_ORDER;
    if (!job.plant.contains("beta")) throw ConfigError("first_order plant needs 'beta'");
    job.params.beta = number(job.plant, "beta", 0.0);
  } else {
    throw ConfigError("plant_kind must be 'second_order' or 'first_order'");
  }

  const json w = cfg.value("weights", json::object());
  job.params.qw = number(w, "qw", 1.0);
  job.params.rw = number(w, "rw", 1.0);

  if (cfg.contains("odd_tol")) {
    if (cfg["odd_tol"].is_null()) {
      job.params.approximate = 0;
    } else {
      job.params.approximate = 1;
      job.params.odd_tol = number(cfg, "odd_tol", 1e-3);
    }
  }

  job.solver = cfg.value("solver", std::string("spectral"));
  if (job.solver == "spectral") {
    job.params.solver = AKOR_SOLVER_SPECTRAL;
  } else if (job.solver == "sign") {
    job.params.solver = AKOR_SOLVER_SIGN;
  } else {
    throw ConfigError("solver must be 'spectral' or 'sign'");
  }

  const json ics = cfg.value("ics", json::object());
  job.x0 = number(ics, "x0", 0.1);
  job.ic_value = job.params.kind == AKOR_PLANT_FIRST_ORDER ? number(ics, "y0", 1.0)
                                                           : number(ics, "y1", 1.0);
  if (job.x0 <= 0.0) throw ConfigError("ics.x0 must be positive");

  const json grid = cfg.value("grid", json::object());
  job.x_start = number(grid, "x_start", job.x0);
  job.x_end = number(grid, "x_end", job.x0 + 10.0);
  job.n = static_cast<int>(number(grid, "n", 201));

  job.sweep = cfg.value("sweep", json::object());
  return job;
}

// ---- output helpers ---------------------------------------------------

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

json complex_list(const std::vector<double>& interleaved) {
  json arr = json::array();
  for (size_t i = 0; i + 1 < interleaved.size(); i += 2)
    arr.push_back({{"re", interleaved[i]}, {"im", interleaved[i + 1]}});
  return arr;
}

const char* verdict_name(akor_verdict v) {
  switch (v) {
    case AKOR_VERDICT_HOLDS: return "holds";
    case AKOR_VERDICT_FAILS: return "fails";
    case AKOR_VERDICT_MARGINAL: return "marginal";
  }
  return "fails";
}

json modes_json(akor_modes modes) {
  const auto roots = fetch(modes, akor_modes_roots, 2);
  size_t len = 0;
  check(akor_modes_flags(modes, nullptr, nullptr, 0, &len));
  std::vector<int> neg(len), dec(len);
  check(akor_modes_flags(modes, neg.data(), dec.data(), len, &len));
  json arr = json::array();
  for (size_t i = 0; i < len; ++i)
    arr.push_back({{"re", roots[2 * i]},
                   {"im", roots[2 * i + 1]},
                   {"re_negative", neg[i] != 0},
                   {"decay", dec[i] != 0}});
  akor_verdict re_verdict = AKOR_VERDICT_FAILS, decay = AKOR_VERDICT_FAILS;
  size_t marginal = 0;
  check(akor_modes_stability(modes, &re_verdict, &decay, &marginal));
  return {{"roots", arr},
          {"stability",
           {{"paper_criterion", verdict_name(re_verdict)},
            {"mode_decay", verdict_name(decay)},
            {"marginal_roots", marginal}}},
          {"stable", re_verdict == AKOR_VERDICT_HOLDS}};
}

json synth_json(const Job& job, akor_design d) {
  int64_t rp = 0, rq = 0, ep = 0, eq = 0;
  check(akor_design_orders(d, &rp, &rq, &ep, &eq));
  double residual = 0.0;
  check(akor_design_residual(d, &residual));

  json doc;
  doc["requested_order"] = {{"num", rp}, {"den", rq}};
  doc["effective_order"] = {{"num", ep}, {"den", eq}};
  doc["approximated"] = (rp != ep || rq != eq);
  doc["plant_kind"] = job.plant_kind;
  if (job.params.kind == AKOR_PLANT_FIRST_ORDER) {
    doc["plant"] = {{"beta", job.params.beta}};
  } else {
    doc["plant"] = {{"a", job.params.a}, {"b", job.params.b}};
  }
  doc["weights"] = {{"qw", job.params.qw}, {"rw", job.params.rw}};
  doc["solver"] = job.solver;
  doc["gains"] = fetch(d, akor_design_gains);
  doc["closed_loop_coefficients"] = fetch(d, akor_design_closed_loop);
  doc["characteristic_polynomial"] = fetch(d, akor_design_char_poly);
  doc["are_residual"] = residual;
  doc["hamiltonian_stable_eigenvalues"] = complex_list(fetch(d, akor_design_stable_eigenvalues, 2));
  Modes modes;
  check(akor_design_modes(d, modes.put()));
  const json m = modes_json(modes.get());
  doc["q"] = eq;
  doc["roots"] = m["roots"];
  doc["stability"] = m["stability"];
  doc["stable"] = m["stable"];
  return doc;
}

void make_design(const Job& job, Design& d) { check(akor_design_create(&job.params, d.put())); }

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

// ---- commands ---------------------------------------------------------

int cmd_synth(const std::string& config, const std::string& out) {
  const Job job = load_job(config);
  Design d;
  make_design(job, d);
  emit(synth_json(job, d.get()).dump(2) + "\n", out);
  return kExitOk;
}

int cmd_modes(const std::string& config, const std::string& input, const std::string& out) {
  json doc;
  if (!input.empty()) {
    const json res = read_json(input);
    if (!res.contains("characteristic_polynomial") || !res.contains("q"))
      throw ConfigError(input + ": not a synth result (needs characteristic_polynomial and q)");
    std::vector<double> poly;
    try {
      poly = res["characteristic_polynomial"].get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw ConfigError(input + ": " + e.what());
    }
    const auto q = integer(res, "q");
    Modes modes;
    const auto s = akor_modes_from_poly(poly.data(), poly.size(), q, modes.put());
    if (s == AKOR_INVALID_ARGUMENT) throw ConfigError(akor_last_error());
    check(s);
    doc = modes_json(modes.get());
    doc["characteristic_polynomial"] = poly;
    doc["q"] = q;
  } else {
    const Job job = load_job(config);
    Design d;
    make_design(job, d);
    Modes modes;
    check(akor_design_modes(d.get(), modes.put()));
    doc = modes_json(modes.get());
    doc["characteristic_polynomial"] = fetch(d.get(), akor_design_char_poly);
    int64_t eq = 0;
    check(akor_design_orders(d.get(), nullptr, nullptr, nullptr, &eq));
    doc["q"] = eq;
  }
  emit(doc.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_respond(const std::string& config, const std::string& csv, const std::string& out) {
  const Job job = load_job(config);
  if (job.n < 4) throw ConfigError("grid.n must be at least 4");
  if (job.x_start < job.x0) throw ConfigError("grid.x_start must not precede ics.x0");
  if (!(job.x_end > job.x_start)) throw ConfigError("grid.x_end must exceed grid.x_start");

  Design d;
  make_design(job, d);
  Solution sol;
  check(akor_solution_create(d.get(), job.x0, job.ic_value, sol.put()));
  Trajectory traj;
  check(akor_respond(d.get(), sol.get(), job.x_start, job.x_end, job.n, traj.put()));

  const auto samples = fetch(traj.get(), akor_trajectory_samples, 3);
  std::ostringstream table;
  table << "x,y,u\n";
  for (size_t i = 0; i + 2 < samples.size(); i += 3)
    table << fmt15(samples[i]) << ',' << fmt15(samples[i + 1]) << ',' << fmt15(samples[i + 2])
          << '\n';

  double cost = 0.0, sup_tail = 0.0;
  int warn = 0, mono = 0;
  check(akor_trajectory_cost(traj.get(), job.params.qw, job.params.rw, &cost, &warn));
  check(akor_trajectory_decay(traj.get(), &sup_tail, &mono));

  double peak = 0.0;
  for (size_t i = 1; i < samples.size(); i += 3) peak = std::max(peak, std::abs(samples[i]));

  json summary = synth_json(job, d.get());
  summary["ics"] = {{"x0", job.x0},
                    {job.params.kind == AKOR_PLANT_FIRST_ORDER ? "y0" : "y1", job.ic_value}};
  summary["grid"] = {{"x_start", job.x_start}, {"x_end", job.x_end}, {"n", job.n}};
  summary["cost"] = {{"value", cost}, {"tail_warning", warn != 0}};
  summary["decay"] = {{"sup_tail", sup_tail}, {"peak", peak}, {"monotone_envelope", mono != 0}};

  // The summary goes to --out, or to stderr so it never mixes with CSV on stdout.
  emit(table.str(), csv);
  if (out.empty()) {
    std::cerr << summary.dump(2) << "\n";
  } else {
    emit(summary.dump(2) + "\n", out);
  }
  return kExitOk;
}

int cmd_approx(std::int64_t num, std::int64_t den, double tol) {
  int64_t p = 0, q = 0;
  const auto s = akor_odd_approximate(num, den, tol, &p, &q);
  if (s == AKOR_INVALID_ARGUMENT) throw ConfigError(akor_last_error());
  check(s);
  std::cout << p << '/' << q << '\n';
  return kExitOk;
}

int cmd_sweep(const std::string& config, std::optional<std::string> param,
              std::optional<double> from, std::optional<double> to, std::optional<int> n,
              const std::string& csv) {
  Job job = load_job(config);
  const std::string name = param.value_or(job.sweep.value("param", std::string()));
  const double lo = from.value_or(number(job.sweep, "from", 0.0));
  const double hi = to.value_or(number(job.sweep, "to", 0.0));
  const int count = n.value_or(static_cast<int>(number(job.sweep, "n", 0)));
  if (count < 1) throw ConfigError("sweep.n must be positive");

  double* target = nullptr;
  if (name == "a") target = &job.params.a;
  if (name == "b") target = &job.params.b;
  if (name == "qw") target = &job.params.qw;
  if (name == "rw") target = &job.params.rw;
  if (!target) throw ConfigError("sweep.param must be one of a, b, qw, rw");
  if (job.params.kind == AKOR_PLANT_FIRST_ORDER && (name == "a" || name == "b"))
    throw ConfigError("a and b do not apply to a first_order plant");

  std::ostringstream table;
  std::size_t width = 0;
  std::vector<std::string> rows;
  for (int i = 0; i < count; ++i) {
    const double v = count == 1 ? lo : lo + (hi - lo) * i / (count - 1);
    *target = v;
    std::ostringstream row;
    row << fmt15(v);
    Design d;
    const auto s = akor_design_create(&job.params, d.put());
    if (s == AKOR_INVALID_ARGUMENT || s == AKOR_DIMENSION_MISMATCH)
      throw ConfigError(akor_last_error());
    if (s != AKOR_OK) {
      row << ",error:" << akor_status_name(s);
      rows.push_back(row.str());
      continue;
    }
    const auto gains = fetch(d.get(), akor_design_gains);
    width = std::max(width, gains.size());
    for (double g : gains) row << ',' << fmt15(g);
    Modes modes;
    check(akor_design_modes(d.get(), modes.put()));
    akor_verdict re_verdict = AKOR_VERDICT_FAILS, decay = AKOR_VERDICT_FAILS;
    check(akor_modes_stability(modes.get(), &re_verdict, &decay, nullptr));
    row << ',' << verdict_name(re_verdict) << ',' << verdict_name(decay);
    rows.push_back(row.str());
  }
  table << name;
  for (std::size_t j = 0; j < width; ++j) table << ",K" << j;
  table << ",paper_criterion,mode_decay\n";
  for (const auto& r : rows) table << r << '\n';
  emit(table.str(), csv);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Letov AKOR regulator synthesis for fractional-order oscillators"};
  app.require_subcommand(1);

  std::string config, input, out, csv;
  std::int64_t num = 0, den = 0;
  double tol = 1e-3;
  std::string sweep_param;
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_n = 0;

  auto* synth = app.add_subcommand("synth", "Synthesize the regulator and report gains and roots");
  synth->add_option("--config", config, "Job configuration (JSON)")->required();
  synth->add_option("--out", out, "Result document (default: stdout)");

  auto* modes = app.add_subcommand("modes", "Characteristic polynomial, roots and stability");
  auto* mcfg = modes->add_option("--config", config, "Job configuration (JSON)");
  auto* minp = modes->add_option("--input", input, "Result document written by synth");
  mcfg->excludes(minp);
  modes->add_option("--out", out, "Output document (default: stdout)");

  auto* respond = app.add_subcommand("respond", "Closed-loop trajectory and cost");
  respond->add_option("--config", config, "Job configuration (JSON)")->required();
  respond->add_option("--csv", csv, "Trajectory CSV (default: stdout)");
  respond->add_option("--out", out, "Summary document");

  auto* approx = app.add_subcommand("approx-order", "Odd/odd approximation of a fraction");
  approx->add_option("--num", num, "Numerator")->required();
  approx->add_option("--den", den, "Denominator")->required();
  approx->add_option("--tol", tol, "Tolerance")->required();

  auto* sweep = app.add_subcommand("sweep", "Repeat synth over a grid of one parameter");
  sweep->add_option("--config", config, "Job configuration (JSON)")->required();
  auto* sp = sweep->add_option("--param", sweep_param, "a, b, qw or rw");
  auto* sf = sweep->add_option("--from", sweep_from, "First grid value");
  auto* st = sweep->add_option("--to", sweep_to, "Last grid value");
  auto* sn = sweep->add_option("--n", sweep_n, "Number of grid points");
  sweep->add_option("--csv", csv, "Output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*synth) return cmd_synth(config, out);
    if (*modes) {
      if (config.empty() && input.empty()) throw ConfigError("modes needs --config or --input");
      return cmd_modes(config, input, out);
    }
    if (*respond) return cmd_respond(config, csv, out);
    if (*approx) return cmd_approx(num, den, tol);
    if (*sweep) {
      auto opt = [](CLI::Option* o, auto v) {
        return o->count() ? std::optional<decltype(v)>(v) : std::nullopt;
      };
      return cmd_sweep(config, opt(sp, sweep_param), opt(sf, sweep_from), opt(st, sweep_to),
                       opt(sn, sweep_n), csv);
    }
  } catch (const ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ApiError& e) {
    if (e.status == AKOR_INVALID_ARGUMENT || e.status == AKOR_DIMENSION_MISMATCH) {
      std::cerr << "invalid configuration: " << e.what() << "\n";
      return kExitConfig;
    }
    std::cerr << akor_status_name(e.status) << ": " << e.what() << "\n";
    return akor_status_is_numerical(e.status) ? kExitNumerical : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
