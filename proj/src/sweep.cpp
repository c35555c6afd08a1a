#include "udw/sweep.hpp"

#include "udw/harvest.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace udw {

namespace {

const char* const sweepable[] = {"omega", "separation", "width", "mass", "speed_ratio"};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

bool is_sweepable(const std::string& name) {
  for (const char* n : sweepable)
    if (name == n) return true;
  return false;
}

Axis linear_axis(const std::string& name, double start, double stop, int count) {
  if (count < 1) throw ConfigError("axis '" + name + "' needs at least one point");
  Axis ax{name, {}};
  for (int i = 0; i < count; ++i)
    ax.values.push_back(count == 1 ? start : start + (stop - start) * i / (count - 1));
  return ax;
}

Axis log_axis(const std::string& name, double start, double stop, int count) {
  if (!(start > 0.0 && stop > 0.0)) throw ConfigError("log axis '" + name + "' needs positive bounds");
  Axis ax = linear_axis(name, std::log(start), std::log(stop), count);
  for (double& v : ax.values) v = std::exp(v);
  // pin the ends so they print exactly as given
  ax.values.front() = start;
  if (count > 1) ax.values.back() = stop;
  return ax;
}

Axis parse_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw ConfigError("axis '" + text + "' must look like name=values");
  const std::string name = text.substr(0, eq);
  if (!is_sweepable(name)) throw ConfigError("unknown axis parameter '" + name + "'");
  const std::string body = text.substr(eq + 1);
  if (body.find(':') != std::string::npos) {
    const auto parts = split(body, ':');
    if (parts.size() != 3 && !(parts.size() == 4 && parts[3] == "log"))
      throw ConfigError("axis range for '" + name + "' must be start:stop:count[:log]");
    const double start = parse_number(parts[0], name);
    const double stop = parse_number(parts[1], name);
    int count = 0;
    const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
    if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 1)
      throw ConfigError("axis '" + name + "' has an invalid point count '" + parts[2] + "'");
    return parts.size() == 4 ? log_axis(name, start, stop, count) : linear_axis(name, start, stop, count);
  }
  Axis ax{name, {}};
  for (const auto& v : split(body, ',')) ax.values.push_back(parse_number(v, name));
  if (ax.values.empty()) throw ConfigError("axis '" + name + "' has no values");
  return ax;
}

void apply_parameter(ScenarioConfig& cfg, const std::string& name, double value) {
  if (name == "omega") {
    cfg.omega = value;
  } else if (name == "separation") {
    cfg.separation = value;
  } else if (name == "width") {
    if (std::holds_alternative<Pointlike>(cfg.model)) cfg.model = Smeared{value};
    else if (auto* s = std::get_if<Smeared>(&cfg.model)) s->width = value;
    else std::get<Delocalized>(cfg.model).width = value;
  } else if (name == "mass" || name == "speed_ratio") {
    auto* d = std::get_if<Delocalized>(&cfg.model);
    if (!d) throw ConfigError("parameter '" + name + "' requires model=delocalized");
    (name == "mass" ? d->mass : d->speed_ratio) = value;
  } else {
    throw ConfigError("unknown parameter '" + name + "'");
  }
}

unsigned default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& f) {
  if (jobs == 0) jobs = default_jobs();
  jobs = static_cast<unsigned>(std::min<size_t>(jobs, n));
  if (jobs <= 1) {
    for (size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

size_t SweepGrid::failures() const {
  size_t n = 0;
  for (const auto& r : results) n += !r.converged;
  return n;
}

SweepGrid run_sweep(const SweepRequest& req) {
  if (req.x.values.empty() || (req.y && req.y->values.empty())) throw ConfigError("empty sweep axis");
  SweepGrid grid;
  grid.x = req.x;
  grid.y = req.y;
  grid.spec = req.spec;
  grid.timestamp = utc_timestamp();

  const size_t ny = grid.ny();
  const size_t cells = req.x.values.size() * ny;
  if (cells > 1000000) throw ConfigError("sweep exceeds 10^6 cells");
  for (size_t i = 0; i < req.x.values.size(); ++i) {
    for (size_t j = 0; j < ny; ++j) {
      ScenarioConfig cfg = req.base;
      apply_parameter(cfg, req.x.name, req.x.values[i]);
      if (req.y) apply_parameter(cfg, req.y->name, req.y->values[j]);
      if (req.lmc) {
        auto* d = std::get_if<Delocalized>(&cfg.model);
        if (!d) throw ConfigError("lmc requires model=delocalized");
        d->mass = *req.lmc / d->width;
      }
      validate(cfg);
      grid.configs.push_back(cfg);
    }
  }

  // The excitation probability does not depend on the separation: evaluate it
  // once per distinct remaining configuration.
  std::map<std::string, size_t> p_index;
  std::vector<ScenarioConfig> p_configs;
  std::vector<size_t> cell_p(cells);
  for (size_t c = 0; c < cells; ++c) {
    ScenarioConfig key_cfg = grid.configs[c];
    key_cfg.separation = 0.0;
    auto [it, fresh] = p_index.emplace(format_config(key_cfg), p_configs.size());
    if (fresh) p_configs.push_back(key_cfg);
    cell_p[c] = it->second;
  }

  struct Slot {
    IntegralValue<double> value;
    std::string error;
  };
  std::vector<Slot> p_values(p_configs.size());
  parallel_for(p_configs.size(), req.jobs, [&](size_t k) {
    try {
      p_values[k].value = compute_excitation(p_configs[k], req.spec);
    } catch (const RegimeRejected& e) {
      p_values[k] = {{std::nan(""), 0.0, 0, false}, std::string("regime rejected: ") + e.what()};
    }
  });

  grid.results.resize(cells);
  grid.errors.resize(cells);
  grid.extra_names.clear();
  for (const auto& e : req.extras) grid.extra_names.push_back(e.name);
  grid.extras.assign(cells, std::vector<double>(req.extras.size(), std::nan("")));
  parallel_for(cells, req.jobs, [&](size_t c) {
    const auto& cfg = grid.configs[c];
    const auto& p = p_values[cell_p[c]];
    for (size_t e = 0; e < req.extras.size(); ++e) grid.extras[c][e] = req.extras[e].eval(cfg);
    if (!p.error.empty()) {
      grid.results[c] = make_result(std::nan(""), 0.0, {std::nan(""), std::nan("")}, 0.0, false);
      grid.errors[c] = p.error;
      return;
    }
    try {
      grid.results[c] = combine(p.value, compute_entangling(cfg, req.spec));
    } catch (const RegimeRejected& e) {
      grid.results[c] = make_result(std::nan(""), 0.0, {std::nan(""), std::nan("")}, 0.0, false);
      grid.errors[c] = std::string("regime rejected: ") + e.what();
    }
  });

  ScenarioConfig shown = req.base;
  for (const auto& [k, v] : parse_config_text(format_config(shown))) {
    if (k == req.x.name || (req.y && k == req.y->name) || (req.lmc && k == "mass")) continue;
    grid.fixed.emplace_back(k, v);
  }
  if (req.lmc) grid.fixed.emplace_back("lmc", format_double(*req.lmc));
  return grid;
}

std::string format_csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, end);
}

void write_csv(const SweepGrid& grid, std::ostream& out) {
  out << "# udw-harvest " << version_string << " generated " << grid.timestamp << '\n';
  out << "# rel_tol=" << format_double(grid.spec.rel_tol) << " abs_tol=" << format_double(grid.spec.abs_tol);
  for (const auto& [k, v] : grid.fixed) out << ' ' << k << '=' << v;
  out << '\n';

  out << grid.x.name;
  if (grid.y) out << ',' << grid.y->name;
  out << ",p,abs_m,negativity,err_p,err_m,converged";
  for (const auto& n : grid.extra_names) out << ',' << n;
  out << '\n';

  for (size_t i = 0; i < grid.x.values.size(); ++i) {
    for (size_t j = 0; j < grid.ny(); ++j) {
      const size_t c = grid.index(i, j);
      const auto& r = grid.results[c];
      out << format_csv_number(grid.x.values[i]);
      if (grid.y) out << ',' << format_csv_number(grid.y->values[j]);
      out << ',' << format_csv_number(r.p_a) << ',' << format_csv_number(std::abs(r.m)) << ','
          << format_csv_number(r.negativity) << ',' << format_csv_number(r.err_p) << ','
          << format_csv_number(r.err_m) << ',' << (r.converged ? "true" : "false");
      for (double e : grid.extras[c]) out << ',' << format_csv_number(e);
      out << '\n';
    }
  }
}

}  // namespace udw
