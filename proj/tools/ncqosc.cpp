// ncqosc: batch front end for the damped-oscillator noncommutative-phase-space
// toolkit. Subcommands: cases, run, figures, validate.
#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncqosc/energy.hpp"
#include "ncqosc/errors.hpp"
#include "ncqosc/ncparams.hpp"
#include "ncqosc/phase.hpp"
#include "ncqosc/scenario.hpp"
#include "ncqosc/validate.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kExitConfig = 2;
constexpr int kExitWindow = 3;

namespace fs = std::filesystem;
using ncqosc::CaseContext;
using ncqosc::CaseId;
using ncqosc::RealityWindow;

std::string fmt_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<double> make_grid(double t_max, int samples) {
  if (t_max == 0.0) return {0.0};
  std::vector<double> g(samples);
  for (int i = 0; i < samples; ++i) g[i] = t_max * i / (samples - 1.0);
  return g;
}

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const fs::path& path, const CsvTable& table,
               const std::string& config_hash, const std::string& case_id) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ncqosc::Error("cannot open " + path.string() + " for writing");
  out << "# ncqosc " << kVersion << "\r\n";
  out << "# config-hash: " << config_hash << "\r\n";
  out << "# case: " << case_id << "\r\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out << ",";
    out << table.columns[i];
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      out << row[i];
    }
    out << "\r\n";
  }
}

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

void write_svg(const fs::path& path, const std::string& title,
               const std::string& xlabel, const std::string& ylabel,
               const std::vector<Series>& series) {
  const double W = 860, H = 560, L = 90, R = 40, T = 50, B = 60;
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& s : series) {
    for (double v : s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
    for (double v : s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
  }
  if (xmax <= xmin) xmax = xmin + 1.0;
  if (ymax <= ymin) ymax = ymin + 1.0;
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#8c564b", "#e377c2"};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ncqosc::Error("cannot open " + path.string() + " for writing");
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << W / 2 << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"17\">" << title << "</text>\n";
  // axes
  out << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R
      << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\""
      << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = xmin + (xmax - xmin) * i / 5.0;
    const double yv = ymin + (ymax - ymin) * i / 5.0;
    out << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 20
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << fmt_num(xv) << "</text>\n";
    out << "<text x=\"" << L - 8 << "\" y=\"" << py(yv) + 4
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
        << fmt_num(yv) << "</text>\n";
  }
  out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << xlabel << "</text>\n";
  out << "<text x=\"20\" y=\"" << (T + H - B) / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
      << "transform=\"rotate(-90 20 " << (T + H - B) / 2 << ")\">" << ylabel
      << "</text>\n";
  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    out << "<polyline fill=\"none\" stroke=\"" << palette[si % 6]
        << "\" stroke-width=\"1.6\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) out << " ";
      out << fmt_num(px(s.x[i])) << "," << fmt_num(py(s.y[i]));
    }
    out << "\"/>\n";
    out << "<text x=\"" << W - R - 10 << "\" y=\"" << T + 20 + 18 * si
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"13\" "
        << "fill=\"" << palette[si % 6] << "\">" << s.name << "</text>\n";
  }
  out << "</svg>\n";
}

void write_diagnostics(const fs::path& dir, const CaseId& id,
                       const RealityWindow& w, double t) {
  nlohmann::json j;
  j["case"] = id.str();
  j["violating_time"] = t;
  j["window"]["lower"] = std::isfinite(w.lower) ? nlohmann::json(w.lower)
                                                : nlohmann::json("-inf");
  j["window"]["upper"] = std::isfinite(w.upper) ? nlohmann::json(w.upper)
                                                : nlohmann::json("+inf");
  j["window"]["source"] = w.source;
  std::ofstream out(dir / "diagnostics.json");
  out << j.dump(2) << "\n";
}

int cmd_run(const std::string& config_path, const std::string& case_str,
            double t_max, int samples, const std::string& out_dir) {
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open config file: " << config_path << "\n";
    return kExitConfig;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string config_text = buf.str();

  ncqosc::Scenario scenario;
  try {
    scenario = ncqosc::scenario_from_json_text(config_text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  CaseId id = scenario.id;
  if (!case_str.empty()) {
    try {
      id = CaseId::parse(case_str);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitConfig;
    }
  }

  const fs::path dir(out_dir);
  fs::create_directories(dir);
  const CaseContext ctx = ncqosc::catalog(id, scenario.params);
  const RealityWindow window = ncqosc::reality_window(ctx);
  const std::vector<double> grid = make_grid(t_max, samples);
  for (double t : grid) {
    if (!window.contains(t)) {
      write_diagnostics(dir, id, window, t);
      std::cerr << "error: t=" << t << " lies outside the reality window ["
                << window.lower << ", " << window.upper
                << "]; see diagnostics.json\n";
      return kExitWindow;
    }
  }

  char hash[32];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(fnv1a(config_text)));
  const int n = scenario.params.n, m = scenario.params.m;
  const double w0 = scenario.params.omega0;

  CsvTable energy{{"t", "energy", "energy_over_omega0"}, {}};
  CsvTable phase{{"t", "theta_quad", "theta_closed"}, {}};
  CsvTable ncp{{"t", "theta", "Omega", "c"}, {}};
  CsvTable rho{{"t", "rho", "rho_dot", "a", "b"}, {}};
  const bool has_closed =
      (id.family == ncqosc::Family::SetI && id.tag != ncqosc::CaseTag::IV) ||
      (id.family == ncqosc::Family::SetII && id.tag == ncqosc::CaseTag::II);
  for (double t : grid) {
    const double E = ncqosc::energy_general(ctx, n, m, t);
    energy.rows.push_back({fmt_num(t), fmt_num(E), fmt_num(E / w0)});
    const double th = ncqosc::phase_quadrature(ctx, n, m - n, t);
    phase.rows.push_back(
        {fmt_num(t), fmt_num(th),
         has_closed ? fmt_num(ncqosc::phase_closed_form(ctx, n, m - n, t)) : ""});
    const ncqosc::NCPair nc = ncqosc::nc_parameters(ctx, t);
    ncp.rows.push_back({fmt_num(t), fmt_num(nc.theta), fmt_num(nc.Omega),
                        fmt_num(ncqosc::coefficient_c(ctx, t))});
    rho.rows.push_back({fmt_num(t), fmt_num(ctx.ep.rho(t)),
                        fmt_num(ctx.ep.rho_dot(t)), fmt_num(ctx.ep.a(t)),
                        fmt_num(ctx.ep.b(t))});
  }
  write_csv(dir / "energy.csv", energy, hash, id.str());
  write_csv(dir / "phase.csv", phase, hash, id.str());
  write_csv(dir / "ncparams.csv", ncp, hash, id.str());
  write_csv(dir / "rho.csv", rho, hash, id.str());
  std::cout << "wrote energy.csv, phase.csv, ncparams.csv, rho.csv to "
            << dir.string() << "\n";
  return 0;
}

std::vector<double> energy_curve(const CaseContext& ctx, int n,
                                 const std::vector<double>& grid) {
  std::vector<double> out;
  out.reserve(grid.size());
  for (double t : grid) out.push_back(ncqosc::energy_case_closed(ctx, n, t));
  return out;
}

int cmd_figures(const std::string& which, const std::string& out_dir) {
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  const std::vector<double> grid = make_grid(5.0, 101);

  if (which == "fig1") {
    const ncqosc::ScenarioParams p = ncqosc::figure1_params();
    ncqosc::ScenarioParams p_b0 = p;
    p_b0.B0 = 0.0;
    std::vector<std::pair<std::string, CaseContext>> jobs;
    for (ncqosc::CaseTag tag : {ncqosc::CaseTag::I, ncqosc::CaseTag::II,
                                ncqosc::CaseTag::III, ncqosc::CaseTag::IV}) {
      const CaseId id{ncqosc::Family::SetI, tag};
      jobs.emplace_back(id.str(), ncqosc::catalog(id, p));
    }
    jobs.emplace_back("no-field",
                      ncqosc::catalog({ncqosc::Family::SetI, ncqosc::CaseTag::I}, p_b0));

    std::vector<std::future<std::vector<double>>> futures;
    for (auto& [name, ctx] : jobs) {
      futures.push_back(std::async(std::launch::async, energy_curve, ctx, p.n, grid));
    }
    std::vector<Series> series;
    CsvTable table;
    table.columns.push_back("Gamma_t");
    for (std::size_t i = 0; i < grid.size(); ++i)
      table.rows.push_back({fmt_num(grid[i])});
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const std::vector<double> vals = futures[j].get();
      table.columns.push_back("E_over_omega0_" + jobs[j].first);
      Series s;
      s.name = jobs[j].first;
      s.x = grid;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double scaled = vals[i] / p.omega0;
        s.y.push_back(scaled);
        table.rows[i].push_back(fmt_num(scaled));
      }
      series.push_back(std::move(s));
    }
    write_csv(dir / "fig1.csv", table, "builtin", "set1");
    write_svg(dir / "fig1.svg", "Scaled energy, exponentially damped cases",
              "Gamma t", "E / omega0", series);
    std::cout << "wrote fig1.csv, fig1.svg to " << dir.string() << "\n";
    return 0;
  }
  if (which == "fig2") {
    const ncqosc::ScenarioParams p = ncqosc::figure2_params();
    ncqosc::ScenarioParams p_b0 = p;
    p_b0.B0 = 0.0;
    std::vector<std::pair<std::string, CaseContext>> jobs = {
        {"set2-case1", ncqosc::catalog({ncqosc::Family::SetII, ncqosc::CaseTag::I}, p)},
        {"set2-case2", ncqosc::catalog({ncqosc::Family::SetII, ncqosc::CaseTag::II}, p)},
        {"set2-case1-nofield",
         ncqosc::catalog({ncqosc::Family::SetII, ncqosc::CaseTag::I}, p_b0)},
        {"set2-case2-nofield",
         ncqosc::catalog({ncqosc::Family::SetII, ncqosc::CaseTag::II}, p_b0)}};
    std::vector<std::future<std::vector<double>>> futures;
    for (auto& [name, ctx] : jobs) {
      futures.push_back(std::async(std::launch::async, energy_curve, ctx, p.n, grid));
    }
    std::vector<Series> series;
    CsvTable table;
    table.columns.push_back("Gamma_t");
    for (std::size_t i = 0; i < grid.size(); ++i)
      table.rows.push_back({fmt_num(grid[i])});
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      const std::vector<double> vals = futures[j].get();
      table.columns.push_back("E_over_omega0_" + jobs[j].first);
      Series s;
      s.name = jobs[j].first;
      s.x = grid;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double scaled = vals[i] / p.omega0;
        s.y.push_back(scaled);
        table.rows[i].push_back(fmt_num(scaled));
      }
      series.push_back(std::move(s));
    }
    write_csv(dir / "fig2.csv", table, "builtin", "set2");
    write_svg(dir / "fig2.svg", "Scaled energy, rationally damped cases",
              "Gamma t", "E / omega0", series);
    std::cout << "wrote fig2.csv, fig2.svg to " << dir.string() << "\n";
    return 0;
  }
  std::cerr << "error: unknown figure '" << which << "' (use fig1 or fig2)\n";
  return 1;
}

int cmd_validate(const std::string& config_path, const std::string& out_dir) {
  std::optional<ncqosc::Scenario> scenario;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "error: cannot open config file: " << config_path << "\n";
      return kExitConfig;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      scenario = ncqosc::scenario_from_json_text(buf.str());
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitConfig;
    }
  }

  const ncqosc::ValidationReport report =
      ncqosc::run_validation(scenario ? &*scenario : nullptr);
  nlohmann::json j;
  j["version"] = kVersion;
  j["all_passed"] = report.all_passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.name << " — "
              << c.detail << "\n";
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed},
                           {"detail", c.detail}});
  }
  const fs::path dir(out_dir);
  fs::create_directories(dir);
  std::ofstream out(dir / "validation.json");
  out << j.dump(2) << "\n";
  std::cout << (report.all_passed() ? "all checks passed" : "FAILURES present")
            << "; report written to " << (dir / "validation.json").string() << "\n";
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"damped NC-phase-space oscillator toolkit"};
  app.require_subcommand(1);

  app.add_subcommand("cases", "list the built-in catalog cases");

  auto* run = app.add_subcommand("run", "run one case and write CSV series");
  std::string config_path, case_str, out_dir = ".";
  double t_max = 5.0;
  int samples = 101;
  run->add_option("--config", config_path, "scenario config (JSON)")->required();
  run->add_option("--case", case_str, "catalog case id (overrides config)");
  run->add_option("--t-max", t_max, "end of the time grid");
  run->add_option("--samples", samples, "number of grid samples")
      ->check(CLI::Range(2, 1000000));
  run->add_option("--out", out_dir, "output directory");

  auto* figures = app.add_subcommand("figures", "regenerate a figure (CSV + SVG)");
  std::string which;
  std::string fig_out = ".";
  figures->add_option("which", which, "fig1 or fig2")->required();
  figures->add_option("--out", fig_out, "output directory");

  auto* validate = app.add_subcommand("validate", "run the verification suite");
  std::string val_config, val_out = ".";
  validate->add_option("--config", val_config, "optional scenario config");
  validate->add_option("--out", val_out, "report output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("cases")) {
      for (const CaseId& id : CaseId::all()) std::cout << id.str() << "\n";
      return 0;
    }
    if (app.got_subcommand("run"))
      return cmd_run(config_path, case_str, t_max, samples, out_dir);
    if (app.got_subcommand("figures")) return cmd_figures(which, fig_out);
    if (app.got_subcommand("validate")) return cmd_validate(val_config, val_out);
  } catch (const ncqosc::OutsideRealityWindow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitWindow;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
