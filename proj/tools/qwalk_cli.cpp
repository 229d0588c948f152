// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qwalk: command-line front end.
//
//   qwalk spectrum  --cycle 4
//   qwalk evolve    --complete 2 --window pi --step pi/16 --out k2.csv
//   qwalk certify   --multipartite 2 2 --format json
//   qwalk scan      --cayley-sym 4 --window 100 --step 0.01
//   qwalk compare-classical --complete 2 --steps 3 --time 0 --time pi/4
//   qwalk table
//
// Exit codes: 0 success, 2 invalid parameters, 3 I/O failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwalk/qwalk.hpp"
#include "qwalk/report_json.hpp"

namespace {

using qwalk::Error;
using qwalk::ErrorKind;

constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;

struct IoError {
  std::string message;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string short_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string time_label(double t) {
  auto label = qwalk::pi_label(t);
  return label ? num(t) + " (" + *label + ")" : num(t);
}

struct Config {
  std::optional<std::size_t> complete;
  std::vector<std::size_t> multipartite;
  std::optional<std::size_t> cycle;
  std::optional<std::size_t> cayley;
  std::optional<std::size_t> hypercube;
  std::vector<std::string> times;
  std::optional<std::string> window;
  std::optional<std::string> step;
  std::optional<double> eps;
  std::string format;
  std::string out;
  std::size_t start = 0;
  std::size_t steps = 1;
  std::optional<double> alpha;
  std::optional<double> beta;
  bool continuous = false;
  bool no_cross_check = false;
};

std::optional<qwalk::Family> family_of(const Config& c) {
  std::vector<qwalk::Family> chosen;
  using qwalk::FamilyKind;
  if (c.complete) chosen.push_back({FamilyKind::complete, {*c.complete}});
  if (!c.multipartite.empty()) chosen.push_back({FamilyKind::multipartite, c.multipartite});
  if (c.cycle) chosen.push_back({FamilyKind::cycle, {*c.cycle}});
  if (c.cayley) chosen.push_back({FamilyKind::cayley_symmetric, {*c.cayley}});
  if (c.hypercube) chosen.push_back({FamilyKind::hypercube, {*c.hypercube}});
  if (chosen.size() > 1) throw Error(ErrorKind::invalid_parameter, "give exactly one graph family flag");
  if (chosen.empty()) return std::nullopt;
  return chosen.front();
}

qwalk::Graph graph_of(const Config& c) {
  auto family = family_of(c);
  if (!family) {
    throw Error(ErrorKind::invalid_parameter,
                "missing graph: use --complete N, --multipartite A B, --cycle N, --cayley-sym N or --hypercube D");
  }
  return qwalk::make_graph(*family);
}

std::string graph_header(const qwalk::Graph& g) {
  return qwalk::family_label(g.family()) + " (n=" + std::to_string(g.size()) + ", d=" + std::to_string(g.degree()) +
         ")";
}

nlohmann::ordered_json graph_json(const qwalk::Graph& g) {
  return {{"family", qwalk::family_name(g.family().kind)},
          {"parameters", g.family().parameters},
          {"n", g.size()},
          {"degree", g.degree()}};
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw Error(ErrorKind::invalid_parameter, "format '" + format + "' not supported by this command");
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

// spectrum ------------------------------------------------------------------

std::string cmd_spectrum(const Config& c) {
  const qwalk::Graph g = graph_of(c);
  const qwalk::WalkSpectrum spectrum = qwalk::walk_spectrum(g);
  const qwalk::RealVector& values = spectrum.decomposition.eigenvalues;

  // Group within 1e-9, listed from largest to smallest.
  std::vector<std::pair<double, std::size_t>> groups;
  for (Eigen::Index j = values.size() - 1; j >= 0; --j) {
    if (!groups.empty() && std::abs(groups.back().first - values(j)) <= 1e-9) {
      ++groups.back().second;
    } else {
      groups.emplace_back(values(j), 1);
    }
  }

  const std::string format = c.format.empty() ? "table" : c.format;
  require_format(format, {"table", "csv", "json"});
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["graph"] = graph_json(g);
    j["route"] = qwalk::route_name(spectrum.route);
    j["eigenvalues"] = nlohmann::ordered_json::array();
    for (const auto& [value, multiplicity] : groups) {
      j["eigenvalues"].push_back({{"value", value}, {"multiplicity", multiplicity}});
    }
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "eigenvalue,multiplicity\n";
    for (const auto& [value, multiplicity] : groups) out << num(value) << ',' << multiplicity << '\n';
  } else {
    out << "graph " << graph_header(g) << '\n' << "route " << qwalk::route_name(spectrum.route) << '\n';
    out << pad("eigenvalue", 20) << "multiplicity\n";
    for (const auto& [value, multiplicity] : groups) out << pad(short_num(value), 20) << multiplicity << '\n';
  }
  return out.str();
}

// evolve --------------------------------------------------------------------

std::vector<double> time_grid(const Config& c) {
  if (!c.times.empty()) {
    if (c.window) throw Error(ErrorKind::invalid_parameter, "give either --time or --window, not both");
    std::vector<double> out;
    for (const auto& t : c.times) out.push_back(qwalk::parse_time(t));
    return out;
  }
  if (!c.window) throw Error(ErrorKind::invalid_parameter, "give --time T or --window T [--step D]");
  const double window = qwalk::parse_time(*c.window);
  const double step = c.step ? qwalk::parse_time(*c.step) : qwalk::default_grid_step(window);
  return qwalk::detail::scan_grid(window, step);
}

std::string cmd_evolve(const Config& c) {
  const qwalk::Graph g = graph_of(c);
  const std::vector<double> times = time_grid(c);
  const qwalk::Walk walk(g, c.start);
  const std::string format = c.format.empty() ? "csv" : c.format;
  require_format(format, {"csv", "json"});

  std::ostringstream out;
  if (format == "csv") {
    out << 't';
    for (std::size_t j = 0; j < g.size(); ++j) out << ",P_" << j;
    out << ",tv\n";
    for (double t : times) {
      const qwalk::RealVector p = walk.probabilities(t);
      out << num(t);
      for (Eigen::Index j = 0; j < p.size(); ++j) out << ',' << num(p(j));
      out << ',' << num(qwalk::tv_to_uniform(p)) << '\n';
    }
  } else {
    nlohmann::ordered_json j;
    j["graph"] = graph_json(g);
    j["start_vertex"] = c.start;
    j["rows"] = nlohmann::ordered_json::array();
    for (double t : times) {
      const qwalk::RealVector p = walk.probabilities(t);
      j["rows"].push_back({{"t", t},
                           {"probabilities", std::vector<double>(p.data(), p.data() + p.size())},
                           {"tv", qwalk::tv_to_uniform(p)}});
    }
    out << j.dump(2) << '\n';
  }
  return out.str();
}

// certify / scan --------------------------------------------------------------

std::string report_table(const qwalk::MixingReport& r) {
  std::ostringstream out;
  out << pad("graph", 14) << qwalk::family_label(r.graph) << '\n';
  out << pad("verdict", 14) << qwalk::verdict_name(r.verdict) << '\n';
  out << pad("route", 14) << qwalk::certification_route_name(r.route) << '\n';
  for (double t : r.witness_times) out << pad("witness", 14) << time_label(t) << '\n';
  out << pad("min_distance", 14) << num(r.min_distance) << '\n';
  out << pad("argmin_time", 14) << time_label(r.argmin_time) << '\n';
  if (r.verdict == qwalk::Verdict::does_not_mix_certified) out << pad("deficit", 14) << num(r.deficit) << '\n';
  out << pad("window", 14) << '[' << num(r.window_start) << ", " << num(r.window_end) << "]\n";
  if (r.grid_step > 0.0) out << pad("grid_step", 14) << num(r.grid_step) << '\n';
  out << pad("tolerance", 14) << num(r.tolerance) << '\n';
  for (const auto& note : r.notes) out << pad("note", 14) << note << '\n';
  return out.str();
}

std::string cmd_certify(const Config& c) {
  const auto family = family_of(c);
  if (!family) throw Error(ErrorKind::invalid_parameter, "certify needs --complete N or --multipartite A B");
  qwalk::MixingReport report;
  if (family->kind == qwalk::FamilyKind::complete) {
    report = qwalk::certify_complete(family->parameters[0]);
  } else if (family->kind == qwalk::FamilyKind::multipartite) {
    report = qwalk::certify_multipartite(family->parameters[0], family->parameters[1]);
  } else {
    throw Error(ErrorKind::invalid_parameter, "no closed form for " + qwalk::family_name(family->kind) +
                                                  " graphs; use 'qwalk scan' instead");
  }
  std::optional<qwalk::CrossCheck> check;
  if (!c.no_cross_check) check = qwalk::numeric_cross_check(report);

  const std::string format = c.format.empty() ? "table" : c.format;
  require_format(format, {"table", "json"});
  if (format == "json") {
    nlohmann::ordered_json j = qwalk::to_json(report);
    if (check) {
      j["numeric_cross_check"] = {{"agrees", check->agrees},
                                  {"scan_min_distance", check->scan.min_distance},
                                  {"scan_witness_times", check->scan.witness_times}};
    }
    return j.dump(2) + "\n";
  }
  std::string out = report_table(report);
  if (check) {
    out += pad("cross_check", 14) + (check->agrees ? "agrees" : "DISAGREES") + " (scan min_distance " +
           num(check->scan.min_distance) + ")\n";
  }
  return out;
}

std::string cmd_scan(const Config& c) {
  const qwalk::Graph g = graph_of(c);
  const double window = c.window ? qwalk::parse_time(*c.window) : qwalk::default_scan_window(g);
  const double step = c.step ? qwalk::parse_time(*c.step) : qwalk::default_grid_step(window);
  const double eps = c.eps.value_or(qwalk::kScanTolerance);
  qwalk::ScanOptions options;
  options.all_witnesses = qwalk::probability_period(g.family()).has_value();
  options.threads = qwalk::default_thread_count();
  qwalk::MixingReport report = qwalk::scan_mixing(qwalk::Walk(g, c.start), g.family(), window, step, eps, options);
  if (g.family().kind == qwalk::FamilyKind::cayley_symmetric && g.family().parameters[0] == 3) {
    report.notes.push_back("X_3 is isomorphic to K_{3,3}; certify --multipartite 2 3 gives the exact verdict");
  }
  const std::string format = c.format.empty() ? "json" : c.format;
  require_format(format, {"table", "json"});
  if (format == "json") return qwalk::to_json(report).dump(2) + "\n";
  return report_table(report);
}

// compare-classical ---------------------------------------------------------

std::string cmd_compare(const Config& c) {
  const qwalk::Graph g = graph_of(c);
  const bool explicit_chain = c.continuous || c.alpha || c.beta;
  if (explicit_chain && g.size() != 2) {
    throw Error(ErrorKind::invalid_parameter, "the continuous-time classical chain is only defined for K_2");
  }
  const bool with_chain = g.size() == 2;
  const double alpha = c.alpha.value_or(1.0);
  const double beta = c.beta.value_or(1.0);
  std::vector<double> times;
  for (const auto& t : c.times) times.push_back(qwalk::parse_time(t));
  if (times.empty()) times = {0.0, std::numbers::pi / 4.0};

  struct Row {
    std::string method;
    std::string at;
    Eigen::VectorXd dist;
  };
  std::vector<Row> rows;
  const auto n = static_cast<Eigen::Index>(g.size());
  const Eigen::VectorXd start = Eigen::VectorXd::Unit(n, static_cast<Eigen::Index>(c.start));
  for (bool lazy : {false, true}) {
    Eigen::VectorXd dist = start;
    for (std::size_t k = 0; k <= c.steps; ++k) {
      rows.push_back({lazy ? "lazy-discrete" : "simple-discrete", std::to_string(k), dist});
      dist = qwalk::discrete_step(g, dist, lazy);
    }
  }
  if (with_chain) {
    const std::string name = "continuous-classical(alpha=" + short_num(alpha) + ";beta=" + short_num(beta) + ")";
    for (double t : times) {
      rows.push_back({name, num(t), qwalk::two_state_ct(alpha, beta, t).apply(start)});
    }
  }
  const qwalk::Walk walk(g, c.start);
  for (double t : times) rows.push_back({"quantum", num(t), walk.probabilities(t)});

  const std::string format = c.format.empty() ? "table" : c.format;
  require_format(format, {"table", "csv", "json"});
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["graph"] = graph_json(g);
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      j["rows"].push_back({{"method", r.method},
                           {"at", r.at},
                           {"probabilities", std::vector<double>(r.dist.data(), r.dist.data() + r.dist.size())},
                           {"tv", qwalk::tv_to_uniform(r.dist)}});
    }
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "method,step_or_time";
    for (Eigen::Index k = 0; k < n; ++k) out << ",P_" << k;
    out << ",tv\n";
    for (const auto& r : rows) {
      out << r.method << ',' << r.at;
      for (Eigen::Index k = 0; k < n; ++k) out << ',' << num(r.dist(k));
      out << ',' << num(qwalk::tv_to_uniform(r.dist)) << '\n';
    }
  } else {
    out << "graph " << graph_header(g) << '\n';
    out << pad("method", 40) << pad("step/time", 22) << "distribution  [tv]\n";
    for (const auto& r : rows) {
      std::string dist = "(";
      for (Eigen::Index k = 0; k < n; ++k) dist += (k ? ", " : "") + short_num(r.dist(k));
      dist += ")";
      out << pad(r.method, 40) << pad(r.at, 22) << dist << "  [" << short_num(qwalk::tv_to_uniform(r.dist)) << "]\n";
    }
  }
  return out.str();
}

// table ---------------------------------------------------------------------

std::string cmd_table(const Config& c) {
  std::vector<qwalk::MixingReport> reports;
  for (std::size_t n = 2; n <= 10; ++n) reports.push_back(qwalk::certify_complete(n));
  for (std::size_t a = 2; a <= 6; ++a) {
    for (std::size_t b = 2; a * b <= 12; ++b) reports.push_back(qwalk::certify_multipartite(a, b));
  }
  const std::string format = c.format.empty() ? "table" : c.format;
  require_format(format, {"table", "csv", "json"});
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : reports) j.push_back(qwalk::to_json(r));
    out << j.dump(2) << '\n';
    return out.str();
  }
  if (format == "csv") {
    out << "graph,vertices,verdict,first_witness,deficit\n";
  } else {
    out << pad("graph", 10) << pad("n", 5) << pad("verdict", 25) << "witness time / deficit\n";
  }
  for (const auto& r : reports) {
    const qwalk::Graph g = qwalk::make_graph(r.graph);
    const bool mixes = r.verdict == qwalk::Verdict::mixes;
    if (format == "csv") {
      out << qwalk::family_label(r.graph) << ',' << g.size() << ',' << qwalk::verdict_name(r.verdict) << ','
          << (mixes ? num(r.witness_times.front()) : "") << ',' << num(r.deficit) << '\n';
    } else {
      std::string detail;
      if (mixes) {
        detail = "t = " + short_num(r.witness_times.front());
        if (auto label = qwalk::pi_label(r.witness_times.front())) detail += " (" + *label + ")";
      } else {
        detail = "deficit " + short_num(r.deficit);
      }
      out << pad(qwalk::family_label(r.graph), 10) << pad(std::to_string(g.size()), 5)
          << pad(qwalk::verdict_name(r.verdict), 25) << detail << '\n';
    }
  }
  return out.str();
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty() || c.out == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError{"failed writing to standard output"};
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw IoError{"cannot open '" + c.out + "' for writing"};
  file << text;
  file.flush();
  if (!file) throw IoError{"failed writing '" + c.out + "'"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continuous-time quantum walk simulator and uniform-mixing certifier", "qwalk"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Config c;
  app.add_option("--complete", c.complete, "complete graph K_N");
  app.add_option("--multipartite", c.multipartite, "balanced complete multipartite graph, A blocks of B vertices")
      ->expected(2);
  app.add_option("--cycle", c.cycle, "cycle C_N");
  app.add_option("--cayley-sym", c.cayley, "Cayley graph of S_N generated by transpositions");
  app.add_option("--hypercube", c.hypercube, "hypercube Q_D");
  app.add_option("--time", c.times, "time value(s), real or rational multiple of pi (e.g. 3pi/4)");
  app.add_option("--window", c.window, "time window [0, T]");
  app.add_option("--step", c.step, "grid step");
  app.add_option("--eps", c.eps, "TV tolerance for numeric mixing");
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_option("--out", c.out, "output path (default: standard output)");
  app.add_option("--start", c.start, "start vertex (default 0)");

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues of H = A/d with multiplicities");
  auto* evolve = app.add_subcommand("evolve", "probability time series as CSV");
  auto* certify = app.add_subcommand("certify", "closed-form mixing verdict for complete/multipartite graphs");
  certify->add_flag("--no-cross-check", c.no_cross_check, "skip the numeric cross-check scan");
  auto* scan = app.add_subcommand("scan", "numeric mixing scan over a time window");
  auto* compare = app.add_subcommand("compare-classical", "classical walks next to the quantum walk");
  compare->add_option("--steps", c.steps, "discrete steps to show (default 1)");
  compare->add_option("--alpha", c.alpha, "continuous chain rate out of state 0");
  compare->add_option("--beta", c.beta, "continuous chain rate out of state 1");
  compare->add_flag("--continuous", c.continuous, "require the two-state continuous chain");
  auto* table = app.add_subcommand("table", "mixing verdicts for K_n and balanced multipartite graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    std::string text;
    if (*spectrum) text = cmd_spectrum(c);
    else if (*evolve) text = cmd_evolve(c);
    else if (*certify) text = cmd_certify(c);
    else if (*scan) text = cmd_scan(c);
    else if (*compare) text = cmd_compare(c);
    else if (*table) text = cmd_table(c);
    emit(c, text);
  } catch (const Error& e) {
    std::cerr << "qwalk: error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const IoError& e) {
    std::cerr << "qwalk: io-error: " << e.message << '\n';
    return kExitIo;
  }
  return 0;
}
