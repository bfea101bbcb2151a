// Copyright 2026 The eccb Authors
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

#include "eccb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "eccb/certifier.hpp"
#include "eccb/extremal.hpp"
#include "eccb/generators.hpp"
#include "eccb/graph.hpp"

namespace eccb::cli {

namespace fs = std::filesystem;

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Inapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Loaded {
  Graph graph;
  std::string stem;
};

Loaded load_graph(const std::string& path, std::istream& in) {
  if (path == "-") return {parse_edge_list(in), "stdin"};
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  return {parse_edge_list(file), fs::path(path).stem().string()};
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create directory " + dir + ": " + ec.message());
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path.string());
  file << content;
}

std::string exact_and_decimal(const Rational& q) {
  return to_fraction(q) + " (" + to_decimal(q) + ")";
}

std::string optional_girth(const std::optional<std::uint32_t>& g) {
  return g ? std::to_string(*g) : std::string("none");
}

unsigned thread_count() {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ECCB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) threads = static_cast<unsigned>(v);
  }
  return threads;
}

// --- compute -----------------------------------------------------------

int cmd_compute(const std::string& input, bool json, std::istream& in, std::ostream& out) {
  const Graph g = load_graph(input, in).graph;
  const EccentricityProfile profile = eccentricity_profile(g);
  const auto gi = girth(g);
  if (json) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    j["m"] = g.size();
    j["minDegree"] = g.min_degree();
    j["maxDegree"] = g.max_degree();
    j["girth"] = gi ? nlohmann::ordered_json(*gi) : nlohmann::ordered_json(nullptr);
    j["profile"] = to_json(profile);
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "n=" << g.order() << " m=" << g.size() << " avec=" << exact_and_decimal(profile.avec)
      << " radius=" << profile.radius << " diameter=" << profile.diameter
      << " girth=" << optional_girth(gi) << " mindeg=" << g.min_degree()
      << " maxdeg=" << g.max_degree() << '\n';
  out << "vertex ecc\n";
  for (Vertex v = 0; v < g.order(); ++v) out << v << ' ' << profile.ecc[v] << '\n';
  return kOk;
}

// --- bound -------------------------------------------------------------

int cmd_bound(const std::string& input, bool json, const std::string& only,
              std::istream& in, std::ostream& out) {
  std::optional<BoundId> filter;
  if (!only.empty()) {
    filter = parse_bound_id(only);
    if (!filter) throw CLI::ValidationError("--only", "unknown bound id " + only);
  }
  const Graph g = load_graph(input, in).graph;
  const EccentricityProfile profile = eccentricity_profile(g);
  const GraphParams params = measure(g);
  std::vector<BoundResult> results = evaluate_all(params, profile.avec);
  if (filter) {
    // The theorem evaluators pick their id from the girth parity; match both.
    std::erase_if(results, [&](const BoundResult& r) { return r.id != *filter; });
    if (results.empty()) {
      BoundResult r;
      r.id = *filter;
      r.reason = "girth parity selects the other variant";
      results.push_back(r);
    }
  }
  std::stable_partition(results.begin(), results.end(),
                        [](const BoundResult& r) { return r.applicable; });
  bool violated = false;
  bool any_applicable = false;
  for (const auto& r : results) {
    any_applicable |= r.applicable;
    violated |= r.satisfied.has_value() && !*r.satisfied;
  }
  if (json) {
    nlohmann::ordered_json j;
    j["avec"] = to_fraction(profile.avec);
    j["bounds"] = nlohmann::ordered_json::array();
    for (const auto& r : results) j["bounds"].push_back(to_json(r));
    out << j.dump(2) << '\n';
  } else {
    out << "avec=" << exact_and_decimal(profile.avec) << '\n';
    for (const auto& r : results) {
      out << to_string(r.id) << ' ';
      if (r.applicable) {
        out << exact_and_decimal(*r.value) << ' '
            << (*r.satisfied ? "satisfied" : "VIOLATED") << '\n';
      } else {
        out << "not-applicable: " << r.reason << '\n';
      }
    }
  }
  if (violated) return kViolation;
  if (filter && !any_applicable) return kInapplicable;
  return kOk;
}

// --- certify -----------------------------------------------------------

struct CertifyOutcome {
  nlohmann::ordered_json json;
  bool holds = false;
  std::string summary;
};

CertifyOutcome certify_graph(const Graph& g, bool maxdeg) {
  if (!is_connected(g)) throw DisconnectedGraphError();
  const GraphParams params = measure(g);
  if (params.min_degree < 3) {
    throw Inapplicable("requires minimum degree delta >= 3 (graph has delta=" +
                       std::to_string(params.min_degree) + ")");
  }
  if (!params.girth) throw Inapplicable("graph is acyclic");
  const BoundResult bound = maxdeg ? bound_thm_girth_maxdeg(params) : bound_thm_girth(params);
  if (!bound.applicable) throw Inapplicable(bound.reason);

  CertifyOutcome outcome;
  std::size_t steps = 0;
  std::size_t held = 0;
  std::size_t checks = 0;
  std::size_t passed = 0;
  auto tally = [&](const auto& cert) {
    for (const auto& s : cert.steps) held += s.holds, ++steps;
    for (const auto& c : cert.checks) passed += c.holds, ++checks;
    outcome.holds = cert.all_steps_hold();
    outcome.json = to_json(cert);
  };
  if (*params.girth % 2 == 1) {
    tally(certify_odd(g, maxdeg));
  } else {
    tally(certify_even(g, maxdeg));
  }
  std::ostringstream s;
  s << "variant=" << outcome.json["variant"].get<std::string>()
    << " bound=" << to_string(bound.id) << " value=" << to_fraction(*bound.value)
    << " steps=" << held << '/' << steps << " checks=" << passed << '/' << checks
    << " allStepsHold=" << (outcome.holds ? "true" : "false");
  outcome.summary = s.str();
  return outcome;
}

int cmd_certify(const std::string& input, bool maxdeg, bool json, const std::string& out_dir,
                std::istream& in, std::ostream& out) {
  const Loaded loaded = load_graph(input, in);
  CertifyOutcome outcome;
  try {
    outcome = certify_graph(loaded.graph, maxdeg);
  } catch (const CertificationError& e) {
    out << "certification failed: " << e.what() << '\n';
    return kViolation;
  }
  if (!out_dir.empty()) {
    ensure_dir(out_dir);
    const fs::path path = fs::path(out_dir) / (loaded.stem + ".cert.json");
    write_file(path, outcome.json.dump(2) + "\n");
    if (!json) out << "wrote " << path.string() << '\n';
  }
  if (json) {
    out << outcome.json.dump(2) << '\n';
  } else {
    out << outcome.summary << '\n';
  }
  return outcome.holds ? kOk : kViolation;
}

// --- generate ----------------------------------------------------------

struct GenerateOptions {
  std::uint32_t n = 0;
  std::uint32_t delta = 0;
  std::uint32_t g = 0;
  std::uint64_t seed = 0;
  std::uint32_t count = 1;
  std::string out_dir;
  bool json = false;
  bool strict = false;
};

nlohmann::ordered_json failure_json(const GeneratorConfig& cfg, const GeneratorFailure& f) {
  nlohmann::ordered_json j;
  j["status"] = "failure";
  j["seed"] = cfg.seed;
  j["n"] = cfg.n;
  j["delta"] = cfg.delta;
  j["g"] = cfg.girth;
  j["restarts"] = f.restarts;
  j["attempts"] = f.attempts;
  j["rejected"] = f.rejected;
  j["reason"] = f.reason;
  return j;
}

GeneratorConfig make_config(std::uint32_t n, std::uint32_t delta, std::uint32_t g,
                            std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.n = n;
  cfg.delta = delta;
  cfg.girth = g;
  cfg.seed = seed;
  return cfg;
}

int cmd_generate(const GenerateOptions& o, std::ostream& out, std::ostream& err) {
  if (o.count == 0) throw CLI::ValidationError("--count", "must be at least 1");
  if (o.count > 1 && o.out_dir.empty()) {
    throw CLI::ValidationError("--count", "more than one graph requires --out");
  }
  if (!o.out_dir.empty()) ensure_dir(o.out_dir);
  std::size_t failures = 0;
  nlohmann::ordered_json report = nlohmann::ordered_json::array();
  for (std::uint32_t i = 0; i < o.count; ++i) {
    const GeneratorConfig cfg = make_config(o.n, o.delta, o.g, o.seed + i);
    const GeneratorResult result = random_min_degree_girth(cfg);
    if (const auto* failure = std::get_if<GeneratorFailure>(&result)) {
      ++failures;
      const auto j = failure_json(cfg, *failure);
      if (o.json) {
        report.push_back(j);
      } else {
        err << "generator failure: seed=" << cfg.seed << " restarts=" << failure->restarts
            << " attempts=" << failure->attempts << " rejected=" << failure->rejected
            << " reason=" << failure->reason << '\n';
      }
      continue;
    }
    const Graph& g = std::get<Graph>(result);
    std::ostringstream text;
    write_generated(text, g, cfg);
    if (o.out_dir.empty()) {
      if (o.json) {
        nlohmann::ordered_json j;
        j["status"] = "ok";
        j["seed"] = cfg.seed;
        j["graph"] = to_json(g);
        report.push_back(j);
      } else {
        out << text.str();
      }
      continue;
    }
    const std::string name = "graph-n" + std::to_string(o.n) + "-d" + std::to_string(o.delta) +
                              "-g" + std::to_string(o.g) + "-s" + std::to_string(cfg.seed) +
                              ".el";
    const fs::path path = fs::path(o.out_dir) / name;
    write_file(path, text.str());
    if (o.json) {
      nlohmann::ordered_json j;
      j["status"] = "ok";
      j["seed"] = cfg.seed;
      j["path"] = path.string();
      report.push_back(j);
    } else {
      out << "wrote " << path.string() << '\n';
    }
  }
  if (o.json) out << report.dump(2) << '\n';
  return failures > 0 && o.strict ? kInapplicable : kOk;
}

// --- chain -------------------------------------------------------------

int cmd_chain(std::uint32_t delta, std::uint32_t g, std::uint32_t k, bool report, bool json,
              const std::string& out_dir, std::ostream& out) {
  if (!out_dir.empty()) ensure_dir(out_dir);
  const std::string tag = "d" + std::to_string(delta) + "-g" + std::to_string(g);
  if (report) {
    const auto rows = sharpness_report(delta, g, 1, k);
    std::ostringstream csv;
    write_sharpness_csv(csv, rows);
    if (!out_dir.empty()) {
      const fs::path path = fs::path(out_dir) / ("sharpness-" + tag + ".csv");
      write_file(path, csv.str());
      out << "wrote " << path.string() << '\n';
    } else {
      out << csv.str();
    }
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const SharpnessRow& r) {
      return r.gap_ok && r.lower <= r.avec && (!r.upper || r.avec <= *r.upper);
    });
    return ok ? kOk : kViolation;
  }
  const ChainSpec spec = make_chain_spec(delta, g, k);
  const Graph graph = chain_graph(spec);
  const EccentricityProfile profile = eccentricity_profile(graph);
  std::ostringstream summary;
  summary << "chain delta=" << delta << " g=" << g << " k=" << k << " n=" << graph.order()
          << " diameter=" << profile.diameter << " radius=" << profile.radius
          << " avec=" << to_fraction(profile.avec);
  if (json) {
    nlohmann::ordered_json j;
    j["delta"] = delta;
    j["g"] = g;
    j["k"] = k;
    j["baseEdge"] = {spec.base_edge->u, spec.base_edge->v};
    nlohmann::ordered_json links = nlohmann::ordered_json::array();
    for (const Edge& e : spec.link_edges) links.push_back({e.u, e.v});
    nlohmann::ordered_json deleted = nlohmann::ordered_json::array();
    for (const Edge& e : spec.deleted_edges) deleted.push_back({e.u, e.v});
    j["linkEdges"] = std::move(links);
    j["deletedEdges"] = std::move(deleted);
    j["graph"] = to_json(graph);
    j["diameter"] = profile.diameter;
    j["radius"] = profile.radius;
    j["avec"] = to_fraction(profile.avec);
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::ostringstream text;
  write_edge_list(text, graph);
  if (!out_dir.empty()) {
    const fs::path path = fs::path(out_dir) /
                          ("chain-" + tag + "-k" + std::to_string(k) + ".el");
    write_file(path, text.str() + "# " + summary.str() + "\n");
    out << "wrote " << path.string() << '\n' << summary.str() << '\n';
  } else {
    out << text.str() << "# " << summary.str() << '\n';
  }
  return kOk;
}

// --- batch -------------------------------------------------------------

struct BatchJob {
  std::string id;
  std::function<BatchReportRow()> run;
};

std::vector<BatchReportRow> run_jobs(const std::vector<BatchJob>& jobs) {
  std::vector<BatchReportRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        rows[i] = jobs[i].run();
      } catch (const std::exception& e) {
        rows[i] = BatchReportRow{};
        rows[i].graph_id = jobs[i].id;
        rows[i].status = std::string("error: ") + e.what();
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(), jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

struct BatchOptions {
  std::string dir;
  std::uint32_t n = 0;
  std::uint32_t delta = 0;
  std::uint32_t g = 0;
  std::uint64_t seed = 0;
  std::uint32_t count = 0;
  std::string out_dir;
  bool strict = false;
  bool json = false;
};

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

int cmd_batch(const BatchOptions& o, std::ostream& out) {
  std::vector<BatchJob> jobs;
  std::vector<std::string> generated;  // edge-list text per job, generator mode only
  if (!o.dir.empty()) {
    if (!fs::is_directory(o.dir)) throw InputError("not a directory: " + o.dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(o.dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".el") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
      const std::string id = path.filename().string();
      jobs.push_back({id, [id, path] {
                        std::ifstream file(path);
                        BatchReportRow row;
                        row.graph_id = id;
                        try {
                          return evaluate_batch_row(id, parse_edge_list(file));
                        } catch (const ParseError& e) {
                          row.status = std::string("input-error: ") + e.what();
                        } catch (const DisconnectedGraphError&) {
                          row.status = "disconnected";
                        }
                        return row;
                      }});
    }
  } else {
    if (o.count == 0 || o.n == 0 || o.delta == 0 || o.g == 0) {
      throw CLI::ValidationError("batch",
                                 "needs --dir, or --n --delta --g --count [--seed]");
    }
    if (!o.out_dir.empty()) ensure_dir(o.out_dir);
    for (std::uint32_t i = 0; i < o.count; ++i) {
      std::ostringstream id;
      id << "gen-" << std::setw(4) << std::setfill('0') << i;
      const GeneratorConfig cfg = make_config(o.n, o.delta, o.g, o.seed + i);
      const std::string out_dir = o.out_dir;
      jobs.push_back({id.str(), [id = id.str(), cfg, out_dir] {
                        const GeneratorResult result = random_min_degree_girth(cfg);
                        if (std::holds_alternative<GeneratorFailure>(result)) {
                          BatchReportRow row;
                          row.graph_id = id;
                          row.status = "generator-failure";
                          return row;
                        }
                        const Graph& g = std::get<Graph>(result);
                        if (!out_dir.empty()) {
                          std::ostringstream text;
                          write_generated(text, g, cfg);
                          write_file(fs::path(out_dir) / (id + ".el"), text.str());
                        }
                        return evaluate_batch_row(id, g);
                      }});
    }
  }

  const std::vector<BatchReportRow> rows = run_jobs(jobs);
  std::ostringstream csv;
  write_batch_csv(csv, rows);
  if (!o.out_dir.empty()) {
    ensure_dir(o.out_dir);
    write_file(fs::path(o.out_dir) / "batch.csv", csv.str());
  }
  out << csv.str();

  bool violation = false;
  bool failed_rows = false;
  for (const auto& r : rows) {
    violation |= r.violation();
    failed_rows |= r.status != "ok";
  }
  if (violation) return kViolation;
  if (failed_rows && o.strict) return o.dir.empty() ? kInapplicable : kInputError;
  return kOk;
}

}  // namespace

// --- batch rows ----------------------------------------------------------

const std::vector<BoundId>& batch_bound_columns() {
  static const std::vector<BoundId> columns = [] {
    std::vector<BoundId> c = legacy_bound_ids();
    c.insert(c.end(), {BoundId::ThmGirthOdd, BoundId::ThmGirthEven,
                       BoundId::ThmGirthMaxDegOdd, BoundId::ThmGirthMaxDegEven});
    return c;
  }();
  return columns;
}

bool BatchReportRow::violation() const {
  for (const auto& s : satisfied) {
    if (s.has_value() && !*s) return true;
  }
  return (certificate_ok && !*certificate_ok) ||
         (maxdeg_certificate_ok && !*maxdeg_certificate_ok);
}

BatchReportRow evaluate_batch_row(std::string graph_id, const Graph& g) {
  BatchReportRow row;
  row.graph_id = std::move(graph_id);
  const EccentricityProfile profile = eccentricity_profile(g);
  const GraphParams params = measure(g);
  row.n = params.n;
  row.min_degree = params.min_degree;
  row.max_degree = params.max_degree;
  row.girth = params.girth;
  row.avec = profile.avec;
  const auto& columns = batch_bound_columns();
  row.values.assign(columns.size(), std::nullopt);
  row.satisfied.assign(columns.size(), std::nullopt);
  for (const BoundResult& r : evaluate_all(params, profile.avec)) {
    if (!r.applicable) continue;
    const auto it = std::find(columns.begin(), columns.end(), r.id);
    const auto i = static_cast<std::size_t>(it - columns.begin());
    row.values[i] = r.value;
    row.satisfied[i] = r.satisfied;
  }
  auto attempt = [&](bool maxdeg) -> std::optional<bool> {
    try {
      return certify_graph(g, maxdeg).holds;
    } catch (const Inapplicable&) {
      return std::nullopt;
    } catch (const CertificationError&) {
      return false;
    }
  };
  row.certificate_ok = attempt(false);
  row.maxdeg_certificate_ok = attempt(true);
  return row;
}

void write_batch_csv(std::ostream& out, const std::vector<BatchReportRow>& rows) {
  out << "graphId,status,n,minDeg,maxDeg,girth,avec,avec_exact";
  for (BoundId id : batch_bound_columns()) {
    const std::string name(to_string(id));
    out << ',' << name << ',' << name << "_exact," << name << "_satisfied";
  }
  out << ",certificateOk,maxDegCertificateOk\n";
  auto flag = [](const std::optional<bool>& b) -> std::string {
    return b ? (*b ? "true" : "false") : "";
  };
  for (const auto& r : rows) {
    out << csv_field(r.graph_id) << ',' << csv_field(r.status);
    if (r.status != "ok") {
      out << std::string(6 + 3 * batch_bound_columns().size() + 2, ',') << '\n';
      continue;
    }
    out << ',' << r.n << ',' << r.min_degree << ',' << r.max_degree << ','
        << (r.girth ? std::to_string(*r.girth) : std::string()) << ','
        << to_decimal(r.avec) << ',' << to_fraction(r.avec);
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      out << ',';
      if (r.values[i]) out << to_decimal(*r.values[i]) << ',' << to_fraction(*r.values[i]);
      else out << ',';
      out << ',' << flag(r.satisfied[i]);
    }
    out << ',' << flag(r.certificate_ok) << ',' << flag(r.maxdeg_certificate_ok) << '\n';
  }
}

// --- entry point ---------------------------------------------------------

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Average eccentricity, girth bounds, and proof certificates", "eccb"};
  app.require_subcommand(1);

  std::string input;
  bool json = false;
  std::string only;
  bool maxdeg = false;
  std::string out_dir;
  GenerateOptions gen;
  std::uint32_t k = 1;
  bool report = false;
  BatchOptions batch;

  auto* compute = app.add_subcommand("compute", "eccentricity profile, girth and degrees");
  compute->add_option("input", input, "edge-list file, or - for standard input")->required();
  compute->add_flag("--json", json, "emit JSON");

  auto* bound = app.add_subcommand("bound", "evaluate every bound against avec");
  bound->add_option("input", input, "edge-list file, or - for standard input")->required();
  bound->add_flag("--json", json, "emit JSON");
  bound->add_option("--only", only, "report a single bound id (e.g. ThmGirthOdd, Eq2)");

  auto* certify = app.add_subcommand("certify", "build and check a bound certificate");
  certify->add_option("input", input, "edge-list file, or - for standard input")->required();
  certify->add_flag("--maxdeg", maxdeg, "certify the maximum-degree refinement");
  certify->add_flag("--json", json, "print the certificate JSON");
  certify->add_option("--out", out_dir, "write <stem>.cert.json into this directory");

  auto* generate = app.add_subcommand("generate", "random graph with min degree and girth");
  generate->add_option("--n", gen.n, "order")->required();
  generate->add_option("--delta", gen.delta, "minimum degree")->required();
  generate->add_option("--g", gen.g, "girth lower bound")->required();
  generate->add_option("--seed", gen.seed, "64-bit seed (graph i uses seed+i)");
  generate->add_option("--count", gen.count, "number of graphs");
  generate->add_option("--out", gen.out_dir, "output directory");
  generate->add_flag("--json", gen.json, "emit JSON");
  generate->add_flag("--strict", gen.strict, "exit 3 when any generation fails");

  std::uint32_t chain_delta = 0;
  std::uint32_t chain_g = 0;
  auto* chain = app.add_subcommand("chain", "chained Moore-graph construction");
  chain->add_option("--delta", chain_delta, "degree")->required();
  chain->add_option("--g", chain_g, "girth")->required();
  chain->add_option("--k", k, "number of copies (report: k = 1..K)")->required();
  chain->add_flag("--report", report, "sharpness CSV for k = 1..K");
  chain->add_flag("--json", json, "emit JSON");
  chain->add_option("--out", out_dir, "output directory");

  auto* batch_cmd = app.add_subcommand("batch", "bound and certificate sweep with CSV report");
  batch_cmd->add_option("--dir", batch.dir, "directory of .el files");
  batch_cmd->add_option("--n", batch.n, "order of generated graphs");
  batch_cmd->add_option("--delta", batch.delta, "minimum degree of generated graphs");
  batch_cmd->add_option("--g", batch.g, "girth lower bound of generated graphs");
  batch_cmd->add_option("--count", batch.count, "number of generated graphs");
  batch_cmd->add_option("--seed", batch.seed, "seed of the first generated graph");
  batch_cmd->add_option("--out", batch.out_dir, "write batch.csv (and generated graphs) here");
  batch_cmd->add_flag("--strict", batch.strict, "failed rows make the exit code nonzero");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(input, json, in, out);
    if (bound->parsed()) return cmd_bound(input, json, only, in, out);
    if (certify->parsed()) return cmd_certify(input, maxdeg, json, out_dir, in, out);
    if (generate->parsed()) return cmd_generate(gen, out, err);
    if (chain->parsed()) {
      return cmd_chain(chain_delta, chain_g, k, report, json, out_dir, out);
    }
    if (batch_cmd->parsed()) return cmd_batch(batch, out);
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DisconnectedGraphError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const Inapplicable& e) {
    err << "not applicable: " << e.what() << '\n';
    return kInapplicable;
  } catch (const NotInCatalogError& e) {
    err << "not applicable: " << e.what() << '\n';
    return kInapplicable;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace eccb::cli
