#include "repnum/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "repnum/constructions.hpp"
#include "repnum/equalize.hpp"
#include "repnum/errors.hpp"
#include "repnum/graph.hpp"
#include "repnum/oracle.hpp"
#include "repnum/zerosum.hpp"

namespace repnum::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A claim battery failure, carrying the report already built.
struct ClaimFailure {
  json report;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw ParseError("no graph in input", 0);
}

json one_based(const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (auto i : indices) out.push_back(i + 1);
  return out;
}

struct Options {
  std::string sub;
  std::string path;
  std::optional<std::int64_t> q;
  int k = 3;
  std::optional<int> r;
  bool three = false;
  bool full = false;
  int n = 0;
  int budget = -1;
  int jobs = 0;
  std::uint64_t seed = 1;
  int samples = 0;
  std::string graph;
  std::string base;
  std::string format = "g6";
  std::string out_path;
  std::string corpus;
};

json zerosum_command(const Options& o, std::ostream& err) {
  std::ifstream in(o.path);
  if (!in) throw IoError("cannot open " + o.path);
  auto file = zerosum::read_sequence(in);
  const std::int64_t q = o.q.value_or(file.q);
  const auto& seq = file.seq;
  json outputs;
  if (o.sub == "reorder") {
    const auto rec = zerosum::steinitz_reorder(seq);
    std::int64_t worst = 0;
    for (const auto& s : rec.prefix_sums) worst = std::max(worst, zerosum::linf(s));
    outputs = {{"permutation", one_based(rec.permutation)},
               {"prefix_sums", rec.prefix_sums},
               {"max_prefix_linf", worst},
               {"bound", seq.bound() * seq.dim()},
               {"valid", worst <= seq.bound() * seq.dim()}};
    err << "reordered " << seq.size() << " vectors, max prefix norm " << worst << '\n';
  } else if (o.sub == "find") {
    const auto w = zerosum::find_zero_sum_subsequence(seq, q);
    outputs = {{"witness", one_based(w.indices)},
               {"size_bound", zerosum::size_bound(seq.bound(), seq.dim(), q)},
               {"valid", w.checked}};
    err << "zero-sum witness of " << w.indices.size() << " vectors\n";
  } else {
    const auto kept = zerosum::trim_to_sum(seq, q);
    const auto bound = zerosum::size_bound(seq.bound(), seq.dim(), q);
    const auto sum = seq.subsequence(kept).total();
    outputs = {{"kept", one_based(kept)},
               {"kept_count", kept.size()},
               {"size_bound", bound},
               {"sum", sum},
               {"valid", sum == seq.total() && static_cast<std::int64_t>(kept.size()) <= bound}};
    err << "kept " << kept.size() << " of " << seq.size() << " vectors (bound " << bound << ")\n";
  }
  return {{"inputs", {{"path", o.path}, {"q", q}, {"d", seq.dim()}, {"r", seq.bound()}, {"n", seq.size()}}},
          {"outputs", outputs}};
}

json equalize_command(const Options& o, std::ostream& err) {
  const std::string text = read_file(o.path);
  const bool is_json = text.find_first_not_of(" \t\r\n") != std::string::npos &&
                       text[text.find_first_not_of(" \t\r\n")] == '{';
  if (o.three && o.r.value_or(1) > 1) throw ContractError("--three works on simple graphs only (r = 1)");

  json outputs;
  DeletionCertificate cert;
  if (o.three) {
    if (is_json) throw ContractError("--three expects a graph6 input");
    const SimpleGraph g = parse_graph6(first_line(text));
    cert = equalize::equalize_three(g);
    outputs = {{"certificate", to_json(cert)}, {"n", g.order()}, {"max_deletions", 6}};
  } else {
    WeightedCompleteGraph g;
    if (is_json) {
      json j;
      try {
        j = json::parse(text);
      } catch (const json::parse_error& e) {
        throw ParseError(std::string("JSON: ") + e.what(), e.byte);
      }
      g = weighted_from_json(j);
      if (o.r) {
        if (*o.r < g.weight_bound()) throw ContractError("--r is below the weight bound of the input");
        g = WeightedCompleteGraph(g.order(), *o.r, {g.upper_triangle().begin(), g.upper_triangle().end()});
      }
    } else {
      g = from_simple(parse_graph6(first_line(text)), o.r.value_or(1));
    }
    const auto params = equalize::threshold(o.k, g.weight_bound());
    equalize::EqualizeOptions eo;
    eo.shortcut_repeated = !o.full;
    cert = equalize::equalize(g, o.k, eo);
    outputs = {{"certificate", to_json(cert)},
               {"n", g.order()},
               {"threshold", {{"s", params.s}, {"N", params.N}, {"C", params.C}}}};
  }
  err << "deleted " << cert.deleted.size() << " vertices; " << cert.witness.size()
      << " vertices share degree " << cert.common_degree << '\n';
  return {{"inputs", {{"path", o.path}, {"k", o.three ? 3 : o.k}, {"r", o.r.value_or(1)}, {"three", o.three}, {"full", o.full}}},
          {"outputs", outputs}};
}

json oracle_command(const Options& o, std::ostream& err) {
  oracle::SweepOptions opts;
  opts.jobs = o.jobs;
  if (o.sub == "sweep") {
    if (o.n > oracle::kMaxLabeledOrder) {
      throw ContractError("oracle sweep stops at n = 7; supply an isomorph-free corpus to 'oracle scan'");
    }
    const int budget = o.budget < 0 ? 2 : o.budget;
    auto report = oracle::sweep(o.n, o.k, budget, opts);
    err << "examined " << report.graphs_examined << " graphs, max deletions " << report.max_min_deletions << '\n';
    auto j = to_json(report);
    j.erase("runtime_seconds");
    return {{"inputs", {{"n", o.n}, {"k", o.k}, {"budget", budget}}}, {"outputs", j}};
  }
  if (o.sub == "scan") {
    const int budget = o.budget < 0 ? 3 : o.budget;
    std::ifstream in(o.path);
    if (!in) throw IoError("cannot open " + o.path);
    auto report = oracle::scan_corpus(in, o.k, budget, opts);
    for (const auto& e : report.parse_errors) err << o.path << ":" << e.line << ": " << e.message << '\n';
    err << "examined " << report.graphs_examined << " graphs, max deletions " << report.max_min_deletions << '\n';
    auto j = to_json(report);
    j.erase("runtime_seconds");
    return {{"inputs", {{"path", o.path}, {"k", o.k}, {"budget", budget}}}, {"outputs", j}};
  }
  if (o.graph.empty() && o.path.empty()) throw ContractError("min-del needs --graph or a file");
  const std::string g6 = o.graph.empty() ? first_line(read_file(o.path)) : o.graph;
  const SimpleGraph g = parse_graph6(g6);
  const int budget = o.budget < 0 ? g.order() : o.budget;
  const auto result = oracle::min_deletions_parallel(g, o.k, budget, o.jobs);
  json outputs = result ? to_json(*result) : json{{"exhausted", true}};
  err << (result ? "minimum deletions: " + std::to_string(result->min_deletions)
                 : "no deletion set within budget " + std::to_string(budget))
      << '\n';
  return {{"inputs", {{"graph", g6}, {"k", o.k}, {"budget", budget}}}, {"outputs", outputs}};
}

SimpleGraph base_graph(const std::string& arg) {
  const auto colon = arg.find(':');
  if (colon != std::string::npos) {
    const std::string kind = arg.substr(0, colon);
    int n = 0;
    try {
      n = std::stoi(arg.substr(colon + 1));
    } catch (const std::exception&) {
      throw ContractError("--base expects KIND:N, got " + arg);
    }
    if (kind == "antiregular") return constructions::antiregular(n);
    if (kind == "dn") return constructions::sort_by_degree(constructions::dn_graph(n).graph);
    throw ContractError("unknown base kind " + kind);
  }
  return constructions::sort_by_degree(parse_graph6(first_line(read_file(arg))));
}

json generate_command(const Options& o, std::ostream& err) {
  SimpleGraph g;
  json plan;
  json inputs = {{"kind", o.sub}, {"format", o.format}};
  if (o.sub == "antiregular") {
    g = constructions::antiregular(o.n);
    plan = {{"n", o.n}, {"rep", rep(g).rep}};
    inputs["n"] = o.n;
  } else if (o.sub == "dn") {
    auto dn = constructions::dn_graph(o.n);
    g = std::move(dn.graph);
    plan = to_json(dn.plan);
    plan["rep_bound"] = 3.0 * o.n / std::log(static_cast<double>(o.n));
    inputs["n"] = o.n;
  } else {
    auto b = constructions::blowup(base_graph(o.base), static_cast<int>(o.q.value_or(3)));
    g = std::move(b.graph);
    plan = to_json(b.plan);
    inputs["base"] = o.base;
    inputs["q"] = o.q.value_or(3);
  }

  json outputs = {{"plan", plan}, {"n", g.order()}, {"rep", rep(g).rep}};
  if (o.samples > 0) {
    const auto sample = constructions::sample_induced_rep_parallel(g, o.samples, o.seed, o.jobs);
    outputs["sampled"] = {{"samples", o.samples}, {"max_rep", sample.max_rep}};
    inputs["samples"] = o.samples;
  }

  const bool as_g6 = o.format == "g6" && g.order() <= 62;
  const std::string body = as_g6 ? write_graph6(g) + "\n" : adjacency_json(g).dump() + "\n";
  outputs["format"] = as_g6 ? "g6" : "json";
  if (o.out_path.empty()) {
    outputs["graph"] = as_g6 ? json(write_graph6(g)) : adjacency_json(g);
  } else {
    write_file(o.out_path, body);
    write_file(o.out_path + ".plan.json", plan.dump(2) + "\n");
    outputs["path"] = o.out_path;
    inputs["out"] = o.out_path;
  }
  err << "generated " << o.sub << " graph on " << g.order() << " vertices\n";
  return {{"inputs", inputs}, {"outputs", outputs}};
}

json verify_claims_command(const Options& o, std::ostream& err) {
  json claims = json::array();
  bool all_passed = true;
  auto claim = [&](const std::string& name, bool passed, json detail) {
    claims.push_back({{"claim", name}, {"status", passed ? "pass" : "fail"}, {"detail", detail}});
    all_passed = all_passed && passed;
    err << (passed ? "PASS " : "FAIL ") << name << '\n';
  };

  const auto t3 = equalize::threshold(3, 1);
  claim("C(3) <= 203", t3.C == 203, {{"s", t3.s}, {"N", t3.N}, {"C", t3.C}});
  claim("size_bound(r=1, d=2, q=6) = 200", zerosum::size_bound(1, 2, 6) == 200,
        {{"value", zerosum::size_bound(1, 2, 6)}});

  bool dominated = true;
  json per_k = json::array();
  for (int k = 2; k <= 6; ++k) {
    const auto t = equalize::threshold(k, 1);
    const double cap = std::pow(8.0 * k, k);
    dominated = dominated && static_cast<double>(t.C) <= cap;
    per_k.push_back({{"k", k}, {"C", t.C}, {"cap", cap}});
  }
  claim("C(k) <= (8k)^k for k = 2..6", dominated, per_k);

  oracle::SweepOptions opts;
  opts.jobs = o.jobs;
  opts.max_extremal = 5;
  bool small_ok = true;
  json sweeps = json::array();
  for (int n = 1; n <= oracle::kMaxLabeledOrder; ++n) {
    const auto rep = oracle::sweep(n, 3, 2, opts);
    small_ok = small_ok && rep.exceeded_budget == 0 && rep.max_min_deletions <= 2;
    sweeps.push_back({{"n", n}, {"graphs", rep.graphs_examined}, {"max_min_deletions", rep.max_min_deletions}});
  }
  claim("every graph on at most 7 vertices reaches rep 3 after at most 2 deletions", small_ok, sweeps);

  if (o.corpus.empty()) {
    claims.push_back({{"claim", "C(3) >= 3"}, {"status", "skipped"}, {"detail", "no corpus configured"}});
    err << "SKIP C(3) >= 3 (no corpus configured)\n";
  } else {
    opts.max_extremal = 100;
    const auto rep = oracle::scan_corpus(o.corpus, 3, 3, opts);
    const bool found = rep.histogram.size() > 3 && rep.histogram[3] > 0;
    std::string witness;
    if (found && rep.max_min_deletions == 3) witness = rep.extremal_graphs.front();
    claim(found ? "C(3) >= 3 witnessed by " + witness : "C(3) >= 3", found,
          {{"graphs_examined", rep.graphs_examined}, {"needing_three", found ? rep.histogram[3] : 0},
           {"extremal_graphs", rep.extremal_graphs}});
  }

  json report = {{"inputs", {{"corpus", o.corpus.empty() ? json(nullptr) : json(o.corpus)}}},
                 {"outputs", {{"claims", claims}, {"all_passed", all_passed}}}};
  if (!all_passed) throw ClaimFailure{report};
  return report;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"repnum: degree repetition, zero-sum sequences and vertex deletion"};
  app.require_subcommand(1);
  Options o;
  std::function<json()> action;
  std::string command;

  auto* zs = app.add_subcommand("zerosum", "Zero-sum tools over a vector-sequence file");
  zs->require_subcommand(1);
  for (const char* name : {"reorder", "find", "trim"}) {
    auto* sub = zs->add_subcommand(name);
    sub->add_option("file", o.path, "d r q n header, then n rows")->required();
    sub->add_option("--q", o.q, "override the q in the header");
    sub->callback([&, name] {
      o.sub = name;
      command = std::string("zerosum ") + name;
      action = [&] { return zerosum_command(o, err); };
    });
  }

  auto* eq = app.add_subcommand("equalize", "Delete vertices until k vertices share a degree");
  eq->add_option("file", o.path, "graph6 or weighted JSON")->required();
  eq->add_option("--k", o.k, "number of equal-degree vertices")->check(CLI::Range(2, 64));
  eq->add_option("--r", o.r, "weight bound")->check(CLI::PositiveNumber);
  eq->add_flag("--three", o.three, "use the at-most-six-deletions procedure (k = 3)");
  eq->add_flag("--full", o.full, "run the full pipeline even when k degrees already agree");
  eq->callback([&] {
    command = "equalize";
    action = [&] { return equalize_command(o, err); };
  });

  auto* orc = app.add_subcommand("oracle", "Brute-force minimum deletions");
  orc->require_subcommand(1);
  auto* sweep = orc->add_subcommand("sweep", "all labeled graphs on n <= 7 vertices");
  sweep->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  auto* scan = orc->add_subcommand("scan", "graph6 corpus");
  scan->add_option("corpus", o.path)->required();
  auto* mindel = orc->add_subcommand("min-del", "one graph");
  mindel->add_option("--graph", o.graph, "graph6 string");
  mindel->add_option("file", o.path, "file whose first line is graph6");
  for (auto* sub : {sweep, scan, mindel}) {
    sub->add_option("--k", o.k)->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget)->check(CLI::NonNegativeNumber);
    sub->add_option("--jobs", o.jobs)->check(CLI::NonNegativeNumber);
    sub->callback([&, sub] {
      o.sub = sub->get_name();
      command = "oracle " + o.sub;
      action = [&] { return oracle_command(o, err); };
    });
  }

  auto* gen = app.add_subcommand("generate", "Lower-bound constructions");
  gen->require_subcommand(1);
  for (const char* name : {"antiregular", "dn", "blowup"}) {
    auto* sub = gen->add_subcommand(name);
    if (std::string(name) == "blowup") {
      sub->add_option("--base", o.base, "antiregular:N, dn:N or a graph6 file")->required();
      sub->add_option("--q", o.q, "blob size")->check(CLI::Range(3, 100000));
    } else {
      sub->add_option("--n", o.n)->required();
    }
    sub->add_option("--format", o.format)->check(CLI::IsMember({"g6", "json"}));
    sub->add_option("--out", o.out_path, "graph file; the plan goes to <out>.plan.json");
    sub->add_option("--samples", o.samples, "random induced subgraphs to check")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", o.seed);
    sub->add_option("--jobs", o.jobs)->check(CLI::NonNegativeNumber);
    sub->callback([&, name] {
      o.sub = name;
      command = std::string("generate ") + name;
      action = [&] { return generate_command(o, err); };
    });
  }

  auto* claims = app.add_subcommand("verify-claims", "Reproduce the constants and small-graph claims");
  claims->add_option("--corpus", o.corpus, "isomorph-free 8-vertex graph6 corpus");
  claims->add_option("--jobs", o.jobs)->check(CLI::NonNegativeNumber);
  claims->callback([&] {
    command = "verify-claims";
    action = [&] { return verify_claims_command(o, err); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kContractError;
  }

  const auto start = Clock::now();
  auto emit = [&](json report) {
    report["command"] = command;
    report["seed"] = o.seed;
    report["runtime_seconds"] = std::chrono::duration<double>(Clock::now() - start).count();
    out << report.dump(2) << '\n';
  };
  try {
    emit(action());
    return kOk;
  } catch (const ClaimFailure& f) {
    emit(f.report);
    return kClaimFailed;
  } catch (const ContractError& e) {
    err << "contract violation: " << e.what() << '\n';
    return kContractError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kIoError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
    return kContractError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

}  // namespace repnum::cli
