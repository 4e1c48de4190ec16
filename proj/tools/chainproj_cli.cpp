// chainproj: generate posets, classify projection codes, run verification
// suites, export Hasse diagrams.
//
//   chainproj generate <kind> [params] [--out FILE]
//   chainproj classify <poset.json> <chainA> <chainB> [--format json|csv] [--out FILE]
//   chainproj verify <suite> [--max-leg N] [--seed S] [--trials N] [--out FILE]
//   chainproj export <poset.json> --format dot|json [--out FILE]
//   chainproj table <poset.json> --mode collinear|pairwise [--out FILE]
//
// Exit status: 0 pass, 1 check failure, 2 usage or I/O error.

#include <chainproj/collinearity.hpp>
#include <chainproj/coordination.hpp>
#include <chainproj/document.hpp>
#include <chainproj/error.hpp>
#include <chainproj/metric.hpp>
#include <chainproj/suites.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <sstream>

namespace {

using namespace chainproj;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) std::cout << text;
  else write_text(out_path, text);
}

Point2 parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::BadParams, "expected a point 'x,y', got '" + text + "'");
  try {
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
  } catch (const Error&) {
    throw Error(ErrorCode::BadParams, "bad point '" + text + "'");
  }
}

Rational parse_param(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error&) {
    throw Error(ErrorCode::BadParams, "bad rational '" + text + "'");
  }
}

struct GenerateOptions {
  std::string kind;
  std::int64_t width = 5;
  std::int64_t ticks = 40;
  int chains = 3;
  std::string spacing = "1";
  int rows = 3;
  int cols = 3;
  std::string along = "3,0";
  std::string across = "0,4";
  long a = 3;
  long b = 4;
  std::vector<std::string> probes;
  std::size_t n = 50;
  double p = 0.1;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateOptions& o) {
  json doc;
  if (o.kind == "randomdag") {
    Poset poset = random_dag(o.n, o.p, o.seed);
    doc = to_json(poset, {});
  } else {
    MetricPoset mp;
    if (o.kind == "lattice1p1") {
      if (o.width < 0 || o.ticks < 0) throw Error(ErrorCode::BadParams, "width and ticks must be non-negative");
      mp = lattice_1p1(o.width, o.ticks);
    } else if (o.kind == "simplex") {
      mp = simplex_config(o.chains, parse_param(o.spacing), o.ticks);
    } else if (o.kind == "collinear") {
      mp = collinear_config(o.chains, parse_param(o.spacing), o.ticks);
    } else if (o.kind == "grid") {
      mp = grid_config(o.rows, o.cols, parse_point(o.along), parse_point(o.across), o.ticks).mp;
    } else if (o.kind == "pythagoras") {
      mp = pythagoras_layout(o.a, o.b).mp;
    } else if (o.kind == "dotprod") {
      std::vector<Point2> probes;
      for (const auto& s : o.probes) probes.push_back(parse_point(s));
      if (probes.empty()) probes.push_back({0, 4});
      mp = dot_layout(o.chains, parse_param(o.spacing), probes).mp;
    } else {
      throw Error(ErrorCode::BadParams, "unknown generator '" + o.kind + "'");
    }
    doc = to_json(mp.poset, mp.chains);
  }
  emit(o.out, doc.dump() + "\n");
  return kPass;
}

int run_classify(const std::string& path, const std::string& a, const std::string& b, const std::string& format,
                 const std::string& out) {
  auto start = std::chrono::steady_clock::now();
  PosetDocument doc = read_document(path);
  const Chain& P = find_chain(doc.chains, a);
  const Chain& Q = find_chain(doc.chains, b);
  if (P == Q) throw Error(ErrorCode::IdenticalChains, "classify needs two different chains");

  RunReport report;
  report.command = "classify";
  report.inputs = {{"poset", path}, {"chain_a", a}, {"chain_b", b}};
  std::vector<Chain> pair{P, Q};
  std::vector<std::pair<std::size_t, std::size_t>> index{{0, 1}};
  Census c = census(doc.poset, pair, index);
  json events = json::array();
  for (EventId x : doc.poset.events()) {
    try {
      ProjCode code = projection_code(doc.poset, x, P, Q);
      events.push_back({{"event", raw(x)}, {"code", code.str()}, {"case", to_string(case_of(code))}});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::MissingProjection) throw;
    }
  }
  json hist = json::object();
  for (const auto& [code, n] : c.histogram) hist[code] = n;
  report.details = {{"events", events}, {"histogram", hist}};
  report.add("legal_codes_only", {{"classified", c.classified}, {"skipped", c.skipped}},
             Rational(static_cast<long long>(c.classified)), c.legal_codes_only);
  report.wall_time_us =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();

  if (format == "csv") {
    std::ostringstream csv;
    csv << "code,count\n";
    for (const auto& [code, n] : c.histogram) csv << code << ',' << n << '\n';
    emit(out, csv.str());
    std::cout << json{{"legal_codes_only", c.legal_codes_only}}.dump() << "\n";
  } else if (format == "json") {
    emit(out, report.to_json().dump(2) + "\n");
  } else {
    throw Error(ErrorCode::UnknownFormat, "classify writes json or csv, not '" + format + "'");
  }
  return report.pass() ? kPass : kFail;
}

int run_verify(const std::string& suite, const SuiteParams& params, const std::string& out) {
  RunReport report = run_suite(suite, params);
  emit(out, report.to_json().dump(2) + "\n");
  return report.pass() ? kPass : kFail;
}

int run_export(const std::string& path, const std::string& format, const std::string& out) {
  PosetDocument doc = read_document(path);
  if (format == "dot") emit(out, to_dot(doc.poset));
  else if (format == "json") emit(out, to_json(doc.poset, doc.chains).dump() + "\n");
  else throw Error(ErrorCode::UnknownFormat, "export writes dot or json, not '" + format + "'");
  return kPass;
}

int run_table(const std::string& path, const std::string& mode, const std::string& out) {
  PosetDocument doc = read_document(path);
  SimplexMode m;
  if (mode == "collinear") m = SimplexMode::Collinear;
  else if (mode == "pairwise") m = SimplexMode::Pairwise;
  else throw Error(ErrorCode::BadParams, "mode must be collinear or pairwise");
  emit(out, table_csv(simplex_table(doc.poset, doc.chains, m), doc.chains));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chain-projection geometry on finite posets"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a generated poset document");
  generate->add_option("kind", gen.kind, "lattice1p1, simplex, collinear, grid, pythagoras, dotprod, randomdag")
      ->required();
  generate->add_option("--width", gen.width);
  generate->add_option("--ticks", gen.ticks);
  generate->add_option("--chains", gen.chains);
  generate->add_option("--spacing", gen.spacing, "rational p/q");
  generate->add_option("--rows", gen.rows);
  generate->add_option("--cols", gen.cols);
  generate->add_option("--along", gen.along, "row step x,y");
  generate->add_option("--across", gen.across, "column step x,y");
  generate->add_option("--a", gen.a);
  generate->add_option("--b", gen.b);
  generate->add_option("--probe", gen.probes, "probe point x,y (repeatable)");
  generate->add_option("--n", gen.n);
  generate->add_option("--p", gen.p);
  generate->add_option("--seed", gen.seed);
  generate->add_option("--out", gen.out);

  std::string path, chain_a, chain_b, format, out, suite, mode;
  SuiteParams params;

  auto* classify = app.add_subcommand("classify", "Projection codes of every event against two chains");
  classify->add_option("poset", path)->required();
  classify->add_option("chainA", chain_a)->required();
  classify->add_option("chainB", chain_b)->required();
  classify->add_option("--format", format, "json or csv")->default_val("json");
  classify->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--max-leg", params.max_leg);
  verify->add_option("--seed", params.seed);
  verify->add_option("--trials", params.trials);
  verify->add_option("--out", out);

  auto* exporter = app.add_subcommand("export", "Export a poset document");
  exporter->add_option("poset", path)->required();
  exporter->add_option("--format", format, "dot or json")->required();
  exporter->add_option("--out", out);

  auto* table = app.add_subcommand("table", "Pair table of a poset's chains as CSV");
  table->add_option("poset", path)->required();
  table->add_option("--mode", mode, "collinear or pairwise")->default_val("collinear");
  table->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*classify) return run_classify(path, chain_a, chain_b, format, out);
    if (*verify) return run_verify(suite, params, out);
    if (*exporter) return run_export(path, format, out);
    if (*table) return run_table(path, mode, out);
  } catch (const Error& e) {
    std::cerr << "chainproj: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "chainproj: internal error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
