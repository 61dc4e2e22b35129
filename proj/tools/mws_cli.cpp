#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <variant>

#include "mws/code.hpp"
#include "mws/constructions.hpp"
#include "mws/io.hpp"
#include "mws/search.hpp"
#include "mws/spectrum.hpp"
#include "mws/verify.hpp"

namespace {

using namespace mws;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Input problems map to exit code 2; anything the code itself flags maps to 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json = false;

  std::string family;
  std::string q = "2";
  unsigned k = 0;
  std::string out;
  std::string format;

  std::string input = "-";
  std::string method = "auto";

  std::optional<std::uint64_t> n;
  std::optional<std::int64_t> delta;

  std::uint64_t seed = 1;
  std::uint64_t max_iters = 1'000'000;
  std::string mode = "randomized";

  std::uint32_t q_max = 4;
  unsigned k_max = 3;
};

void print_report(const Options& opt, const SpectrumReport& r, std::ostream& out) {
  out << (opt.json ? report_to_json(r) : report_to_text(r));
}

// Writes to the path, or to stdout for "-". Returns true when stdout was used.
template <class Writer>
bool emit(const std::string& path, Writer&& write) {
  if (path == "-") {
    write(std::cout);
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  write(file);
  return false;
}

int cmd_construct(const Options& opt) {
  const Field field = Field::parse(opt.q);
  const std::uint64_t q = field.order();
  std::variant<GeneratorMatrix, ProjectiveMultiset> code = GeneratorMatrix(field, 1, 1);
  unsigned k = opt.k;

  if (opt.family == "bk") {
    if (q != 2) throw UsageError("bk is defined over GF(2) only");
    if (k == 0) throw UsageError("bk needs --k");
    code = construct_bk(k);
  } else if (opt.family == "dq") {
    if (k != 0 && k != 2) throw UsageError("dq has dimension 2 only");
    k = 2;
    code = construct_dq(field);
  } else if (opt.family == "hsum") {
    if (k == 0) throw UsageError("hsum needs --k");
    code = construct_hyperplane_sum(field, k);
  } else {
    if (k == 0) throw UsageError("pow2 needs --k");
    code = construct_powers_of_two(field, k);
  }

  std::string format = opt.format;
  if (format.empty()) format = std::holds_alternative<GeneratorMatrix>(code) ? "gmat" : "pmul";
  if (format == "gmat" && std::holds_alternative<ProjectiveMultiset>(code))
    code = code_from_multiset(std::get<ProjectiveMultiset>(code));
  if (format == "pmul" && std::holds_alternative<GeneratorMatrix>(code))
    code = multiset_from_code(std::get<GeneratorMatrix>(code));

  const WeightDistribution wd = std::holds_alternative<ProjectiveMultiset>(code)
                                    ? weights_projective(std::get<ProjectiveMultiset>(code))
                                    : weights_exhaustive(std::get<GeneratorMatrix>(code));
  const bool to_stdout = emit(opt.out, [&](std::ostream& out) {
    if (const auto* g = std::get_if<GeneratorMatrix>(&code))
      write_gmat(out, *g);
    else
      write_pmul(out, std::get<ProjectiveMultiset>(code));
  });
  print_report(opt, classify(wd, q, k), to_stdout ? std::cerr : std::cout);
  return kExitOk;
}

std::variant<GeneratorMatrix, ProjectiveMultiset> load(const std::string& path) {
  if (path == "-") return read_code(std::cin);
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return read_code(file);
}

int cmd_analyze(const Options& opt) {
  const auto code = load(opt.input);
  const auto* g = std::get_if<GeneratorMatrix>(&code);
  const auto* m = std::get_if<ProjectiveMultiset>(&code);
  const Field& field = g ? g->field() : m->field();
  const unsigned k = static_cast<unsigned>(g ? g->rows() : m->dimension());

  std::optional<GeneratorMatrix> matrix;
  std::optional<ProjectiveMultiset> multiset;
  const auto need_matrix = [&]() -> const GeneratorMatrix& {
    if (!matrix) matrix = g ? *g : code_from_multiset(*m);
    return *matrix;
  };
  const auto need_multiset = [&]() -> const ProjectiveMultiset& {
    if (!multiset) multiset = m ? *m : multiset_from_code(*g);
    return *multiset;
  };

  std::string method = opt.method;
  if (method == "auto") {
    const std::uint64_t n = g ? g->cols() : m->length();
    const bool small = checked_pow(field.order(), k) <= kEnumerationWorkLimit / std::max<std::uint64_t>(n, 1);
    method = small && (m == nullptr || n <= kMaterializeLimit) ? "both" : "projective";
    if (method == "both" && g && find_zero_column(*g)) method = "exhaustive";
  }

  WeightDistribution wd;
  if (method == "exhaustive") {
    wd = weights_exhaustive(need_matrix());
  } else if (method == "projective") {
    wd = weights_projective(need_multiset());
  } else {
    wd = weights_exhaustive(need_matrix());
    if (weights_projective(need_multiset()) != wd) {
      std::cerr << "error: exhaustive and projective weight distributions differ\n";
      print_report(opt, classify(wd, field.order(), k), std::cout);
      return kExitCheckFailed;
    }
  }
  print_report(opt, classify(wd, field.order(), k), std::cout);
  return kExitOk;
}

int cmd_enumerate(const Options& opt) {
  const Field field = Field::parse(opt.q);
  const std::uint64_t q = field.order();
  if (opt.k == 0) throw UsageError("enumerate needs --k");
  std::uint64_t n = 0;
  if (opt.delta) {
    if (opt.k >= 2 && !spread_quantization(q, opt.k, *opt.delta))
      throw UsageError("infeasible spread " + std::to_string(*opt.delta) + ": no integral length for q=" +
                       field.name() + " k=" + std::to_string(opt.k));
    n = length_from_spread(q, opt.k, Rational(*opt.delta));
  } else if (opt.n) {
    n = *opt.n;
  } else {
    throw UsageError("enumerate needs --n or --delta");
  }
  const auto sets = enumerate_weight_sets(q, opt.k, n);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["q"] = q;
    j["k"] = opt.k;
    j["n"] = n;
    j["sets"] = sets;
    j["count"] = sets.size();
    std::cout << j.dump(2) << '\n';
    return kExitOk;
  }
  std::cout << weight_sets_to_text(sets);
  return kExitOk;
}

int cmd_search(const Options& opt) {
  if (opt.k == 0 || !opt.n) throw UsageError("search needs --k and --n");
  SearchConfig cfg{.field = Field::parse(opt.q),
                   .k = opt.k,
                   .n = *opt.n,
                   .seed = opt.seed,
                   .max_iters = opt.max_iters,
                   .mode = opt.mode == "exhaustive" ? SearchMode::exhaustive : SearchMode::randomized};
  const SearchResult result = search_mws(cfg);
  std::cerr << "iterations " << result.stats.iterations << '\n' << "restarts " << result.stats.restarts << '\n';
  for (const auto& [it, energy] : result.stats.energy_trace) std::cerr << "energy " << it << ' ' << energy << '\n';
  if (!result.hit) {
    std::cerr << "no MWS code found for q=" << cfg.field.name() << " k=" << cfg.k << " n=" << cfg.n << '\n';
    return kExitCheckFailed;
  }
  const std::string path = opt.out.empty() ? "-" : opt.out;
  emit(path, [&](std::ostream& out) { write_pmul(out, *result.hit); });
  if (path != "-") print_report(opt, classify(weights_projective(*result.hit), cfg.field.order(), cfg.k), std::cout);
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  const VerifyReport report = run_verify(opt.q_max, opt.k_max);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
      const char* status = r.status == CheckStatus::pass ? "pass" : r.status == CheckStatus::fail ? "fail" : "deviation";
      nlohmann::ordered_json rec = {{"check", r.check},
                                    {"params", r.params},
                                    {"expected", r.expected},
                                    {"measured", r.measured},
                                    {"status", status}};
      if (r.status == CheckStatus::deviation) rec["deviation_kind"] = r.deviation_kind;
      j["records"].push_back(rec);
    }
    j["summary"] = {{"pass", report.count(CheckStatus::pass)},
                    {"fail", report.count(CheckStatus::fail)},
                    {"deviation", report.count(CheckStatus::deviation)}};
    j["deviation_kinds"] = report.deviation_kinds();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << report.to_text();
  }
  return report.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum weight spectrum linear codes: construct, analyze, enumerate, search, verify"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Structured JSON output");

  auto* construct = app.add_subcommand("construct", "Build a code from a known family");
  construct->add_option("family", opt.family, "bk | dq | hsum | pow2")
      ->required()
      ->check(CLI::IsMember({"bk", "dq", "hsum", "pow2"}));
  construct->add_option("--q", opt.q, "Field order, p or p^m");
  construct->add_option("--k", opt.k, "Dimension");
  construct->add_option("--out", opt.out, "Output file ('-' for stdout; the report then goes to stderr)")
      ->default_val("-");
  construct->add_option("--format", opt.format, "gmat | pmul")->check(CLI::IsMember({"gmat", "pmul"}));

  auto* analyze = app.add_subcommand("analyze", "Classify a GMAT or PMUL file");
  analyze->add_option("input", opt.input, "Input file ('-' for stdin)");
  analyze->add_option("--method", opt.method, "exhaustive | projective | both | auto")
      ->check(CLI::IsMember({"exhaustive", "projective", "both", "auto"}));

  auto* enumerate = app.add_subcommand("enumerate", "List candidate MWS weight sets");
  enumerate->add_option("--q", opt.q, "Field order, p or p^m");
  enumerate->add_option("--k", opt.k, "Dimension")->required();
  auto* n_opt = enumerate->add_option("--n", opt.n, "Length");
  enumerate->add_option("--delta", opt.delta, "Spread; the length follows from it")->excludes(n_opt);

  auto* search = app.add_subcommand("search", "Search for an MWS multiset");
  search->add_option("--q", opt.q, "Field order, p or p^m");
  search->add_option("--k", opt.k, "Dimension")->required();
  search->add_option("--n", opt.n, "Length")->required();
  search->add_option("--seed", opt.seed, "Seed");
  search->add_option("--max-iters", opt.max_iters, "Move budget for randomized mode");
  search->add_option("--mode", opt.mode, "randomized | exhaustive")
      ->check(CLI::IsMember({"randomized", "exhaustive"}));
  search->add_option("--out", opt.out, "PMUL output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Sweep every checkable invariant");
  verify->add_option("--q-max", opt.q_max, "Largest field order");
  verify->add_option("--k-max", opt.k_max, "Largest dimension");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(opt);
    if (*analyze) return cmd_analyze(opt);
    if (*enumerate) return cmd_enumerate(opt);
    if (*search) return cmd_search(opt);
    return cmd_verify(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
