#include "ppart_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ppart/gauss.hpp"
#include "ppart/json_io.hpp"
#include "ppart/verify.hpp"

namespace ppart::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string family;
  int rank = 0;
  int n = 1;
  std::string lambda;
  bool json = false;
  bool text = false;
  bool character = false;
  bool allow_dominant = false;
  std::optional<unsigned> threads;

  std::string suite;
  std::int64_t max_dim = 0;
  std::vector<long long> primes;
  std::vector<int> ns;
  std::string lambdas;
  std::string shift;
  std::vector<std::string> specs;

  std::string out_dir;
};

// Exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit code 1.
struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

unsigned resolve_thread_count(const RunConfig& cfg) {
  if (cfg.threads) return *cfg.threads;
  if (const char* env = std::getenv("PPART_THREADS"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 1024) throw UsageError(std::string("PPART_THREADS is not a thread count: ") + env);
    return static_cast<unsigned>(v);
  }
  return 0;
}

CartanSpec spec_of(const RunConfig& cfg) {
  if (cfg.family.empty()) throw UsageError("--family is required");
  CartanSpec spec{parse_family(cfg.family), cfg.rank};
  spec.validate();
  return spec;
}

Weight lambda_of(const CartanSpec& spec, const std::string& text) {
  if (text.empty()) throw UsageError("--lambda is required");
  Weight lam = parse_weight(text);
  if (lam.rank() != spec.rank) {
    throw UsageError("--lambda has " + std::to_string(lam.rank()) + " coordinates but " + to_string(spec) +
                     " needs " + std::to_string(spec.rank));
  }
  if (!lam.dominant()) throw UsageError("--lambda " + to_string(lam) + " is not dominant");
  return lam;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::string cmd_compute(const RunConfig& cfg) {
  const CartanSpec spec = spec_of(cfg);
  const RootSystem rs(spec);
  const Weight lam = lambda_of(spec, cfg.lambda);
  const unsigned threads = resolve_thread_count(cfg);
  if (cfg.json && cfg.text) throw UsageError("--json and --text are exclusive");
  if (!cfg.character && cfg.n < 1) throw UsageError("--n must be positive");

  WeightPolynomial poly;
  int n_field = cfg.n;
  if (cfg.character) {
    poly = character_via_patterns(rs, lam, threads);
    n_field = 0;
  } else {
    poly = p_part(rs, lam, cfg.n, PPartOptions{cfg.allow_dominant, threads, frozen_readings(),
                                              LeanerBoundary::row_end_is_drop});
  }
  if (cfg.text) return polynomial_to_text(rs, poly);
  return polynomial_to_json(rs, lam, n_field, poly) + '\n';
}

std::vector<std::vector<Weight>> tokuyama_groups(const std::string& text) {
  std::vector<std::vector<Weight>> groups;
  for (const auto& item : split(text, ';')) {
    Weight w = parse_weight(item);
    if (w.rank() < 1 || w.rank() > 3) throw UsageError("tokuyama weights must have rank 1 to 3: " + item);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.front().rank() == w.rank(); });
    if (it == groups.end()) groups.push_back({w});
    else it->push_back(w);
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front().rank() < b.front().rank(); });
  return groups;
}

std::vector<CartanSpec> parse_specs(const std::vector<std::string>& items) {
  std::vector<CartanSpec> out;
  for (const auto& s : items) {
    if (s.size() < 2) throw UsageError("bad family/rank '" + s + "', expected e.g. B3");
    CartanSpec spec{parse_family(s.substr(0, 1)), 0};
    try {
      spec.rank = std::stoi(s.substr(1));
    } catch (const std::exception&) {
      throw UsageError("bad family/rank '" + s + "', expected e.g. B3");
    }
    spec.validate();
    out.push_back(spec);
  }
  return out;
}

SuiteReport run_suite(const RunConfig& cfg, unsigned threads) {
  const std::string& s = cfg.suite;
  if (s == "character") {
    CharacterSuiteConfig c;
    c.threads = threads;
    if (cfg.max_dim > 0) c.max_dim = cfg.max_dim;
    if (!cfg.specs.empty()) c.specs = parse_specs(cfg.specs);
    return run_character_suite(c);
  }
  if (s == "gauss") {
    GaussSuiteConfig c;
    if (!cfg.primes.empty()) c.primes = cfg.primes;
    if (!cfg.ns.empty()) c.ns = cfg.ns;
    for (long long p : c.primes)
      if (!is_prime(p)) throw UsageError(std::to_string(p) + " is not prime");
    for (int n : c.ns)
      if (n < 1) throw UsageError("--n values must be positive");
    return run_gauss_suite(c);
  }
  if (s == "tokuyama") {
    TokuyamaSuiteConfig c;
    c.threads = threads;
    if (!cfg.lambdas.empty()) c.lambdas = tokuyama_groups(cfg.lambdas);
    for (const auto& g : c.lambdas)
      for (const auto& w : g)
        if (!w.strongly_dominant()) throw UsageError("tokuyama weights must be strongly dominant: " + to_string(w));
    if (cfg.shift == "lambda") c.shift = TokuyamaShift::same;
    else if (cfg.shift == "lambda-rho") c.shift = TokuyamaShift::minus_rho;
    else if (!cfg.shift.empty()) throw UsageError("--shift must be lambda or lambda-rho");
    return run_tokuyama_suite(c);
  }
  if (s == "branching") {
    BranchingSuiteConfig c;
    c.threads = threads;
    if (!cfg.ns.empty()) c.ns = cfg.ns;
    for (int n : c.ns)
      if (n < 1) throw UsageError("--n values must be positive");
    return run_branching_suite(c);
  }
  if (s == "decorations") {
    DecorationSuiteConfig c;
    c.threads = threads;
    if (cfg.max_dim > 0) c.max_dim = cfg.max_dim;
    if (!cfg.specs.empty()) c.specs = parse_specs(cfg.specs);
    return run_decoration_suite(c);
  }
  if (s == "type-d") {
    TypeDSuiteConfig c;
    c.threads = threads;
    if (!cfg.ns.empty()) c.ns = cfg.ns;
    return run_type_d_suite(c);
  }
  if (s == "calibration") return run_calibration_suite(threads);
  if (s == "roundtrip") return run_roundtrip_suite(RoundTripSuiteConfig{});
  throw UsageError("unknown suite '" + s + "'");
}

std::string cmd_verify(const RunConfig& cfg, std::ostream& err, bool& passed) {
  const SuiteReport rep = run_suite(cfg, resolve_thread_count(cfg));
  passed = rep.ok();
  for (const auto& c : rep.cases) {
    if (c.asserted && !c.passed) err << "FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
  }
  return rep.to_json() + '\n';
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw RuntimeFailure("cannot open " + path.string() + " for writing");
  f << body;
  f.close();
  if (!f) throw RuntimeFailure("write to " + path.string() + " failed");
}

std::string cmd_export(const RunConfig& cfg) {
  const CartanSpec spec = spec_of(cfg);
  const RootSystem rs(spec);
  const Weight lam = lambda_of(spec, cfg.lambda);
  if (cfg.n < 1) throw UsageError("--n must be positive");
  if (cfg.out_dir.empty()) throw UsageError("--out is required");
  const auto bundle = make_export(rs, lam, cfg.n, resolve_thread_count(cfg));

  std::string stem = to_string(spec) + "_";
  for (int k = 0; k < lam.rank(); ++k) stem += (k ? "-" : "") + std::to_string(lam[k]);
  stem += "_n" + std::to_string(cfg.n);

  const std::filesystem::path dir(cfg.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw RuntimeFailure("cannot create " + dir.string() + ": " + ec.message());
  const std::vector<std::pair<std::filesystem::path, const std::string*>> files{
      {dir / (stem + ".patterns.txt"), &bundle.patterns},
      {dir / (stem + ".decorated.txt"), &bundle.decorated},
      {dir / (stem + ".polynomial.json"), &bundle.polynomial_json},
  };
  std::string listing;
  for (const auto& [path, body] : files) {
    write_file(path, *body);
    listing += path.string() + '\n';
  }
  return listing;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime-power parts of Weyl group multiple Dirichlet series from Littelmann patterns", "ppart"};
  app.require_subcommand(1);
  RunConfig cfg;
  unsigned threads = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", threads, "Worker threads (0 = all cores; PPART_THREADS if omitted)");
  };
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "Cartan family A, B, C or D")->required();
    sub->add_option("--rank", cfg.rank, "Rank")->required();
    sub->add_option("--lambda", cfg.lambda, "Highest weight, comma separated")->required();
    sub->add_option("--n", cfg.n, "Metaplectic degree")->capture_default_str();
  };

  auto* compute = app.add_subcommand("compute", "Print the p-part (or character) as JSON or a text table");
  add_target(compute);
  add_common(compute);
  compute->add_flag("--json", cfg.json, "JSON output (default)");
  compute->add_flag("--text", cfg.text, "Aligned text table");
  compute->add_flag("--character", cfg.character, "Sum of x^wt over patterns instead of the p-part");
  compute->add_flag("--allow-dominant", cfg.allow_dominant, "Accept lambda with zero coordinates");

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print its JSON report");
  verify
      ->add_option("--suite", cfg.suite,
                   "character, gauss, tokuyama, branching, decorations, type-d, calibration or roundtrip")
      ->required();
  verify->add_option("--max-dim", cfg.max_dim, "Largest representation dimension (character, decorations)");
  verify->add_option("--primes", cfg.primes, "Primes for the gauss suite")->delimiter(',');
  verify->add_option("--n", cfg.ns, "Metaplectic degrees")->delimiter(',');
  verify->add_option("--lambdas", cfg.lambdas, "Tokuyama weights, e.g. 1,1;2,1;2,2");
  verify->add_option("--shift", cfg.shift, "Tokuyama divisor: lambda or lambda-rho");
  verify->add_option("--specs", cfg.specs, "Restrict to these root systems, e.g. A2,B3")->delimiter(',');
  add_common(verify);

  auto* exp = app.add_subcommand("export", "Write pattern, decoration and polynomial fixtures");
  add_target(exp);
  add_common(exp);
  exp->add_option("--out", cfg.out_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  for (auto* sub : {compute, verify, exp}) {
    if (sub->parsed() && sub->count("--threads") > 0) cfg.threads = threads;
  }

  std::string body;
  int code = 0;
  try {
    if (compute->parsed()) {
      body = cmd_compute(cfg);
    } else if (verify->parsed()) {
      bool passed = false;
      body = cmd_verify(cfg, err, passed);
      code = passed ? 0 : 1;
    } else {
      body = cmd_export(cfg);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << body;
  out.flush();
  return code;
}

}  // namespace ppart::cli
