#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qschur/cache.hpp"
#include "qschur/verify.hpp"

using namespace qschur;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

std::ostream* g_out = &std::cout;

// a JSON literal, or @path to read it from a file
json read_json_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
  }
  return parse_json(arg);
}

std::vector<int> read_vector_arg(const std::string& arg, int n) {
  std::vector<int> v;
  std::string s = arg;
  if (!s.empty() && s[0] == '[') {
    json j = parse_json(s);
    if (!j.is_array()) throw ParseError("--j: expected an array");
    for (const auto& x : j) {
      if (!x.is_number_integer()) throw ParseError("--j: entries must be integers");
      v.push_back(x.get<int>());
    }
  } else {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        size_t used = 0;
        v.push_back(std::stoi(tok, &used));
        if (used != tok.size()) throw ParseError("--j: bad entry '" + tok + "'");
      } catch (const std::logic_error&) {
        throw ParseError("--j: bad entry '" + tok + "'");
      }
    }
  }
  if (static_cast<int>(v.size()) != n) throw ParseError("--j: expected " + std::to_string(n) + " entries");
  for (int x : v)
    if (x < 0) throw ParseError("--j: entries must be natural numbers");
  return v;
}

void emit(const json& j) { *g_out << j.dump(2) << "\n"; }

json diff_json(const QElement& a, const QElement& b) { return to_json(a - b); }

int cmd_product(int n, int r, const std::string& xs, const std::string& as, const std::string& engine) {
  SuperMatrix x = super_matrix_from_json(read_json_arg(xs), n);
  SuperMatrix a = super_matrix_from_json(read_json_arg(as), n);
  if (x.total() != r || a.total() != r) throw InvalidArgument("both matrices must have |M| = r");
  json out{{"n", n}, {"r", r}, {"x", to_json(x)}, {"a", to_json(a)}, {"engine", engine}};
  if (engine == "both") {
    if (!detect_shape(x)) throw InvalidArgument("no closed formula for left factor " + x.to_string());
    QElement f = product(x, a, Engine::Formula), o = product(x, a, Engine::Oracle);
    out["formula"] = to_json(f);
    out["oracle"] = to_json(o);
    out["diff"] = diff_json(f, o);
    out["agree"] = f == o;
    emit(out);
    return f == o ? kOk : kFail;
  }
  auto e = parse_engine(engine);
  if (!e) throw InvalidArgument("unknown engine: " + engine);
  out["result"] = to_json(product(x, a, *e));
  emit(out);
  return kOk;
}

std::string structure_constants_payload(int n, int r, Shape s, Engine e) {
  json rows = json::array();
  for (int h : shape_indices(s, n))
    for (const auto& a : super_matrices(n, r)) {
      auto x = generator_matrix(s, h, a.ro());
      if (!x) continue;
      rows.push_back(json{{"h", h}, {"A", to_json(a)}, {"X", to_json(*x)}, {"result", to_json(product(*x, a, e))}});
    }
  json out{{"n", n}, {"r", r}, {"shape", shape_name(s)}, {"rows", rows}};
  return out.dump(2) + "\n";
}

int cmd_structure_constants(int n, int r, const std::string& shape, const std::string& engine, bool no_cache,
                            const std::string& cache_dir) {
  auto s = parse_shape(shape);
  if (!s) throw InvalidArgument("unknown shape: " + shape);
  auto e = parse_engine(engine);
  if (!e) throw InvalidArgument("unknown engine: " + engine);
  if (n < 1 || r < 0) throw InvalidArgument("need n >= 1 and r >= 0");
  TableCache cache(no_cache ? std::string() : (cache_dir.empty() ? default_cache_dir() : cache_dir));
  CacheKey key{n, r, "structure-constants", std::string("shape=") + shape + ";engine=" + engine};
  if (auto hit = cache.get(key)) {
    *g_out << *hit;
    return kOk;
  }
  std::string payload = structure_constants_payload(n, r, *s, *e);
  cache.put(key, payload);
  *g_out << payload;
  return kOk;
}

int cmd_basis(int n, int r) {
  if (n < 1 || r < 0) throw InvalidArgument("need n >= 1 and r >= 0");
  json keys = json::array();
  for (const auto& m : super_matrices(n, r)) keys.push_back(to_json(m));
  emit(json{{"n", n}, {"r", r}, {"dim", keys.size()}, {"basis", keys}});
  return kOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt) {
  SuiteResult res = run_suite(suite, opt);
  emit(res.to_json());
  return res.ok() ? kOk : kFail;
}

int cmd_realize(int n, int R, const std::string& ms, const std::string& js, bool express) {
  if (n < 1 || R < 0) throw InvalidArgument("need n >= 1 and rmax >= 0");
  SuperMatrix a = super_matrix_from_json(read_json_arg(ms), n);
  std::vector<int> j = js.empty() ? std::vector<int>(n, 0) : read_vector_arg(js, n);
  ASpec spec(a, j);
  json out{{"n", n}, {"rmax", R}, {"family", to_json(spec)}, {"levels", to_json(TruncatedFamily::of(spec, R))}};
  if (express) out["triangular"] = to_json(triangular_product(a, std::max(R, a.total())));
  emit(out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic for the Sergeev superalgebra and the queer Schur superalgebra"};
  app.require_subcommand(1);
  app.fallthrough();

  int n = 2, r = 1, rmax = 3, amax = -1, chain_rmax = 0;
  std::string xs, as, engine = "auto", shape, suite, name, matrix, jvec, cache_dir;
  bool no_cache = false, express = false;
  std::string output;
  app.add_option("-o,--output", output, "write the JSON here instead of standard output");

  auto* product_cmd = app.add_subcommand("product", "phi_X * phi_A in Q(n, r)");
  product_cmd->add_option("--n", n, "matrix size")->required();
  product_cmd->add_option("--r", r, "degree")->required();
  product_cmd->add_option("--x", xs, "left matrix as JSON (or @file)")->required();
  product_cmd->add_option("--a", as, "right matrix as JSON (or @file)")->required();
  product_cmd->add_option("--engine", engine, "formula|oracle|auto|both");

  auto* sc_cmd = app.add_subcommand("structure-constants", "all products of one generator family");
  sc_cmd->add_option("--n", n)->required();
  sc_cmd->add_option("--r", r)->required();
  sc_cmd->add_option("--shape", shape, "upper0|upper1|diag1|diag0|lower0|lower1")->required();
  std::string sc_engine = "formula";
  sc_cmd->add_option("--engine", sc_engine, "formula|oracle|auto");
  sc_cmd->add_flag("--no-cache", no_cache, "bypass the on-disk cache");
  sc_cmd->add_option("--cache-dir", cache_dir, std::string("cache directory (default: $") + kCacheEnvVar + ")");

  auto* basis_cmd = app.add_subcommand("basis", "the basis keys M(n, r)");
  basis_cmd->add_option("--n", n)->required();
  basis_cmd->add_option("--r", r)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite,
                         "identities|section3|sergeev|d-matrix|formulas|tm-rank|blm-basis|relations|triangular|pi|spot")
      ->required();
  verify_cmd->add_option("--n,--nmax", n, "matrix size (grid suites sweep 1..n)");
  verify_cmd->add_option("--rmax", rmax, "degree bound or truncation degree");
  verify_cmd->add_option("--amax", amax, "bound on |A| for triangular and pi");
  verify_cmd->add_option("--chain-rmax", chain_rmax, "degree bound for the chain identities");
  verify_cmd->add_option("--name", name, "run a single identity");

  auto* realize_cmd = app.add_subcommand("realize", "the truncated family A(j) and its triangular expansion");
  realize_cmd->add_option("--n", n)->required();
  realize_cmd->add_option("--rmax", rmax)->required();
  realize_cmd->add_option("--matrix", matrix, "strict super matrix as JSON (or @file)")->required();
  realize_cmd->add_option("--j", jvec, "exponent vector, e.g. [0,1] or 0,1");
  realize_cmd->add_flag("--express", express, "also print the triangular product expansion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::ofstream out_file;
  if (!output.empty()) {
    out_file.open(output);
    if (!out_file) {
      std::cerr << "error: cannot write " << output << "\n";
      return kUsage;
    }
    g_out = &out_file;
  }

  try {
    if (*product_cmd) return cmd_product(n, r, xs, as, engine);
    if (*sc_cmd) return cmd_structure_constants(n, r, shape, sc_engine, no_cache, cache_dir);
    if (*basis_cmd) return cmd_basis(n, r);
    if (*verify_cmd) {
      SuiteOptions opt;
      opt.n = n;
      opt.rmax = rmax;
      opt.amax = amax;
      opt.chain_rmax = chain_rmax;
      opt.name = name;
      return cmd_verify(suite, opt);
    }
    if (*realize_cmd) return cmd_realize(n, rmax, matrix, jvec, express);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
