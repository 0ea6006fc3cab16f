// cuegenus: exact coefficients, numeric tables, quasimodular fits and
// self-verification for the genus expansion of the expected CUE spherical integral.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cuegenus/cuegenus.hpp"

namespace {

using namespace cuegenus;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIntegrity = 3 };

struct Globals {
  std::string cache_dir;
  bool no_cache = false;
  unsigned jobs = 0;
  bool no_timestamp = false;
};

TableStore make_store(const Globals& g) {
  if (g.no_cache) return TableStore{};
  std::string dir = g.cache_dir;
  if (dir.empty()) {
    if (const char* env = std::getenv(kCacheDirEnv)) dir = env;
  }
  if (dir.empty()) return TableStore{};
  return TableStore{CoefficientCache{dir}};
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json envelope(const Globals& g, const std::string& kind) {
  json j{{"schema", "cuegenus.output/1"}, {"kind", kind}};
  if (!g.no_timestamp) j["generated_at"] = utc_now();
  return j;
}

/// Writes to --out if given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

// ---- coeff ----

struct CoeffArgs {
  std::string family;
  int d = 1;
  int g = 1;
  int N = 1;
  int m = 1;
  std::string route = "formula";
};

int run_coeff(const Globals& glob, const CoeffArgs& a) {
  CoefficientRequest req{family_from_string(a.family), a.d, a.g, a.N, a.m};
  req.validate();
  Rational value;
  if (a.route == "oracle") {
    const bool monotone = req.family == Family::H || req.family == Family::F;
    const bool transitive = req.family == Family::F || req.family == Family::C;
    if (req.family == Family::KN || req.family == Family::LN || req.family == Family::Delta) {
      throw std::invalid_argument("the oracle route covers H, F, B and C only");
    }
    value = Rational(count_configs({req.d, req.g, monotone, transitive}, glob.jobs));
  } else {
    const TableStore store = make_store(glob);
    switch (req.family) {
      case Family::H: value = store.h_table(req.d, req.g).at(req.d, req.g); break;
      case Family::F: value = store.f_table(req.d, req.g).at(req.d, req.g); break;
      case Family::B: value = store.b_table(req.d, req.g).at(req.d, req.g); break;
      case Family::C: value = store.c_table(req.d, req.g).at(req.d, req.g); break;
      default: value = evaluate(req);
    }
  }
  std::cout << to_string(value) << '\n';
  return kOk;
}

// ---- table ----

struct TableArgs {
  std::string kind;
  double q = 0.2;
  int m = 1;
  std::string Ns = "4,8,16";
  int D = kDefaultTruncation;
  int G = 3;
  double tolerance = kDefaultTailTolerance;
  std::string family = "H";
  std::string format = "json";
  std::string out;
};

void write_rows(Output& out, const Globals& glob, const TableArgs& a,
                const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                json extra = json::object()) {
  std::ostream& os = out.stream();
  if (a.format == "csv") {
    write_csv_row(os, header);
    for (const auto& r : rows) write_csv_row(os, r);
    return;
  }
  json j = envelope(glob, "table/" + a.kind);
  for (auto& [k, v] : extra.items()) j[k] = v;
  json arr = json::array();
  for (const auto& r : rows) {
    json o = json::object();
    for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = r[i];
    arr.push_back(std::move(o));
  }
  j["rows"] = std::move(arr);
  os << j.dump(2) << '\n';
}

int run_table(const Globals& glob, const TableArgs& a) {
  if (a.format != "json" && a.format != "csv") throw std::invalid_argument("format must be json or csv");
  const TableStore store = make_store(glob);
  Output out(a.out);
  if (a.kind == "convergence" || a.kind == "concentration") {
    require_model_domain(a.q);
    require_positive(a.m, "m");
    require_positive(a.D, "D");
    const auto Ns = parse_int_list(a.Ns);
    for (int N : Ns) require_positive(N, "N");
    const GenusTable F = store.f_table(a.D, a.m);
    std::vector<ConvergenceRow> rows;
    for (int N : Ns) {
      const QSeries ln = series_log(store.kn_series(N, a.D));
      if (a.kind == "convergence") {
        rows.push_back(detail::make_row(N, a.q, a.m, a.D, delta_series(a.m, N, ln, F), false, a.tolerance));
      } else {
        rows.push_back(detail::make_row(N, a.q, a.m, a.D, concentration_series(a.m, N, ln, F), true, a.tolerance));
      }
    }
    std::vector<std::vector<std::string>> text;
    for (const auto& r : rows) {
      text.push_back({std::to_string(r.N), format_double(r.q), std::to_string(r.m), format_double(r.scaled_value),
                      format_double(r.tail_estimate), std::to_string(r.D), r.warning ? "true" : "false"});
      if (r.warning) {
        std::cerr << "warning: N=" << r.N << " tail estimate " << format_double(r.tail_estimate)
                  << " exceeds tolerance; raise --D\n";
      }
    }
    write_rows(out, glob, a, {"N", "q", "m", "scaled_value", "tail_estimate", "D", "warning"}, text);
    return kOk;
  }
  if (a.kind == "euler") {
    require_model_domain(a.q);
    const double product = euler_product(a.q);
    std::vector<std::vector<std::string>> text;
    if (a.Ns.empty()) {
      text.push_back({format_double(a.q), format_double(product), format_double(partition_sum(a.q, a.D))});
      write_rows(out, glob, a, {"q", "euler_product", "partition_sum"}, text);
      return kOk;
    }
    for (int N : parse_int_list(a.Ns)) {
      require_positive(N, "N");
      const double k = eval_series(store.kn_series(N, a.D), a.q).value;
      text.push_back({std::to_string(N), format_double(a.q), format_double(k), format_double(product),
                      format_double(std::abs(k - product))});
    }
    write_rows(out, glob, a, {"N", "q", "K_N", "euler_product", "abs_difference"}, text);
    return kOk;
  }
  if (a.kind == "genus") {
    require_positive(a.D, "D");
    require_positive(a.G, "G");
    const Family f = family_from_string(a.family);
    GenusTable t = [&] {
      switch (f) {
        case Family::H: return store.h_table(a.D, a.G);
        case Family::F: return store.f_table(a.D, a.G);
        case Family::B: return store.b_table(a.D, a.G);
        case Family::C: return store.c_table(a.D, a.G);
        default: throw std::invalid_argument("genus tables exist for H, F, B and C");
      }
    }();
    std::vector<std::vector<std::string>> text;
    for (int d = 1; d <= a.D; ++d) {
      for (int g = 1; g <= a.G; ++g) text.push_back({std::to_string(d), std::to_string(g), to_string(t.at(d, g))});
    }
    write_rows(out, glob, a, {"d", "g", "value"}, text,
               json{{"family", a.family}, {"convention", to_string(t.convention())}});
    return kOk;
  }
  throw std::invalid_argument("unknown table kind: " + a.kind);
}

// ---- fit ----

struct FitArgs {
  std::string series;
  int max_weight = -1;       // 6g - 6 when unset
  int fit_degree = -1;       // enough equations for the basis when unset
  int validate_degree = -1;  // fit degree + 14 when unset
  bool minimal = false;
  std::string format = "text";
  std::string out;
};

/// "F2" -> (F, 2); "C1" -> (C, 1).
std::pair<Family, int> parse_series_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'F' && name[0] != 'C' && name[0] != 'H' && name[0] != 'B')) {
    throw std::invalid_argument("series name must look like F2, C2, H3 or B2");
  }
  const auto g = parse_int_list(name.substr(1));
  if (g.size() != 1 || g[0] < 1) throw std::invalid_argument("bad genus in series name " + name);
  return {family_from_string(name.substr(0, 1)), g[0]};
}

int run_fit(const Globals& glob, FitArgs a) {
  const auto [family, g] = parse_series_name(a.series);
  if (a.max_weight < 0) a.max_weight = 6 * g - 6;
  if (a.fit_degree < 0) a.fit_degree = std::max(6, static_cast<int>(monomial_basis(a.max_weight).size()) - 1);
  if (a.validate_degree < 0) a.validate_degree = a.fit_degree + 14;
  const TableStore store = make_store(glob);
  const int D = a.validate_degree;
  require_positive(D, "validate-deg");
  GenusTable t = [&] {
    switch (family) {
      case Family::F: return store.f_table(D, g);
      case Family::C: return store.c_table(D, g);
      case Family::H: return store.h_table(D, g);
      default: return store.b_table(D, g);
    }
  }();
  const QSeries s = genus_series(t, g);
  std::optional<QuasimodularPoly> poly;
  int weight = a.max_weight;
  std::string failure;
  if (a.minimal) {
    if (auto r = fit_minimal_weight(s, a.max_weight, a.fit_degree, a.validate_degree)) {
      weight = r->first;
      poly = r->second;
    } else {
      failure = "no weight cap <= " + std::to_string(a.max_weight) + " validates";
    }
  } else {
    auto r = fit_quasimodular(s, a.max_weight, a.fit_degree, a.validate_degree);
    if (auto* p = std::get_if<QuasimodularPoly>(&r)) {
      poly = *p;
    } else {
      failure = std::get<FitFailure>(r).message();
    }
  }
  if (!poly) {
    std::cerr << "fit " << a.series << ": " << failure << '\n';
    return kFailed;
  }
  Output out(a.out);
  if (a.format == "json") {
    json j = envelope(glob, "fit");
    j["series"] = a.series;
    j["weight_cap"] = weight;
    j["fit_degree"] = a.fit_degree;
    j["validate_degree"] = a.validate_degree;
    j["polynomial"] = to_json(*poly);
    out.stream() << j.dump(2) << '\n';
  } else if (a.format == "text") {
    out.stream() << a.series << " = " << poly->to_string() << '\n';
    if (a.minimal) out.stream() << "minimal weight cap: " << weight << '\n';
  } else {
    throw std::invalid_argument("format must be text or json");
  }
  return kOk;
}

// ---- verify ----

int run_verify(const Globals& glob, const std::string& level_name) {
  VerifyLevel level;
  if (level_name == "quick") {
    level = VerifyLevel::quick;
  } else if (level_name == "full") {
    level = VerifyLevel::full;
  } else {
    throw std::invalid_argument("level must be quick or full");
  }
  const TableStore store = make_store(glob);
  std::optional<CheckResult> first_failure;
  std::size_t passed = 0;
  std::size_t total = 0;
  run_verification(store, level, glob.jobs, [&](const CheckResult& r) {
    ++total;
    if (r.passed) ++passed;
    if (!r.passed && !first_failure) first_failure = r;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.claim << " (" << r.detail << ")\n"
              << std::flush;
  });
  std::cout << passed << "/" << total << " checks passed\n";
  if (first_failure) {
    std::cerr << "first failure: " << first_failure->name << ": " << first_failure->detail << '\n';
    return kFailed;
  }
  return kOk;
}

// ---- cache ----

int run_cache(const Globals& glob, const std::string& action, bool all) {
  const TableStore store = make_store(glob);
  if (!store.cache()) throw std::invalid_argument("no cache directory: pass --cache-dir or set " + std::string(kCacheDirEnv));
  const CoefficientCache& cache = *store.cache();
  if (action == "inspect") {
    bool clean = true;
    for (const auto& e : cache.inspect()) {
      std::cout << (e.ok ? "ok      " : "corrupt ") << e.path.filename().string() << "  " << e.detail << '\n';
      clean = clean && e.ok;
    }
    return clean ? kOk : kIntegrity;
  }
  const std::size_t removed = cache.gc(all);
  std::cout << "removed " << removed << " file(s)\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact genus expansion of the expected CUE spherical integral"};
  app.require_subcommand(1);
  Globals glob;
  app.add_option("--cache-dir", glob.cache_dir, std::string("Coefficient cache directory (default: $") + kCacheDirEnv + ")");
  app.add_flag("--no-cache", glob.no_cache, "Ignore the on-disk cache");
  app.add_option("--jobs", glob.jobs, "Worker threads for enumeration (0 = all cores)");
  app.add_flag("--no-timestamp", glob.no_timestamp, "Omit generated_at from JSON output");

  CoeffArgs coeff;
  auto* c = app.add_subcommand("coeff", "Print one exact coefficient");
  c->add_option("family", coeff.family, "KN, H, F, B, C, LN or Delta")->required();
  c->add_option("--d", coeff.d, "Degree");
  c->add_option("--g", coeff.g, "Genus");
  c->add_option("--N", coeff.N, "Matrix size");
  c->add_option("--m", coeff.m, "Genus truncation for Delta");
  c->add_option("--route", coeff.route, "formula or oracle")->check(CLI::IsMember({"formula", "oracle"}));

  TableArgs table;
  auto* t = app.add_subcommand("table", "Numeric and exact tables");
  t->add_option("kind", table.kind, "convergence, concentration, euler or genus")
      ->required()
      ->check(CLI::IsMember({"convergence", "concentration", "euler", "genus"}));
  t->add_option("--q", table.q, "Evaluation point in [0, 1/e)");
  t->add_option("--m", table.m, "Genus truncation");
  auto* n_opt = t->add_option("--N", table.Ns, "Comma-separated matrix sizes");
  t->add_option("--D", table.D, "Truncation degree");
  t->add_option("--G", table.G, "Genus bound (genus tables)");
  t->add_option("--tol", table.tolerance, "Relative tail tolerance before warning");
  t->add_option("--family", table.family, "H, F, B or C (genus tables)");
  t->add_option("--format", table.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  t->add_option("--out", table.out, "Output file");

  FitArgs fit;
  auto* f = app.add_subcommand("fit", "Fit a genus series by a polynomial in E2, E4, E6");
  f->add_option("series", fit.series, "F2, C2, F1, ...")->required();
  f->add_option("--max-weight", fit.max_weight, "Weight cap (default 6g-6)");
  f->add_option("--fit-deg", fit.fit_degree, "Fit q^0..q^fit-deg");
  f->add_option("--validate-deg", fit.validate_degree, "Validate through q^validate-deg");
  f->add_flag("--minimal", fit.minimal, "Report the smallest weight cap that validates");
  f->add_option("--format", fit.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  f->add_option("--out", fit.out, "Output file");

  std::string level = "quick";
  auto* v = app.add_subcommand("verify", "Run the cross-validation suite");
  v->add_option("--level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  std::string cache_action;
  bool gc_all = false;
  auto* k = app.add_subcommand("cache", "Inspect or clean the coefficient cache");
  k->add_option("action", cache_action, "inspect or gc")->required()->check(CLI::IsMember({"inspect", "gc"}));
  k->add_flag("--all", gc_all, "gc: remove every entry, not only corrupt ones");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c) return run_coeff(glob, coeff);
    if (*t) {
      if (table.kind == "euler" && n_opt->count() == 0) table.Ns.clear();
      return run_table(glob, table);
    }
    if (*f) return run_fit(glob, fit);
    if (*v) return run_verify(glob, level);
    if (*k) return run_cache(glob, cache_action, gc_all);
  } catch (const CacheIntegrityError& ex) {
    std::cerr << "cache integrity error: " << ex.what() << '\n';
    return kIntegrity;
  } catch (const CapacityError& ex) {
    std::cerr << "capacity error [oracle]: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& ex) {
    std::cerr << "domain error [numerics]: " << ex.what() << '\n';
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
