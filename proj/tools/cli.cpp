#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kfk/analytic_constants.hpp"
#include "kfk/energy_lab.hpp"
#include "kfk/errors.hpp"
#include "kfk/lemma_diagnostics.hpp"
#include "kfk/phi_distribution.hpp"
#include "kfk/representability.hpp"
#include "kfk/residue_mod3.hpp"

namespace kfk::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kCommands = {"tabulate", "density", "multiplicity", "mod3",
                                            "cdf",      "bound",   "energy",       "proofset",
                                            "constants", "diagnose"};

struct Options {
  std::string command;
  std::uint64_t x = 0;
  std::uint64_t lo = 1;
  std::string f;
  std::string points;
  std::uint64_t grid = 1000;
  std::uint64_t modulus = 3;
  double K = 2.0;
  std::string parity = "any";
  std::string set = "proof";
  std::string c = "1";
  std::string kind = "theorem3";
  std::uint64_t r = 100;
  std::optional<double> y;
  std::optional<double> s;
  std::uint64_t cutoff = 1'000'000;
  std::optional<unsigned> rmax;
  std::string output = "csv";
  std::string out_path;
  unsigned threads = 0;
  std::uint64_t segment = 1ULL << 22;
  std::string cache;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double sig15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("invalid " + what + " '" + std::string(text) + "'");
  }
  return v;
}

void require_x(const Options& o) {
  if (o.x < 1) throw UsageError("x must be ≥ 1");
}

SieveConfig sieve_config(const Options& o) {
  SieveConfig cfg;
  if (o.threads > 0) cfg.worker_count = o.threads;
  cfg.segment_length = o.segment;
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

// Built-in kind, or a path to a user table.
struct FunctionSource {
  std::optional<FunctionKind> kind;
  std::filesystem::path path;
  std::string label() const { return kind ? std::string(kind_name(*kind)) : path.string(); }
};

FunctionSource function_source(const std::string& f, const std::string& fallback) {
  const std::string name = f.empty() ? fallback : f;
  if (const auto kind = parse_kind(name); kind && *kind != FunctionKind::user) return {kind, {}};
  if (!std::filesystem::exists(name)) {
    throw UsageError("--f must be one of omega, tau, phi, sigma, lpf, squarefree or an existing file: '" +
                     name + "'");
  }
  return {std::nullopt, name};
}

FunctionTable obtain_table(FunctionKind kind, Interval interval, const SieveConfig& cfg,
                           const std::string& cache) {
  if (!cache.empty() && std::filesystem::exists(cache)) {
    auto table = read_table_cache(cache);
    if (table.kind() == kind && table.interval() == interval) return table;
  }
  auto table = tabulate(kind, interval, cfg);
  if (!cache.empty()) write_table_cache(table, cache);
  return table;
}

// f over [1, x]; user tables must cover at least that much.
FunctionTable table_for(const FunctionSource& src, std::uint64_t x, const SieveConfig& cfg,
                        const std::string& cache) {
  if (src.kind) return obtain_table(*src.kind, {1, x + 1}, cfg, cache);
  auto table = load_user_function(src.path);
  if (table.interval().hi <= x) {
    throw UsageError("user function " + src.path.string() + " covers k <= " +
                     std::to_string(table.interval().hi - 1) + " only; x = " + std::to_string(x));
  }
  return table;
}

std::vector<std::uint64_t> x_grid(const Options& o) {
  std::vector<std::uint64_t> grid;
  if (!o.points.empty()) {
    std::stringstream ss(o.points);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(parse_u64(item, "--points entry"));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (grid[i] < 1) throw UsageError("x must be ≥ 1");
      if (i > 0 && grid[i] <= grid[i - 1]) throw UsageError("--points must be strictly ascending");
    }
    if (grid.empty()) throw UsageError("--points is empty");
    return grid;
  }
  require_x(o);
  for (std::uint64_t p = 10; p < o.x; p *= 10) grid.push_back(p);
  grid.push_back(o.x);
  return grid;
}

bool want_json(const Options& o) { return o.output == "json"; }

// ---- subcommands; each writes its artifact to `out` ----

void cmd_tabulate(const Options& o, std::ostream& out) {
  require_x(o);
  const auto kind = parse_kind(o.f.empty() ? "tau" : o.f);
  if (!kind || *kind == FunctionKind::user) throw UsageError("--f must name a built-in function for tabulate");
  if (o.lo < 1 || o.lo > o.x) throw UsageError("--lo must satisfy 1 ≤ lo ≤ x");
  const auto table = obtain_table(*kind, {o.lo, o.x + 1}, sieve_config(o), o.cache);
  if (want_json(o)) {
    json j;
    j["kind"] = kind_name(*kind);
    j["lo"] = table.interval().lo;
    j["hi"] = table.interval().hi;
    j["values"] = std::vector<std::uint64_t>(table.values().begin(), table.values().end());
    out << j.dump() << '\n';
    return;
  }
  out << "n,value\n";
  for (std::uint64_t n = table.interval().lo; n < table.interval().hi; ++n) out << n << ',' << table(n) << '\n';
}

void cmd_density(const Options& o, std::ostream& out) {
  const auto grid = x_grid(o);
  const auto src = function_source(o.f, "omega");
  const auto cfg = sieve_config(o);
  const auto table = table_for(src, grid.back(), cfg, o.cache);
  const auto points = density_sweep(table, grid, cfg);
  if (want_json(o)) {
    json j;
    j["f"] = src.label();
    j["points"] = json::array();
    for (const auto& p : points) {
      j["points"].push_back({{"x", p.x}, {"n_plus", p.n_plus}, {"density", sig15(p.density())},
                             {"exact", p.exact().str()}});
    }
    out << j.dump() << '\n';
    return;
  }
  out << "x,f,n_plus,density\n";
  for (const auto& p : points) out << p.x << ',' << src.label() << ',' << p.n_plus << ',' << fixed6(p.density()) << '\n';
}

void cmd_multiplicity(const Options& o, std::ostream& out) {
  require_x(o);
  const auto src = function_source(o.f, "omega");
  const auto cfg = sieve_config(o);
  auto report = count_image(table_for(src, o.x, cfg, o.cache), o.x, cfg);
  report.f_kind = src.label();
  if (want_json(o)) {
    json j;
    j["x"] = report.x;
    j["f"] = report.f_kind;
    j["n_plus"] = report.n_plus;
    j["in_range_preimages"] = report.in_range_preimages;
    j["non_representable"] = report.non_representable();
    j["histogram"] = json::object();
    for (const auto& [s, count] : report.histogram) j["histogram"][std::to_string(s)] = count;
    out << j.dump() << '\n';
    return;
  }
  out << "s,count\n";
  for (const auto& [s, count] : report.histogram) out << s << ',' << count << '\n';
}

void cmd_mod3(const Options& o, std::ostream& out) {
  if (o.modulus < 2) throw UsageError("modulus must be ≥ 2");
  const auto grid = o.points.empty() ? std::vector<std::uint64_t>{o.x} : x_grid(o);
  if (o.points.empty()) require_x(o);
  const auto src = function_source(o.f, "tau");
  const auto cfg = sieve_config(o);

  if (o.modulus == 3 && src.kind == FunctionKind::tau) {
    json rows = json::array();
    if (!want_json(o)) out << "x,r0,r1,r2,T0,T1,T2,K,density0\n";
    for (const std::uint64_t x : grid) {
      const auto d = mod3_decomposition(x, cfg);
      if (want_json(o)) {
        rows.push_back({{"x", x},
                        {"counts", d.counts},
                        {"t0", d.split.t0},
                        {"t1", d.split.t1},
                        {"t2", d.split.t2},
                        {"k", d.k_count},
                        {"t14", d.t14},
                        {"identity_holds", d.identity_holds()},
                        {"density0", sig15(d.density0())}});
      } else {
        out << x << ',' << d.counts[0] << ',' << d.counts[1] << ',' << d.counts[2] << ',' << d.split.t0 << ','
            << d.split.t1 << ',' << d.split.t2 << ',' << d.k_count << ',' << fixed6(d.density0()) << '\n';
      }
    }
    if (want_json(o)) {
      json j;
      j["modulus"] = 3;
      j["f"] = "tau";
      j["identity_violations"] = tau_mod3_identity_check(grid.back(), cfg).total();
      j["rows"] = rows;
      out << j.dump() << '\n';
    }
    return;
  }

  const auto table = table_for(src, grid.back(), cfg, o.cache);
  json rows = json::array();
  if (!want_json(o)) out << "x,modulus,r,count\n";
  for (const std::uint64_t x : grid) {
    const auto report = residue_counts(table, x, o.modulus, cfg);
    if (want_json(o)) {
      rows.push_back({{"x", x}, {"counts", report.counts}});
    } else {
      for (std::uint64_t r = 0; r < o.modulus; ++r) out << x << ',' << o.modulus << ',' << r << ',' << report.counts[r] << '\n';
    }
  }
  if (want_json(o)) {
    json j;
    j["modulus"] = o.modulus;
    j["f"] = src.label();
    j["rows"] = rows;
    out << j.dump() << '\n';
  }
}

json integral_json(const IntegralBound& b) {
  json j;
  j["x"] = b.x;
  j["G"] = b.g;
  j["lower"] = sig15(b.lower);
  j["upper"] = sig15(b.upper);
  j["bound"] = sig15(b.bound());
  return j;
}

void cmd_cdf(const Options& o, std::ostream& out) {
  require_x(o);
  if (o.grid < 1) throw UsageError("grid must be ≥ 1");
  const auto cfg = sieve_config(o);
  const auto grid = uniform_grid(o.grid);
  const auto phi = obtain_table(FunctionKind::phi, {1, o.x + 1}, cfg, o.cache);
  const auto cdf = empirical_cdf(phi, o.x, grid, cfg);
  if (want_json(o)) {
    out << integral_json(integral_bound(cdf)).dump() << '\n';
    return;
  }
  out << "lambda,phi_x\n";
  for (std::size_t i = 0; i < grid.size(); ++i) out << fixed6(grid[i].value()) << ',' << fixed6(cdf.value(i)) << '\n';
}

void cmd_bound(const Options& o, std::ostream& out) {
  require_x(o);
  const auto cfg = sieve_config(o);
  json j;
  if (o.kind == "theorem3") {
    const auto src = function_source(o.f, "tau");
    Rational c;
    try {
      c = Rational::parse(o.c);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--c: ") + e.what());
    }
    const auto b = theorem3_bound(table_for(src, o.x, cfg, o.cache), o.x, c, cfg);
    if (!want_json(o)) {
      out << "x,f,c,sum_f,bound,actual,holds\n"
          << b.x << ',' << src.label() << ',' << b.c.str() << ',' << to_string(b.sum_f) << ','
          << b.bound.str() << ',' << b.actual << ',' << (b.holds() ? "true" : "false") << '\n';
      return;
    }
    j["x"] = b.x;
    j["f"] = src.label();
    j["c"] = b.c.str();
    j["sum_f"] = to_string(b.sum_f);
    j["bound"] = b.bound.str();
    j["bound_value"] = sig15(b.bound.to_double());
    j["actual"] = b.actual;
    j["holds"] = b.holds();
  } else if (o.kind == "phi-mean") {
    const auto m = phi_upper_constant_check(o.x, cfg);
    j["x"] = m.x;
    j["phi_sum"] = to_string(m.phi_sum);
    j["lhs"] = sig15(m.lhs);
    j["target"] = sig15(m.target);
  } else if (o.kind == "integral") {
    if (o.grid < 10) throw UsageError("grid must be ≥ 10 for the integral bound");
    j = integral_json(integral_bound(o.x, o.grid, cfg));
  } else if (o.kind == "partition") {
    if (o.r < 2) throw UsageError("r must be ≥ 2");
    const auto p = partition_lower_bound(o.x, o.r, cfg);
    j["x"] = p.x;
    j["r"] = o.r;
    j["partition_sum"] = p.partition_sum;
    j["exceed_count"] = p.exceed_count;
    j["direct_count"] = p.direct_count;
  } else {
    throw UsageError("--kind must be one of theorem3, phi-mean, integral, partition");
  }
  if (want_json(o)) {
    out << j.dump() << '\n';
    return;
  }
  // flat objects as a two-line CSV
  std::string header, row;
  for (const auto& [key, value] : j.items()) {
    header += (header.empty() ? "" : ",") + key;
    const std::string v = value.is_number_float() ? fixed6(value.get<double>())
                          : value.is_string()      ? value.get<std::string>()
                                                   : value.dump();
    row += (row.empty() ? "" : ",") + v;
  }
  out << header << '\n' << row << '\n';
}

Parity parse_parity(const std::string& p) {
  if (p == "any") return Parity::any;
  if (p == "odd" || p == "odd_l") return Parity::odd_l;
  throw UsageError("--parity must be any or odd");
}

void cmd_energy(const Options& o, std::ostream& out) {
  require_x(o);
  const auto cfg = sieve_config(o);
  const auto src = function_source(o.f, "omega");
  const auto table = table_for(src, o.x, cfg, o.cache);
  std::vector<std::uint64_t> set;
  if (o.set == "range") {
    set.resize(o.x);
    for (std::uint64_t k = 1; k <= o.x; ++k) set[k - 1] = k;
  } else if (o.set == "proof") {
    if (o.x < 16) throw UsageError("proof sets require x ≥ 16");
    set = members(build_proof_set({o.x, o.K, parse_parity(o.parity)}, cfg));
  } else {
    throw UsageError("--set must be proof or range");
  }
  const auto b = image_lower_bound(set, table, o.x);
  json j;
  j["x"] = o.x;
  j["f"] = src.label();
  j["set"] = o.set;
  j["set_size"] = b.energy.set_size;
  j["energy"] = b.energy.energy;
  j["diagonal"] = b.energy.diagonal;
  j["off_diagonal"] = b.energy.off_diagonal;
  j["image_size"] = b.energy.image_size;
  j["cs_bound"] = b.energy.cs_bound;
  j["cauchy_schwarz_holds"] = b.cauchy_schwarz_holds;
  j["max_f"] = b.max_f;
  j["image_within_x"] = b.image_within_x;
  j["image_tail"] = b.image_tail;
  out << j.dump() << '\n';
}

void cmd_proofset(const Options& o, std::ostream& out) {
  require_x(o);
  if (o.x < 16) throw UsageError("proof sets require x ≥ 16");
  const ProofSetSpec spec{o.x, o.K, parse_parity(o.parity)};
  const auto set = build_proof_set(spec, sieve_config(o));
  if (want_json(o)) {
    json j;
    j["x"] = o.x;
    j["y"] = spec.y();
    j["k"] = sig15(spec.K);
    j["parity"] = spec.parity == Parity::any ? "any" : "odd_l";
    j["size"] = set.size();
    j["density"] = sig15(static_cast<double>(set.size()) / static_cast<double>(o.x));
    j["members"] = json::array();
    for (const auto& m : set) j["members"].push_back({m.n, m.l, m.p});
    out << j.dump() << '\n';
    return;
  }
  out << "n,l,p\n";
  for (const auto& m : set) out << m.n << ',' << m.l << ',' << m.p << '\n';
}

void cmd_constants(const Options& o, std::ostream& out) {
  const auto c = catalog();
  json j;
  j["zeta2"] = sig15(c.zeta2);
  j["zeta3"] = sig15(c.zeta3);
  j["c_mod3"] = sig15(c.c_mod3);
  j["k_density"] = sig15(c.k_density);
  j["t0_density"] = sig15(c.t0_density);
  j["phi_mean"] = sig15(c.phi_mean);
  j["phi_upper"] = sig15(c.phi_upper);
  if (o.s) {
    const double s = *o.s;
    if (!(s > 1)) throw UsageError("s must be > 1");
    if (o.cutoff < 2) throw UsageError("cutoff must be ≥ 2");
    j["s"] = sig15(s);
    j["closed_form_k"] = sig15(closed_form_K(s));
    j["euler_product_k"] = sig15(euler_product_K(s, o.cutoff));
    j["direct_sum_k"] = sig15(direct_sum_K(s, o.cutoff));
    j["closed_form_t"] = sig15(closed_form_T(s));
    j["euler_product_t"] = sig15(euler_product_T(s, o.cutoff));
    j["direct_sum_t"] = sig15(direct_sum_T(s, o.cutoff));
  }
  if (o.rmax) {
    if (*o.rmax < 1 || *o.rmax > 50) throw UsageError("rmax must satisfy 1 ≤ rmax ≤ 50");
    j["mersenne_sigma_moment"] = sig15(mersenne_sigma_moment(*o.rmax));
  }
  if (o.output == "csv") {
    out << "name,value\n";
    for (const auto& [key, value] : j.items()) out << key << ',' << value.dump() << '\n';
    return;
  }
  out << j.dump() << '\n';
}

void cmd_diagnose(const Options& o, std::ostream& out) {
  require_x(o);
  if (o.x < 16) throw UsageError("diagnose requires x ≥ 16");
  const auto d = lemma_diagnostics(o.x, o.y, sieve_config(o));
  struct Row {
    const char* name;
    std::uint64_t failures;
  };
  const Row rows[] = {{"smooth_part_bound", d.smooth_bound_failures},
                      {"totient_prime_powers", d.totient_failures[0]},
                      {"gcd_smooth", d.totient_failures[1]},
                      {"no_large_small_prime_powers", d.totient_failures[2]},
                      {"smooth_part_preserved", d.totient_failures[3]},
                      {"reciprocal_sum", d.reciprocal_sum_failures}};
  if (want_json(o)) {
    json j;
    j["x"] = d.x;
    j["y"] = sig15(d.y);
    j["log_x"] = sig15(d.log_x);
    j["loglog_x"] = sig15(d.loglog_x);
    for (const auto& r : rows) {
      j[std::string(r.name) + "_failures"] = r.failures;
      j[std::string(r.name) + "_fraction"] = std::round(d.fraction(r.failures) * 1e4) / 1e4;
    }
    out << j.dump() << '\n';
    return;
  }
  out << "check,failures,fraction\n";
  for (const auto& r : rows) out << r.name << ',' << r.failures << ',' << fixed6(d.fraction(r.failures)) << '\n';
}

void dispatch(const Options& o, std::ostream& out) {
  if (o.command == "tabulate") return cmd_tabulate(o, out);
  if (o.command == "density") return cmd_density(o, out);
  if (o.command == "multiplicity") return cmd_multiplicity(o, out);
  if (o.command == "mod3") return cmd_mod3(o, out);
  if (o.command == "cdf") return cmd_cdf(o, out);
  if (o.command == "bound") return cmd_bound(o, out);
  if (o.command == "energy") return cmd_energy(o, out);
  if (o.command == "proofset") return cmd_proofset(o, out);
  if (o.command == "constants") return cmd_constants(o, out);
  if (o.command == "diagnose") return cmd_diagnose(o, out);
  throw UsageError("unknown command " + o.command);
}

}  // namespace

FunctionTable load_user_function(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::uint64_t> values;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1 && line == "k,f") continue;
    const auto where = path.string() + ":" + std::to_string(line_no) + ": ";
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw format_error(where + "expected 'k,f'");
    const std::string_view k_text(line.data(), comma);
    const std::string_view f_text(line.data() + comma + 1, line.size() - comma - 1);
    std::uint64_t k = 0;
    if (auto [p, ec] = std::from_chars(k_text.begin(), k_text.end(), k); ec != std::errc() || p != k_text.end()) {
      throw format_error(where + "malformed k '" + std::string(k_text) + "'");
    }
    if (k != values.size() + 1) {
      throw format_error(where + "expected k = " + std::to_string(values.size() + 1) + ", found k = " +
                         std::to_string(k));
    }
    if (!f_text.empty() && f_text.front() == '-') {
      throw std::domain_error(where + "negative value f(" + std::to_string(k) + ") = " + std::string(f_text));
    }
    std::uint64_t fk = 0;
    if (auto [p, ec] = std::from_chars(f_text.begin(), f_text.end(), fk); ec != std::errc() || p != f_text.end()) {
      throw format_error(where + "malformed f '" + std::string(f_text) + "'");
    }
    values.push_back(fk);
  }
  if (values.empty()) throw format_error(path.string() + ": no rows");
  const std::uint64_t x = values.size();
  return FunctionTable(FunctionKind::user, {1, x + 1}, std::move(values));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sieve experiments on the integers k + f(k) for f = omega, tau, phi", "kfk"};
  app.set_config("--config", "", "plain key=value file; command-line flags take precedence");
  Options o;
  app.add_option("command", o.command, "subcommand")->required()->check(CLI::IsMember(kCommands));
  app.add_option("--x", o.x, "upper limit x");
  app.add_option("--lo", o.lo, "first argument for tabulate");
  app.add_option("--f", o.f, "omega, tau, phi (sigma, lpf, squarefree for tabulate) or a k,f CSV path");
  app.add_option("--points", o.points, "comma-separated ascending x grid");
  app.add_option("--grid", o.grid, "number of CDF cells G");
  app.add_option("--modulus", o.modulus, "modulus for mod3");
  app.add_option("--K", o.K, "width constant of the omega(l) window");
  app.add_option("--parity", o.parity, "any or odd");
  app.add_option("--set", o.set, "energy index set: proof or range");
  app.add_option("--c", o.c, "growth constant c with f(k) <= c k");
  app.add_option("--kind", o.kind, "bound: theorem3, phi-mean, integral, partition");
  app.add_option("--r", o.r, "number of partition points");
  app.add_option("--y", o.y, "smoothness bound for diagnose");
  app.add_option("--s", o.s, "Dirichlet series argument for constants");
  app.add_option("--cutoff", o.cutoff, "prime cutoff / direct-sum limit for constants");
  app.add_option("--rmax", o.rmax, "Mersenne sigma moment range for constants");
  app.add_option("--output", o.output, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", o.out_path, "write the artifact here instead of standard output");
  app.add_option("--threads", o.threads, "worker threads");
  app.add_option("--segment", o.segment, "sieve segment length");
  app.add_option("--cache", o.cache, "binary table cache path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "kfk: " << e.what() << '\n';
    return kExitUsage;
  }
  if (o.command == "constants" && o.output == "csv" && !app.count("--output")) o.output = "json";

  try {
    if (o.out_path.empty()) {
      dispatch(o, out);
    } else {
      std::ostringstream buffer;
      dispatch(o, buffer);
      std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw std::runtime_error("cannot open " + o.out_path + " for writing");
      file << buffer.str();
    }
  } catch (const UsageError& e) {
    err << "kfk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "kfk: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace kfk::cli
