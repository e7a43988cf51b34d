// Command-line front end. Talks to the library only through the C API.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "dskg/dskg.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ContextDeleter {
  void operator()(dskg_context* c) const { dskg_context_destroy(c); }
};
struct ReportDeleter {
  void operator()(dskg_report* r) const { dskg_report_destroy(r); }
};
struct TableDeleter {
  void operator()(dskg_table* t) const { dskg_table_destroy(t); }
};
using ContextPtr = std::unique_ptr<dskg_context, ContextDeleter>;
using ReportPtr = std::unique_ptr<dskg_report, ReportDeleter>;
using TablePtr = std::unique_ptr<dskg_table, TableDeleter>;

// Thrown for conditions that end the run with a usage/domain exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  double mass = 0.0;
  double mass_imag = 0.0;
  std::optional<double> physical_mass;
  int panel_order = 16;
  double quad_tol = 1e-9;
  int max_depth = 24;
  unsigned threads = 0;
  std::string out;
  std::string config;
  CLI::Option* mass_opt = nullptr;
  CLI::Option* mass_imag_opt = nullptr;
  CLI::Option* physical_opt = nullptr;

  bool mass_given() const {
    return mass_opt->count() + mass_imag_opt->count() + physical_opt->count() > 0;
  }
};

void add_common(CLI::App* sub, Common& c) {
  c.mass_opt = sub->add_option("--mass", c.mass, "Real part of the curved mass M")
                   ->capture_default_str();
  c.mass_imag_opt =
      sub->add_option("--mass-imag", c.mass_imag, "Imaginary part of M")
          ->capture_default_str();
  c.physical_opt =
      sub->add_option("--physical-mass", c.physical_mass,
                      "Physical mass m of the +m^2 u equation; sets M = -i m")
          ->excludes(c.mass_opt)
          ->excludes(c.mass_imag_opt);
  sub->add_option("--panel-order", c.panel_order, "Gauss-Legendre nodes per panel")
      ->capture_default_str();
  sub->add_option("--quad-tol", c.quad_tol, "Per-panel quadrature tolerance")
      ->capture_default_str();
  sub->add_option("--max-depth", c.max_depth, "Quadrature bisection limit")
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads, 0 = hardware")
      ->capture_default_str();
  sub->add_option("--out", c.out, "Write CSV here instead of stdout");
  sub->add_option("--config", c.config,
                  "key=value file of defaults (# comments); flags override");
}

void check(dskg_context* ctx, dskg_status s) {
  if (s != DSKG_OK) {
    throw UsageError(std::string(dskg_status_name(s)) + ": " + dskg_last_error(ctx));
  }
}

ContextPtr make_context(const Common& c) {
  ContextPtr ctx(dskg_context_create());
  if (!ctx) throw std::runtime_error("cannot allocate context");
  if (c.physical_mass) {
    check(ctx.get(), dskg_set_physical_mass(ctx.get(), *c.physical_mass));
  } else {
    check(ctx.get(), dskg_set_mass(ctx.get(), c.mass, c.mass_imag));
  }
  check(ctx.get(), dskg_set_quadrature(ctx.get(), c.panel_order, c.quad_tol, c.max_depth));
  check(ctx.get(), dskg_set_threads(ctx.get(), c.threads));
  return ctx;
}

void emit(const Common& c, const char* text) {
  if (c.out.empty()) {
    std::fwrite(text, 1, std::char_traits<char>::length(text), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream os(c.out, std::ios::binary);
  if (!os) throw UsageError("cannot open " + c.out);
  os << text;
}

double parse_double(std::string_view s) {
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw UsageError("not a number: '" + std::string(s) + "'");
  }
  return v;
}

// "0.25", "1.7i", "-i", "1+0.5i", "0.2-1e-3i".
dskg_complex parse_mass(std::string_view s) {
  if (s.empty()) throw UsageError("empty mass");
  if (s.back() != 'i') return {parse_double(s), 0.0};
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const auto imag = [](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_double(t);
  };
  if (split == std::string_view::npos) return {0.0, imag(s)};
  return {parse_double(s.substr(0, split)), imag(s.substr(split))};
}

std::vector<dskg_complex> parse_mass_list(const std::string& list) {
  std::vector<dskg_complex> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t end = std::min(list.find(',', start), list.size());
    std::string_view tok(list.data() + start, end - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (!tok.empty()) out.push_back(parse_mass(tok));
    start = end + 1;
  }
  return out;
}

// Reads key=value lines and appends "--key=value" for every key not already
// present on the command line, so explicit flags win.
std::vector<std::string> with_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    for (char& ch : key) {
      if (ch == '_') ch = '-';
    }
    const std::string flag = "--" + key;
    bool present = false;
    for (const auto& a : args) {
      if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
    }
    if (!present) args.push_back(flag + "=" + value);
  }
  return args;
}

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_eval(const Common& c, const std::string& kernel, double r, double t, double b) {
  static const std::map<std::string, dskg_kernel> kKernels = {
      {"E", DSKG_KERNEL_E},     {"E_r", DSKG_KERNEL_E_R}, {"E_rr", DSKG_KERNEL_E_RR},
      {"E_t", DSKG_KERNEL_E_T}, {"E_tt", DSKG_KERNEL_E_TT}, {"K0", DSKG_KERNEL_K0},
      {"K1", DSKG_KERNEL_K1}};
  const auto ctx = make_context(c);
  dskg_complex v{};
  check(ctx.get(), dskg_eval_kernel(ctx.get(), kKernels.at(kernel), r, t, b, &v));
  std::string line = format17(v.re);
  if (v.im != 0.0) line += " " + format17(v.im);
  line += "\n";
  emit(c, line.c_str());
  return kExitPass;
}

struct IdentityFlags {
  int samples = 200;
  std::string masses = "0,0.25,0.5,1,0.3i,1.7i";
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double canary_tol = 1e-12;
  bool derivatives = false;
  int derivative_samples = 100;
  double derivative_tol = 1e-6;
};

int run_identities(const Common& c, const IdentityFlags& f) {
  const auto ctx = make_context(c);
  check(ctx.get(), dskg_set_seed(ctx.get(), f.seed));
  std::vector<dskg_complex> masses;
  if (c.mass_given()) {
    dskg_complex m{};
    check(ctx.get(), dskg_get_mass(ctx.get(), &m));
    masses.push_back(m);
  } else {
    masses = parse_mass_list(f.masses);
  }
  dskg_report* raw = nullptr;
  check(ctx.get(), dskg_run_identities(ctx.get(), f.samples, masses.data(),
                                       masses.size(), f.tol, f.canary_tol, &raw));
  ReportPtr report(raw);
  if (f.derivatives) {
    dskg_report* d = nullptr;
    check(ctx.get(), dskg_run_derivatives(ctx.get(), f.derivative_samples, masses.data(),
                                          masses.size(), f.derivative_tol, &d));
    ReportPtr deriv(d);
    check(ctx.get(), dskg_report_merge(report.get(), deriv.get()));
  }
  emit(c, dskg_report_csv(report.get()));
  const std::size_t failures = dskg_report_failures(report.get());
  std::fprintf(stderr, "%zu cases, %zu failures, worst residual %s\n",
               dskg_report_size(report.get()), failures,
               format17(dskg_report_worst(report.get())).c_str());
  return failures == 0 ? kExitPass : kExitFail;
}

struct ModeFlags {
  std::optional<double> mu;
  std::optional<double> lambda;
  std::optional<double> beam_k;
  double c0 = 1.0;
  double c1 = 0.0;
  double forcing_amp = 0.0;
  double forcing_rate = 0.0;
  double t_max = 2.0;
  int n_t = 21;
  double ode_tol = 1e-12;
  double tol = 0.0;
};

double exp_forcing(double t, void* user) {
  const auto* f = static_cast<const ModeFlags*>(user);
  return f->forcing_amp * std::exp(-f->forcing_rate * t);
}

int run_mode(const Common& c, const ModeFlags& f) {
  const int given = (f.mu ? 1 : 0) + (f.lambda ? 1 : 0) + (f.beam_k ? 1 : 0);
  if (given > 1) throw UsageError("give at most one of --mu, --lambda, --beam-k");
  double mu = 0.0;
  if (f.mu) mu = *f.mu;
  if (f.lambda) mu = -(*f.lambda) * (*f.lambda);
  if (f.beam_k) mu = -std::pow(*f.beam_k, 4);
  if (mu > 0.0) throw UsageError("mu must be <= 0");
  if (!(f.t_max > 0.0 && f.t_max <= 5.0)) throw UsageError("--t-max must lie in (0, 5]");
  if (f.n_t < 2) throw UsageError("--n-t must be >= 2");

  const auto ctx = make_context(c);
  std::vector<double> grid(f.n_t);
  for (int i = 0; i < f.n_t; ++i) grid[i] = f.t_max * i / (f.n_t - 1);
  dskg_mode_problem p{mu, f.c0, f.c1, nullptr, nullptr};
  if (f.forcing_amp != 0.0) {
    p.forcing = exp_forcing;
    p.forcing_user = const_cast<ModeFlags*>(&f);
  }
  dskg_table* raw = nullptr;
  check(ctx.get(), dskg_mode_compare(ctx.get(), &p, grid.data(), grid.size(), f.ode_tol, &raw));
  TablePtr table(raw);
  emit(c, dskg_table_csv(table.get()));
  const double rel = dskg_table_summary(table.get());
  std::fprintf(stderr, "max relative difference %s\n", format17(rel).c_str());
  return (f.tol > 0.0 && !(rel <= f.tol)) ? kExitFail : kExitPass;
}

struct CompareFlags {
  int n_x = 401;
  double x_min = -2.0;
  double x_max = 2.0;
  double t_max = 1.0;
  std::string boundary = "dirichlet";
  double cfl = 0.5;
  std::string profile = "gaussian";
  double center = 0.0;
  double width = 0.2;
  double amplitude = 1.0;
  int sine_mode = 1;
  double velocity = 0.0;
  double tol = 0.0;
};

double profile_fn(double x, void* user) {
  const auto* f = static_cast<const CompareFlags*>(user);
  if (f->profile == "gaussian") {
    const double s = (x - f->center) / f->width;
    return f->amplitude * std::exp(-0.5 * s * s);
  }
  if (f->profile == "sine") {
    const double pi = std::acos(-1.0);
    return f->amplitude * std::sin(f->sine_mode * pi * (x - f->x_min) / (f->x_max - f->x_min));
  }
  return 0.0;
}

double velocity_fn(double x, void* user) {
  const auto* f = static_cast<const CompareFlags*>(user);
  return f->velocity * profile_fn(x, user) / (f->amplitude == 0.0 ? 1.0 : f->amplitude);
}

int run_compare(const Common& c, const CompareFlags& f) {
  dskg_grid_problem p{};
  p.x_min = f.x_min;
  p.x_max = f.x_max;
  p.n_x = f.n_x;
  p.cfl = f.cfl;
  p.boundary = f.boundary == "periodic" ? DSKG_BOUNDARY_PERIODIC : DSKG_BOUNDARY_DIRICHLET;
  p.user = const_cast<CompareFlags*>(&f);
  if (f.profile != "zero") p.phi0 = profile_fn;
  if (f.velocity != 0.0 && f.profile != "zero") p.phi1 = velocity_fn;
  if (!(f.t_max > 0.0 && f.t_max <= 5.0)) throw UsageError("--t-max must lie in (0, 5]");

  const auto ctx = make_context(c);
  dskg_table* raw = nullptr;
  check(ctx.get(), dskg_grid_compare(ctx.get(), &p, f.t_max, &raw));
  TablePtr table(raw);
  emit(c, dskg_table_csv(table.get()));
  const double linf = dskg_table_summary(table.get());
  std::fprintf(stderr, "max |u_transform - u_fd| %s\n", format17(linf).c_str());
  return (f.tol > 0.0 && !(linf <= f.tol)) ? kExitFail : kExitPass;
}

int run(int argc, char** argv) {
  CLI::App app{"Integral-transform solver for the Klein-Gordon equation in de Sitter space", "dskg_cli"};
  app.require_subcommand(1);
  app.set_version_flag("--version", dskg_version());

  Common ce, ci, cm, cc;

  auto* eval = app.add_subcommand("eval", "Evaluate one kernel value");
  add_common(eval, ce);
  std::string kernel;
  double r = 0.0, t = 0.0, b = 0.0;
  eval->add_option("--kernel", kernel, "Kernel: E, E_r, E_rr, E_t, E_tt, K0, K1")
      ->required()
      ->check(CLI::IsMember({"E", "E_r", "E_rr", "E_t", "E_tt", "K0", "K1"}));
  eval->add_option("--r", r, "Radius r (z for K0, K1)")->required();
  eval->add_option("--t", t, "Time t")->required();
  eval->add_option("--b", b, "Subsidiary time b (E only)")->capture_default_str();

  auto* ids = app.add_subcommand("identities", "Run the kernel identity suite; CSV report");
  add_common(ids, ci);
  IdentityFlags idf;
  ids->add_option("--samples", idf.samples, "Halton samples per mass")->capture_default_str();
  ids->add_option("--masses", idf.masses,
                  "Comma-separated masses such as 0.25 or 1.7i; ignored when a "
                  "single mass is given with --mass, --mass-imag or --physical-mass")
      ->capture_default_str();
  ids->add_option("--seed", idf.seed, "Offset into the Halton sequence")->capture_default_str();
  ids->add_option("--tol", idf.tol, "Relative tolerance")->capture_default_str();
  ids->add_option("--canary-tol", idf.canary_tol, "Tolerance at M = 1/2")->capture_default_str();
  ids->add_flag("--derivatives", idf.derivatives,
                "Also check analytic derivatives against finite differences");
  ids->add_option("--derivative-samples", idf.derivative_samples,
                  "Samples per mass for --derivatives")->capture_default_str();
  ids->add_option("--derivative-tol", idf.derivative_tol, "Tolerance for --derivatives")
      ->capture_default_str();

  auto* mode = app.add_subcommand("mode", "Transform against the ODE oracle on one eigenmode");
  add_common(mode, cm);
  ModeFlags mf;
  mode->add_option("--mu", mf.mu, "Eigenvalue mu <= 0 of A");
  mode->add_option("--lambda", mf.lambda, "Sets mu = -lambda^2");
  mode->add_option("--beam-k", mf.beam_k, "Sets mu = -k^4 (beam mode)");
  mode->add_option("--c0", mf.c0, "y(0)")->capture_default_str();
  mode->add_option("--c1", mf.c1, "y'(0)")->capture_default_str();
  mode->add_option("--forcing-amp", mf.forcing_amp, "Forcing g(t) = amp e^{-rate t}")
      ->capture_default_str();
  mode->add_option("--forcing-rate", mf.forcing_rate, "Decay rate of the forcing")
      ->capture_default_str();
  mode->add_option("--t-max", mf.t_max, "Last time of the grid")->capture_default_str();
  mode->add_option("--n-t", mf.n_t, "Number of equispaced times")->capture_default_str();
  mode->add_option("--ode-tol", mf.ode_tol, "ODE oracle tolerance")->capture_default_str();
  mode->add_option("--tol", mf.tol, "Exit 1 when the max relative difference exceeds this (0 = off)")
      ->capture_default_str();

  auto* cmp = app.add_subcommand("compare", "Transform against the finite-difference solver");
  add_common(cmp, cc);
  CompareFlags cf;
  cmp->add_option("--nx", cf.n_x, "Grid nodes")->capture_default_str();
  cmp->add_option("--x-min", cf.x_min, "Left end")->capture_default_str();
  cmp->add_option("--x-max", cf.x_max, "Right end")->capture_default_str();
  cmp->add_option("--t-max", cf.t_max, "Final time")->capture_default_str();
  cmp->add_option("--boundary", cf.boundary, "dirichlet or periodic")
      ->check(CLI::IsMember({"dirichlet", "periodic"}))
      ->capture_default_str();
  cmp->add_option("--cfl", cf.cfl, "dt / dx")->capture_default_str();
  cmp->add_option("--profile", cf.profile, "Initial value: gaussian, sine or zero")
      ->check(CLI::IsMember({"gaussian", "sine", "zero"}))
      ->capture_default_str();
  cmp->add_option("--center", cf.center, "Gaussian centre")->capture_default_str();
  cmp->add_option("--width", cf.width, "Gaussian standard deviation")->capture_default_str();
  cmp->add_option("--amplitude", cf.amplitude, "Profile amplitude")->capture_default_str();
  cmp->add_option("--sine-mode", cf.sine_mode, "Half-wavelengths across the interval")
      ->capture_default_str();
  cmp->add_option("--velocity", cf.velocity,
                  "Initial velocity as this multiple of the normalized profile")
      ->capture_default_str();
  cmp->add_option("--tol", cf.tol, "Exit 1 when the L-infinity gap exceeds this (0 = off)")
      ->capture_default_str();

  // CLI11 takes the argument vector in reverse order.
  std::vector<std::string> args = with_config({argv + 1, argv + argc});
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (eval->parsed()) return run_eval(ce, kernel, r, t, b);
  if (ids->parsed()) return run_identities(ci, idf);
  if (mode->parsed()) return run_mode(cm, mf);
  return run_compare(cc, cf);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
}
