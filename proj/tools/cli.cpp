#include "cli.hpp"

#include "bergman/finsect.hpp"
#include "bergman/io.hpp"
#include "bergman/kernel.hpp"
#include "bergman/odekernel.hpp"
#include "bergman/parallel.hpp"
#include "bergman/spectrum.hpp"
#include "bergman/validate.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

namespace bergman::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string command;
  std::string family;
  std::string symbol_file;
  std::string lambda;
  std::string grid;
  std::string out_dir;
  std::string suite = "all";
  int K = 20000;
  int N = 256;
  int coeffs = 64;
  int scale = 1;
  unsigned threads = 0;
  std::uint64_t seed = 42;
  bool strict = false;
  double tol_curve = 1e-6;
  double tol_band = 1e-9;
  double tol_ratio = 1e-3;
  double tol_margin = 1e-9;

  std::vector<std::pair<std::string, std::string>> echo() const {
    std::vector<std::pair<std::string, std::string>> kv = {{"command", command}};
    auto add = [&](const char* k, const std::string& v) {
      if (!v.empty()) kv.emplace_back(k, v);
    };
    add("family", family);
    add("symbol", symbol_file);
    add("lambda", lambda);
    add("grid", grid);
    kv.emplace_back("K", std::to_string(K));
    kv.emplace_back("N", std::to_string(N));
    kv.emplace_back("seed", std::to_string(seed));
    kv.emplace_back("strict", strict ? "true" : "false");
    kv.emplace_back("tol_curve", io::fmt(tol_curve));
    kv.emplace_back("tol_band", io::fmt(tol_band));
    kv.emplace_back("tol_ratio", io::fmt(tol_ratio));
    kv.emplace_back("tol_margin", io::fmt(tol_margin));
    return kv;
  }
};

void check_config(const Config& c) {
  for (double t : {c.tol_curve, c.tol_band, c.tol_ratio, c.tol_margin}) {
    if (!(t > 0.0)) throw UsageError("tolerances must be positive");
  }
  if (c.K < 100) throw UsageError("--K must be at least 100");
  if (c.N < 2) throw UsageError("--N must be at least 2");
  if (c.coeffs < 1) throw UsageError("--coeffs must be positive");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
  return parts;
}

cplx parse_value(const std::string& text) {
  try {
    return io::parse_complex(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

SpecialFamilySymbol parse_family(const std::string& text) {
  std::map<std::string, std::string> kv;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("--family expects key=value pairs, got '" + part + "'");
    kv[part.substr(0, eq)] = part.substr(eq + 1);
  }
  for (const auto& [k, v] : kv) {
    if (k != "m" && k != "alpha" && k != "beta" && k != "gamma") throw UsageError("--family: unknown key '" + k + "'");
  }
  if (!kv.count("m")) throw UsageError("--family requires m");
  int m = 0;
  try {
    m = std::stoi(kv["m"]);
  } catch (const std::exception&) {
    throw UsageError("--family: m must be an integer");
  }
  const cplx alpha = kv.count("alpha") ? parse_value(kv["alpha"]) : cplx{};
  const cplx beta = kv.count("beta") ? parse_value(kv["beta"]) : cplx{};
  const cplx gamma = kv.count("gamma") ? parse_value(kv["gamma"]) : cplx{1.0, 0.0};
  try {
    return SpecialFamilySymbol(m, alpha, beta, gamma);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Symbol load_symbol(const Config& c) {
  if (!c.family.empty() && !c.symbol_file.empty()) throw UsageError("give either --family or --symbol, not both");
  if (!c.family.empty()) return parse_family(c.family);
  if (c.symbol_file.empty()) throw UsageError("a symbol is required (--family or --symbol)");
  std::ifstream in(c.symbol_file);
  if (!in) throw UsageError("cannot open symbol file '" + c.symbol_file + "'");
  try {
    return io::symbol_from_json(json::parse(in));
  } catch (const std::exception& e) {
    throw UsageError(std::string("malformed symbol file: ") + e.what());
  }
}

struct Grid {
  double re0, re1, im0, im1;
  int res;

  std::vector<cplx> points() const {
    std::vector<cplx> pts;
    pts.reserve(static_cast<std::size_t>(res) * res);
    for (int i = 0; i < res; ++i) {
      for (int r = 0; r < res; ++r) {
        pts.emplace_back(re0 + (re1 - re0) * r / (res - 1), im0 + (im1 - im0) * i / (res - 1));
      }
    }
    return pts;
  }
};

Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 5) throw UsageError("--grid expects re0,re1,im0,im1,res");
  Grid g{};
  try {
    g.re0 = std::stod(parts[0]);
    g.re1 = std::stod(parts[1]);
    g.im0 = std::stod(parts[2]);
    g.im1 = std::stod(parts[3]);
    g.res = std::stoi(parts[4]);
  } catch (const std::exception&) {
    throw UsageError("--grid: malformed number");
  }
  if (g.res < 16) throw UsageError("--grid resolution must be at least 16");
  if (!(g.re1 > g.re0) || !(g.im1 > g.im0)) throw UsageError("--grid: empty range");
  return g;
}

std::optional<fs::path> out_dir(const Config& c) {
  if (c.out_dir.empty()) return std::nullopt;
  fs::create_directories(c.out_dir);
  return fs::path(c.out_dir);
}

std::ofstream open_csv(const fs::path& path, const Config& c, const std::string& header) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  for (const auto& [k, v] : c.echo()) f << "# " << k << '=' << v << '\n';
  f << header << '\n';
  return f;
}

void write_json(const fs::path& path, const Config& c, json body) {
  json cfg = json::object();
  for (const auto& [k, v] : c.echo()) cfg[k] = v;
  body["config"] = cfg;
  std::ofstream f(path);
  f << body.dump(2) << '\n';
}

// Static SVG: the boundary curve plus colored markers.
void write_svg(const fs::path& path, std::span<const cplx> curve, std::span<const cplx> pts,
               std::span<const std::string> colors) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  auto grow = [&](cplx z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return;
    x0 = std::min(x0, z.real()), x1 = std::max(x1, z.real());
    y0 = std::min(y0, z.imag()), y1 = std::max(y1, z.imag());
  };
  for (const cplx z : curve) grow(z);
  for (const cplx z : pts) grow(z);
  if (x0 > x1) x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  const double pad = 0.05 * std::max({x1 - x0, y1 - y0, 1e-9});
  x0 -= pad, x1 += pad, y0 -= pad, y1 += pad;
  const double size = 600.0, sx = size / (x1 - x0), sy = size / (y1 - y0);
  auto X = [&](cplx z) { return io::fmt(std::round((z.real() - x0) * sx * 100) / 100); };
  auto Y = [&](cplx z) { return io::fmt(std::round((y1 - z.imag()) * sy * 100) / 100); };
  std::ofstream f(path);
  f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  f << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  const double r = pts.size() > 400 ? 2.0 : 4.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    f << "<circle cx=\"" << X(pts[i]) << "\" cy=\"" << Y(pts[i]) << "\" r=\"" << r << "\" fill=\"" << colors[i]
      << "\"/>\n";
  }
  if (!curve.empty()) {
    f << "<polygon fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const cplx z : curve) f << X(z) << ',' << Y(z) << ' ';
    f << "\"/>\n";
  }
  f << "</svg>\n";
}

std::vector<cplx> lambdas(const Config& c) {
  if (!c.lambda.empty() && !c.grid.empty()) throw UsageError("give either --lambda or --grid, not both");
  if (!c.lambda.empty()) return {parse_value(c.lambda)};
  if (!c.grid.empty()) return parse_grid(c.grid).points();
  throw UsageError("--lambda or --grid is required");
}

KernelDimension compute_kernel(const Symbol& sym, const KernelOptions& ko) {
  return std::visit([&](const auto& s) { return kernel_dimension(s, ko); }, sym);
}

int cmd_kernel(const Config& c, std::ostream& out) {
  const Symbol sym = load_symbol(c);
  KernelOptions ko;
  ko.K = c.K;
  ko.membership.ratio_tol = c.tol_ratio;
  const auto kd = compute_kernel(sym, ko);
  out << "dim: " << (kd.dim ? std::to_string(*kd.dim) : "undecided") << '\n';
  for (std::size_t j = 0; j < kd.per_seed.size(); ++j) {
    const auto& v = kd.per_seed[j];
    out << "seed " << j << ": " << to_string(v.status) << " (" << v.method;
    if (v.estimated_ratio_modulus) out << ", ratio=" << io::fmt(*v.estimated_ratio_modulus);
    out << ")\n";
  }
  if (!kd.coupled_ratios.empty()) {
    out << "joint span of divergent seeds: " << kd.coupled_dims << " decaying direction(s), rates";
    for (const double r : kd.coupled_ratios) out << ' ' << io::fmt(r);
    out << '\n';
  }
  std::optional<OdeKernelBasis> ode;
  if (const auto* fam = std::get_if<SpecialFamilySymbol>(&sym); fam && fam->gamma != cplx{}) {
    try {
      ode.emplace(fam->m, fam->alpha / fam->gamma, fam->beta / fam->gamma);
    } catch (const PreconditionError&) {
    }
  }
  out << "ode basis: " << (ode ? "available" : "not applicable") << '\n';
  if (const auto dir = out_dir(c)) {
    auto seeds = open_csv(*dir / "kernel_seeds.csv", c, "seed,status,method,ratio_modulus,tail_exponent,terms_used");
    for (std::size_t j = 0; j < kd.per_seed.size(); ++j) {
      const auto& v = kd.per_seed[j];
      seeds << j << ',' << to_string(v.status) << ',' << v.method << ','
            << (v.estimated_ratio_modulus ? io::fmt(*v.estimated_ratio_modulus) : "") << ','
            << (v.tail_exponent ? io::fmt(*v.tail_exponent) : "") << ',' << v.terms_used << '\n';
    }
    for (std::size_t j = 0; j < kd.streams.size(); ++j) {
      std::ofstream f(*dir / ("kernel_seed_" + std::to_string(j) + ".csv"));
      for (const auto& [k, v] : c.echo()) f << "# " << k << '=' << v << '\n';
      kd.streams[j].write_csv(f);
    }
    if (ode) {
      auto grid = open_csv(*dir / "ode_basis_grid.csv", c, "j,re_z,im_z,abs_g");
      for (int j = 1; j <= ode->m(); ++j) {
        for (int ir = 1; ir <= 10; ++ir) {
          for (int it = 0; it < 32; ++it) {
            const cplx z = std::polar(0.099 * ir, 2.0 * std::numbers::pi * it / 32);
            grid << j << ',' << io::fmt(z.real()) << ',' << io::fmt(z.imag()) << ',' << io::fmt(std::abs(ode->eval(j, z)))
                 << '\n';
          }
        }
      }
    }
    json summary = {{"dim", kd.dim ? json(*kd.dim) : json(nullptr)}, {"member_seeds", kd.member_seeds}};
    json seeds_json = json::array();
    for (const auto& v : kd.per_seed) seeds_json.push_back({{"status", to_string(v.status)}, {"method", v.method}});
    summary["seeds"] = seeds_json;
    summary["ode_basis"] = ode.has_value();
    summary["coupled_ratios"] = kd.coupled_ratios;
    summary["coupled_dims"] = kd.coupled_dims;
    write_json(*dir / "summary.json", c, summary);
  }
  return (c.strict && kd.undecided()) ? 1 : 0;
}

int cmd_classify(const Config& c, std::ostream& out) {
  if (c.family.empty()) throw UsageError("classify requires --family m=..,alpha=..,beta=..,gamma=..");
  const SpecialFamilySymbol fam = parse_family(c.family);
  const RegionTolerances tol{c.tol_band, c.tol_margin};
  std::vector<cplx> betas = c.grid.empty() ? std::vector<cplx>{fam.beta} : parse_grid(c.grid).points();
  const auto verdicts = parallel_map(
      betas.size(), [&](std::size_t i) { return classify_projective(fam.m, fam.alpha, betas[i], fam.gamma, tol); },
      c.threads);
  std::map<std::string, int> counts;
  int disagreements = 0;
  for (const auto& v : verdicts) {
    ++counts[to_string(v.region)];
    if (!v.inequality_checks.agrees) ++disagreements;
  }
  if (betas.size() == 1) {
    const auto& v = verdicts[0];
    out << "region: " << to_string(v.region);
    if (v.index) out << ", index: " << *v.index;
    out << '\n';
  } else {
    for (const auto& [k, n] : counts) out << k << ": " << n << '\n';
  }
  out << "inequality disagreements: " << disagreements << '\n';
  if (const auto dir = out_dir(c)) {
    auto f = open_csv(*dir / "classify.csv", c,
                      "alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,region,index,root_modulus_0,root_modulus_1,"
                      "predicted,decisive,agrees");
    for (std::size_t i = 0; i < betas.size(); ++i) {
      const auto& v = verdicts[i];
      const auto& q = v.inequality_checks;
      f << io::fmt(fam.alpha.real()) << ',' << io::fmt(fam.alpha.imag()) << ',' << io::fmt(betas[i].real()) << ','
        << io::fmt(betas[i].imag()) << ',' << io::fmt(fam.gamma.real()) << ',' << io::fmt(fam.gamma.imag()) << ','
        << to_string(v.region) << ',' << (v.index ? std::to_string(*v.index) : "") << ','
        << io::fmt(v.root_moduli[0]) << ',' << io::fmt(v.root_moduli[1]) << ','
        << (q.predicted ? to_string(*q.predicted) : "") << ',' << q.decisive << ',' << q.agrees << '\n';
    }
    json summary = {{"counts", counts}, {"disagreements", disagreements}};
    write_json(*dir / "summary.json", c, summary);
  }
  return disagreements == 0 ? 0 : 1;
}

struct SpectrumRow {
  std::string verdict;
  std::string detail;
  std::optional<int> winding;
  std::optional<int> index;
};

SpectrumRow spectrum_row(const Symbol& sym, cplx lambda, const Config& c) {
  SpectrumRow row;
  if (const auto* fam = std::get_if<SpecialFamilySymbol>(&sym)) {
    const auto region = special_family_region(*fam, lambda, c.tol_band);
    row.verdict = region == EllipseRegion::exterior ? "out" : "in";
    row.detail = to_string(region);
    try {
      row.winding = winding_number(fam->terms(), lambda).winding;
      row.index = -*row.winding;
    } catch (const NotFredholmError&) {
    }
    return row;
  }
  SpectrumTolerances tol;
  tol.curve_tol = c.tol_curve;
  const auto v = spectrum_membership(std::get<HarmonicPolySymbol>(sym), lambda, tol);
  row.verdict = v.in_spectrum() ? "in" : (v.status == SpectrumStatus::out_certified ? "out" : "undetermined");
  row.detail = to_string(v.status);
  row.winding = v.winding;
  row.index = v.index;
  return row;
}

const char* verdict_color(const std::string& v) {
  if (v == "in") return "#d62728";
  if (v == "out") return "#1f77b4";
  return "#7f7f7f";
}

int cmd_spectrum(const Config& c, std::ostream& out) {
  const Symbol sym = load_symbol(c);
  const auto pts = lambdas(c);
  const auto rows = parallel_map(pts.size(), [&](std::size_t i) { return spectrum_row(sym, pts[i], c); }, c.threads);
  if (pts.size() == 1) {
    out << rows[0].verdict << " (" << rows[0].detail << ")\n";
  } else {
    std::map<std::string, int> counts;
    for (const auto& r : rows) ++counts[r.verdict];
    for (const auto& [k, n] : counts) out << k << ": " << n << '\n';
  }
  if (const auto dir = out_dir(c)) {
    auto f = open_csv(*dir / "spectrum.csv", c, "re,im,verdict,detail,winding,index");
    std::vector<std::string> colors;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto& r = rows[i];
      f << io::fmt(pts[i].real()) << ',' << io::fmt(pts[i].imag()) << ',' << r.verdict << ',' << r.detail << ','
        << (r.winding ? std::to_string(*r.winding) : "") << ',' << (r.index ? std::to_string(*r.index) : "") << '\n';
      colors.emplace_back(verdict_color(r.verdict));
    }
    write_svg(*dir / "spectrum.svg", boundary_curve(sym, 1024), pts, colors);
  }
  return 0;
}

int cmd_probe(const Config& c, std::ostream& out) {
  const Symbol sym = load_symbol(c);
  const auto pts = lambdas(c);
  const HarmonicTerms t = terms_of(sym);
  const auto T = truncation(t, c.N);
  struct Row {
    double square = 0.0, rect = 0.0;
  };
  const auto rows = parallel_map(
      pts.size(), [&](std::size_t i) { return Row{min_singular_value(T, pts[i]), injectivity_modulus(t, c.N, pts[i])}; },
      c.threads);
  if (pts.size() == 1) {
    out << "sigma_min: " << io::fmt(rows[0].square) << '\n';
    out << "sigma_min_rect: " << io::fmt(rows[0].rect) << '\n';
  } else {
    double lo = 1e300;
    for (const auto& r : rows) lo = std::min(lo, r.square);
    out << "points: " << rows.size() << ", smallest sigma_min: " << io::fmt(lo) << '\n';
  }
  if (const auto dir = out_dir(c)) {
    auto f = open_csv(*dir / "probe.csv", c, "re,im,sigma_min,sigma_min_rect");
    std::vector<std::string> colors;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      f << io::fmt(pts[i].real()) << ',' << io::fmt(pts[i].imag()) << ',' << io::fmt(rows[i].square) << ','
        << io::fmt(rows[i].rect) << '\n';
      // Heat scale on log10 sigma_min over [-8, 0].
      const double s = std::clamp((std::log10(std::max(rows[i].square, 1e-300)) + 8.0) / 8.0, 0.0, 1.0);
      char buf[8];
      std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<int>(255 * (1 - s)), 64, static_cast<int>(255 * s));
      colors.emplace_back(buf);
    }
    write_svg(*dir / "probe.svg", boundary_curve(sym, 1024), pts, colors);
  }
  return 0;
}

int cmd_index(const Config& c, std::ostream& out, std::ostream& err) {
  const Symbol sym = load_symbol(c);
  const cplx lambda = c.lambda.empty() ? cplx{} : parse_value(c.lambda);
  try {
    const int index = fredholm_index(sym, lambda, c.tol_curve);
    out << index << '\n';
    if (const auto dir = out_dir(c)) write_json(*dir / "summary.json", c, {{"index", index}});
    return 0;
  } catch (const NotFredholmError& e) {
    out << "not Fredholm\n";
    err << e.what() << '\n';
    return 1;
  }
}

int cmd_validate(const Config& c, std::ostream& out, std::ostream& err) {
  std::vector<CheckResult> results;
  try {
    results = run_checks(split(c.suite, ','), c.seed, c.scale);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  int failed = 0;
  out << "check                          cases  skipped  failures  status\n";
  for (const auto& r : results) {
    char line[160];
    std::snprintf(line, sizeof line, "%-30s %5d  %7d  %8d  %s\n", r.name.c_str(), r.cases, r.skipped, r.failures,
                  r.passed() ? "PASS" : "FAIL");
    out << line;
    if (!r.passed()) {
      ++failed;
      err << r.name << " first failure: " << r.first_failure.dump() << '\n';
    }
  }
  if (const auto dir = out_dir(c)) {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"cases", r.cases}, {"skipped", r.skipped}, {"failures", r.failures},
                     {"first_failure", r.first_failure}});
    }
    write_json(*dir / "validate.json", c, {{"checks", arr}});
  }
  return failed == 0 ? 0 : 1;
}

void add_symbol_options(CLI::App* sub, Config& c) {
  sub->add_option("--family", c.family, "m=..,alpha=..,beta=..[,gamma=..]");
  sub->add_option("--symbol", c.symbol_file, "JSON symbol file");
}

void add_common(CLI::App* sub, Config& c) {
  sub->add_option("--out", c.out_dir, "output directory");
  sub->add_option("--seed", c.seed, "random seed");
  sub->add_flag("--strict", c.strict, "treat undecided results as failures");
  sub->add_option("--threads", c.threads, "worker threads (0 = hardware)");
  sub->add_option("--tol-curve", c.tol_curve, "distance below which lambda counts as on phi(T)");
  sub->add_option("--tol-band", c.tol_band, "band around the unit circle for root counts");
  sub->add_option("--tol-ratio", c.tol_ratio, "ratio-test stabilisation tolerance");
  sub->add_option("--tol-margin", c.tol_margin, "margin for inequality predicates");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Toeplitz operators with harmonic polynomial symbols on the Bergman space"};
  app.set_config("--config", "", "TOML configuration file; command-line flags take precedence");
  app.require_subcommand(1);

  auto* kernel = app.add_subcommand("kernel", "kernel dimension and basis streams");
  add_symbol_options(kernel, c);
  kernel->add_option("--K", c.K, "coefficient budget");
  add_common(kernel, c);

  auto* classify = app.add_subcommand("classify", "projective-spectrum region of (alpha, beta, gamma)");
  classify->add_option("--family", c.family, "m=..,alpha=..,beta=..,gamma=..");
  classify->add_option("--grid", c.grid, "beta grid re0,re1,im0,im1,res");
  add_common(classify, c);

  auto* spectrum = app.add_subcommand("spectrum", "spectrum membership of lambda");
  add_symbol_options(spectrum, c);
  spectrum->add_option("--lambda", c.lambda, "complex point");
  spectrum->add_option("--grid", c.grid, "lambda grid re0,re1,im0,im1,res");
  add_common(spectrum, c);

  auto* probe = app.add_subcommand("probe", "finite-section smallest singular values");
  add_symbol_options(probe, c);
  probe->add_option("--lambda", c.lambda, "complex point");
  probe->add_option("--grid", c.grid, "lambda grid re0,re1,im0,im1,res");
  probe->add_option("--N", c.N, "truncation size");
  add_common(probe, c);

  auto* index = app.add_subcommand("index", "Fredholm index of T_phi - lambda");
  add_symbol_options(index, c);
  index->add_option("--lambda", c.lambda, "complex point (default 0)");
  add_common(index, c);

  auto* validate = app.add_subcommand("validate", "randomized cross-module checks");
  validate->add_option("--suite", c.suite, "comma-separated checks or 'all'");
  validate->add_option("--scale", c.scale, "multiplier for the number of cases");
  add_common(validate, c);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  c.command = app.get_subcommands().front()->get_name();

  try {
    check_config(c);
    if (c.command == "kernel") return cmd_kernel(c, out);
    if (c.command == "classify") return cmd_classify(c, out);
    if (c.command == "spectrum") return cmd_spectrum(c, out);
    if (c.command == "probe") return cmd_probe(c, out);
    if (c.command == "index") return cmd_index(c, out, err);
    return cmd_validate(c, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace bergman::cli
