#include "cli.hpp"

#include "sixj/asymptotics.hpp"
#include "sixj/classical.hpp"
#include "sixj/error.hpp"
#include "sixj/geometry.hpp"
#include "sixj/quantum.hpp"
#include "sixj/triangulation.hpp"
#include "sixj/turaev_viro.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace sixj::cli {
namespace {

using nlohmann::json;

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  internal error\n"
    "  2  usage error (malformed arguments)\n"
    "  3  domain error (regime, realizability, label range, integrality)\n"
    "  4  I/O error\n"
    "  5  triangulation parse error\n"
    "  6  triangulation validation error (not a closed complex)\n"
    "  7  degenerate (flat) tetrahedron";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Record {
  std::string command;
  json parameters = json::object();
  json result;
  long precision_bits = 53;
  std::ostringstream human;
  int code = kOk;
  std::string error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo: return kIo;
    case ErrorKind::kParse: return kParse;
    case ErrorKind::kNonClosed:
    case ErrorKind::kEulerCharacteristic:
    case ErrorKind::kInvalidTriangulation: return kValidation;
    default: return kDomain;
  }
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(const Real& x) { return x.to_string(decimal_digits_for(x.precision_bits())); }

long parse_long(std::string_view s, const char* what) {
  long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError(std::string("malformed ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

double parse_double(const std::string& s, const char* what) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw UsageError(std::string("malformed ") + what + " '" + s + "'");
  return v;
}

Fraction parse_fraction(const std::string& s) {
  const auto slash = s.find('/');
  const long num = parse_long(std::string_view(s).substr(0, slash), "fraction");
  const long den = slash == std::string::npos ? 1 : parse_long(std::string_view(s).substr(slash + 1), "fraction");
  if (den == 0) throw UsageError("fraction '" + s + "' has zero denominator");
  return Fraction(num, den);
}

// "a", "a:b" or "a:b:step".
std::vector<long> parse_colon_list(const std::string& s, const char* what) {
  std::vector<long> parts;
  std::size_t start = 0;
  for (;;) {
    const auto colon = s.find(':', start);
    parts.push_back(parse_long(std::string_view(s).substr(start, colon - start), what));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (parts.size() > 3) throw UsageError(std::string("malformed ") + what + " '" + s + "'");
  return parts;
}

KRange parse_k_range(const std::string& s) {
  const auto p = parse_colon_list(s, "k range");
  KRange k{p[0], p.size() > 1 ? p[1] : p[0], p.size() > 2 ? p[2] : 1};
  if (k.step <= 0 || k.first < 1 || k.last < k.first) throw UsageError("k range must be first:last[:step] with 1 <= first <= last");
  return k;
}

std::vector<int> parse_r_list(const std::string& s) {
  const auto p = parse_colon_list(s, "r range");
  if (p.size() > 2) throw UsageError("r must be R or R1:R2");
  const long lo = p[0], hi = p.size() > 1 ? p[1] : p[0];
  if (lo < 3 || hi < lo || hi > 64) throw UsageError("r range must satisfy 3 <= R1 <= R2 <= 64");
  std::vector<int> out;
  for (long r = lo; r <= hi; ++r) out.push_back(int(r));
  return out;
}

LabelSextet to_sextet(const std::vector<int>& v) {
  return LabelSextet(std::array<int, 6>{v[0], v[1], v[2], v[3], v[4], v[5]});
}

LabelSextet parse_labels(const std::vector<std::string>& v) {
  std::array<int, 6> labels{};
  for (std::size_t i = 0; i < 6; ++i) {
    const long x = parse_long(v[i], "label");
    if (x < 0 || x > 1'000'000) throw UsageError("label '" + v[i] + "' must be a nonnegative integer");
    labels[i] = int(x);
  }
  return LabelSextet(labels);
}

json rows_json(const std::vector<AsymptoticsRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back({{"k", r.k}, {"exact", r.exact}, {"estimate", r.estimate}, {"ratio", r.ratio}});
  return out;
}

void print_rows(std::ostream& os, const std::vector<AsymptoticsRow>& rows) {
  os << "k exact estimate ratio\n";
  for (const auto& r : rows) os << r.k << ' ' << fmt(r.exact) << ' ' << fmt(r.estimate) << ' ' << fmt(r.ratio) << '\n';
}

void write_csv_atomically(const std::filesystem::path& path, const std::vector<AsymptoticsRow>& rows) {
  std::ostringstream body;
  body << "k,exact,estimate,ratio\n";
  for (const auto& r : rows) body << r.k << ',' << fmt(r.exact) << ',' << fmt(r.estimate) << ',' << fmt(r.ratio) << '\n';

  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::kIo, "cannot write " + tmp.string());
    f << body.str();
    f.flush();
    if (!f) throw Error(ErrorKind::kIo, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::kIo, "cannot move CSV into place at " + path.string());
  }
}

json report_json(const AsymptoticsReport& r) {
  return {{"regime", std::string(to_string(r.regime))},
          {"rows", rows_json(r.rows)},
          {"excluded_k", r.excluded_k},
          {"envelope_rms_error", r.envelope_rms_error},
          {"phase_correlation", r.phase_correlation ? json(*r.phase_correlation) : json(nullptr)}};
}

std::string summary_line(const AsymptoticsReport& r) {
  std::ostringstream os;
  os << "envelope_rms_error " << fmt(r.envelope_rms_error) << " phase_correlation "
     << (r.phase_correlation ? fmt(*r.phase_correlation) : std::string("n/a")) << " rows " << r.rows.size()
     << " excluded " << r.excluded_k.size();
  return os.str();
}

std::string join(const Edges& e) {
  std::string s;
  for (std::size_t i = 0; i < 6; ++i) s += (i ? " " : "") + fmt(e[i]);
  return s;
}

// Commands.

struct SixjArgs {
  std::vector<int> labels;
  bool exact = false;
  bool as_float = false;
  long precision = kDefaultPrecisionBits;
};

void cmd_sixj(const SixjArgs& a, Record& rec) {
  const LabelSextet s = to_sextet(a.labels);
  const ExactSixJ v = sixj(s);
  rec.parameters = {{"labels", a.labels}, {"mode", a.as_float ? "float" : "exact"}};
  rec.precision_bits = a.as_float ? a.precision : 0;
  std::string decimal = v.is_zero() ? "0" : fmt(v.to_real(a.precision));
  rec.result = {{"exact", v.to_string()}, {"decimal", decimal}};
  rec.human << (a.as_float ? decimal : v.to_string()) << '\n';
}

struct QsixjArgs {
  std::vector<int> labels;
  int r = 0;
  long precision = kDefaultPrecisionBits;
};

void cmd_qsixj(const QsixjArgs& a, Record& rec) {
  const RootOfUnityLevel level(a.r);
  const Real v = qsixj(to_sextet(a.labels), level, a.precision);
  rec.parameters = {{"labels", a.labels}, {"r", a.r}};
  rec.precision_bits = a.precision;
  const std::string text = v.is_zero() ? "0" : fmt(v);
  rec.result = {{"value", text}};
  rec.human << text << '\n';
}

struct GeomArgs {
  std::vector<std::string> values;
  bool spherical = false;
};

void cmd_geom(const GeomArgs& a, Record& rec) {
  rec.parameters = {{"values", a.values}, {"spherical", a.spherical}};
  if (a.spherical) {
    Edges l{};
    for (std::size_t i = 0; i < 6; ++i) {
      const double frac = a.values[i].find('/') != std::string::npos
                              ? boost::rational_cast<double>(parse_fraction(a.values[i]))
                              : parse_double(a.values[i], "fraction");
      l[i] = std::numbers::pi * frac;
    }
    const SphericalTet t = spherical_gram(l);
    rec.human << "gram_det " << fmt(t.gram_det) << "\nrealizable " << (t.realizable ? "true" : "false") << '\n';
    rec.result = {{"gram_det", t.gram_det}, {"realizable", t.realizable}};
    const Edges theta = spherical_dihedrals(t);
    const double v = spherical_volume(t);
    rec.human << "dihedrals " << join(theta) << "\nvolume " << fmt(v) << '\n';
    rec.result["dihedrals"] = theta;
    rec.result["volume"] = v;
    return;
  }
  Edges e{};
  for (std::size_t i = 0; i < 6; ++i) e[i] = parse_double(a.values[i], "edge length");
  const TetGeometry g = analyze(e);
  rec.human << "kind " << to_string(g.kind) << "\ncayley_det " << fmt(g.cayley_det) << '\n';
  rec.result = {{"kind", std::string(to_string(g.kind))}, {"cayley_det", g.cayley_det}};
  if (g.kind == TetKind::kEuclidean) {
    rec.human << "volume " << fmt(g.volume) << "\nexterior_dihedrals " << join(g.exterior_dihedrals)
              << "\ninterior_dihedrals " << join(g.interior_dihedrals()) << '\n';
    rec.result["volume"] = g.volume;
    rec.result["exterior_dihedrals"] = g.exterior_dihedrals;
    rec.result["interior_dihedrals"] = g.interior_dihedrals();
  } else if (g.kind == TetKind::kDegenerate) {
    rec.code = kDegenerate;
  }
}

struct AsymArgs {
  std::string mode;
  std::vector<std::string> values;
  std::string k;
  std::string csv;
  int window = 21;
  unsigned threads = 0;
};

void cmd_asym(const AsymArgs& a, Record& rec) {
  rec.parameters = {{"mode", a.mode}, {"values", a.values}, {"k", a.k}, {"window", a.window}};
  rec.precision_bits = 53;
  const SweepOptions options{a.window, a.threads};
  const auto need_k = [&] {
    if (a.k.empty()) throw UsageError("mode '" + a.mode + "' needs --k");
    return parse_k_range(a.k);
  };
  std::vector<AsymptoticsRow> rows;

  if (a.mode == "wigner") {
    const double v = wigner_rms(parse_labels(a.values));
    rec.result = {{"wigner_rms", v}};
    rec.human << fmt(v) << '\n';
  } else if (a.mode == "pr") {
    const AsymptoticsReport r = verify_euclidean(parse_labels(a.values), need_k(), options);
    rec.result = report_json(r);
    print_rows(rec.human, r.rows);
    rec.human << summary_line(r) << '\n';
    rows = r.rows;
  } else if (a.mode == "mink") {
    const MinkowskianFit fit = verify_minkowskian(parse_labels(a.values), need_k(), options);
    rec.result = report_json(fit.report);
    rec.result["slope"] = fit.slope;
    rec.result["intercept"] = fit.intercept;
    rec.result["r_squared"] = fit.r_squared;
    print_rows(rec.human, fit.report.rows);
    rec.human << "slope " << fmt(fit.slope) << " r_squared " << fmt(fit.r_squared) << " excluded "
              << fit.report.excluded_k.size() << '\n';
    rows = fit.report.rows;
  } else if (a.mode == "woodward") {
    Fractions f{};
    for (std::size_t i = 0; i < 6; ++i) f[i] = parse_fraction(a.values[i]);
    const AsymptoticsReport r = verify_woodward(f, need_k().values(), options);
    const WoodwardIngredients w = woodward_ingredients(f);
    rec.result = report_json(r);
    rec.result["gram_det"] = w.tet.gram_det;
    rec.result["volume"] = w.volume;
    rec.result["exterior_dihedrals"] = w.exterior_dihedrals;
    rec.precision_bits = kDefaultPrecisionBits;
    rec.human << "gram_det " << fmt(w.tet.gram_det) << " volume " << fmt(w.volume) << '\n';
    print_rows(rec.human, r.rows);
    rec.human << summary_line(r) << '\n';
    rows = r.rows;
  } else {
    throw UsageError("unknown mode '" + a.mode + "' (expected pr, wigner, woodward or mink)");
  }
  if (!a.csv.empty()) {
    if (a.mode == "wigner") throw UsageError("--csv needs a sweep mode");
    write_csv_atomically(a.csv, rows);
  }
}

struct TvArgs {
  std::string file;
  std::string r;
  unsigned threads = 0;
  long precision = kDefaultPrecisionBits;
  bool exhaustive = false;
};

void cmd_tv(const TvArgs& a, Record& rec) {
  const auto rs = parse_r_list(a.r);
  const Triangulation t = load_triangulation_file(a.file);
  rec.parameters = {{"file", a.file}, {"r", rs}, {"exhaustive", a.exhaustive}};
  rec.precision_bits = a.precision;
  const auto rows = tv_sweep(t, rs, TvOptions{a.threads, a.precision, !a.exhaustive});
  rec.result = json::array();
  rec.human << "r value\n";
  for (const auto& row : rows) {
    rec.human << row.r << ' ' << fmt(row.result.value) << '\n';
    rec.result.push_back({{"r", row.r},
                          {"value", fmt(row.result.value)},
                          {"shadow", row.result.shadow},
                          {"nonzero_states", row.result.nonzero_states}});
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and quantum 6j-symbols, tetrahedron geometry, asymptotic estimates and\n"
               "Turaev-Viro invariants.",
               "sixj"};
  app.footer(kExitCodes);
  app.require_subcommand(1, 1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print one JSON record instead of text");

  SixjArgs sa;
  auto* sixj_cmd = app.add_subcommand("sixj", "Classical 6j-symbol; labels a b c d e f are twice the spins");
  sixj_cmd->add_option("labels", sa.labels, "a b c d e f")->expected(6)->required()->check(CLI::NonNegativeNumber);
  auto* exact_flag = sixj_cmd->add_flag("--exact", sa.exact, "Print sign*sqrt(p/q) (default)");
  sixj_cmd->add_flag("--float", sa.as_float, "Print a decimal rendering")->excludes(exact_flag);
  sixj_cmd->add_option("--precision", sa.precision, "Bits for --float")->check(CLI::Range(2L, 1L << 20));

  QsixjArgs qa;
  auto* qsixj_cmd = app.add_subcommand("qsixj", "Quantum 6j-symbol at q = exp(2 pi i / r)");
  qsixj_cmd->add_option("labels", qa.labels, "a b c d e f")->expected(6)->required()->check(CLI::NonNegativeNumber);
  qsixj_cmd->add_option("--r", qa.r, "Root of unity order, r >= 3")->required()->check(CLI::Range(3, 1 << 20));
  qsixj_cmd->add_option("--precision", qa.precision, "Bits")->check(CLI::Range(2L, 1L << 20));

  GeomArgs ga;
  auto* geom_cmd = app.add_subcommand("geom", "Tetrahedron geometry from six edge lengths");
  geom_cmd->add_option("values", ga.values, "Edge lengths in a b c d e f order")->expected(6)->required();
  geom_cmd->add_flag("--spherical", ga.spherical, "Read values as fractions of pi on the unit 3-sphere");

  AsymArgs aa;
  auto* asym_cmd = app.add_subcommand("asym", "Asymptotic estimates against exact values");
  asym_cmd->add_option("mode", aa.mode, "pr | wigner | woodward | mink")->required();
  asym_cmd->add_option("values", aa.values, "Six labels, or six fractions p/q for woodward")->expected(6)->required();
  asym_cmd->add_option("--k", aa.k, "Scale range first:last[:step]");
  asym_cmd->add_option("--csv", aa.csv, "Write rows k,exact,estimate,ratio to this file");
  asym_cmd->add_option("--window", aa.window, "RMS window width")->check(CLI::PositiveNumber);
  asym_cmd->add_option("--threads", aa.threads, "Worker threads, 0 for all cores");

  TvArgs ta;
  auto* tv_cmd = app.add_subcommand("tv", "Turaev-Viro invariant of a triangulation file");
  tv_cmd->add_option("file", ta.file, "Triangulation ('tets N' then N lines of four vertex ids)")->required();
  tv_cmd->add_option("--r", ta.r, "Root of unity order R or range R1:R2")->required();
  tv_cmd->add_option("--threads", ta.threads, "Worker threads, 0 for all cores");
  tv_cmd->add_option("--precision", ta.precision, "Bits")->check(CLI::Range(2L, 1L << 20));
  tv_cmd->add_flag("--exhaustive", ta.exhaustive, "Enumerate every state instead of pruning");

  for (auto* sub : {sixj_cmd, qsixj_cmd, geom_cmd, asym_cmd, tv_cmd}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Record rec;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (sixj_cmd->parsed()) {
      rec.command = "sixj";
      cmd_sixj(sa, rec);
    } else if (qsixj_cmd->parsed()) {
      rec.command = "qsixj";
      cmd_qsixj(qa, rec);
    } else if (geom_cmd->parsed()) {
      rec.command = "geom";
      cmd_geom(ga, rec);
    } else if (asym_cmd->parsed()) {
      rec.command = "asym";
      cmd_asym(aa, rec);
    } else {
      rec.command = "tv";
      cmd_tv(ta, rec);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    rec.code = exit_code_for(e.kind());
    rec.error = std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (as_json) {
    json record = {{"command", rec.command},
                         {"parameters", rec.parameters},
                         {"result", rec.result},
                         {"precision_bits", rec.precision_bits > 0 ? json(rec.precision_bits) : json(nullptr)},
                         {"wall_time_s", seconds},
                         {"exit_code", rec.code}};
    if (!rec.error.empty()) record["error"] = rec.error;
    out << record.dump(2) << '\n';
  } else {
    out << rec.human.str();
  }
  if (!rec.error.empty()) {
    err << "error: " << rec.error << '\n';
  } else if (rec.code == kDegenerate) {
    err << "error: tetrahedron is degenerate (flat)\n";
  }
  return rec.code;
}

}  // namespace sixj::cli
