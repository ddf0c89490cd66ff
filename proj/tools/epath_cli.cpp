// Command-line front end: spectra, convergence tables, deformation series,
// consistency checks, and figure-data scans in text, CSV, and JSON.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <epath/epath.hpp>

namespace {

using nlohmann::json;
using namespace epath;

constexpr double kImagTolerance = 1e-8;
constexpr double kPairingTolerance = 1e-8;
constexpr long kMaxBasisSize = 24;

ModelKind parse_model(const std::string& token) {
  if (token == "m1") return ModelKind::PathNonHermitian;
  if (token == "m2") return ModelKind::PathHermitian;
  throw std::invalid_argument("unknown model token: " + token);
}

json meta_block(const std::string& model, double xi, long size) {
  return json{{"model", model},
              {"xi", xi},
              {"N", size},
              {"tolerances", json{{"imag", kImagTolerance}, {"pairing", kPairingTolerance}}},
              {"version", library_version}};
}

void emit_json(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

std::string class_header(const SymmetryClass& c) {
  const GroupLabels g = group_labels(c);
  std::ostringstream s;
  s << class_signs(c) << " " << g.d2 << " " << g.c2v;
  return s.str();
}

// ---------------------------------------------------------------- spectrum

struct SpectrumArgs {
  std::string model = "m1";
  double xi = 1.0;
  std::string cls = "all";
  long size = 12;
  long levels = 4;
  std::string format = "text";
};

int run_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const ModelKind model = parse_model(a.model);
  if (a.levels < 1 || a.levels > a.size) {
    std::cerr << "error: --levels must lie in [1, --size]\n";
    return 1;
  }

  std::vector<SymmetryClass> wanted;
  if (a.cls == "all") {
    // Column order of the four-class table: (+,+), (-,+), (+,-), (-,-).
    wanted = {class_pp, class_mp, class_pm, class_mm};
  } else {
    wanted = {class_from_token(a.cls)};
  }

  std::vector<Spectrum<double>> spectra;
  for (const SymmetryClass& c : wanted)
    spectra.push_back(solve<double>(model, c, a.xi, a.size, a.levels));

  if (a.format == "json") {
    json data = json::array();
    for (const Spectrum<double>& sp : spectra) {
      const GroupLabels g = group_labels(sp.symmetry);
      for (long k = 0; k < a.levels; ++k)
        data.push_back(json{{"class", class_token(sp.symmetry)},
                            {"d2", g.d2},
                            {"c2v", g.c2v},
                            {"level", k},
                            {"n", class_fourier_index(sp.symmetry, k)},
                            {"energy", sp.eigenvalues[static_cast<std::size_t>(k)]},
                            {"imag_residual", sp.imag_residuals[static_cast<std::size_t>(k)]}});
    }
    emit_json(out, json{{"meta", meta_block(a.model, a.xi, a.size)}, {"data", data}});
    return 0;
  }

  if (a.format == "csv") {
    out << "class,level,n,energy,imag_residual\n";
    for (const Spectrum<double>& sp : spectra)
      for (long k = 0; k < a.levels; ++k)
        out << class_token(sp.symmetry) << "," << k << ","
            << class_fourier_index(sp.symmetry, k) << ","
            << round_trip_number(sp.eigenvalues[static_cast<std::size_t>(k)]) << ","
            << round_trip_number(sp.imag_residuals[static_cast<std::size_t>(k)]) << "\n";
    return 0;
  }

  out << "model " << a.model << "  xi " << round_trip_number(a.xi) << "  size " << a.size
      << "\n";
  if (spectra.size() == 1) {
    const Spectrum<double>& sp = spectra.front();
    out << "class " << class_header(sp.symmetry) << "\n";
    out << std::left << std::setw(7) << "level" << std::setw(5) << "n"
        << "energy\n";
    for (long k = 0; k < a.levels; ++k)
      out << std::left << std::setw(7) << k << std::setw(5)
          << class_fourier_index(sp.symmetry, k)
          << table_number(sp.eigenvalues[static_cast<std::size_t>(k)]) << "\n";
    return 0;
  }
  out << std::left << std::setw(7) << "level";
  for (const Spectrum<double>& sp : spectra)
    out << std::setw(16) << class_header(sp.symmetry);
  out << "\n";
  for (long k = 0; k < a.levels; ++k) {
    out << std::left << std::setw(7) << k;
    for (const Spectrum<double>& sp : spectra)
      out << std::setw(16) << table_number(sp.eigenvalues[static_cast<std::size_t>(k)]);
    out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- converge

struct ConvergeArgs {
  std::string model = "m1";
  double xi = 1.0;
  std::string cls = "pp";
  long n_min = 5;
  long n_max = 10;
  long levels = 4;
  std::string format = "text";
};

int run_converge(const ConvergeArgs& a, std::ostream& out) {
  const ModelKind model = parse_model(a.model);
  const SymmetryClass c = class_from_token(a.cls);
  const ConvergenceTable<double> table =
      convergence_scan<double>(model, c, a.xi, a.n_min, a.n_max, a.levels);

  if (a.format == "json") {
    json data = json::array();
    for (std::size_t r = 0; r < table.sizes.size(); ++r) {
      json energies = json::array();
      for (double e : table.energies[r]) energies.push_back(e);
      data.push_back(json{{"size", table.sizes[r]}, {"energies", energies}});
    }
    emit_json(out, json{{"meta", meta_block(a.model, a.xi, a.n_max)}, {"data", data}});
    return 0;
  }

  if (a.format == "csv") {
    out << "size,level,energy\n";
    for (std::size_t r = 0; r < table.sizes.size(); ++r)
      for (std::size_t k = 0; k < table.energies[r].size(); ++k)
        out << table.sizes[r] << "," << k << "," << round_trip_number(table.energies[r][k])
            << "\n";
    return 0;
  }

  out << "model " << a.model << "  xi " << round_trip_number(a.xi) << "  class "
      << class_signs(c) << "\n";
  out << std::left << std::setw(6) << "size";
  for (long k = 0; k < a.levels; ++k) out << std::setw(16) << ("E" + std::to_string(k));
  out << "\n";
  for (std::size_t r = 0; r < table.sizes.size(); ++r) {
    out << std::left << std::setw(6) << table.sizes[r];
    for (double e : table.energies[r]) out << std::setw(16) << table_number(e);
    out << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- pt

struct PtArgs {
  std::string model = "m1";
  long level = 1;
  std::string cls;  // empty: resolve by level
  long order = 4;
  std::string format = "text";
};

int run_pt(const PtArgs& a, std::ostream& out) {
  const ModelKind model = parse_model(a.model);
  if (a.level < 0) {
    std::cerr << "error: --level must be non-negative\n";
    return 1;
  }
  SymmetryClass c = class_pp;
  if (!a.cls.empty()) {
    c = class_from_token(a.cls);
    if (!class_contains_level(c, a.level)) {
      std::cerr << "error: level " << a.level << " does not occur in class "
                << class_signs(c) << "\n";
      return 1;
    }
  } else if (a.level == 0) {
    c = class_pp;
  } else if (model == ModelKind::PathHermitian) {
    std::cerr << "error: the level is shared by two classes; pass --class\n";
    return 1;
  } else {
    c = classes_sharing(a.level).first;
  }

  const RationalSeries series = eigenvalue_series(model, c, a.level, a.order);

  if (a.format == "json") {
    json coeffs = json::array();
    for (const Rational& r : series.coefficients) coeffs.push_back(fraction_string(r));
    emit_json(out, json{{"meta", meta_block(a.model, 0.0, a.order)},
                        {"data", json{{"level", a.level},
                                      {"class", class_token(c)},
                                      {"coefficients", coeffs}}}});
    return 0;
  }

  if (a.format == "csv") {
    out << "order,coefficient,value\n";
    for (std::size_t j = 0; j < series.coefficients.size(); ++j)
      out << j << "," << fraction_string(series.coefficients[j]) << ","
          << round_trip_number(rational_cast<double>(series.coefficients[j])) << "\n";
    return 0;
  }

  out << "model " << a.model << "  level " << a.level << "  class " << class_signs(c)
      << "  order " << a.order << "\n";
  out << std::left << std::setw(7) << "j" << std::setw(20) << "coefficient"
      << "value\n";
  for (std::size_t j = 0; j < series.coefficients.size(); ++j)
    out << std::left << std::setw(7) << j << std::setw(20)
        << fraction_string(series.coefficients[j])
        << round_trip_number(rational_cast<double>(series.coefficients[j])) << "\n";
  return 0;
}

// ---------------------------------------------------------------- scan

struct ScanArgs {
  std::string model = "m1";
  double xi_min = -0.5;
  double xi_max = 0.5;
  long steps = 21;
  long size = 12;
  long levels = 4;
  std::string out_path;
  std::string format = "csv";
};

void write_scan_csv(const std::vector<ScanRow>& rows, std::ostream& out) {
  out << "xi,level_index,class,d2_label,energy,pt_first_order,pt_improved,pt_series4\n";
  for (const ScanRow& row : rows) {
    out << round_trip_number(row.xi) << "," << row.level_index << ","
        << class_token(row.symmetry) << "," << group_labels(row.symmetry).d2 << ","
        << round_trip_number(row.energy) << "," << round_trip_number(row.pt_first_order)
        << "," << round_trip_number(row.pt_improved) << ",";
    if (row.pt_series4) out << round_trip_number(*row.pt_series4);
    out << "\n";
  }
}

int run_scan(const ScanArgs& a, std::ostream& out) {
  const ModelKind model = parse_model(a.model);
  const std::vector<ScanRow> rows =
      scan(model, ScanGrid{a.xi_min, a.xi_max, a.steps}, a.size, a.levels);

  std::ostringstream payload;
  if (a.format == "json") {
    json data = json::array();
    for (const ScanRow& row : rows) {
      json entry{{"xi", row.xi},
                 {"level_index", row.level_index},
                 {"class", class_token(row.symmetry)},
                 {"d2_label", group_labels(row.symmetry).d2},
                 {"energy", row.energy},
                 {"pt_first_order", row.pt_first_order},
                 {"pt_improved", row.pt_improved}};
      entry["pt_series4"] = row.pt_series4 ? json(*row.pt_series4) : json();
      data.push_back(entry);
    }
    emit_json(payload, json{{"meta", meta_block(a.model, a.xi_min, a.size)}, {"data", data}});
  } else {
    write_scan_csv(rows, payload);
  }

  if (a.out_path.empty()) {
    out << payload.str();
    return 0;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << a.out_path << " for writing\n";
    return 1;
  }
  file << payload.str();
  if (!file.flush()) {
    std::cerr << "error: short write to " << a.out_path << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string suite = "all";
  double xi = 1.0;
  long size = 16;
  std::string format = "text";
};

struct CheckLine {
  std::string suite;
  std::string name;
  double measured;
  double tolerance;
  bool pass;
};

void check_degeneracy(double xi, long size, std::vector<CheckLine>& lines) {
  const Spectrum<double> pm = solve<double>(ModelKind::PathNonHermitian, class_pm, xi, size);
  const Spectrum<double> mm = solve<double>(ModelKind::PathNonHermitian, class_mm, xi, size);
  const Spectrum<double> pp = solve<double>(ModelKind::PathNonHermitian, class_pp, xi, size);
  const Spectrum<double> mp = solve<double>(ModelKind::PathNonHermitian, class_mp, xi, size);
  for (long k = 0; k < 4; ++k) {
    const double a = pm.eigenvalues[static_cast<std::size_t>(k)];
    const double b = mm.eigenvalues[static_cast<std::size_t>(k)];
    const double gap = std::abs(a - b) / std::max(1.0, std::abs(a));
    lines.push_back({"degeneracy", "odd pair level " + std::to_string(2 * k + 1), gap, 1e-10,
                     gap < 1e-10});
  }
  for (long k = 0; k < 3; ++k) {
    const double a = pp.eigenvalues[static_cast<std::size_t>(k + 1)];
    const double b = mp.eigenvalues[static_cast<std::size_t>(k)];
    const double gap = std::abs(a - b) / std::max(1.0, std::abs(a));
    lines.push_back({"degeneracy", "even pair level " + std::to_string(2 * k + 2), gap, 1e-10,
                     gap < 1e-10});
  }
}

void check_conjecture(double xi, long size, std::vector<CheckLine>& lines) {
  const ConjectureReport report = conjecture_check(xi, size, 6);
  for (std::size_t i = 0; i < report.levels.size(); ++i)
    lines.push_back({"conjecture", "n = " + std::to_string(report.levels[i]),
                     report.deviation[i], 1e-8, report.deviation[i] < 1e-8});
}

void check_hft(double xi, long size, std::vector<CheckLine>& lines) {
  if (xi == 0.0) {
    const auto slope_case = [&](ModelKind model, const SymmetryClass& c, long n) {
      const double slope = hft_derivative(model, c, 0.0, size, class_level_slot(c, n));
      const double expected = -static_cast<double>(n * n) / 2.0;
      const double gap = std::abs(slope - expected) / std::max(1.0, std::abs(expected));
      lines.push_back({"hft",
                       std::string(model_token(model)) + " " + class_token(c) + " n = " +
                           std::to_string(n),
                       gap, 1e-9, gap < 1e-9});
    };
    for (long n = 1; n <= 4; ++n)
      slope_case(ModelKind::PathNonHermitian, classes_sharing(n).first, n);
    for (long n = 2; n <= 4; ++n) {
      slope_case(ModelKind::PathHermitian, classes_sharing(n).first, n);
      slope_case(ModelKind::PathHermitian, classes_sharing(n).second, n);
    }
    return;
  }
  const double h = 1e-4 * std::max(1.0, std::abs(xi));
  for (const ModelKind model : {ModelKind::PathNonHermitian, ModelKind::PathHermitian}) {
    for (const SymmetryClass& c : {class_pm, class_mp}) {
      for (long level : {0L, 1L}) {
        const double slope = hft_derivative(model, c, xi, size, level);
        const double ep = solve<double>(model, c, xi + h, size)
                              .eigenvalues[static_cast<std::size_t>(level)];
        const double em = solve<double>(model, c, xi - h, size)
                              .eigenvalues[static_cast<std::size_t>(level)];
        const double fd = (ep - em) / (2.0 * h);
        const double gap = std::abs(slope - fd) / std::max(1.0, std::abs(fd));
        lines.push_back({"hft",
                         std::string(model_token(model)) + " " + class_token(c) + " level " +
                             std::to_string(level),
                         gap, 1e-6, gap < 1e-6});
      }
    }
  }
}

void check_isospectral(double xi, long size, std::vector<CheckLine>& lines) {
  const IsospectralReport report = isospectral_check(xi, std::max(size, 14L), 4);
  lines.push_back({"isospectral", "merged positive levels", report.max_gap, 1e-8,
                   report.max_gap < 1e-8});
}

void check_splitting(std::vector<CheckLine>& lines) {
  for (long n = 1; n <= 4; ++n) {
    const std::optional<long> split = splitting_order(ModelKind::PathHermitian, n, 4);
    const double measured = split ? static_cast<double>(*split) : -1.0;
    lines.push_back({"splitting", "hermitian n = " + std::to_string(n), measured,
                     static_cast<double>(n), split && *split == n});
  }
  const std::optional<long> five = splitting_order(ModelKind::PathHermitian, 5, 5);
  lines.push_back({"splitting", "hermitian n = 5", five ? static_cast<double>(*five) : -1.0,
                   5.0, five && *five == 5});
  for (long n = 1; n <= 3; ++n) {
    const std::optional<long> split = splitting_order(ModelKind::PathNonHermitian, n, 6);
    lines.push_back({"splitting", "non-hermitian n = " + std::to_string(n),
                     split ? static_cast<double>(*split) : -1.0, -1.0, !split.has_value()});
  }
}

int run_check(const CheckArgs& a, std::ostream& out) {
  std::vector<CheckLine> lines;
  const bool all = a.suite == "all";
  if (all || a.suite == "degeneracy") check_degeneracy(a.xi, a.size, lines);
  if (all || a.suite == "conjecture") check_conjecture(a.xi, a.size, lines);
  if (all || a.suite == "hft") check_hft(a.xi, a.size, lines);
  if (all || a.suite == "isospectral") check_isospectral(a.xi, a.size, lines);
  if (all || a.suite == "splitting") check_splitting(lines);
  if (lines.empty()) {
    std::cerr << "error: unknown suite " << a.suite << "\n";
    return 1;
  }

  bool pass = true;
  for (const CheckLine& line : lines) pass = pass && line.pass;

  if (a.format == "json") {
    json data = json::array();
    for (const CheckLine& line : lines)
      data.push_back(json{{"suite", line.suite},
                          {"name", line.name},
                          {"measured", line.measured},
                          {"tolerance", line.tolerance},
                          {"pass", line.pass}});
    emit_json(out, json{{"meta", meta_block("m1+m2", a.xi, a.size)}, {"data", data}});
  } else if (a.format == "csv") {
    out << "suite,name,measured,tolerance,pass\n";
    for (const CheckLine& line : lines)
      out << line.suite << "," << line.name << "," << round_trip_number(line.measured) << ","
          << round_trip_number(line.tolerance) << "," << (line.pass ? "yes" : "no") << "\n";
  } else {
    out << std::left << std::setw(13) << "suite" << std::setw(28) << "name" << std::setw(14)
        << "measured" << std::setw(12) << "tolerance"
        << "pass\n";
    for (const CheckLine& line : lines)
      out << std::left << std::setw(13) << line.suite << std::setw(28) << line.name
          << std::setw(14) << table_number(line.measured) << std::setw(12)
          << table_number(line.tolerance) << (line.pass ? "yes" : "no") << "\n";
    out << "RESULT " << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of a quantum particle on an elliptical path"};
  app.require_subcommand(1);

  const auto add_format = [](CLI::App* cmd, std::string& target) {
    cmd->add_option("--format", target, "text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
  };
  const auto add_model = [](CLI::App* cmd, std::string& target) {
    cmd->add_option("--model", target, "m1 (non-Hermitian) or m2 (Hermitian)")
        ->required()
        ->check(CLI::IsMember({"m1", "m2"}));
  };

  SpectrumArgs spectrum_args;
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Levels of one or all classes");
  add_model(spectrum_cmd, spectrum_args.model);
  spectrum_cmd->add_option("--xi", spectrum_args.xi, "deformation parameter")->required();
  spectrum_cmd->add_option("--class", spectrum_args.cls, "pp, pm, mp, mm, or all")
      ->check(CLI::IsMember({"pp", "pm", "mp", "mm", "all"}));
  spectrum_cmd->add_option("--size", spectrum_args.size, "basis size per class")
      ->check(CLI::Range(1L, kMaxBasisSize));
  spectrum_cmd->add_option("--levels", spectrum_args.levels, "levels to print");
  add_format(spectrum_cmd, spectrum_args.format);

  ConvergeArgs converge_args;
  CLI::App* converge_cmd = app.add_subcommand("converge", "Levels as the basis grows");
  add_model(converge_cmd, converge_args.model);
  converge_cmd->add_option("--xi", converge_args.xi, "deformation parameter")->required();
  converge_cmd->add_option("--class", converge_args.cls, "pp, pm, mp, or mm")
      ->required()
      ->check(CLI::IsMember({"pp", "pm", "mp", "mm"}));
  converge_cmd->add_option("--n-min", converge_args.n_min, "first basis size")
      ->required()
      ->check(CLI::Range(1L, kMaxBasisSize));
  converge_cmd->add_option("--n-max", converge_args.n_max, "last basis size")
      ->required()
      ->check(CLI::Range(1L, kMaxBasisSize));
  converge_cmd->add_option("--levels", converge_args.levels, "levels per row");
  add_format(converge_cmd, converge_args.format);

  PtArgs pt_args;
  CLI::App* pt_cmd = app.add_subcommand("pt", "Exact deformation series of one level");
  add_model(pt_cmd, pt_args.model);
  pt_cmd->add_option("--level", pt_args.level, "harmonic index n of the level")->required();
  pt_cmd->add_option("--class", pt_args.cls, "class holding the level")
      ->check(CLI::IsMember({"pp", "pm", "mp", "mm"}));
  pt_cmd->add_option("--order", pt_args.order, "series order")->check(CLI::Range(0L, 16L));
  add_format(pt_cmd, pt_args.format);

  ScanArgs scan_args;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Levels and series estimates on a xi grid");
  add_model(scan_cmd, scan_args.model);
  scan_cmd->add_option("--xi-min", scan_args.xi_min, "grid start")->required();
  scan_cmd->add_option("--xi-max", scan_args.xi_max, "grid end")->required();
  scan_cmd->add_option("--steps", scan_args.steps, "grid points")->required();
  scan_cmd->add_option("--size", scan_args.size, "basis size per class")
      ->check(CLI::Range(1L, kMaxBasisSize));
  scan_cmd->add_option("--levels", scan_args.levels, "merged levels per grid point");
  scan_cmd->add_option("--out", scan_args.out_path, "write to this path instead of stdout");
  add_format(scan_cmd, scan_args.format);

  CheckArgs check_args;
  CLI::App* check_cmd = app.add_subcommand("check", "Invariant suites with measured values");
  check_cmd->add_option("--suite", check_args.suite, "suite name or all")
      ->check(CLI::IsMember(
          {"degeneracy", "conjecture", "hft", "isospectral", "splitting", "all"}));
  check_cmd->add_option("--xi", check_args.xi, "deformation parameter");
  check_cmd->add_option("--size", check_args.size, "basis size")
      ->check(CLI::Range(4L, kMaxBasisSize));
  add_format(check_cmd, check_args.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  std::ostringstream buffer;
  int code = 0;
  try {
    if (spectrum_cmd->parsed()) code = run_spectrum(spectrum_args, buffer);
    else if (converge_cmd->parsed()) code = run_converge(converge_args, buffer);
    else if (pt_cmd->parsed()) code = run_pt(pt_args, buffer);
    else if (scan_cmd->parsed()) code = run_scan(scan_args, buffer);
    else code = run_check(check_args, buffer);
  } catch (const RealityViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CholeskyFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BiorthogonalityFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PairingFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::cout << buffer.str();
  return code;
}
