#include "heis/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "heis/classify.hpp"
#include "heis/cmc_solver.hpp"
#include "heis/curve_core.hpp"
#include "heis/errors.hpp"
#include "heis/io.hpp"
#include "heis/mesh.hpp"
#include "heis/numerics.hpp"
#include "heis/reconstruct.hpp"

namespace heis {

namespace {

struct Options {
  int n = 1;
  std::optional<double> c;
  double energy = 0.0;
  std::optional<double> lambda;
  std::string branch = "both";
  std::size_t samples = 2001;
  double t0 = 0.0;
  std::optional<double> tol;
  std::string format = "csv";
  std::string output;
  int segments = 64;
  std::string alpha_file;
  std::string k_file;
  std::optional<double> x0;
  int k_sign = 1;
  std::string input;
};

double resolve_tolerance(const Options& opt) {
  if (opt.tol) {
    if (!(*opt.tol > 0.0)) throw DomainError("--tol must be positive");
    return *opt.tol;
  }
  if (const char* env = std::getenv("HEIS_CMC_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw ParseError(std::string("HEIS_CMC_TOL is not a positive number: '") + env + "'");
    }
    return v;
  }
  return kAlgebraicTol;
}

Branch parse_branch(const std::string& name) {
  if (name == "plus") return Branch::plus;
  if (name == "minus") return Branch::minus;
  return Branch::both;
}

// Runs `body` with the selected output stream (stdout when no path is given).
void with_output(const Options& opt, const std::function<void(std::ostream&)>& body) {
  if (opt.output.empty() || opt.output == "-") {
    body(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw IoError("cannot open '" + opt.output + "' for writing");
  body(out);
  out.close();
  if (!out) throw IoError("failed to write '" + opt.output + "'");
}

void emit_curve(const Options& opt, const CurveWithProfile& data, CurveRecord record) {
  with_output(opt, [&](std::ostream& out) {
    if (opt.format == "obj") {
      write_obj(out, revolve_mesh(data.curve, opt.segments));
    } else if (opt.format == "json") {
      write_json(out, record);
    } else {
      write_csv(out, record);
    }
  });
}

void add_param_meta(CurveRecord& r, const CmcParams& params, Branch branch) {
  r.set_meta("n", std::to_string(params.n()));
  r.set_meta("c", params.c());
  r.set_meta("lambda", params.lambda());
  r.set_meta("E", params.energy());
  r.set_meta("branch", std::string(to_string(branch)));
  if (params.c() > 0.0) {
    r.set_meta("bound", energy_lower_bound(params.dims(), params.c()));
  } else if (params.c() < 0.0) {
    r.set_meta("bound", energy_upper_bound(params.dims(), params.c()));
  } else {
    r.set_meta("bound", "none");
  }
  r.set_meta("label", std::string(to_string(classify_params(params).label)));
  const auto iv = admissible_interval(params);
  r.set_meta("interval_a", iv.a);
  r.set_meta("interval_b", iv.b);
}

int generate(const Options& opt, const CmcParams& params) {
  const Branch branch = parse_branch(opt.branch);
  GridSpec grid;
  grid.samples = opt.samples;
  const auto data = generate_curve(params, branch, grid, opt.t0, kernels::Exec::parallel);
  auto record = make_record(data);
  add_param_meta(record, params, branch);
  emit_curve(opt, data, std::move(record));
  return 0;
}

CmcParams params_from(const Options& opt) {
  const GroupDims dims(opt.n);
  if (opt.c && opt.lambda) throw DomainError("give either --c or --lambda, not both");
  const double c = opt.c ? *opt.c : opt.lambda ? *opt.lambda * dims.two_n() : 0.0;
  return CmcParams(dims, c, opt.energy);
}

std::vector<double> read_series_values(const std::string& path, std::vector<double>* grid) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  auto [s, v] = read_series(in);
  if (grid) *grid = std::move(s);
  return v;
}

int run_reconstruct(const Options& opt) {
  const double tol = resolve_tolerance(opt);
  PrescribedProfile prescribed;
  prescribed.alpha = read_series_values(opt.alpha_file, &prescribed.s);
  if (!opt.k_file.empty()) {
    std::vector<double> s_k;
    prescribed.k = read_series_values(opt.k_file, &s_k);
    if (s_k != prescribed.s) throw ParseError("alpha and k files use different grids");
  } else {
    if (!opt.x0) throw DomainError("reconstruct needs --k-file or --x0");
    prescribed.k = k_from_alpha(prescribed.s, prescribed.alpha, *opt.x0, opt.k_sign);
  }
  const auto curve = reconstruct_from_alpha_k(prescribed, opt.t0, tol);
  InvariantProfile profile{prescribed.alpha, prescribed.k,
                           l_from_alpha_k(curve, prescribed.alpha, prescribed.k)};
  const CurveWithProfile data{curve, std::move(profile)};
  auto record = make_record(data);
  record.set_meta("n", std::to_string(opt.n));
  record.set_meta("t0", opt.t0);
  try {
    const auto report = classify_curve(curve, GroupDims(opt.n));
    record.set_meta("label", std::string(to_string(report.label)));
  } catch (const DomainError&) {
    record.set_meta("label", "unknown");
  }
  emit_curve(opt, data, std::move(record));
  return 0;
}

GeneratingCurve curve_from_input(const Options& opt, CurveRecord* keep = nullptr) {
  auto record = read_record_file(opt.input);
  auto data = record_curve(record);
  if (keep) *keep = std::move(record);
  return data.curve;
}

int run_classify(const Options& opt) {
  ClassReport report;
  if (!opt.input.empty()) {
    report = classify_curve(curve_from_input(opt), GroupDims(opt.n));
  } else {
    report = classify_params(params_from(opt));
  }
  with_output(opt, [&](std::ostream& out) {
    if (opt.format == "json") {
      nlohmann::ordered_json doc;
      doc["label"] = std::string(to_string(report.label));
      for (const auto& [k, v] : report.witnesses) {
        if (std::isfinite(v)) doc["witnesses"][k] = v;
      }
      doc["notes"] = report.notes;
      out << doc.dump(1) << '\n';
    } else {
      out << "label=" << to_string(report.label) << '\n';
      for (const auto& [k, v] : report.witnesses) out << k << '=' << format_number(v) << '\n';
      if (!report.notes.empty()) out << "notes=" << report.notes << '\n';
    }
  });
  return 0;
}

int run_mesh(const Options& opt) {
  Options o = opt;
  o.format = "obj";
  if (!opt.input.empty()) {
    const auto curve = curve_from_input(opt);
    with_output(o, [&](std::ostream& out) { write_obj(out, revolve_mesh(curve, o.segments)); });
    return 0;
  }
  return generate(o, params_from(opt));
}

struct CheckLine {
  std::string name;
  double value;
  double tol;
};

int run_check(const Options& opt) {
  const double tol = resolve_tolerance(opt);
  CurveRecord record;
  const auto curve = curve_from_input(opt, &record);
  const InvariantProfile stored{record.alpha, record.k, record.l};
  if (curve.size() < 5) throw DomainError("check needs at least 5 samples");
  const int n = record.meta_number("n") ? static_cast<int>(*record.meta_number("n")) : opt.n;
  const GroupDims dims(n);

  const auto computed = invariants_from_curve(curve);
  const auto mask = interior_mask(curve, computed);
  const double fd_tol = kFiniteDifferenceTol;

  std::vector<CheckLine> lines;
  lines.push_back({"arclength", masked_max_abs(arclength_defect(curve), mask), fd_tol});
  std::vector<bool> all(curve.size(), true);
  lines.push_back({"integrability", masked_max_abs(integrability_defect(curve, stored), all), tol});

  std::vector<double> d_alpha(curve.size()), d_k(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) {
    d_alpha[i] = computed.alpha[i] - stored.alpha[i];
    d_k[i] = computed.k[i] - stored.k[i];
  }
  lines.push_back({"alpha_recomputed", masked_max_abs(d_alpha, mask), fd_tol});
  lines.push_back({"k_recomputed", masked_max_abs(d_k, mask), fd_tol});

  const auto codazzi = codazzi_residuals(curve, stored);
  lines.push_back({"codazzi_k", masked_max_abs(codazzi.k_equation, mask), fd_tol});
  lines.push_back({"codazzi_alpha", masked_max_abs(codazzi.alpha_equation, mask), fd_tol});

  const auto dtheta = numerics::derivative(curve.s(), curve.theta());
  std::vector<double> horiz(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) horiz[i] = dtheta[i] - stored.k[i];
  lines.push_back({"horizontality", masked_max_abs(horiz, mask), fd_tol});

  const auto c = record.meta_number("c");
  const auto e = record.meta_number("E");
  if (c && e) {
    const auto energy = energy_profile(curve, stored, CmcParams(dims, *c, *e));
    std::vector<double> de(energy.size());
    for (std::size_t i = 0; i < energy.size(); ++i) de[i] = energy[i] - *e;
    lines.push_back({"energy", masked_max_abs(de, all), tol * (1.0 + std::abs(*e))});
    const auto h = pmean_profile(dims, stored);
    std::vector<double> dh(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) dh[i] = h[i] - *c;
    lines.push_back({"pmean", masked_max_abs(dh, all), tol * (1.0 + std::abs(*c))});
  }

  bool ok = true;
  with_output(opt, [&](std::ostream& out) {
    for (const auto& line : lines) {
      const bool pass = line.value <= line.tol;
      ok = ok && pass;
      out << line.name << " max=" << format_number(line.value)
          << " tol=" << format_number(line.tol) << (pass ? " ok" : " FAIL") << '\n';
    }
  });
  return ok ? 0 : 1;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Generating curves of rotationally symmetric hypersurfaces in the Heisenberg group",
               "heis-cmc"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  Options opt;
  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n", opt.n, "CR dimension n >= 1")->capture_default_str();
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "obj"}))
        ->capture_default_str();
    cmd->add_option("--output", opt.output, "output path (default stdout)");
    cmd->add_option("--tol", opt.tol, "algebraic tolerance (default 1e-8 or $HEIS_CMC_TOL)");
  };
  const auto add_curve = [&](CLI::App* cmd) {
    add_common(cmd);
    cmd->add_option("--branch", opt.branch, "branch of the reflective curve")
        ->check(CLI::IsMember({"plus", "minus", "both"}))
        ->capture_default_str();
    cmd->add_option("--samples", opt.samples, "number of samples")->capture_default_str();
    cmd->add_option("--t0", opt.t0, "height at s = 0")->capture_default_str();
    cmd->add_option("--segments", opt.segments, "segments for --format obj")
        ->capture_default_str();
  };

  auto* pansu = app.add_subcommand("pansu", "Pansu sphere generating curve (E = 0)");
  add_curve(pansu);
  pansu->add_option("--lambda", opt.lambda, "lambda = c/2n (default 1)");

  auto* cmc = app.add_subcommand("cmc", "constant p-mean curvature generating curve");
  add_curve(cmc);
  cmc->add_option("--c", opt.c, "p-mean curvature");
  cmc->add_option("--lambda", opt.lambda, "lambda = c/2n");
  cmc->add_option("--energy", opt.energy, "energy E")->capture_default_str();

  auto* minimal = app.add_subcommand("minimal", "p-minimal generating curve (c = 0)");
  add_curve(minimal);
  minimal->add_option("--energy", opt.energy, "energy E")->capture_default_str();

  auto* recon = app.add_subcommand("reconstruct", "curve from prescribed alpha and k");
  add_common(recon);
  recon->add_option("--alpha-file", opt.alpha_file, "two-column table s,alpha")->required();
  recon->add_option("--k-file", opt.k_file, "two-column table s,k");
  recon->add_option("--x0", opt.x0, "initial radius when k is derived from alpha");
  recon->add_option("--k-sign", opt.k_sign, "sign of the derived k")
      ->check(CLI::IsMember({-1, 1}))
      ->capture_default_str();
  recon->add_option("--t0", opt.t0, "initial height")->capture_default_str();
  recon->add_option("--segments", opt.segments, "segments for --format obj")
      ->capture_default_str();

  auto* classify = app.add_subcommand("classify", "classify parameters or a curve file");
  add_common(classify);
  classify->add_option("--c", opt.c, "p-mean curvature");
  classify->add_option("--lambda", opt.lambda, "lambda = c/2n");
  classify->add_option("--energy", opt.energy, "energy E")->capture_default_str();
  classify->add_option("--input", opt.input, "curve file (CSV or .json)");

  auto* mesh = app.add_subcommand("mesh", "OBJ surface of revolution");
  add_curve(mesh);
  mesh->add_option("--c", opt.c, "p-mean curvature");
  mesh->add_option("--lambda", opt.lambda, "lambda = c/2n");
  mesh->add_option("--energy", opt.energy, "energy E")->capture_default_str();
  mesh->add_option("--input", opt.input, "curve file with theta (CSV or .json)");

  auto* check = app.add_subcommand("check", "residuals of the invariant identities on a curve file");
  add_common(check);
  check->add_option("--input", opt.input, "curve file (CSV or .json)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (pansu->parsed()) {
      if (!opt.lambda) opt.lambda = 1.0;
      opt.energy = 0.0;
      return generate(opt, params_from(opt));
    }
    if (cmc->parsed()) {
      if (!opt.c && !opt.lambda) throw DomainError("cmc needs --c or --lambda");
      return generate(opt, params_from(opt));
    }
    if (minimal->parsed()) return generate(opt, CmcParams(GroupDims(opt.n), 0.0, opt.energy));
    if (recon->parsed()) return run_reconstruct(opt);
    if (classify->parsed()) return run_classify(opt);
    if (mesh->parsed()) return run_mesh(opt);
    if (check->parsed()) return run_check(opt);
  } catch (const ParseError& e) {
    std::cerr << "heis-cmc: parse error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "heis-cmc: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "heis-cmc: infeasible: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "heis-cmc: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "heis-cmc: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace heis
