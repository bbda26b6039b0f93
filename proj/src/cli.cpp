#include "sicinfo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "sicinfo/infotheory.hpp"
#include "sicinfo/io.hpp"
#include "sicinfo/optimize.hpp"
#include "sicinfo/sic.hpp"

namespace sicinfo::cli {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

using Builtin = std::variant<Povm, Ensemble>;

Builtin builtin(const std::string& name) {
  if (name == "tetrahedral") return tetrahedral_povm();
  if (name == "antitetrahedral") return antitetrahedral_ensemble();
  if (name == "qutrit") return qutrit_sic_povm();
  if (name == "qutrit-orthonormal") return qutrit_orthonormal_ensemble();
  if (name == "tetrahedral-ensemble") return sic_ensemble_from_povm(tetrahedral_povm());
  if (name == "qutrit-ensemble") return sic_ensemble_from_povm(qutrit_sic_povm());
  throw InvalidInput("unknown built-in \"" + name +
                     "\" (known: tetrahedral, antitetrahedral, qutrit, qutrit-orthonormal, "
                     "tetrahedral-ensemble, qutrit-ensemble)");
}

const std::vector<std::string> kBuiltinNames = {"tetrahedral",          "antitetrahedral", "qutrit",
                                                "qutrit-orthonormal",   "tetrahedral-ensemble",
                                                "qutrit-ensemble"};

// Where a command takes its POVM from; exactly one source must be set.
struct PovmSource {
  std::string path;
  std::string builtin_name;
  std::string fiducial_path;

  void add_to(CLI::App* cmd) {
    auto* file = cmd->add_option("--povm", path, "POVM JSON file");
    auto* bi = cmd->add_option("--builtin", builtin_name, "built-in POVM")->check(CLI::IsMember(kBuiltinNames));
    auto* fid = cmd->add_option("--fiducial", fiducial_path, "fiducial JSON; uses its covariant POVM");
    file->excludes(bi)->excludes(fid);
    bi->excludes(fid);
  }

  Povm load() const {
    if (!path.empty()) return io::povm_from_json(io::load_json(path));
    if (!fiducial_path.empty()) return wh_covariant_povm(io::fiducial_from_json(io::load_json(fiducial_path)));
    if (!builtin_name.empty()) {
      Builtin b = builtin(builtin_name);
      if (auto* p = std::get_if<Povm>(&b)) return *p;
      throw InvalidInput("built-in \"" + builtin_name + "\" is an ensemble, not a POVM");
    }
    throw InvalidInput("one of --povm, --builtin or --fiducial is required");
  }
};

struct EnsembleSource {
  std::string path;
  std::string builtin_name;

  Ensemble load() const {
    if (!path.empty()) return io::ensemble_from_json(io::load_json(path));
    if (!builtin_name.empty()) {
      Builtin b = builtin(builtin_name);
      if (auto* e = std::get_if<Ensemble>(&b)) return *e;
      throw InvalidInput("built-in \"" + builtin_name + "\" is a POVM, not an ensemble");
    }
    throw InvalidInput("one of --ensemble or --ensemble-builtin is required");
  }
};

int cmd_bounds(int dmax, const std::string& format, std::ostream& out) {
  if (dmax < 2) throw InvalidDimension("--dmax must be at least 2");
  const double asymptote = scrooge_asymptote();
  if (format == "json") {
    io::Json rows = io::Json::array();
    for (int d = 2; d <= dmax; ++d) rows.push_back(io::to_json(bounds_for_dimension(d)));
    io::Json doc = {{"kind", "bounds"},
                    {"rows", std::move(rows)},
                    {"asymptotes", {{"scrooge_lower", asymptote}, {"sic_upper", 1.0}}},
                    {"pg_sic_coefficient_form_d2", pg_sic_coefficient_form(2)}};
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "d,holevo,sic_upper,scrooge_lower,rastegin_cond,pg_sic_value\n";
  for (int d = 2; d <= dmax; ++d) {
    const BoundSet b = bounds_for_dimension(d);
    out << d << ',' << fixed6(b.holevo) << ',' << fixed6(b.sic_upper) << ',' << fixed6(b.scrooge_lower) << ','
        << fixed6(b.rastegin_cond) << ',' << fixed6(b.pg_sic_value) << '\n';
  }
  out << "# asymptotes: scrooge_lower->" << fixed6(asymptote) << ", sic_upper->1.0\n";
  out << "# pg_sic_value is summed over the SIC joint distribution; the coefficient form "
         "(2d/(d^2(d+1)))log d - ((d-1)/(d^2(d+1)))log(d+1) disagrees (d=2: "
      << fixed6(pg_sic_coefficient_form(2)) << ")\n";
  return kOk;
}

int cmd_verify_sic(const std::string& path, const std::string& builtin_name, const std::string& fiducial_path,
                   std::ostream& out) {
  std::vector<Operator> ops;
  const int sources = !path.empty() + !builtin_name.empty() + !fiducial_path.empty();
  if (sources != 1) throw InvalidInput("verify-sic needs exactly one of FILE, --builtin, --fiducial");
  if (!path.empty()) {
    ops = io::operators_from_json(io::load_json(path));
  } else if (!fiducial_path.empty()) {
    ops = wh_covariant_povm(io::fiducial_from_json(io::load_json(fiducial_path))).effects();
  } else {
    Builtin b = builtin(builtin_name);
    ops = std::visit([](const auto& v) -> std::vector<Operator> {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Povm>) {
        return v.effects();
      } else {
        return v.states();
      }
    }, b);
  }
  const SicCertificate cert = is_sic(ops);
  out << (cert.passes ? "SIC: pass" : "SIC: FAIL") << " (d=" << cert.dim << ", count=" << cert.count
      << ", lambda=" << fixed6(cert.lambda) << ")\n";
  out << "max trace deviation:    " << cert.max_trace_deviation << "\n";
  out << "max pairwise deviation: " << cert.max_pairwise_deviation << "\n";
  out << "max rank residual:      " << cert.max_rank_residual << "\n";
  out << "average deviation:      " << cert.average_deviation << "\n";
  out << io::to_json(cert).dump(2) << "\n";
  return cert.passes ? kOk : kSemanticFailure;
}

int cmd_mutinfo(const EnsembleSource& es, const PovmSource& ps, const std::string& format, std::ostream& out) {
  const Ensemble e = es.load();
  const Povm p = ps.load();
  const EntropyBreakdown b = entropy_breakdown(joint_distribution(e, p));
  if (format == "json") {
    io::Json doc = {{"kind", "mutual_information"}, {"I", b.mutual_information}, {"H(X)", b.h_x},
                    {"H(Y)", b.h_y},                {"H(X,Y)", b.h_xy},        {"H(Y|X)", b.h_y_given_x}};
    out << doc.dump(2) << "\n";
  } else {
    out << "I=" << fixed6(b.mutual_information) << "\n";
    out << "H(X)=" << fixed6(b.h_x) << "\n";
    out << "H(Y)=" << fixed6(b.h_y) << "\n";
    out << "H(X,Y)=" << fixed6(b.h_xy) << "\n";
    out << "H(Y|X)=" << fixed6(b.h_y_given_x) << "\n";
  }
  return kOk;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical information extractable from quantum ensembles and measurements"};
  app.name(args.empty() ? "sicinfo" : args.front());
  app.require_subcommand(1);

  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout");

  auto* bounds = app.add_subcommand("bounds", "table of closed-form bounds for d = 2..dmax");
  int dmax = 10;
  std::string bounds_format = "csv";
  bounds->add_option("--dmax", dmax, "largest dimension")->required();
  bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify-sic", "check the SIC conditions on a set of operators");
  std::string verify_path, verify_builtin, verify_fiducial;
  verify->add_option("file", verify_path, "ensemble, povm or operators JSON");
  verify->add_option("--builtin", verify_builtin)->check(CLI::IsMember(kBuiltinNames));
  verify->add_option("--fiducial", verify_fiducial, "fiducial JSON; checks its covariant POVM");

  auto* mutinfo = app.add_subcommand("mutinfo", "mutual information of an ensemble against a POVM");
  EnsembleSource mi_ensemble;
  PovmSource mi_povm;
  std::string mi_format = "text";
  auto* ens_file = mutinfo->add_option("--ensemble", mi_ensemble.path, "ensemble JSON file");
  auto* ens_bi = mutinfo->add_option("--ensemble-builtin", mi_ensemble.builtin_name, "built-in ensemble")
                     ->check(CLI::IsMember(kBuiltinNames));
  ens_file->excludes(ens_bi);
  mi_povm.add_to(mutinfo);
  mutinfo->add_option("--format", mi_format)->check(CLI::IsMember({"text", "json"}));

  int starts = 100;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  auto add_run_options = [&](CLI::App* cmd) {
    cmd->add_option("--starts", starts, "number of random starting points")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", seed, "PRNG seed");
    cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  };

  auto* power = app.add_subcommand("power", "lower bound on the informational power of a POVM");
  PovmSource power_povm;
  int max_support = 0;
  power_povm.add_to(power);
  add_run_options(power);
  power->add_option("--max-support", max_support, "pure states in the searched ensemble (0 = d^2)");

  auto* minent = app.add_subcommand("minent", "minimum output entropy H(Y|X=x) over pure inputs");
  PovmSource minent_povm;
  minent_povm.add_to(minent);
  add_run_options(minent);

  auto* scrooge = app.add_subcommand("scrooge", "Monte-Carlo estimate of the rank-one lower bound");
  int scrooge_dim = 2;
  long samples = 100000;
  scrooge->add_option("--dim", scrooge_dim)->required();
  scrooge->add_option("--samples", samples);
  scrooge->add_option("--seed", seed);

  auto* exporter = app.add_subcommand("export", "print a built-in ensemble or POVM as JSON");
  std::string export_name;
  exporter->add_option("--builtin", export_name)->required()->check(CLI::IsMember(kBuiltinNames));

  auto* pgm = app.add_subcommand("pretty-good", "pretty-good POVM of an ensemble, or pretty-good ensemble of a POVM");
  std::string pg_ensemble, pg_povm;
  auto* pg_e = pgm->add_option("--ensemble", pg_ensemble, "ensemble JSON; prints its pretty-good POVM");
  auto* pg_p = pgm->add_option("--povm", pg_povm, "POVM JSON; prints its pretty-good ensemble for rho = 1/d");
  pg_e->excludes(pg_p);

  auto* covariant = app.add_subcommand("covariant", "clock-and-shift covariant POVM of a fiducial");
  std::string cov_fiducial;
  covariant->add_option("--fiducial", cov_fiducial)->required();

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    std::ostringstream buf;
    int code = kOk;
    if (bounds->parsed()) {
      code = cmd_bounds(dmax, bounds_format, buf);
    } else if (verify->parsed()) {
      code = cmd_verify_sic(verify_path, verify_builtin, verify_fiducial, buf);
    } else if (mutinfo->parsed()) {
      code = cmd_mutinfo(mi_ensemble, mi_povm, mi_format, buf);
    } else if (power->parsed()) {
      OptimizeOptions opts;
      opts.threads = threads;
      buf << io::to_json(informational_power_lower_bound(power_povm.load(), starts, seed, max_support, opts)).dump(2)
          << "\n";
    } else if (minent->parsed()) {
      OptimizeOptions opts;
      opts.threads = threads;
      buf << io::to_json(min_output_entropy(minent_povm.load(), starts, seed, opts)).dump(2) << "\n";
    } else if (scrooge->parsed()) {
      const double value = scrooge_lower_bound_estimate(scrooge_dim, samples, seed);
      io::Json doc = {{"kind", "scrooge_estimate"},
                      {"dim", scrooge_dim},
                      {"samples", samples},
                      {"seed", seed},
                      {"prng", HaarSampler::kAlgorithm},
                      {"value", value},
                      {"closed_form", scrooge_lower_bound(scrooge_dim)}};
      buf << doc.dump(2) << "\n";
    } else if (exporter->parsed()) {
      Builtin b = builtin(export_name);
      std::visit([&](const auto& v) { buf << io::to_json(v).dump(2) << "\n"; }, b);
    } else if (pgm->parsed()) {
      if (!pg_ensemble.empty()) {
        buf << io::to_json(pretty_good_povm(io::ensemble_from_json(io::load_json(pg_ensemble)))).dump(2) << "\n";
      } else if (!pg_povm.empty()) {
        const Povm p = io::povm_from_json(io::load_json(pg_povm));
        const Operator rho = Operator::identity(p.dim()) * (1.0 / static_cast<double>(p.dim()));
        buf << io::to_json(pretty_good_ensemble(p, rho)).dump(2) << "\n";
      } else {
        throw InvalidInput("pretty-good needs --ensemble or --povm");
      }
    } else if (covariant->parsed()) {
      buf << io::to_json(wh_covariant_povm(io::fiducial_from_json(io::load_json(cov_fiducial)))).dump(2) << "\n";
    }
    write_output(out_path, buf.str(), out);
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace sicinfo::cli
