// Command-line interface: classification, geodesic sampling, reflection
// symmetries, Maxwell-set verdicts and oracle verification for the
// sub-Riemannian structure on SH(2).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sh2sr/elliptic.hpp"
#include "sh2sr/errors.hpp"
#include "sh2sr/geodesic.hpp"
#include "sh2sr/maxwell.hpp"
#include "sh2sr/oracle.hpp"
#include "sh2sr/pendulum.hpp"
#include "sh2sr/symmetry.hpp"
#include "sh2sr/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sh2sr;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupportedStratum = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_kappa(double kappa) {
  if (std::isinf(kappa)) return "inf";
  return fmt(kappa);
}

double kappa_of(const PhasePoint& p, double z) {
  const double cos_half = std::cos(0.5 * p.gamma);
  if (std::abs(cos_half) < kCuspTol) return std::numeric_limits<double>::infinity();
  return std::sin(0.5 * p.gamma) / (cos_half * std::pow(std::cosh(2.0 * z), 1.5));
}

void write_out(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

json json_of(const GroupElement& q) {
  return json{{"x", q.x}, {"y", q.y}, {"z", q.z}};
}

json json_of(const PhasePoint& p) {
  return json{{"gamma", p.gamma}, {"c", p.c}};
}

// Trajectory rows in CSV with header t,x,y,z,gamma,c,kappa (RFC 4180:
// CRLF records, '.' decimal separator, 17 significant digits).
std::string csv_of_samples(const std::vector<ExtremalSample>& samples) {
  std::string out = "t,x,y,z,gamma,c,kappa\r\n";
  for (const auto& s : samples) {
    out += fmt(s.t) + "," + fmt(s.q.x) + "," + fmt(s.q.y) + "," + fmt(s.q.z) + "," +
           fmt(s.p.gamma) + "," + fmt(s.p.c) + "," + fmt_kappa(kappa_of(s.p, s.q.z)) +
           "\r\n";
  }
  return out;
}

json json_of_samples(const std::vector<ExtremalSample>& samples) {
  json rows = json::array();
  for (const auto& s : samples) {
    const double kappa = kappa_of(s.p, s.q.z);
    json row{{"t", s.t},         {"x", s.q.x},       {"y", s.q.y},
             {"z", s.q.z},       {"gamma", s.p.gamma}, {"c", s.p.c}};
    if (std::isinf(kappa)) {
      row["kappa"] = nullptr;
    } else {
      row["kappa"] = kappa;
    }
    rows.push_back(row);
  }
  return rows;
}

struct Options {
  double gamma = 0.0;
  double c = 0.0;
  double t = 1.0;
  std::size_t samples = 100;
  double tol = 1e-6;
  std::uint64_t seed = 42;
  int reflection = 1;
  std::string format;
  std::string output;
};

int cmd_classify(const Options& o) {
  const PhasePoint p{o.gamma, o.c};
  const StratumId id = classify(p);
  const double e = energy(p);
  const bool has_chart = id.major == Stratum::C1 || id.major == Stratum::C2 ||
                         id.major == Stratum::C3;
  if (o.format == "json") {
    json doc{{"stratum", id.name()}, {"energy", e}};
    if (has_chart) {
      const EllipticCoords ec = to_elliptic(p);
      doc["elliptic"] =
          json{{"k", ec.k}, {"phi", ec.phi}, {"s1", ec.s1}, {"s2", ec.s2}};
    } else {
      doc["elliptic"] = nullptr;
    }
    write_out(o.output, doc.dump(2) + "\n");
  } else {
    std::string line = id.name() + ", E=" + fmt(e);
    if (has_chart) {
      const EllipticCoords ec = to_elliptic(p);
      line += ", k=" + fmt(ec.k) + ", phi=" + fmt(ec.phi) +
              ", s1=" + (ec.s1 > 0 ? std::string("+1") : std::string("-1")) +
              ", s2=" + (ec.s2 > 0 ? std::string("+1") : std::string("-1"));
    }
    write_out(o.output, line + "\n");
  }
  return kExitOk;
}

int cmd_geodesic(const Options& o) {
  const PhasePoint p{o.gamma, o.c};
  auto samples = sample_trajectory(p, o.t, o.samples);
  const auto features = find_projection_features(p, o.t);

  // Insert a row at each feature time so cusps/inflections appear in the
  // trajectory table at their exact parameter.
  const Extremal ex(p);
  for (const auto& f : features) {
    samples.push_back({f.t, ex.at(f.t), ex.phase_at(f.t)});
  }
  std::sort(samples.begin(), samples.end(),
            [](const ExtremalSample& a, const ExtremalSample& b) { return a.t < b.t; });
  samples.erase(std::unique(samples.begin(), samples.end(),
                            [](const ExtremalSample& a, const ExtremalSample& b) {
                              return std::abs(a.t - b.t) < 1e-15;
                            }),
                samples.end());

  if (o.format == "json") {
    json doc{{"initial", json_of(p)},
             {"stratum", classify(p).name()},
             {"t_max", o.t},
             {"samples", json_of_samples(samples)}};
    json feats = json::array();
    for (const auto& f : features) {
      feats.push_back(json{
          {"kind", f.kind == ProjectionFeature::Kind::cusp ? "cusp" : "inflection"},
          {"t", f.t},
          {"tolerance", f.tolerance}});
    }
    doc["features"] = feats;
    write_out(o.output, doc.dump(2) + "\n");
  } else {
    write_out(o.output, csv_of_samples(samples));
  }
  return kExitOk;
}

int cmd_symmetry(const Options& o) {
  const PhasePoint p{o.gamma, o.c};
  const auto samples = sample_trajectory(p, o.t, o.samples);
  const auto reflected = reflect_trajectory(o.reflection, samples);
  const PhasePoint pre = reflect_preimage(o.reflection, p, o.t);
  const GroupElement q_t = samples.back().q;
  const double dev = check_equivariance(o.reflection, p, o.t);

  if (o.format == "csv") {
    write_out(o.output, csv_of_samples(reflected));
  } else {
    json doc{{"reflection", o.reflection},
             {"initial", json_of(p)},
             {"preimage", json_of(pre)},
             {"endpoint", json_of(q_t)},
             {"reflected_endpoint", json_of(reflect_endpoint(o.reflection, q_t))},
             {"equivariance_deviation", dev},
             {"samples", json_of_samples(reflected)}};
    write_out(o.output, doc.dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_maxwell(const Options& o) {
  const PhasePoint p{o.gamma, o.c};
  const MaxwellVerdict v = maxwell_membership(p, o.t);
  json doc{{"stratum", classify(p).name()},
           {"t", o.t},
           {"r1", v.r1},
           {"r2", v.r2},
           {"z", v.z},
           {"sn_tau", v.sn_tau},
           {"cn_tau", v.cn_tau},
           {"in_max", json{{"1", v.in_max1}, {"2", v.in_max2}, {"6", v.in_max6}}},
           {"fixed_point", json{{"1", v.fixed1}, {"2", v.fixed2}, {"6", v.fixed6}}}};
  write_out(o.output, doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const auto checks =
      run_verification(o.seed, static_cast<int>(o.samples), o.tol, kOracleDefaultTol);
  bool all_pass = true;
  json rows = json::array();
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    rows.push_back(json{{"name", c.name},
                        {"max_deviation", c.max_deviation},
                        {"tolerance", c.tolerance},
                        {"cases", c.cases},
                        {"pass", c.pass}});
  }
  json doc{{"seed", o.seed},
           {"count", o.samples},
           {"tolerance", o.tol},
           {"oracle_tolerance", kOracleDefaultTol},
           {"checks", rows},
           {"pass", all_pass}};
  write_out(o.output, doc.dump(2) + "\n");
  return all_pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sub-Riemannian geodesics on the group SH(2)"};
  app.require_subcommand(1);

  Options o;

  auto add_phase_opts = [&](CLI::App* cmd) {
    cmd->add_option("--gamma", o.gamma, "pendulum angle gamma, radians on [0, 4pi)")
        ->required();
    cmd->add_option("--c", o.c, "pendulum momentum c")->required();
  };

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "stratum, energy and elliptic coordinates");
  add_phase_opts(classify_cmd);
  classify_cmd->add_option("--format", o.format, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("--output", o.output, "output path (default stdout)");

  CLI::App* geodesic_cmd =
      app.add_subcommand("geodesic", "sample an extremal trajectory");
  add_phase_opts(geodesic_cmd);
  geodesic_cmd->add_option("--t", o.t, "arc length to integrate")->required();
  geodesic_cmd->add_option("--samples", o.samples, "number of samples (>= 2)");
  geodesic_cmd->add_option("--format", o.format, "csv (default) or json")
      ->check(CLI::IsMember({"csv", "json"}));
  geodesic_cmd->add_option("--output", o.output, "output path (default stdout)");

  CLI::App* symmetry_cmd =
      app.add_subcommand("symmetry", "apply a reflection to a trajectory");
  add_phase_opts(symmetry_cmd);
  symmetry_cmd->add_option("--reflection", o.reflection, "reflection index 1..7")
      ->required()
      ->check(CLI::Range(1, 7));
  symmetry_cmd->add_option("--t", o.t, "arc length of the trajectory")->required();
  symmetry_cmd->add_option("--samples", o.samples, "number of samples (>= 2)");
  symmetry_cmd->add_option("--format", o.format, "json (default) or csv")
      ->check(CLI::IsMember({"csv", "json"}));
  symmetry_cmd->add_option("--output", o.output, "output path (default stdout)");

  CLI::App* maxwell_cmd =
      app.add_subcommand("maxwell", "Maxwell-set membership verdict");
  add_phase_opts(maxwell_cmd);
  maxwell_cmd->add_option("--t", o.t, "arc length")->required();
  maxwell_cmd->add_option("--output", o.output, "output path (default stdout)");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "closed forms vs integration oracle, equivariance sweep");
  verify_cmd->add_option("--seed", o.seed, "RNG seed (default 42)");
  verify_cmd->add_option("--samples", o.samples, "covectors per sweep (default 100)");
  verify_cmd->add_option("--tol", o.tol,
                         "deviation tolerance for closed forms (default 1e-6)");
  verify_cmd->add_option("--output", o.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (!std::isfinite(o.gamma) || !std::isfinite(o.c) || !std::isfinite(o.t) ||
        !std::isfinite(o.tol)) {
      throw std::invalid_argument("numeric options must be finite");
    }
    if (classify_cmd->parsed()) return cmd_classify(o);
    if (geodesic_cmd->parsed()) return cmd_geodesic(o);
    if (symmetry_cmd->parsed()) return cmd_symmetry(o);
    if (maxwell_cmd->parsed()) return cmd_maxwell(o);
    if (verify_cmd->parsed()) return cmd_verify(o);
  } catch (const UnsupportedStratumError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnsupportedStratum;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
