#include "maxtorus/catalog.hpp"
#include "maxtorus/json_io.hpp"
#include "maxtorus/simd.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

using namespace maxtorus;
using io::InputError;
using io::Json;

namespace {

struct RunConfig {
  std::string format = "json";
  std::uint64_t seed = kDefaultSeed;
  bool parallel = false;
};

void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i + 1) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const RunConfig& cfg, const Json& j) {
  if (cfg.format == "text")
    flatten(j, "", std::cout);
  else
    std::cout << io::dump(j);
}

std::uint64_t parse_seed(const std::string& text, const std::string& source) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 0);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw InputError(source + ": invalid seed '" + text + "'");
  }
}

Fan load_fan(const std::string& path) {
  std::vector<std::string> warnings;
  Fan f = io::fan_from_json(io::read_json_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << path << ": " << w << "\n";
  return f;
}

ComplexSubspace load_subspace(const std::string& path, std::size_t ambient, const char* what) {
  ComplexSubspace h = io::subspace_from_json(io::read_json_file(path));
  if (h.ambient() != ambient)
    throw InputError(path + ": subspace has m = " + std::to_string(h.ambient()) + " but the " + what + " needs m = " +
                     std::to_string(ambient));
  return h;
}

// Completeness precondition shared by the normality commands.
void require_complete(const Fan& fan, std::uint64_t seed) {
  if (!fan_validate(fan).valid) throw InputError("not a valid fan");
  if (!fan.is_simplicial()) throw InputError("normality requires a simplicial fan");
  if (!fan_is_complete(fan, seed)) throw InputError("normality defined for complete fans");
}

int cmd_validate_fan(const RunConfig& cfg, const std::string& path) {
  std::vector<std::string> warnings;
  const Fan fan = io::fan_from_json(io::read_json_file(path), &warnings);
  const auto validity = fan_validate(fan);
  Json cones = Json::array();
  for (const auto& c : fan.max_cones) {
    const auto g = fan.generators(c);
    Json rays = Json::array();
    for (auto i : c) rays.push_back(i + 1);
    cones.push_back({{"rays", rays},
                     {"strictly_convex", cone_is_strictly_convex(g)},
                     {"simplicial", cone_is_simplicial(g)},
                     {"regular", cone_is_regular(g)}});
  }
  Json out = io::to_json(validity);
  out["cones"] = cones;
  out["simplicial"] = fan.is_simplicial();
  out["regular"] = fan.is_regular();
  out["complete"] = validity.valid && fan.is_simplicial() ? Json(fan_is_complete(fan, cfg.seed)) : Json(nullptr);
  out["warnings"] = warnings;
  emit(cfg, out);
  return validity.valid ? 0 : 1;
}

int cmd_validate(const RunConfig& cfg, const std::string& construction, const std::string& data,
                 const std::string& subspace) {
  ValidationReport report;
  if (construction == "II") {
    const Fan fan = load_fan(data);
    report = validate_construction_II(fan, load_subspace(subspace, fan.dim, "fan"), cfg.seed);
  } else {
    const auto k = io::complex_from_json(io::read_json_file(data));
    report = validate_construction_I(k, load_subspace(subspace, k.vertices, "complex"), cfg.seed);
  }
  emit(cfg, io::to_json(report));
  return report.valid ? 0 : 1;
}

int cmd_normality(const RunConfig& cfg, const std::string& path, bool weak) {
  const Fan fan = load_fan(path);
  require_complete(fan, cfg.seed);
  const auto cert = weak ? decide_weakly_normal(fan, cfg.seed) : decide_normal(fan, cfg.seed);
  if (!cert) {
    emit(cfg, {{"property", weak ? "weakly_normal" : "normal"}, {"holds", false}});
    return 1;
  }
  emit(cfg, io::certificate_to_json(fan, *cert));
  return 0;
}

int cmd_vertices(const RunConfig& cfg, const std::string& fan_path, const std::string& cert_path,
                 const std::string& check) {
  const Fan fan = load_fan(fan_path);
  const auto b = io::certificate_b_from_json(io::read_json_file(cert_path));
  if (b.size() != fan.ray_count())
    throw InputError(cert_path + ": b has " + std::to_string(b.size()) + " entries, fan has " +
                     std::to_string(fan.ray_count()) + " rays");
  if (!check.empty()) {
    const auto result = check_certificate(fan, b, check == "weak" ? NormalityMode::WeaklyNormal : NormalityMode::Normal);
    if (!result.ok) {
      emit(cfg, io::to_json(result));
      return 1;
    }
  }
  emit(cfg, io::certificate_to_json(fan, {b, fan_vertices(fan, b)}));
  return 0;
}

int cmd_lift(const RunConfig& cfg, const std::string& fan_path, const std::string& subspace) {
  const Fan fan = load_fan(fan_path);
  const auto h = load_subspace(subspace, fan.dim, "fan");
  const auto report = validate_construction_II(fan, h, cfg.seed);
  if (!report.valid) {
    emit(cfg, io::to_json(report));
    return 1;
  }
  emit(cfg, io::to_json(cox_batyrev_lift(fan, h, cfg.seed)));
  return 0;
}

int cmd_foliation(const RunConfig& cfg, const std::string& subspace, const std::string& fan_path) {
  if (fan_path.empty()) {
    emit(cfg, io::to_json(canonical_foliation(io::subspace_from_json(io::read_json_file(subspace)))));
    return 0;
  }
  const Fan fan = load_fan(fan_path);
  const auto h = load_subspace(subspace, fan.dim, "fan");
  emit(cfg, io::to_json(canonical_foliation(h, &fan)));
  return 0;
}

int cmd_divisor(const RunConfig& cfg, const std::string& complex_path, const std::string& subspace) {
  const auto k = io::complex_from_json(io::read_json_file(complex_path));
  const auto h = io::symbolic_subspace_from_json(io::read_json_file(subspace));
  if (h.ambient != k.vertices)
    throw InputError(subspace + ": subspace has m = " + std::to_string(h.ambient) + " but the complex needs m = " +
                     std::to_string(k.vertices));
  const auto d = divisor_hypotheses(k, h);
  emit(cfg, io::to_json(d));
  return d.simply_connected && d.generic_annihilator ? 0 : 1;
}

int cmd_tk_check(const RunConfig& cfg, const std::string& fan_path, const std::string& subspace,
                 const std::string& cert_path, std::size_t points, std::size_t k, const Tolerances& tol) {
  const Fan fan = load_fan(fan_path);
  const auto h = load_subspace(subspace, fan.dim, "fan");
  const auto report = validate_construction_II(fan, h, cfg.seed);
  if (!report.valid) {
    emit(cfg, io::to_json(report));
    return 1;
  }
  std::optional<RationalVector> b;
  if (!cert_path.empty()) b = io::certificate_b_from_json(io::read_json_file(cert_path));
  std::optional<TKSetup> setup;
  try {
    setup = prepare_tk(fan, h, b, cfg.seed);
  } catch (const std::domain_error& e) {
    emit(cfg, {{"passes", false}, {"obstruction", e.what()}});
    return 1;
  }
  auto out = io::to_json(tk_check(*setup, points, cfg.seed, tol, k, cfg.parallel));
  out["summary"]["backend"] = simd::backend_name(simd::dispatch().backend);
  emit(cfg, out);
  return out["summary"]["passes"].get<bool>() ? 0 : 1;
}

std::map<std::string, std::vector<std::pair<std::string, Json>>> example_files() {
  std::map<std::string, std::vector<std::pair<std::string, Json>>> out;
  out["hopf"] = {{"hopf_fan.json", io::to_json(catalog::hopf_fan())},
                 {"hopf_h.json", io::to_json(catalog::hopf_subspace())}};
  out["fulton7"] = {{"fulton7.json", io::to_json(catalog::fulton7_fan())}};
  out["cp2"] = {{"cp2.json", io::to_json(catalog::cp2_fan())}, {"cp2_h.json", io::to_json(ComplexSubspace::zero(2))}};
  out["cp1xcp1"] = {{"cp1xcp1.json", io::to_json(catalog::cp1xcp1_fan())},
                    {"cp1xcp1_h.json", io::to_json(ComplexSubspace::zero(2))}};
  out["moment-angle-cube"] = {{"moment_angle_cube_complex.json", io::to_json(catalog::moment_angle_cube_complex())},
                              {"moment_angle_cube_h.json", io::to_json(catalog::moment_angle_cube_subspace())}};
  const auto flip = catalog::coordinate_presentation(catalog::flip7_fan());
  out["flip7"] = {{"flip7.json", io::to_json(catalog::flip7_fan())},
                  {"flip7_presentation_fan.json", io::to_json(flip.fan)},
                  {"flip7_presentation_h.json", io::to_json(flip.h)}};
  return out;
}

int cmd_example(const RunConfig& cfg, const std::string& name, const std::string& dir) {
  const auto all = example_files();
  const auto it = all.find(name);
  if (it == all.end()) {
    std::string choices;
    for (const auto& [k, v] : all) choices += (choices.empty() ? "" : ", ") + k;
    throw InputError("unknown example '" + name + "'; choices: " + choices);
  }
  std::filesystem::create_directories(dir);
  Json written = Json::array();
  for (const auto& [file, content] : it->second) {
    const auto path = (std::filesystem::path(dir) / file).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError(path + ": cannot write file");
    out << io::dump(content);
    written.push_back(path);
  }
  emit(cfg, {{"example", name}, {"files", written}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact complex manifolds with maximal torus action: exact checks and numerics"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  std::string seed_text;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--seed", seed_text, "Seed (default 0xA11CE, or MAXTORUS_SEED)");
  app.add_flag("--parallel", cfg.parallel, "Run independent per-point checks concurrently");

  std::string a, b, c, construction, cert, fan_opt, check, dir = ".";
  bool weak = false;
  std::size_t points = 20, k = 2;
  Tolerances tol;
  std::function<int()> run;

  auto* vf = app.add_subcommand("validate-fan", "Fan axioms, cone predicates and completeness");
  vf->add_option("fan", a, "Fan JSON")->required();
  vf->callback([&] { run = [&] { return cmd_validate_fan(cfg, a); }; });

  auto* v = app.add_subcommand("validate", "Quotient construction I or II");
  v->add_option("construction", construction, "I or II")->required()->check(CLI::IsMember({"I", "II"}));
  v->add_option("data", a, "Complex JSON (I) or fan JSON (II)")->required();
  v->add_option("subspace", b, "Subspace JSON")->required();
  v->callback([&] { run = [&] { return cmd_validate(cfg, construction, a, b); }; });

  auto* n = app.add_subcommand("normality", "Decide normality of a complete simplicial fan");
  n->add_option("fan", a, "Fan JSON")->required();
  n->add_flag("--weak", weak, "Decide weak normality");
  n->callback([&] { run = [&] { return cmd_normality(cfg, a, weak); }; });

  auto* vx = app.add_subcommand("vertices", "Polytope vertices u_sigma(b) for a certificate");
  vx->add_option("fan", a, "Fan JSON")->required();
  vx->add_option("certificate", b, "Certificate JSON")->required();
  vx->add_option("--check", check, "Also check the certificate")->check(CLI::IsMember({"normal", "weak"}));
  vx->callback([&] { run = [&] { return cmd_vertices(cfg, a, b, check); }; });

  auto* l = app.add_subcommand("lift", "Present a construction II quotient as a construction I quotient");
  l->add_option("fan", a, "Fan JSON")->required();
  l->add_option("subspace", b, "Subspace JSON")->required();
  l->callback([&] { run = [&] { return cmd_lift(cfg, a, b); }; });

  auto* f = app.add_subcommand("foliation", "Canonical foliation data of a subspace");
  f->add_option("subspace", a, "Subspace JSON")->required();
  f->add_option("--fan", fan_opt, "Fan JSON for the consistency check");
  f->callback([&] { run = [&] { return cmd_foliation(cfg, a, fan_opt); }; });

  auto* d = app.add_subcommand("divisor-hypotheses", "Hypotheses of the divisor theorem");
  d->add_option("complex", a, "Complex JSON")->required();
  d->add_option("subspace", b, "Subspace JSON, symbolic allowed")->required();
  d->callback([&] { run = [&] { return cmd_divisor(cfg, a, b); }; });

  auto* t = app.add_subcommand("tk-check", "Numerical checks of the transverse-Kaehler potential");
  t->add_option("fan", a, "Fan JSON")->required();
  t->add_option("subspace", b, "Subspace JSON")->required();
  t->add_option("--certificate", cert, "Weak normality certificate JSON for q(fan)");
  t->add_option("--points", points, "Number of sample points")->check(CLI::Range(1, 100000));
  t->add_option("--k", k, "Smoothness class")->check(CLI::Range(1, 1000));
  t->add_option("--tol-kernel", tol.kernel, "Relative kernel tolerance")->check(CLI::PositiveNumber);
  t->add_option("--tol-angle", tol.angle, "Principal angle tolerance")->check(CLI::PositiveNumber);
  t->add_option("--tol-cocycle", tol.cocycle, "Cocycle tolerance")->check(CLI::PositiveNumber);
  t->add_option("--tol-fd", tol.fd, "Finite-difference tolerance")->check(CLI::PositiveNumber);
  t->callback([&] { run = [&] { return cmd_tk_check(cfg, a, b, cert, points, k, tol); }; });

  auto* e = app.add_subcommand("example", "Write bundled instance files");
  e->add_option("name", c, "hopf, fulton7, cp2, cp1xcp1, moment-angle-cube, flip7")->required();
  e->add_option("--out", dir, "Output directory");
  e->callback([&] { run = [&] { return cmd_example(cfg, c, dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (const char* env = std::getenv("MAXTORUS_SEED")) cfg.seed = parse_seed(env, "MAXTORUS_SEED");
    if (!seed_text.empty()) cfg.seed = parse_seed(seed_text, "--seed");
    return run();
  } catch (const InputError& err) {
    std::cerr << "error: " << err.what() << "\n";
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
  } catch (const std::domain_error& err) {
    std::cerr << "error: " << err.what() << "\n";
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << "\n";
  }
  return 2;
}
