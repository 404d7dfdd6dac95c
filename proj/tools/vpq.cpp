#include "vpq/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct Globals {
  std::optional<std::string> p, q, backend, json;
  std::optional<long> window;
  std::optional<std::uint64_t> seed;
};

void set_if(vpq::Json& params, const std::string& key, const std::optional<std::string>& v) {
  if (v) params[key] = *v;
}

void set_if(vpq::Json& params, const std::string& key, const std::optional<long>& v) {
  if (v) params[key] = *v;
}

int emit(const vpq::SuiteResult& result, const Globals& g) {
  const std::string text = result.report.dump(2) + "\n";
  if (g.json) {
    std::ofstream out(*g.json);
    if (!out) {
      std::cerr << "vpq: cannot write " << *g.json << "\n";
      return 2;
    }
    out << text;
    const auto& t = result.report["totals"];
    std::cout << "checks " << t["checks"] << " checked " << t["checked"] << " failed " << t["failed"]
              << " findings " << t["findings"] << "\n";
  } else {
    std::cout << text;
  }
  return result.failed == 0 ? 0 : 1;
}

void apply_globals(vpq::SuiteConfig& cfg, const Globals& g) {
  if (g.p) cfg.p = *g.p;
  if (g.q) cfg.q = *g.q;
  if (g.backend) {
    if (*g.backend == "numeric") {
      cfg.backend = vpq::Backend::numeric;
    } else if (*g.backend == "symbolic") {
      cfg.backend = vpq::Backend::symbolic;
    } else {
      throw vpq::ConfigError("--backend: expected numeric or symbolic");
    }
  }
  if (g.seed) cfg.seed = *g.seed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the two-parameter deformed Virasoro algebra and its modules", "vpq"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vpq::kToolVersion));

  Globals g;
  auto add_globals = [&](CLI::App* sub, bool with_q) {
    sub->add_option("--p", g.p, "parameter p (rational)");
    if (with_q) sub->add_option("--q", g.q, "parameter q (rational)");
    sub->add_option("--backend", g.backend, "numeric|symbolic")->check(CLI::IsMember({"numeric", "symbolic"}));
    sub->add_option("--window", g.window, "index window");
    sub->add_option("--json", g.json, "write the JSON report to this path");
    sub->add_option("--seed", g.seed, "sampling seed");
  };

  vpq::CheckSpec spec;
  std::optional<std::string> a, b, family, filter, param, config_path, uq;
  std::optional<long> m, nmax, kmax, two_l, omega;

  auto* algebra = app.add_subcommand("verify-algebra", "skew-symmetry and Hom-Jacobi sweep");
  add_globals(algebra, true);

  auto* module = app.add_subcommand("verify-module", "module relations for a family");
  add_globals(module, true);
  module->add_option("--family", family, "family spec, e.g. mab:a=1/3,b=-2")->required();
  module->add_option("--nmax", nmax, "bound on |n|, |m|");
  module->add_option("--kmax", kmax, "bound on |k| (defaults to --window)");
  module->add_option("--filter", filter, "all|generators")->check(CLI::IsMember({"all", "generators"}));

  auto* sub = app.add_subcommand("submodules", "closed index sets of a module");
  add_globals(sub, true);
  sub->add_option("--family", family, "family spec")->required();

  auto* iso = app.add_subcommand("iso", "shifted parameters and intertwiner");
  add_globals(iso, true);
  iso->add_option("--a", a, "a (rational)")->required();
  iso->add_option("--b", b, "b (rational)")->required();
  iso->add_option("--m", m, "shift")->required();

  auto* classify = app.add_subcommand("classify", "degeneracy profile of Mab(a,b)");
  add_globals(classify, true);
  classify->add_option("--a", a, "a")->required();
  classify->add_option("--b", b, "b")->required();

  auto* audit = app.add_subcommand("audit-identities", "polynomial identity audit");
  add_globals(audit, true);
  audit->add_option("--a", a, "a (defaults to the symbol a)");
  audit->add_option("--b", b, "b (defaults to the symbol b)");

  auto* cases = app.add_subcommand("case-audit", "case constants and exceptional families");
  add_globals(cases, true);
  cases->add_option("--param", param, "family parameter (defaults to the symbol s)");

  auto* uqsl2 = app.add_subcommand("uqsl2", "finite-dimensional U_q(sl2) representation audit");
  add_globals(uqsl2, false);
  uqsl2->add_option("--two-l", two_l, "twice the highest weight")->required();
  uqsl2->add_option("--omega", omega, "+1 or -1")->check(CLI::IsMember({1L, -1L}));
  uqsl2->add_option("--q", uq, "q (rational)")->required();

  auto* suite = app.add_subcommand("suite", "run a suite configuration");
  add_globals(suite, true);
  suite->add_option("--config", config_path, "suite JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    vpq::SuiteConfig cfg;
    if (suite->parsed()) {
      cfg = vpq::load_suite_config(*config_path);
    } else {
      vpq::Json& ps = spec.params;
      if (algebra->parsed()) {
        spec.name = "verify-algebra";
        set_if(ps, "window", g.window);
      } else if (module->parsed()) {
        spec.name = "verify-module";
        set_if(ps, "family", family);
        set_if(ps, "nmax", nmax);
        set_if(ps, "kmax", kmax ? kmax : g.window);
        set_if(ps, "filter", filter);
      } else if (sub->parsed()) {
        spec.name = "submodules";
        set_if(ps, "family", family);
        set_if(ps, "window", g.window);
      } else if (iso->parsed()) {
        spec.name = "iso";
        set_if(ps, "a", a);
        set_if(ps, "b", b);
        set_if(ps, "m", m);
        set_if(ps, "window", g.window);
      } else if (classify->parsed()) {
        spec.name = "classify";
        set_if(ps, "a", a);
        set_if(ps, "b", b);
      } else if (audit->parsed()) {
        spec.name = "audit-identities";
        set_if(ps, "a", a);
        set_if(ps, "b", b);
      } else if (cases->parsed()) {
        spec.name = "case-audit";
        set_if(ps, "window", g.window);
        set_if(ps, "param", param);
      } else if (uqsl2->parsed()) {
        spec.name = "uqsl2";
        set_if(ps, "two_l", two_l);
        set_if(ps, "omega", omega);
        set_if(ps, "q", uq);
      }
      vpq::validate_check(spec);
      cfg.checks.push_back(spec);
    }
    apply_globals(cfg, g);
    return emit(vpq::run_suite(cfg), g);
  } catch (const vpq::ConfigError& e) {
    std::cerr << "vpq: " << e.what() << "\n";
    return 2;
  }
}
