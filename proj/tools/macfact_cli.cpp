#include <algorithm>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "macfact/identities.hpp"
#include "macfact/jack.hpp"
#include "macfact/macdonald.hpp"

using namespace macfact;
using nlohmann::json;

namespace {

/// Usage error tied to one flag; exit code 2.
struct FlagError : std::runtime_error {
  FlagError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

template <class F>
auto blame(const std::string& flag, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const FlagError&) {
    throw;
  } catch (const std::exception& e) {
    throw FlagError(flag, e.what());
  }
}

Field field_of(const std::string& spec) {
  if (spec.empty() || spec == "generic") return Field();
  return blame("--spec", [&] { return Field::special(SpecQT::parse(spec)); });
}

Composition index_of(const std::string& text, int nvars) {
  Composition v = blame("--index", [&] { return parse_composition(text); });
  if (nvars > kMaxVars) throw FlagError("--nvars", "arity overflow (at most " + std::to_string(kMaxVars) + " variables)");
  if (nvars > 0) {
    if (static_cast<int>(v.size()) > nvars)
      throw FlagError("--index", "has " + std::to_string(v.size()) + " entries but --nvars is " + std::to_string(nvars));
    v.resize(nvars, 0);
  }
  if (v.empty()) throw FlagError("--index", "empty index");
  if (static_cast<int>(v.size()) > kMaxVars) throw FlagError("--index", "arity overflow (at most " + std::to_string(kMaxVars) + " variables)");
  return v;
}

struct ComputeOpts {
  std::string kind = "E";
  std::string index;
  int nvars = 0;
  std::string spec;
  std::string alpha;
  std::string format = "text";
};

int run_compute(const ComputeOpts& o) {
  Composition v = index_of(o.index, o.nvars);
  FracPoly out;
  json meta{{"kind", o.kind}, {"index", composition_str(v)}};
  if (o.kind == "J") {
    if (o.alpha.empty()) throw FlagError("--alpha", "required for --kind J");
    if (!o.spec.empty()) throw FlagError("--spec", "not used with --kind J (give --alpha)");
    if (!is_partition(v)) throw FlagError("--index", "Jack polynomials need a partition");
    if (v.size() > 8) throw FlagError("--nvars", "arity overflow (Jack polynomials take at most 8 variables)");
    AlphaParam a = blame("--alpha", [&] { return AlphaParam::parse(o.alpha); });
    out = to_frac_poly(blame("--alpha", [&] { return jack(v, a); }));
    meta["alpha"] = a.str();
  } else {
    if (!o.alpha.empty()) throw FlagError("--alpha", "only used with --kind J");
    Kind k = blame("--kind", [&] { return parse_kind(o.kind); });
    Field f = field_of(o.spec);
    if (is_symmetric_kind(k) && !is_partition(v)) throw FlagError("--index", "symmetric kinds need a partition");
    auto r = blame("--index", [&] { return build(v, k, f); });
    out = r->monic();
    meta["field"] = f.str();
    meta["route"] = r->route;
  }
  if (o.format == "json") {
    json j = out.to_json();
    for (auto it = meta.begin(); it != meta.end(); ++it) j[it.key()] = it.value();
    std::cout << j.dump() << "\n";
  } else if (o.format == "latex") {
    std::cout << out.latex() << "\n";
  } else {
    std::cout << out.str() << "\n";
  }
  return 0;
}

struct VerifyOpts {
  std::string name;
  bool all = false;
  std::string params;
  std::string corpus;
  std::uint64_t seed = 1;
  bool slow = false;
  bool verbose = false;
};

int run_verify(const VerifyOpts& o) {
  std::string path = o.corpus.empty() ? default_corpus_path() : o.corpus;
  auto cases = blame("--corpus", [&] { return load_corpus(path); });
  json overrides = nullptr;
  if (!o.params.empty()) overrides = blame("--params", [&] { return parse_params(o.params); });
  std::vector<IdentityCase> chosen;
  if (o.all) {
    if (!o.params.empty()) throw FlagError("--params", "only valid with --case");
    for (const auto& c : cases)
      if (o.slow || !c.slow) chosen.push_back(c);
  } else {
    auto it = std::find_if(cases.begin(), cases.end(), [&](const IdentityCase& c) { return c.name == o.name; });
    if (it == cases.end()) throw FlagError("--case", "unknown case '" + o.name + "'");
    chosen.push_back(*it);
  }
  std::sort(chosen.begin(), chosen.end(), [](const IdentityCase& a, const IdentityCase& b) { return a.name < b.name; });
  bool failed = false, errored = false;
  for (const auto& c : chosen) {
    CaseReport r = run_case(c, overrides, o.seed);
    json j = r.to_json();
    if (!o.verbose) j.erase("checks");
    std::cout << j.dump() << std::endl;
    if (!r.error.empty()) {
      errored = true;
      std::cerr << r.error << "\n";
    } else if (!r.pass) {
      failed = true;
    }
  }
  return errored ? 2 : failed ? 1 : 0;
}

struct CheckOpts {
  std::string kind = "E";
  std::string index;
  std::string spec;
  int budget = 200;
};

int run_spectra(const CheckOpts& o) {
  Kind k = blame("--kind", [&] { return parse_kind(o.kind); });
  if (k != Kind::E && k != Kind::M) throw FlagError("--kind", "spectra takes E or M");
  Composition v = index_of(o.index, 0);
  SpectralReport r = blame("--index", [&] { return spectral_check(v, k, field_of(o.spec)); });
  for (std::size_t i = 0; i < r.expected.size(); ++i) {
    std::cout << (k == Kind::E ? "xi_" : "Xi_") << i + 1 << ": expected " << r.expected[i].str() << ", observed "
              << (r.eigenvalues[i] ? r.eigenvalues[i]->str() : "not an eigenvector") << "\n";
  }
  std::cout << (r.pass() ? "PASS" : "FAIL") << "\n";
  return r.pass() ? 0 : 1;
}

int run_vanishing(const CheckOpts& o) {
  Kind k = blame("--kind", [&] { return parse_kind(o.kind); });
  if (k != Kind::M && k != Kind::MS) throw FlagError("--kind", "vanishing takes M or MS");
  Composition v = index_of(o.index, 0);
  if (k == Kind::MS && !is_partition(v)) throw FlagError("--index", "MS needs a partition");
  VanishingReport r = blame("--index", [&] { return vanishing_check(v, k, field_of(o.spec), o.budget); });
  std::cout << r.points.size() << " points checked, " << r.violations.size() << " violations, "
            << (r.nonzero_at_index ? "nonzero" : "zero") << " at the index\n";
  for (const auto& w : r.violations) std::cout << "  nonzero at " << composition_str(w) << "\n";
  std::cout << (r.pass() ? "PASS" : "FAIL") << "\n";
  return r.pass() ? 0 : 1;
}

int run_list(const std::string& corpus) {
  auto cases = blame("--corpus", [&] { return load_corpus(corpus.empty() ? default_corpus_path() : corpus); });
  for (const auto& c : cases)
    std::cout << c.name << "\t" << c.family << (c.slow ? "\tslow" : "") << "\t" << c.description << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macdonald polynomials: construction, specialization and factorization checks"};
  app.require_subcommand(1);

  ComputeOpts co;
  auto* compute = app.add_subcommand("compute", "Print a polynomial, monic at x^index");
  compute->add_option("--kind", co.kind, "E, M, P, MS or J")->check(CLI::IsMember({"E", "M", "P", "MS", "J"}));
  compute->add_option("--index", co.index, "composition, e.g. [3,2] or [4,2^2,0^2]")->required();
  compute->add_option("--nvars", co.nvars, "number of variables (pads the index with zeros)")->check(CLI::PositiveNumber);
  compute->add_option("--spec", co.spec, "e.g. \"t=u; q=u^-3\" or \"t=u; q=zeta(2,1)*u^-2\"");
  compute->add_option("--alpha", co.alpha, "Jack parameter p/r");
  compute->add_option("--format", co.format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "Run identity cases; one JSON line per case");
  auto* case_opt = verify->add_option("--case", vo.name, "case name");
  auto* all_opt = verify->add_flag("--all", vo.all, "run every case (slow ones only with --slow)");
  case_opt->excludes(all_opt);
  verify->add_option("--params", vo.params, "override parameters, e.g. l=2,k=1,s=2,beta=1");
  verify->add_option("--corpus", vo.corpus, "corpus file");
  verify->add_option("--seed", vo.seed, "seed for randomized cases");
  verify->add_flag("--slow", vo.slow, "include slow cases in --all");
  verify->add_flag("--verbose", vo.verbose, "include per-check details");

  CheckOpts so;
  auto* spectra = app.add_subcommand("spectra", "Check Cherednik (E) or Knop-Cherednik (M) eigenvalues");
  spectra->add_option("--kind", so.kind, "E or M");
  spectra->add_option("--index", so.index, "composition")->required();
  spectra->add_option("--spec", so.spec, "specialization");

  CheckOpts vao;
  vao.kind = "M";
  auto* vanishing = app.add_subcommand("vanishing", "Check interpolation vanishing of M or MS");
  vanishing->add_option("--kind", vao.kind, "M or MS");
  vanishing->add_option("--index", vao.index, "composition")->required();
  vanishing->add_option("--spec", vao.spec, "specialization");
  vanishing->add_option("--budget", vao.budget, "maximum number of points")->check(CLI::PositiveNumber);

  std::string list_corpus;
  auto* list = app.add_subcommand("corpus-list", "List identity cases");
  list->add_option("--corpus", list_corpus, "corpus file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*compute) return run_compute(co);
    if (*verify) {
      if (!vo.all && vo.name.empty()) throw FlagError("--case", "give --case NAME or --all");
      return run_verify(vo);
    }
    if (*spectra) return run_spectra(so);
    if (*vanishing) return run_vanishing(vao);
    if (*list) return run_list(list_corpus);
  } catch (const FlagError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
