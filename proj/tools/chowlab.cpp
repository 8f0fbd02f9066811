// chowlab: command-line front end over the core library.
//
// Exit codes: 0 success, 1 failed check or exhausted budget, 2 usage error.

#include "chowlab/algebra.hpp"
#include "chowlab/errors.hpp"
#include "chowlab/finite_field.hpp"
#include "chowlab/grassmann.hpp"
#include "chowlab/invariant.hpp"
#include "chowlab/json_io.hpp"
#include "chowlab/motive.hpp"
#include "chowlab/suites.hpp"
#include "chowlab/weil.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace chowlab;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const json& j) { std::cout << j.dump() << '\n'; }

void need_args(const std::string& what, const std::vector<int>& args, std::size_t count) {
  if (args.size() != count)
    throw UsageError(what + " takes " + std::to_string(count) + " integer argument(s), got " +
                     std::to_string(args.size()));
}

std::uint32_t nonneg(int v, const std::string& name) {
  if (v < 0) throw UsageError(name + " must be nonnegative");
  return static_cast<std::uint32_t>(v);
}

Coefficients parse_coefficients(const std::string& s) {
  if (s == "Z") return Coefficients::Z;
  if (s == "F2") return Coefficients::F2;
  throw UsageError("coefficients must be Z or F2, got '" + s + "'");
}

// Inline JSON when it parses, otherwise a file path.
json load_json_argument(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (!j.is_discarded()) return j;
  std::ifstream in(text);
  if (!in) throw UsageError("'" + text + "' is neither JSON nor a readable file");
  j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw UsageError("file '" + text + "' does not contain valid JSON");
  return j;
}

// ---- poincare -------------------------------------------------------------

struct PoincareArgs {
  std::string kind;
  std::vector<int> values;
};

int cmd_poincare(const PoincareArgs& a) {
  PoincarePolynomial p;
  if (a.kind == "essential") {
    need_args("essential", a.values, 2);
    p = essential_poincare(a.values[0], a.values[1]);
  } else if (a.kind == "maxorth") {
    need_args("maxorth", a.values, 1);
    if (a.values[0] < 1) throw UsageError("maxorth needs N >= 1");
    p = poincare(max_orth_ring(static_cast<std::uint32_t>(a.values[0])));
  } else if (a.kind == "quadric") {
    need_args("quadric", a.values, 1);
    p = split_quadric_poincare(a.values[0]);
  } else if (a.kind == "orthcount") {
    need_args("orthcount", a.values, 2);
    p = orth_count_polynomial(a.values[0], a.values[1]);
  } else {
    throw UsageError("unknown polynomial kind '" + a.kind + "' (essential, maxorth, quadric, orthcount)");
  }
  emit(to_json(p));
  return 0;
}

// ---- presentation ---------------------------------------------------------

struct PresentationArgs {
  std::string kind;
  std::vector<int> values;
  std::string coefficients = "Z";
  std::optional<int> truncation;
};

AlgebraPresentation build_named(const PresentationArgs& a) {
  const Coefficients ring = parse_coefficients(a.coefficients);
  if (a.kind == "maxorth") {
    need_args("maxorth", a.values, 1);
    if (a.values[0] < 1) throw UsageError("maxorth needs N >= 1");
    return max_orth_ring(static_cast<std::uint32_t>(a.values[0]));
  }
  if (a.kind == "prevmaxorth") {
    need_args("prevmaxorth", a.values, 1);
    return prev_max_orth_ring(nonneg(a.values[0], "r")).ring;
  }
  if (a.kind == "oddmodel") {
    need_args("oddmodel", a.values, 1);
    return odd_norm_quotient_model(nonneg(a.values[0], "r"));
  }
  if (a.kind == "weil") {
    need_args("weil", a.values, 1);
    const std::uint32_t r = nonneg(a.values[0], "r");
    const std::uint32_t D = a.truncation ? nonneg(*a.truncation, "truncation") : 2 * r + 4;
    return build_double_bundle(r, ring, D).ring;
  }
  if (a.kind == "swap") {
    need_args("swap", a.values, 2);
    const std::uint32_t t = a.truncation ? nonneg(*a.truncation, "truncation") : 6;
    return swap_polynomial_ring(nonneg(a.values[0], "k"), nonneg(a.values[1], "r"), ring, t).ring;
  }
  throw UsageError("unknown presentation '" + a.kind + "' (maxorth, prevmaxorth, oddmodel, weil, swap)");
}

int cmd_presentation(const PresentationArgs& a) {
  const AlgebraPresentation p = build_named(a);
  emit({{"presentation", to_json(p)}, {"poincare", to_json(poincare(p))}});
  return 0;
}

// ---- decompose ------------------------------------------------------------

struct DecomposeArgs {
  int n = 0;
  int r = 0;
  std::optional<int> witt;
};

int cmd_decompose(const DecomposeArgs& a) {
  const Motive m = a.witt ? witt_decompose_whole(a.n, a.r, *a.witt) : decompose_step(a.n, a.r);
  json out = {{"n", a.n}, {"r", a.r}, {"dim", dim_unitary(a.n, a.r)}};
  if (a.witt) out["witt"] = *a.witt;
  out["poincare"] = to_json(m.realize());
  out["summands"] = m.to_json();
  out["residual"] = m.has_residual();
  emit(out);
  return 0;
}

// ---- annihilate -----------------------------------------------------------

struct AnnihilateArgs {
  std::optional<int> maxorth;
  std::optional<int> oddmodel;
  std::optional<std::string> presentation;
  std::string element;
  std::vector<std::string> subring;
};

int cmd_annihilate(const AnnihilateArgs& a) {
  const int sources = (a.maxorth ? 1 : 0) + (a.oddmodel ? 1 : 0) + (a.presentation ? 1 : 0);
  if (sources != 1) throw UsageError("give exactly one of --maxorth, --oddmodel, --presentation");

  std::optional<AlgebraPresentation> ring;
  if (a.maxorth) {
    if (*a.maxorth < 1) throw UsageError("--maxorth needs N >= 1");
    ring = max_orth_ring(static_cast<std::uint32_t>(*a.maxorth));
  } else if (a.oddmodel) {
    ring = odd_norm_quotient_model(nonneg(*a.oddmodel, "r"));
  } else {
    ring = presentation_from_json(load_json_argument(*a.presentation));
  }

  const Element x = parse_element(*ring, a.element);
  std::optional<SubringClosure> sub;
  if (!a.subring.empty()) {
    std::vector<Element> gens;
    for (const auto& g : a.subring) gens.push_back(parse_element(*ring, g));
    sub.emplace(*ring, std::move(gens));
  }
  const auto ann = annihilator(*ring, x, sub ? &*sub : nullptr);

  json comps = json::array();
  for (const auto& c : ann) {
    json basis = json::array();
    for (const auto& b : c.basis) basis.push_back(format(*ring, b));
    comps.push_back({{"degree", c.degree},
                     {"domain_dimension", c.domain_dimension},
                     {"image_rank", c.image_rank},
                     {"kernel_dimension", c.basis.size()},
                     {"basis", basis}});
  }
  emit({{"element", format(*ring, x)},
        {"subring", a.subring},
        {"components", comps},
        {"quotient_poincare", to_json(quotient_poincare(ann))}});
  return 0;
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
  std::optional<int> p;
  std::optional<int> n;
  std::vector<int> diag;
  std::optional<std::string> form;
  std::optional<int> hyperbolic;
  std::optional<int> r;
  std::optional<int> m;
  unsigned long long budget = kDefaultEnumerationBudget;
};

int cmd_count(const CountArgs& a) {
  if (a.r.has_value() == a.m.has_value()) throw UsageError("give exactly one of --r and --m");

  json out;
  if (a.hyperbolic) {
    if (!a.p || !a.m) throw UsageError("--hyperbolic needs --p and --m");
    const int N = *a.hyperbolic;
    if (N < 0) throw UsageError("--hyperbolic needs N >= 0");
    const auto q = QuadraticSpace::hyperbolic(nonneg(*a.p, "p"), static_cast<std::size_t>(N));
    out["count"] = count_singular(q, *a.m, a.budget);
    out["predicted"] = orth_count_polynomial(N, *a.m).evaluate(*a.p);
  } else {
    std::optional<HermitianSpace> h;
    if (a.form) {
      h.emplace(HermitianSpace::from_json(load_json_argument(*a.form)));
    } else {
      if (!a.p || !a.n) throw UsageError("need --form, --hyperbolic, or --p/--n/--diag");
      std::vector<std::uint32_t> d;
      if (a.diag.empty()) {
        d.assign(nonneg(*a.n, "n"), 1);
      } else {
        if (a.diag.size() != static_cast<std::size_t>(*a.n)) throw UsageError("--diag must have n entries");
        for (int v : a.diag) d.push_back(nonneg(v, "diag entry"));
      }
      h.emplace(nonneg(*a.p, "p"), std::move(d));
    }
    const int n = static_cast<int>(h->dimension());
    const std::int64_t p = h->field().p();
    if (a.r) {
      out["count"] = count_isotropic(*h, *a.r, a.budget);
      out["predicted"] = (*a.r >= 0 && *a.r <= n / 2) ? json(essential_poincare(n, *a.r).evaluate(p)) : json(0);
    } else {
      out["count"] = count_singular(trace_quadratic(*h), *a.m, a.budget);
      // The trace form is split exactly when n is even.
      out["predicted"] = n % 2 == 0 ? json(orth_count_polynomial(n, *a.m).evaluate(p)) : json(nullptr);
    }
  }
  out["budget"] = a.budget;
  emit(out);
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  SuiteOptions options;
  std::optional<std::string> parity;
  std::optional<std::string> output;
};

int cmd_verify(VerifyArgs a) {
  a.options.parity = a.parity;
  const SuiteResult res = run_suite(a.suite, a.options);
  const json j = res.to_json();
  if (a.output) {
    std::ofstream out(*a.output);
    if (!out) throw UsageError("cannot write '" + *a.output + "'");
    out << j.dump(2) << '\n';
  }
  emit(j);

  std::size_t failed = 0;
  std::size_t informational = 0;
  for (const auto& c : res.cases) {
    if (!c.pass) {
      ++failed;
      std::cerr << "FAIL " << c.id << '\n';
    }
    if (c.informational) ++informational;
  }
  std::ostringstream summary;
  summary.setf(std::ios::fixed);
  summary.precision(2);
  summary << res.suite << ": " << res.cases.size() << " cases, " << failed << " failed, " << informational
          << " informational, " << res.elapsed_seconds << " s -> " << (res.pass ? "PASS" : "FAIL");
  std::cerr << summary.str() << '\n';
  return res.pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chowlab: exact computations with Chow rings, motives and forms over finite fields"};
  app.require_subcommand(1);

  PoincareArgs pa;
  auto* poincare_cmd = app.add_subcommand("poincare", "print a Poincare polynomial as a coefficient array");
  poincare_cmd->add_option("kind", pa.kind, "essential | maxorth | quadric | orthcount")->required();
  poincare_cmd->add_option("values", pa.values, "integer parameters")->required();

  PresentationArgs pr;
  auto* pres_cmd = app.add_subcommand("presentation", "print a shipped presentation as JSON");
  pres_cmd->add_option("kind", pr.kind, "maxorth N | prevmaxorth r | oddmodel r | weil r | swap k r")->required();
  pres_cmd->add_option("values", pr.values, "integer parameters")->required();
  pres_cmd->add_option("--coefficients", pr.coefficients, "Z or F2 (weil, swap)")->capture_default_str();
  pres_cmd->add_option("--truncation", pr.truncation, "truncation degree (weil: 2r+4, swap: 6)");

  DecomposeArgs da;
  auto* dec_cmd = app.add_subcommand("decompose", "decompose the motive of a unitary grassmannian");
  dec_cmd->add_option("n", da.n, "hermitian dimension")->required();
  dec_cmd->add_option("r", da.r, "isotropic subspace dimension")->required();
  dec_cmd->add_option("--witt", da.witt, "Witt index of the form (whole-motive decomposition)");

  AnnihilateArgs aa;
  auto* ann_cmd = app.add_subcommand("annihilate", "annihilator of an element, degree by degree");
  ann_cmd->add_option("--maxorth", aa.maxorth, "use the maximal orthogonal grassmannian ring for N");
  ann_cmd->add_option("--oddmodel", aa.oddmodel, "use the odd quotient model for r");
  ann_cmd->add_option("--presentation", aa.presentation, "presentation JSON, inline or a file path");
  ann_cmd->add_option("--element", aa.element, "element such as 'e2*e4'")->required();
  ann_cmd->add_option("--subring", aa.subring, "generators of a subring to restrict to")->delimiter(',');

  CountArgs ca;
  auto* count_cmd = app.add_subcommand("count", "count isotropic or singular subspaces by enumeration");
  count_cmd->add_option("--p", ca.p, "prime of the base field");
  count_cmd->add_option("--n", ca.n, "hermitian dimension");
  count_cmd->add_option("--diag", ca.diag, "diagonal entries in F_p")->delimiter(',');
  count_cmd->add_option("--form", ca.form, "hermitian form JSON {p,n,diag}, inline or a file path");
  count_cmd->add_option("--hyperbolic", ca.hyperbolic, "split quadratic form of dimension 2N");
  count_cmd->add_option("--r", ca.r, "dimension of totally isotropic K-subspaces");
  count_cmd->add_option("--m", ca.m, "dimension of totally singular F-subspaces");
  count_cmd->add_option("--budget", ca.budget, "enumeration node budget")->capture_default_str();

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->add_option("suite", va.suite, "suite name")->required();
  verify_cmd->add_option("--max-n", va.options.max_n, "largest dimension")->capture_default_str();
  verify_cmd->add_option("--max-p", va.options.max_p, "largest prime")->capture_default_str();
  verify_cmd->add_option("--max-degree", va.options.max_degree, "largest degree")->capture_default_str();
  verify_cmd->add_option("--parity", va.parity, "even or odd (kvadrika)");
  verify_cmd->add_option("--threads", va.options.threads, "worker threads, 0 for automatic")->capture_default_str();
  verify_cmd->add_option("--budget", va.options.budget, "enumeration node budget")->capture_default_str();
  verify_cmd->add_option("--output", va.output, "also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*poincare_cmd) return cmd_poincare(pa);
    if (*pres_cmd) return cmd_presentation(pr);
    if (*dec_cmd) return cmd_decompose(da);
    if (*ann_cmd) return cmd_annihilate(aa);
    if (*count_cmd) return cmd_count(ca);
    if (*verify_cmd) return cmd_verify(va);
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << " (budget " << e.budget() << ")\n";
    return kExitFail;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PresentationError& e) {
    std::cerr << "presentation error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
