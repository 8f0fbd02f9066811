#include "chowlab/suites.hpp"

#include "chowlab/errors.hpp"
#include "chowlab/finite_field.hpp"
#include "chowlab/grassmann.hpp"
#include "chowlab/invariant.hpp"
#include "chowlab/json_io.hpp"
#include "chowlab/motive.hpp"
#include "chowlab/weil.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <thread>

namespace chowlab {

namespace {

using Job = std::function<CaseResult()>;

CaseResult make_case(std::string id, nlohmann::json params, bool pass, nlohmann::json details = nlohmann::json::object()) {
  CaseResult c;
  c.id = std::move(id);
  c.params = std::move(params);
  c.pass = pass;
  c.details = std::move(details);
  return c;
}

std::vector<CaseResult> run_jobs(const std::vector<std::pair<std::string, Job>>& jobs, unsigned threads) {
  std::vector<CaseResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        results[i] = jobs[i].second();
      } catch (const ResourceError& e) {
        results[i] = make_case(jobs[i].first, {}, false, {{"error", e.what()}, {"budget", e.budget()}});
      } catch (const std::exception& e) {
        results[i] = make_case(jobs[i].first, {}, false, {{"error", e.what()}});
      }
      results[i].id = jobs[i].first;
    }
  };
  const unsigned n = worker_count(threads, jobs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });
  return results;
}

std::vector<std::uint32_t> primes_up_to(int max_p) {
  std::vector<std::uint32_t> out;
  for (int p = 2; p <= max_p; ++p) {
    bool prime = true;
    for (int d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime) out.push_back(static_cast<std::uint32_t>(p));
  }
  return out;
}

// All diagonals with entries in 1..p-1.
std::vector<std::vector<std::uint32_t>> diagonals(std::uint32_t p, int n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> d(static_cast<std::size_t>(n), 1);
  while (true) {
    out.push_back(d);
    std::size_t i = 0;
    while (i < d.size() && ++d[i] == p) d[i++] = 1;
    if (i == d.size()) break;
  }
  return out;
}

std::string diag_string(const std::vector<std::uint32_t>& d) {
  std::string s;
  for (auto x : d) s += std::to_string(x);
  return s;
}

nlohmann::json degree_failures(const CheckReport& rep) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : rep.degrees)
    if (!v.pass) out.push_back(v.d);
  return out;
}

const char* ring_tag(Coefficients c) { return c == Coefficients::Z ? "Z" : "F2"; }

// ---------------------------------------------------------------- suites

void lemma_s(const SuiteOptions& o, std::vector<std::pair<std::string, Job>>& jobs) {
  for (auto ring : {Coefficients::Z, Coefficients::F2})
    for (std::uint32_t r = 0; r <= 3; ++r)
      jobs.push_back({std::string("lemmaS/") + ring_tag(ring) + "/r=" + std::to_string(r), [=] {
                        auto [a, sigma] = swap_polynomial_ring(0, r, ring, o.max_degree);
                        std::vector<Element> gens;
                        for (std::uint32_t i = 1; i <= r; ++i)
                          gens.push_back(a.multiply(a.generator_element("a" + std::to_string(i)),
                                                    a.generator_element("b" + std::to_string(i))));
                        const auto rep = quotient_generation_check(sigma, a, gens, o.max_degree);
                        return make_case("", {{"r", r}, {"coefficients", ring_tag(ring)}, {"max_degree", o.max_degree}},
                                         rep.pass, {{"failing_degrees", degree_failures(rep)}});
                      }});
  jobs.push_back({"lemmaS/witness", [] {
                    const auto w = non_generation_witness();
                    const bool pass = !w.p_in_low_degree_subring && w.twice_p_in_low_degree_subring &&
                                      w.twice_p_in_norm_image;
                    return make_case("", {{"r", 3}, {"coefficients", "Z"}}, pass,
                                     {{"p", format(w.ring, w.p)},
                                      {"p_in_low_degree_subring", w.p_in_low_degree_subring},
                                      {"twice_p_in_low_degree_subring", w.twice_p_in_low_degree_subring},
                                      {"twice_p_in_norm_image", w.twice_p_in_norm_image},
                                      {"p_in_norm_image", w.p_in_norm_image}});
                  }});
}

void codim2(const SuiteOptions& o, std::vector<std::pair<std::string, Job>>& jobs) {
  for (auto ring : {Coefficients::Z, Coefficients::F2})
    for (std::uint32_t k = 0; k <= 1; ++k)
      for (std::uint32_t r = 0; r <= 3; ++r)
        jobs.push_back({std::string("codim2/") + ring_tag(ring) + "/k=" + std::to_string(k) + "/r=" + std::to_string(r),
                        [=] {
                          const auto rep = codim_le2_generation_check(k, r, o.max_degree, ring);
                          return make_case("",
                                           {{"k_fixed", k}, {"r", r}, {"coefficients", ring_tag(ring)},
                                            {"max_degree", o.max_degree}},
                                           rep.pass, {{"failing_degrees", degree_failures(rep)}});
                        }});
}

void weil(const SuiteOptions&, std::vector<std::pair<std::string, Job>>& jobs) {
  for (auto ring : {Coefficients::Z, Coefficients::F2})
    for (std::uint32_t r = 1; r <= 3; ++r) {
      const std::string tag = std::string(ring_tag(ring)) + "/r=" + std::to_string(r);
      const nlohmann::json params = {{"r", r}, {"D", 2 * r + 4}, {"coefficients", ring_tag(ring)}};
      jobs.push_back({"weil/relation/" + tag, [=] {
                        const auto R = build_double_bundle(r, ring, 2 * r + 4);
                        return make_case("", params, product_relation_check(R),
                                         {{"relation", format(R.ring, product_relation(R))}});
                      }});
      jobs.push_back({"weil/freeness/" + tag, [=] {
                        const auto R = build_double_bundle(r, ring, 2 * r + 4);
                        const auto rep = freeness_check(R);
                        return make_case("", params, rep.pass,
                                         {{"rank", rep.rank},
                                          {"spanning_failures", degree_failures(rep.spanning)},
                                          {"freeness_failures", degree_failures(rep.freeness)}});
                      }});
      jobs.push_back({"weil/base/" + tag, [=] {
                        const auto rep = base_generation_check(r, ring, 2 * r + 4);
                        return make_case("", params, rep.pass, {{"failing_degrees", degree_failures(rep)}});
                      }});
    }
  for (auto ring : {Coefficients::Z, Coefficients::F2})
    jobs.push_back({std::string("weil/mutation/") + ring_tag(ring) + "/r=2", [=] {
                      const auto R = build_double_bundle(2, ring, 8);
                      const auto rep = freeness_check(R, {R.ring.multiply(R.c, R.c)});
                      nlohmann::json witness = nullptr;
                      for (const auto& v : rep.freeness.degrees)
                        if (v.witness) {
                          witness = format(R.ring, *v.witness);
                          break;
                        }
                      return make_case("", {{"r", 2}, {"D", 8}, {"coefficients", ring_tag(ring)}, {"extra", "c^2"}},
                                       !rep.freeness.pass, {{"witness", witness}});
                    }});
}

void primerchik(const SuiteOptions&, std::vector<std::pair<std::string, Job>>& jobs) {
  for (std::uint32_t r = 1; r <= 3; ++r)
    jobs.push_back({"primerchik/r=" + std::to_string(r), [=] {
                      const auto q = isochow_quotient(2 * r, r);
                      std::vector<std::size_t> degs;
                      for (std::uint32_t i = 1; i <= r; ++i) degs.push_back(2 * i - 1);
                      const auto closed = PoincarePolynomial::exterior(degs);
                      const auto ess = essential_poincare(static_cast<int>(2 * r), static_cast<int>(r));
                      const bool squares = odd_generators_square_to_zero(r);
                      const bool unique = uniqueness_in_codim(2 * r, r);
                      const auto x = class_Xr(r, Parity::Even);
                      return make_case("", {{"r", r}}, q == closed && q == ess && squares && unique,
                                       {{"quotient", q.coefficients()},
                                        {"closed_form", q == closed},
                                        {"matches_essential", q == ess},
                                        {"odd_squares_vanish", squares},
                                        {"class", format(x.ring, x.cls)},
                                        {"class_unique", unique}});
                    }});
  for (std::uint32_t N = 2; N <= 7; ++N)
    jobs.push_back({"primerchik/maxorth/N=" + std::to_string(N), [=] {
                      const auto p = poincare(max_orth_ring(N));
                      const bool pass = p.rank() == (std::int64_t{1} << (N - 1)) && p.is_palindromic() &&
                                        p.degree() == static_cast<long>(N * (N - 1) / 2);
                      return make_case("", {{"N", N}}, pass, {{"poincare", p.coefficients()}});
                    }});
}

void odd911(const SuiteOptions&, std::vector<std::pair<std::string, Job>>& jobs) {
  for (std::uint32_t r = 1; r <= 2; ++r)
    jobs.push_back({"odd911/r=" + std::to_string(r), [=] {
                      auto c = make_case("", {{"r", r}}, true, odd_case_pipeline(r).to_json());
                      c.informational = true;
                      return c;
                    }});
}

void motives(const SuiteOptions&, std::vector<std::pair<std::string, Job>>& jobs) {
  for (int n = 0; n <= 12; ++n)
    for (int r = 0; r <= n / 2; ++r)
      jobs.push_back({"motives/essential/n=" + std::string(n < 10 ? "0" : "") + std::to_string(n) + "/r=" + std::to_string(r),
                      [=] {
                        const auto e = essential_poincare(n, r);
                        const auto dim = dim_unitary(n, r);
                        const bool pass = e[0] == 1 && e.degree() == dim && e[static_cast<std::size_t>(dim)] == 1 &&
                                          e.is_palindromic();
                        const auto whole = witt_decompose_whole(n, r, n / 2).realize();
                        return make_case("", {{"n", n}, {"r", r}}, pass && whole == e,
                                         {{"dim", dim}, {"poincare", e.coefficients()}});
                      }});
  for (int r = 1; r <= 4; ++r)
    jobs.push_back({"motives/closed/r=" + std::to_string(r), [=] {
                      std::vector<std::size_t> even_degs, odd_degs;
                      for (int i = 1; i <= r; ++i) {
                        even_degs.push_back(static_cast<std::size_t>(2 * i - 1));
                        odd_degs.push_back(static_cast<std::size_t>(2 * i + 1));
                      }
                      const bool even = essential_poincare(2 * r, r) == PoincarePolynomial::exterior(even_degs);
                      const bool odd = essential_poincare(2 * r + 1, r) == PoincarePolynomial::exterior(odd_degs);
                      return make_case("", {{"r", r}}, even && odd, {{"even", even}, {"odd", odd}});
                    }});
  for (int n = 2; n <= 20; n += 2)
    jobs.push_back({"motives/jinv/n=" + std::string(n < 10 ? "0" : "") + std::to_string(n), [=] {
                      return make_case("", {{"n", n}}, cd2_identity_check(n),
                                       {{"J", j_min(n)}, {"dim_X", dim_unitary(n, n / 2)}});
                    }});
}

void kvadrika(const SuiteOptions& o, std::vector<std::pair<std::string, Job>>& jobs) {
  const bool even = !o.parity || *o.parity == "even";
  const bool odd = !o.parity || *o.parity == "odd";
  for (int n = 2; n <= 10; ++n) {
    if ((n % 2 == 0 && !even) || (n % 2 == 1 && !odd)) continue;
    jobs.push_back({"kvadrika/n=" + std::string(n < 10 ? "0" : "") + std::to_string(n), [=] {
                      const auto rep = kvadrika_check(n);
                      auto details = rep.to_json();
                      if (!rep.binding)
                        details["residual_is_2q^(n-1)"] = rep.residual == Polynomial::monomial(static_cast<std::size_t>(n - 1), 2);
                      auto c = make_case("", {{"n", n}}, rep.pass, details);
                      c.informational = !rep.binding;
                      return c;
                    }});
  }
}

void dvamr(const SuiteOptions& o, std::vector<std::pair<std::string, Job>>& jobs) {
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r <= n / 2; ++r)
      jobs.push_back({"dvamr/n=" + std::string(n < 10 ? "0" : "") + std::to_string(n) + "/r=" + std::to_string(r), [=] {
                        const bool dominance = n <= o.max_n;
                        const auto rep = dvaMr_check(n, r, dominance);
                        return make_case("", {{"n", n}, {"r", r}, {"dominance", dominance}}, rep.pass, rep.to_json());
                      }});
}

void i2i(const SuiteOptions& o, std::vector<std::pair<std::string, Job>>& jobs) {
  for (auto p : primes_up_to(o.max_p))
    for (int n = 1; n <= o.max_n; ++n)
      for (const auto& d : diagonals(p, n))
        jobs.push_back({"i2i/p=" + std::to_string(p) + "/n=" + std::to_string(n) + "/diag=" + diag_string(d), [=] {
                          const HermitianSpace h(p, d);
                          const int ih = witt_index_hermitian(h, o.budget);
                          const int iq = witt_index_quadratic(trace_quadratic(h), o.budget);
                          const bool jac = jacobson_check(h, HermitianSpace(p, std::vector<std::uint32_t>(d.size(), 1)), o.budget);
                          return make_case("", h.to_json(), iq == 2 * ih && jac,
                                           {{"witt_hermitian", ih}, {"witt_quadratic", iq}, {"jacobson", jac}});
                        }});
}

void counts(const SuiteOptions& o, std::vector<std::pair<std::string, Job>>& jobs) {
  for (auto p : primes_up_to(o.max_p)) {
    for (int n = 1; n <= o.max_n; ++n)
      for (const auto& d : diagonals(p, n))
        for (int r = 0; r <= n / 2; ++r)
          jobs.push_back({"counts/hermitian/p=" + std::to_string(p) + "/n=" + std::to_string(n) + "/diag=" +
                              diag_string(d) + "/r=" + std::to_string(r),
                          [=] {
                            const auto count = count_isotropic(HermitianSpace(p, d), r, o.budget);
                            const auto predicted = essential_poincare(n, r).evaluate(p);
                            return make_case("", {{"p", p}, {"n", n}, {"diag", d}, {"r", r}},
                                             static_cast<std::int64_t>(count) == predicted,
                                             {{"count", count}, {"predicted", predicted}});
                          }});
    for (int N = 1; N <= std::min(3, o.max_n); ++N)
      for (int m = 0; m <= N; ++m)
        jobs.push_back({"counts/orthogonal/p=" + std::to_string(p) + "/N=" + std::to_string(N) + "/m=" + std::to_string(m),
                        [=] {
                          const auto count = count_singular(QuadraticSpace::hyperbolic(p, static_cast<std::size_t>(N)), m, o.budget);
                          const auto predicted = orth_count_polynomial(N, m).evaluate(p);
                          return make_case("", {{"p", p}, {"N", N}, {"m", m}},
                                           static_cast<std::int64_t>(count) == predicted,
                                           {{"count", count}, {"predicted", predicted}});
                        }});
  }
}

using Builder = void (*)(const SuiteOptions&, std::vector<std::pair<std::string, Job>>&);

const std::map<std::string, Builder>& builders() {
  static const std::map<std::string, Builder> b{
      {"lemmaS", lemma_s}, {"codim2", codim2},     {"weil", weil}, {"primerchik", primerchik},
      {"odd911", odd911},  {"motives", motives},   {"kvadrika", kvadrika}, {"dvamr", dvamr},
      {"i2i", i2i},        {"counts", counts}};
  return b;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemmaS", "codim2", "weil", "primerchik", "odd911", "motives",
                                              "kvadrika", "dvamr", "i2i", "counts", "all"};
  return names;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CHOWLAB_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  if (jobs < n) n = static_cast<unsigned>(std::max<std::size_t>(jobs, 1));
  return n;
}

nlohmann::json SuiteResult::to_json(bool with_elapsed) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cases)
    arr.push_back({{"id", c.id},
                   {"params", c.params},
                   {"pass", c.pass},
                   {"details", c.details},
                   {"informational", c.informational}});
  nlohmann::json j = {{"suite", suite}, {"cases", arr}, {"pass", pass}};
  if (with_elapsed) j["elapsed"] = elapsed_seconds;
  return j;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (options.max_n < 1 || options.max_p < 2 || options.max_degree < 1)
    throw UsageError("suite options need max-n >= 1, max-p >= 2, max-degree >= 1");
  if (options.parity && *options.parity != "even" && *options.parity != "odd")
    throw UsageError("parity must be 'even' or 'odd'");
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::string, Job>> jobs;
  if (name == "all") {
    for (const auto& [n, build] : builders()) build(options, jobs);
  } else {
    auto it = builders().find(name);
    if (it == builders().end()) throw UsageError("unknown suite '" + name + "'");
    it->second(options, jobs);
  }
  SuiteResult out;
  out.suite = name;
  out.cases = run_jobs(jobs, options.threads);
  for (const auto& c : out.cases) out.pass = out.pass && c.pass;
  out.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace chowlab
