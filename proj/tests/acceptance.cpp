// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "rainbow/analysis.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/error.hpp"
#include "rainbow/exact_solver.hpp"
#include "test_support.hpp"

using namespace rainbow;
using namespace testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o, double secs) {
  std::printf("[%s] criterion %d: %s -- %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id,
              title.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool certificate_ok(const BoundCertificate& cert, int max_colors) {
  return cert.coloring && cert.verified && cert.colors_used() <= max_colors &&
         verify_rainbow_connected(cert.target_graph, *cert.coloring);
}

// First-theorem hypothesis on the complement of a connected g (n >= 2):
// diameter other than 2, 3 when connected, and not two components with one
// of them trivial when disconnected.
bool first_theorem_applies(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) return false;
  Graph h = complement(g);
  auto comps = components(h);
  if (comps.size() == 1) return *diameter(h) >= 4;
  return !(comps.size() == 2 && (comps[0].size() == 1 || comps[1].size() == 1));
}

// exact_rc cross-check of every certificate target with at most 16 edges
struct OracleCheck {
  ExactCache cache;
  long checked = 0, violations = 0;
  double secs = 0;

  void check(const BoundCertificate& cert) {
    const Graph& t = cert.target_graph;
    if (t.size() > SearchConfig{}.max_edges || !cert.coloring) return;
    auto start = Clock::now();
    auto r = cache.get(t);
    ++checked;
    if (!r.known() || *r.value > cert.colors_used() || *r.value < lower_bounds(t)) ++violations;
    secs += seconds_since(start);
  }
};

OracleCheck oracle;

Outcome criterion1(double& exhaustive_secs) {
  Outcome o;
  long tested = 0, bad = 0;
  auto start = Clock::now();
  const double oracle_start = oracle.secs;
  for (int n = 2; n <= 6; ++n)
    enumerate_graphs(n, first_theorem_applies, [&](const Graph& g) {
      auto cert = rc_upper_bound_driver(g);
      ++tested;
      if (!certificate_ok(cert, 4)) ++bad;
      oracle.check(cert);
    });
  // solver time is reported under the oracle criterion
  exhaustive_secs = seconds_since(start) - (oracle.secs - oracle_start);
  const double oracle_before = oracle.secs;

  long random_tested = 0, random_bad = 0;
  auto rstart = Clock::now();
  std::mt19937_64 rng(20250101);
  std::uniform_real_distribution<double> density(0.55, 0.95);
  for (int n = 7; n <= 12; ++n) {
    GraphSampler sampler(1000 + n);
    for (int done = 0; done < 10000;) {
      Graph g = sampler.gnp(n, density(rng));
      if (!first_theorem_applies(g)) continue;
      ++done;
      auto cert = rc_upper_bound_driver(g);
      ++random_tested;
      if (!certificate_ok(cert, 4)) ++random_bad;
      oracle.check(cert);
    }
  }
  const double random_secs = seconds_since(rstart) - (oracle.secs - oracle_before);
  o.pass = bad == 0 && random_bad == 0 && exhaustive_secs < 120 && random_secs < 600;
  o.detail = fmt("exhaustive n<=6: %ld graphs, %ld failures in %.1f s; random n=7..12: %ld "
                 "graphs, %ld failures in %.1f s",
                 tested, bad, exhaustive_secs, random_tested, random_bad, random_secs);
  return o;
}

Outcome criterion2() {
  Outcome o;
  long tested = 0, bad = 0;
  for (int n = 2; n <= 7; ++n)
    enumerate_graphs(
        n, [](const Graph& h) { return is_triangle_free(h) && is_connected(complement(h)); },
        [&](const Graph& h) {
          auto cert = rc_upper_bound_driver(complement(h));
          ++tested;
          if (!certificate_ok(cert, 6)) ++bad;
          oracle.check(cert);
        });
  o.pass = bad == 0;
  o.detail = fmt("%ld triangle-free complements on n<=7, %ld failures", tested, bad);
  return o;
}

Outcome criterion3() {
  Outcome o;
  o.pass = oracle.violations == 0 && oracle.checked > 0;
  o.detail = fmt("%ld certificates with m<=16 checked (%zu isomorphism classes solved in "
                 "%.1f s), %ld violations",
                 oracle.checked, oracle.cache.size(), oracle.secs, oracle.violations);
  return o;
}

Outcome criterion4() {
  Outcome o;
  long checked = 0, bad = 0;
  auto expect = [&](const Graph& g, int value) {
    ++checked;
    auto r = exact_rc(g);
    if (!r.known() || *r.value != value || rc_closed_form(g) != value) ++bad;
  };
  const int cycle_values[] = {2, 3, 3, 4, 4};
  for (int k = 4; k <= 8; ++k) expect(cycle(k), cycle_values[k - 4]);
  for (int n = 2; n <= 6; ++n)
    enumerate_graphs(n, [](const Graph& g) { return is_tree(g); },
                     [&](const Graph& g) { expect(g, g.size()); });
  for (int n = 2; n <= 6; ++n) expect(complete(n), 1);
  auto km = [](std::vector<int> sizes) { return complete_multipartite(sizes); };
  expect(km({2, 3}), 2);
  expect(km({2, 5}), 3);
  expect(km({3, 3}), 2);
  expect(km({1, 1, 4}), 2);
  o.pass = bad == 0;
  o.detail = fmt("%ld graphs, %ld mismatches", checked, bad);
  return o;
}

Outcome criterion5() {
  Outcome o;
  Graph g = complete_multipartite(std::vector<int>{2, 10});
  auto formula = rc_closed_form(g);
  auto cert = rc_upper_bound_driver(g);
  o.pass = formula == 4 && cert.colors_used() == 4 && certificate_ok(cert, 4) &&
           cert.witness.label == CaseLabel::PROP35_DISCONNECTED;
  o.detail = fmt("K_{2,10}: closed form %d, certificate %s with %d colours, verified=%d; "
                 "exact solver skipped (m=20 > 16), optimality taken from the complete "
                 "bipartite formula",
                 formula.value_or(-1), std::string(to_string(cert.witness.label)).c_str(),
                 cert.colors_used(), cert.verified ? 1 : 0);
  return o;
}

Outcome criterion6() {
  Outcome o;
  long tested = 0, bad = 0;
  for (int n = 4; n <= 8; ++n)
    for_each_labeled_tree(n, [&](const Graph& t) {
      if (*diameter(t) <= 2) return;  // star
      ++tested;
      auto cert = color_complement_of_tree(t);
      if (!certificate_ok(cert, 3)) ++bad;
    });
  o.pass = bad == 0;
  o.detail = fmt("%ld labelled non-star trees on n<=8, %ld failures", tested, bad);
  return o;
}

Outcome criterion7() {
  Outcome o;
  long tested = 0, with_bridges = 0, bad = 0;
  for (int n = 2; n <= 6; ++n)
    enumerate_graphs(n, [](const Graph& g) { return is_connected(g); }, [&](const Graph& g) {
      ++tested;
      auto r = oracle.cache.get(g);
      const int b = static_cast<int>(bridges(g).size());
      if (!r.known() || lower_bounds(g) > *r.value) ++bad;
      if (b >= 2) {
        ++with_bridges;
        if (*r.value < b) ++bad;
      }
    });
  o.pass = bad == 0;
  o.detail = fmt("%ld connected graphs (%ld with >=2 bridges), %ld violations", tested,
                 with_bridges, bad);
  return o;
}

Outcome criterion8() {
  Outcome o;
  long colorings = 0, bad = 0;
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 5; ++n)
    enumerate_graphs(n, [](const Graph& g) { return is_connected(g); }, [&](const Graph& g) {
      for (int i = 0; i < 20; ++i) {
        const int c = 1 + static_cast<int>(rng() % 4);
        std::vector<int> colors(g.size());
        for (int& x : colors) x = static_cast<int>(rng() % c);
        EdgeColoring col(g.order(), g.edges(), colors);
        NaivePaths naive(g, col);
        ++colorings;
        if (static_cast<bool>(verify_rainbow_connected(g, col)) != naive.rainbow_connected())
          ++bad;
      }
    });
  o.pass = bad == 0;
  o.detail = fmt("%ld random colourings, %ld disagreements", colorings, bad);
  return o;
}

Outcome criterion9() {
  // h: x - y, y joined to a 5-clique N2, N2 joined to z. Every N2 vertex has
  // complement degree 1, and h has diameter 3 with triangles.
  const int x = 0, y = 1, z = 7;
  std::vector<Edge> e{{x, y}};
  for (int a = 2; a <= 6; ++a) {
    e.push_back({y, a});
    e.push_back({a, z});
    for (int b = a + 1; b <= 6; ++b) e.push_back({a, b});
  }
  Graph h(8, e);
  Graph g = complement(h);
  auto cert = rc_upper_bound_driver(g);
  auto report = analyze(h);
  int pendant = 0;
  for (int c : cert.witness.pendant_layer_counts) pendant = std::max(pendant, c);
  Outcome o;
  o.pass = diameter(h) == 3 && is_connected(g) && cert.witness.label == CaseLabel::NO_BOUND &&
           !cert.coloring && cert.lower_bound >= 5 && pendant == 5;
  o.detail = fmt("diam(complement)=%d, case %s, pendant counts max %d, lower bound %d",
                 report.diameter.value_or(-1), std::string(to_string(cert.witness.label)).c_str(),
                 pendant, cert.lower_bound);
  return o;
}

void run(int id, const std::string& title, const std::function<Outcome()>& fn) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  report(id, title, o, seconds_since(start));
}

}  // namespace

int main() {
  double exhaustive_secs = 0;
  run(1, "first-theorem bound of 4", [&] { return criterion1(exhaustive_secs); });
  run(2, "triangle-free complement bound of 6", criterion2);
  run(3, "oracle agreement", criterion3);
  auto start4 = Clock::now();
  run(4, "closed-form agreement", [&] {
    auto o = criterion4();
    if (seconds_since(start4) >= 300) {
      o.pass = false;
      o.detail += " (over the 5 minute limit)";
    }
    return o;
  });
  run(5, "tightness at K_{2,10}", criterion5);
  run(6, "complements of non-star trees", criterion6);
  run(7, "lower bounds", criterion7);
  run(8, "verifier against path enumeration", criterion8);
  run(9, "unbounded-case reporting", criterion9);
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
