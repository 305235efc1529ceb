#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "mixedmeans/verify.hpp"

namespace mixedmeans {

namespace {

std::vector<PowerSeries> test_family() {
  return {
      PowerSeries({0.0, 1.0}),
      PowerSeries::monomial(0.0, 1.0, 2),
      PowerSeries::monomial(0.0, 1.0, 3),
      PowerSeries({0.0, 1.0, 0.5}),
      PowerSeries({8.0, 12.0, 6.0, 1.0}),
  };
}

// Family plus a constant map and a scaled monomial, for the flat branches and
// the coefficient scaling.
std::vector<PowerSeries> extended_family() {
  auto fam = test_family();
  fam.push_back(PowerSeries({5.0}));
  fam.push_back(PowerSeries::monomial(2.0, 3.0, 2));
  return fam;
}

constexpr Kind kKinds[] = {Kind::Area, Kind::Length};
constexpr double kBetas[] = {0.0, 0.5, 1.0};

std::vector<RadiusPair> lipschitz_pairs() {
  std::vector<RadiusPair> pairs{{0.3, 0.7}, {0.2, 0.9}};
  const double pts[] = {0.1, 0.5, 0.8, 0.95, 0.99};
  for (std::size_t i = 0; i < std::size(pts); ++i) {
    for (std::size_t j = i + 1; j < std::size(pts); ++j) pairs.push_back({pts[i], pts[j]});
  }
  return pairs;
}

CheckReport errored(const std::string& id, const std::exception& e) {
  CheckReport r;
  r.check_id = id;
  r.status = CheckStatus::Fail;
  r.witnesses.push_back({"exception", 0.0, 1.0, 0.0, Relation::Equal});
  r.notes = e.what();
  return r;
}

}  // namespace

unsigned suite_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MIXEDMEANS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

std::vector<CheckReport> run_parallel(const std::vector<CheckTask>& tasks, unsigned max_threads) {
  if (max_threads == 0) max_threads = suite_threads();
  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (const std::exception& e) {
        results[i] = {errored("task." + std::to_string(i), e)};
      }
    }
  };
  const unsigned n = std::min<unsigned>(max_threads, static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::vector<CheckReport> out;
  for (auto& r : results) {
    for (auto& rep : r) out.push_back(std::move(rep));
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
    return a.check_id < b.check_id;
  });
  return out;
}

std::vector<CheckReport> run_default_suite() {
  std::vector<CheckTask> tasks;
  const auto grid = default_r_grid(50);

  for (Kind kind : kKinds) {
    for (const PowerSeries& f : extended_family()) {
      tasks.push_back([=] {
        std::vector<CheckReport> out{check_geometry_schwarz(kind, f, grid)};
        for (double beta : kBetas) out.push_back(check_ratio_monotone(kind, f, beta, grid));
        return out;
      });
      for (double alpha : {-3.0, -1.0, 0.0, 1.0, 2.0}) {
        tasks.push_back([=] {
          std::vector<CheckReport> out;
          for (double beta : kBetas) {
            const WeightParams p(alpha, beta);
            out.push_back(check_schwarz(kind, f, p, grid));
            out.push_back(check_monotone(kind, f, p, grid));
            out.push_back(check_small_radius_limit(kind, f, p));
            out.push_back(check_lipschitz(kind, f, p, lipschitz_pairs()));
            if (alpha <= -1.0) {
              out.push_back(check_limit_at_boundary(kind, f, p));
            } else {
              out.push_back(check_bounded_by_boundary_mean(kind, f, p, grid));
            }
          }
          return out;
        });
      }
      tasks.push_back([=] {
        std::vector<CheckReport> out;
        const double alphas[] = {-0.5, 0.0, 0.5, 1.0, 2.0};
        for (double beta : kBetas) out.push_back(check_alpha_decrease(kind, f, beta, alphas));
        return out;
      });
    }
    for (double beta : kBetas) {
      tasks.push_back([=] { return std::vector<CheckReport>{check_convexity_regimes(kind, beta)}; });
    }
  }
  for (const PowerSeries& f : test_family()) {
    tasks.push_back([=] { return std::vector<CheckReport>{check_isoperimetric(f, grid)}; });
  }
  tasks.push_back([] { return std::vector<CheckReport>{check_d_notation_properties()}; });
  tasks.push_back([] {
    // A map that is not univalent must produce a violation of the wedge test.
    CheckReport inner = check_univalence(UnivalenceCriterion::Wedge, PowerSeries({0.0, 1.0, 2.0}));
    CheckReport r;
    r.check_id = "lemma.univalence.detects[f=z+2z^2]";
    int violations = 0;
    for (const Witness& w : inner.witnesses) violations += w.violated() ? 1 : 0;
    r.witnesses.push_back({"violation witnesses", 0.0, static_cast<double>(violations), 0.0,
                           Relation::Above});
    r.status = r.witnesses.back().violated() ? CheckStatus::Fail : CheckStatus::Pass;
    r.notes = inner.notes;
    return std::vector<CheckReport>{r};
  });
  tasks.push_back([] { return reproduce_examples(); });
  return run_parallel(tasks);
}

}  // namespace mixedmeans
