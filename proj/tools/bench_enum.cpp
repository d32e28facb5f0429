#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "abdarg/kernels.hpp"

// Times the OpenMP enumeration kernels against their serial reference twins
// on one large random instance each and checks that both variants agree.
// --quick shrinks the instances for use as a test smoke run.

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

abdarg::ArgumentationFramework random_af(int n, std::mt19937& rng) {
  std::vector<abdarg::ArgumentId> names;
  for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  std::vector<std::pair<abdarg::ArgumentId, abdarg::ArgumentId>> attacks;
  std::bernoulli_distribution attack(2.5 / n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (attack(rng)) attacks.emplace_back(names[i], names[j]);
    }
  }
  return abdarg::ArgumentationFramework(names, attacks);
}

abdarg::LogicProgram random_lp(int n, std::mt19937& rng) {
  std::vector<abdarg::Atom> atoms;
  for (int i = 0; i < n; ++i) atoms.push_back("x" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> body(0, 2);
  std::vector<abdarg::Rule> rules;
  for (int r = 0; r < 2 * n; ++r) {
    std::vector<abdarg::Atom> pos, neg;
    for (int k = body(rng); k > 0; --k) pos.push_back(atoms[pick(rng)]);
    for (int k = body(rng); k > 0; --k) neg.push_back(atoms[pick(rng)]);
    rules.push_back(abdarg::make_rule(atoms[pick(rng)], pos, neg));
  }
  return abdarg::LogicProgram(rules);
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--quick") quick = true;
  }
  std::mt19937 rng(20140818);
  bool ok = true;

  {
    const int n = quick ? 16 : 20;
    const auto af = random_af(n, rng);
    const auto tables = abdarg::kernels::af_tables(af);
    auto start = std::chrono::steady_clock::now();
    const auto serial = abdarg::kernels::complete_extension_masks_serial(tables);
    const double t_serial = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const auto parallel = abdarg::kernels::complete_extension_masks(tables);
    const double t_parallel = seconds_since(start);
    ok = ok && serial == parallel;
    std::printf(
        "complete extensions  n=%-2d attacks=%-3zu serial=%.3fs parallel=%.3fs "
        "speedup=%.2fx results=%s\n",
        n, af.attack_pairs().size(), t_serial, t_parallel,
        t_parallel > 0 ? t_serial / t_parallel : 0.0,
        serial == parallel ? "match" : "MISMATCH");
  }

  {
    const int n = quick ? 9 : 11;
    const auto lp = random_lp(n, rng);
    const auto tables = abdarg::kernels::lp_tables(lp);
    auto start = std::chrono::steady_clock::now();
    const auto serial = abdarg::kernels::partial_stable_masks_serial(tables);
    const double t_serial = seconds_since(start);
    start = std::chrono::steady_clock::now();
    const auto parallel = abdarg::kernels::partial_stable_masks(tables);
    const double t_parallel = seconds_since(start);
    ok = ok && serial == parallel;
    std::printf(
        "stable models        atoms=%-2d rules=%-3zu serial=%.3fs parallel=%.3fs "
        "speedup=%.2fx results=%s\n",
        n, lp.rules().size(), t_serial, t_parallel,
        t_parallel > 0 ? t_serial / t_parallel : 0.0,
        serial == parallel ? "match" : "MISMATCH");
  }

  return ok ? 0 : 1;
}
