// acceptance <spinhiggs-binary> <scratch-dir>
//
// One line per acceptance criterion. 1-9 run the check suite in process with
// seed 7 and per-criterion time budgets; 10 runs `spinhiggs check --seed 7`
// twice and compares the reports byte for byte.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spinhiggs/cli/check.hpp"

using namespace spinhiggs;
namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSeed = 7;
constexpr double kSuiteBudget = 180.0;

// seconds; 0 means no budget of its own
double budget(int id) {
  switch (id) {
    case 1: return 1.0;
    case 2: return 5.0;
    case 3: return 30.0;
    default: return 0.0;
  }
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

double run_check(const std::string& exe, const fs::path& dir, int& status) {
  const std::string cmd = "\"" + exe + "\" check --seed " + std::to_string(kSeed) + " --out \"" +
                          dir.string() + "\" > \"" + (dir.string() + ".stdout") + "\" 2>/dev/null";
  const auto t0 = std::chrono::steady_clock::now();
  status = std::system(cmd.c_str());
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance <spinhiggs-binary> <scratch-dir>\n";
    return 1;
  }
  const std::string exe = argv[1];
  const fs::path scratch = argv[2];
  fs::create_directories(scratch);

  bool all = true;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const CriterionResult r = run_criterion(id, kSeed);
    const double b = budget(id);
    const bool in_time = b == 0.0 || r.seconds < b;
    const bool ok = r.pass() && in_time;
    all = all && ok;
    double worst = 0.0;
    std::string worst_name;
    for (const auto& c : r.checks) {
      if (!c.pass()) {
        worst_name = c.name;
        worst = c.value;
        break;
      }
    }
    std::printf("criterion %d %s: %s (%zu checks, %.2f s", id, ok ? "PASS" : "FAIL", r.name.c_str(),
                r.checks.size(), r.seconds);
    if (b > 0.0) std::printf(", budget %.0f s", b);
    std::printf(")");
    if (!r.error.empty()) std::printf(" error: %s", r.error.c_str());
    if (!worst_name.empty()) std::printf(" first failure: %s = %.3g", worst_name.c_str(), worst);
    std::printf("\n");
  }

  int s1 = 0, s2 = 0;
  const double t1 = run_check(exe, scratch / "run1", s1);
  const double t2 = run_check(exe, scratch / "run2", s2);
  const std::string a = slurp(scratch / "run1" / "check.json");
  const std::string b = slurp(scratch / "run2" / "check.json");
  const bool same = !a.empty() && a == b;
  const bool fast = t1 < kSuiteBudget && t2 < kSuiteBudget;
  const bool ok10 = same && fast && s1 == 0 && s2 == 0;
  all = all && ok10;
  std::printf("criterion 10 %s: reproducibility (reports %s, %zu bytes, runs %.2f s and %.2f s, "
              "budget %.0f s, exit %d/%d)\n",
              ok10 ? "PASS" : "FAIL", same ? "identical" : "differ", a.size(), t1, t2, kSuiteBudget,
              s1, s2);
  return all ? 0 : 1;
}
