// Acceptance gate: one line per criterion, exit 0 only if all six pass.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gau/p5.hpp"
#include "gau/radical.hpp"
#include "gau/report.hpp"
#include "gau/units.hpp"
#include "gau/wedderburn.hpp"
#include "test_util.hpp"

using namespace gau;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// Wall-clock bounds for the full matrix, pinned here.
constexpr double kPerCaseBudgetMs = 5000.0;
constexpr double kTotalBudgetMs = 120000.0;

bool criterion_reference_table(std::string& note) {
  GroupTable G = build_group("C3xD10");
  double total = 0, worst = 0;
  int done = 0;
  for (auto [p, k] : theorem_cases()) {
    auto t0 = Clock::now();
    Fq F = Fq::make(p, std::uint32_t(k));
    UnitReport r = structure_report(G, F);  // cross-checks both routes internally
    PredictedCase pc = predicted_c3xd10(p, k);
    double ms = ms_since(t0);
    total += ms;
    worst = std::max(worst, ms);
    if (!(r.dec == pc.dec) || r.radical_dim != pc.radical_dim ||
        r.nilpotency != pc.nilpotency) {
      note = "GF(" + std::to_string(F.q()) + ") disagrees with the table";
      return false;
    }
    if (r.unit_order != unit_group_order(pc.dec, pc.radical_dim, F.q())) {
      note = "GF(" + std::to_string(F.q()) + ") unit order mismatch";
      return false;
    }
    if (ms > kPerCaseBudgetMs) {
      note = "GF(" + std::to_string(F.q()) + ") took " + std::to_string(ms) + " ms";
      return false;
    }
    ++done;
  }
  if (total > kTotalBudgetMs) {
    note = "matrix took " + std::to_string(total) + " ms";
    return false;
  }
  std::ostringstream os;
  os << done << " cases, worst " << int(worst) << " ms, total " << int(total) << " ms";
  note = os.str();
  return true;
}

bool criterion_radicals(std::string& note) {
  GroupTable G = build_group("C3xD10");

  for (int k = 1; k <= 4; ++k) {
    GroupAlgebra A(Fq::make(2, std::uint32_t(k)), G);
    Algebra alg = algebra_of(A);
    Subspace J = jacobson_radical(alg);
    if (J.dim() != 3 || nilpotency_index(J, alg) != 2) {
      note = "GF(2^" + std::to_string(k) + ")";
      return false;
    }
    GroupAlgebra::Elt opx = A.add(A.one(), A.basis(A.G.generator("x")));
    GroupAlgebra::Elt yhat = A.hat(subgroup_generated(G, {G.generator("y")}));
    std::vector<std::vector<Fe>> rows;
    for (int i = 0; i < 3; ++i)
      rows.push_back(A.mul(A.mul(opx, yhat),
                           A.basis(G.pow(G.generator("z"), std::uint64_t(i)))));
    Subspace S = span_of(A.F, 30, rows);
    if (!subspaces_equal(J, S, A.F)) {
      note = "GF(2^" + std::to_string(k) + ") span mismatch";
      return false;
    }
  }

  for (int k = 1; k <= 2; ++k) {
    GroupAlgebra A(Fq::make(5, std::uint32_t(k)), G);
    Algebra alg = algebra_of(A);
    Subspace J = jacobson_radical(alg);
    if (J.dim() != 24 || nilpotency_index(J, alg) != 5) {
      note = "GF(5^" + std::to_string(k) + ")";
      return false;
    }
    InducedMap m = induced_quotient_map(A, subgroup_generated(G, {G.generator("y")}));
    if (!subspaces_equal(J, m.kernel, A.F)) {
      note = "GF(5^" + std::to_string(k) + ") kernel mismatch";
      return false;
    }
  }

  for (std::uint64_t p : {7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) {
    GroupAlgebra A(Fq::make(p, 1), G);
    if (jacobson_radical(algebra_of(A)).dim() != 0) {
      note = "GF(" + std::to_string(p) + ") not semisimple";
      return false;
    }
  }
  note = "characteristic 2 (k<=4), 5 (k<=2), and eight semisimple primes";
  return true;
}

bool criterion_p5(std::string& note) {
  const std::vector<std::pair<std::string, int>> want = {
      {"R", 1}, {"C_V(R)", 21}, {"S", 15}, {"T", 12},
      {"U", 6}, {"M", 3},       {"Z(V)", 9}, {"C_V(y)", 15}};
  for (int k = 1; k <= 2; ++k) {
    P5Report rep = verify_p5_structure(Fq::make(5, std::uint32_t(k)), 0);
    if (!rep.passed()) {
      for (const auto& s : rep.steps)
        if (!s.ok()) {
          note = "GF(5^" + std::to_string(k) + ") step " + std::to_string(s.step) +
                 ": " + s.first_witness();
          return false;
        }
      return false;
    }
    for (auto [name, d] : want)
      if (rep.dim_of(name) != d) {
        note = "GF(5^" + std::to_string(k) + ") dim " + name;
        return false;
      }
    // the sampled sweeps really ran at their pinned sizes
    bool saw100 = false, saw200 = false;
    for (const auto& s : rep.steps)
      for (const auto& c : s.checks) {
        if (c.what.find("100/100") != std::string::npos) saw100 = true;
        if (c.what.find("200/200") != std::string::npos) saw200 = true;
      }
    if (!saw100 || !saw200) {
      note = "GF(5^" + std::to_string(k) + ") sweep sizes not attested";
      return false;
    }
  }
  note = "six steps over GF(5) and GF(25), dims and sweeps verified";
  return true;
}

bool criterion_oracle(std::string& note) {
  SuiteResult s = run_oracle_suite(0);
  int n = 0;
  bool c6 = false;
  for (const auto& c : s.cases) {
    if (!c.passed) {
      note = c.name + ": " + c.detail;
      return false;
    }
    if (c.name == "C6 over GF(2)" && c.detail == "units 24") c6 = true;
    ++n;
  }
  if (n < 20 || !c6) {
    note = "only " + std::to_string(n) + " cases";
    return false;
  }
  note = std::to_string(n) + " brute-force comparisons";
  return true;
}

bool criterion_cross_groups(std::string& note) {
  static const std::vector<std::string> groups = {"C2",  "C3",    "C5",  "C6",
                                                  "C15", "C2xC2", "D10", "C3xD10"};
  static const std::vector<std::pair<std::uint64_t, int>> fields = {{2, 2}, {7, 1}, {3, 2}};
  int n = 0;
  for (const auto& spec : groups) {
    GroupTable G = build_group(spec);
    int classes = conjugacy_classes(G).count();
    for (auto [p, k] : fields) {
      Fq F = Fq::make(p, std::uint32_t(k));
      GroupAlgebra GA(F, G);
      Algebra A = algebra_of(GA);
      Subspace J = jacobson_radical(A);
      Decomposition central = central_decomposition(quotient_algebra(A, J).alg);
      Decomposition counted = ferraz_decomposition(G, F, J.dim());
      if (!(central == counted)) {
        note = spec + " over GF(" + std::to_string(F.q()) + "): routes disagree";
        return false;
      }
      FerrazData fd = cyclotomic_classes(G, p, F.q());
      if (int(fd.orbits.size()) != counted.r) {
        note = spec + " over GF(" + std::to_string(F.q()) + "): orbit count vs r";
        return false;
      }
      if (center_basis(GA).dim() != classes) {
        note = spec + " over GF(" + std::to_string(F.q()) + "): center dimension";
        return false;
      }
      ++n;
    }
  }
  if (n < 20) {
    note = "only " + std::to_string(n) + " pairs";
    return false;
  }
  note = std::to_string(n) + " (group, field) pairs, both routes + center dims";
  return true;
}

#ifdef GAU_CLI_PATH
std::pair<std::string, int> capture(const std::string& args) {
  std::string cmd = std::string("\"") + GAU_CLI_PATH + "\" " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

bool criterion_cli(std::string& note) {
  auto [out1, code1] = capture("verify --suite theorem --seed 0 --format json");
  auto [out2, code2] = capture("verify --suite theorem --seed 0 --format json");
  if (code1 != 0 || code2 != 0) {
    note = "exit codes " + std::to_string(code1) + ", " + std::to_string(code2);
    return false;
  }
  if (out1 != out2 || out1.empty()) {
    note = "outputs differ across runs";
    return false;
  }
  note = "two CLI runs byte-identical, exit 0";
  return true;
}
#else
bool criterion_cli(std::string& note) {
  std::string a = suite_json(run_theorem_suite(0));
  std::string b = suite_json(run_theorem_suite(0));
  if (a != b || a.empty()) {
    note = "suite json differs across runs";
    return false;
  }
  note = "in-process suite json byte-identical (CLI not built)";
  return true;
}
#endif

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
      {"reference table matrix (15 cases, both routes, orders, timing)",
       criterion_reference_table},
      {"radical dimensions and closed forms", criterion_radicals},
      {"characteristic-5 subgroup ladder", criterion_p5},
      {"brute-force unit count oracle", criterion_oracle},
      {"cross-group decomposition consistency", criterion_cross_groups},
      {"deterministic CLI verification", criterion_cli},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = criteria[i].second(note);
    } catch (const error& e) {
      note = std::string("error: ") + e.what();
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": "
              << criteria[i].first << (note.empty() ? "" : " [" + note + "]")
              << std::endl;
  }
  std::cout << (failures == 0 ? "ACCEPTED" : "REJECTED") << ": " << (criteria.size() - failures)
            << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
