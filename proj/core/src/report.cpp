#include "gau/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

#include "gau/error.hpp"
#include "gau/group.hpp"
#include "gau/p5.hpp"

namespace gau {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kSchemaVersion = "0.1.0";

std::vector<int> sizes_ascending(const FerrazData& f) {
  std::vector<int> sizes = f.orbit_sizes();
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

ordered_json canonical_json(const UnitReport& r) {
  ordered_json j;
  ordered_json field;
  field["p"] = r.p;
  field["k"] = r.k;
  field["q"] = r.q;
  field["modulus"] = r.modulus;
  j["field"] = std::move(field);
  ordered_json group;
  group["spec"] = r.group_spec;
  group["order"] = r.group_order;
  j["group"] = std::move(group);
  j["radical_dim"] = r.radical_dim;
  j["nilpotency_index"] = r.nilpotency;
  ordered_json comps = ordered_json::array();
  for (const auto& c : r.dec.components) {
    ordered_json jc;
    jc["n"] = c.n;
    jc["d"] = c.d;
    jc["count"] = c.count;
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  j["unit_group_order"] = r.unit_order.str();
  j["structure"] = r.structure;
  j["case_label"] = r.case_label;
  ordered_json ferraz;
  ferraz["m"] = r.ferraz.m;
  ferraz["orbit_sizes"] = sizes_ascending(r.ferraz);
  j["ferraz"] = std::move(ferraz);
  return j;
}

}  // namespace

std::string report_json(const UnitReport& r) { return canonical_json(r).dump(2); }

std::string record_json(const UnitReport& r, double timing_ms) {
  ordered_json j = canonical_json(r);
  j["version"] = kSchemaVersion;
  j["timing_ms"] = timing_ms;
  return j.dump(2);
}

UnitReport report_from_json(const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    UnitReport r;
    r.p = j.at("field").at("p").get<std::uint64_t>();
    r.k = j.at("field").at("k").get<int>();
    r.q = j.at("field").at("q").get<std::uint64_t>();
    r.modulus = j.at("field").at("modulus").get<std::string>();
    r.group_spec = j.at("group").at("spec").get<std::string>();
    r.group_order = j.at("group").at("order").get<int>();
    r.radical_dim = j.at("radical_dim").get<int>();
    r.nilpotency = j.at("nilpotency_index").get<int>();
    int total = 0;
    for (const auto& jc : j.at("components")) {
      SimpleComponent c{jc.at("n").get<int>(), jc.at("d").get<int>(),
                        jc.at("count").get<int>()};
      r.dec.components.push_back(c);
      r.dec.r += c.count;
      if (c.n == 1) r.dec.s += c.count;
      total += c.n * c.n * c.d * c.count;
    }
    r.dec.total_dim = total;
    r.unit_order = BigInt(j.at("unit_group_order").get<std::string>());
    r.structure = j.at("structure").get<std::string>();
    r.case_label = j.at("case_label").get<std::string>();
    r.ferraz.m = j.at("ferraz").at("m").get<std::uint64_t>();
    // Only orbit sizes survive serialization; parsed reports carry
    // placeholder orbits of the right sizes.
    for (int s : j.at("ferraz").at("orbit_sizes").get<std::vector<int>>()) {
      if (s <= 0) fail(errc::parse, "orbit sizes must be positive");
      r.ferraz.orbits.emplace_back(std::size_t(s), -1);
    }
    return r;
  } catch (const error&) {
    throw;
  } catch (const std::exception& e) {
    fail(errc::parse, std::string("bad report json: ") + e.what());
  }
}

std::string report_text(const UnitReport& r) {
  std::string out;
  auto line = [&](const char* label, const std::string& value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%-12s", label);
    out += buf;
    out += value;
    out += '\n';
  };
  std::string fld = "GF(" + std::to_string(r.q) + ")";
  if (r.k > 1)
    fld += " = GF(" + std::to_string(r.p) + "^" + std::to_string(r.k) + ")";
  fld += ", modulus " + r.modulus;
  line("field", fld);
  line("group", r.group_spec + ", order " + std::to_string(r.group_order));
  line("radical", "dim " + std::to_string(r.radical_dim) + ", nilpotency index " +
                      std::to_string(r.nilpotency));
  std::string comps;
  for (const auto& c : r.dec.components) {
    if (!comps.empty()) comps += " + ";
    std::string base = c.d == 1 ? "F" : "F_" + std::to_string(c.d);
    std::string one = c.n == 1 ? base : "M(" + std::to_string(c.n) + ", " + base + ")";
    comps += one;
    if (c.count > 1) comps += "^" + std::to_string(c.count);
  }
  line("components", comps);
  line("unit order", r.unit_order.str());
  std::string orb = "m = " + std::to_string(r.ferraz.m) + ", orbit sizes";
  for (int s : sizes_ascending(r.ferraz)) orb += " " + std::to_string(s);
  line("cyclotomic", orb);
  line("case", r.case_label);
  if (!r.structure.empty()) line("structure", r.structure);
  return out;
}

bool SuiteResult::passed() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const SuiteCase& c) { return c.passed; });
}

const std::vector<std::pair<std::uint64_t, int>>& theorem_cases() {
  static const std::vector<std::pair<std::uint64_t, int>> cases = {
      {2, 1},  {2, 2},  {2, 3},  {2, 4},  {5, 1},  {5, 2},  {7, 1}, {7, 2},
      {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}};
  return cases;
}

SuiteResult run_theorem_suite(std::uint64_t seed) {
  SuiteResult out{"theorem", seed, {}};
  GroupTable G = build_group("C3xD10");
  for (auto [p, k] : theorem_cases()) {
    SuiteCase c;
    std::uint64_t q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    c.name = "GF(" + std::to_string(q) + ")";
    try {
      Fq F = Fq::make(p, std::uint32_t(k));
      UnitReport r = structure_report(G, F, seed);
      c.passed = true;
      c.detail = r.case_label + "; units " + r.unit_order.str();
    } catch (const error& e) {
      c.passed = false;
      c.detail = e.what();
    }
    out.cases.push_back(std::move(c));
  }
  return out;
}

SuiteResult run_p5_suite(std::uint64_t seed) {
  SuiteResult out{"p5", seed, {}};
  static const std::vector<std::pair<std::string, int>> expected = {
      {"V", 24}, {"R", 1},    {"C_V(R)", 21}, {"S", 15},     {"T", 12},
      {"U", 6},  {"M", 3},    {"Z(V)", 9},    {"C_V(y)", 15}};
  for (int k : {1, 2}) {
    std::string prefix = "GF(" + std::to_string(k == 1 ? 5 : 25) + ") ";
    try {
      P5Report rep = verify_p5_structure(Fq::make(5, std::uint32_t(k)), seed);
      for (const auto& st : rep.steps) {
        SuiteCase c;
        c.name = prefix + "step " + std::to_string(st.step) + ": " + st.label;
        c.passed = st.ok();
        c.detail = st.ok() ? "" : st.first_witness();
        out.cases.push_back(std::move(c));
      }
      SuiteCase dims;
      dims.name = prefix + "dimensions";
      dims.passed = true;
      for (const auto& [name, want] : expected) {
        if (rep.dim_of(name) != want) dims.passed = false;
        if (!dims.detail.empty()) dims.detail += ", ";
        dims.detail += name + " " + std::to_string(rep.dim_of(name));
      }
      out.cases.push_back(std::move(dims));
    } catch (const error& e) {
      out.cases.push_back({prefix + "suite", false, e.what()});
    }
  }
  return out;
}

SuiteResult run_oracle_suite(std::uint64_t seed) {
  SuiteResult out{"oracle", seed, {}};
  static const std::vector<std::string> groups = {"C2",     "C3",  "C5",
                                                  "C6",     "C2xC2", "D10"};
  static const std::vector<std::pair<std::uint64_t, int>> fields = {
      {2, 1}, {3, 1}, {2, 2}, {5, 1}};
  for (const auto& spec : groups) {
    GroupTable G = build_group(spec);
    for (auto [p, k] : fields) {
      std::uint64_t q = 1;
      for (int i = 0; i < k; ++i) q *= p;
      BigInt space = 1;
      for (int i = 0; i < G.order; ++i) space *= q;
      if (space > (BigInt(1) << 20)) continue;
      SuiteCase c;
      c.name = spec + " over GF(" + std::to_string(q) + ")";
      try {
        Fq F = Fq::make(p, std::uint32_t(k));
        UnitReport r = structure_report(G, F, seed);
        BigInt bf = brute_force_units(G, F);
        c.passed = bf == r.unit_order;
        c.detail = c.passed ? "units " + r.unit_order.str()
                            : "pipeline " + r.unit_order.str() + " vs brute force " +
                                  bf.str();
      } catch (const error& e) {
        c.passed = false;
        c.detail = e.what();
      }
      out.cases.push_back(std::move(c));
    }
  }
  return out;
}

std::string suite_json(const SuiteResult& s) {
  ordered_json j;
  j["suite"] = s.suite;
  j["seed"] = s.seed;
  j["passed"] = s.passed();
  ordered_json cases = ordered_json::array();
  for (const auto& c : s.cases) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["detail"] = c.detail;
    cases.push_back(std::move(jc));
  }
  j["cases"] = std::move(cases);
  return j.dump(2);
}

std::string suite_text(const SuiteResult& s) {
  std::size_t width = 0;
  for (const auto& c : s.cases) width = std::max(width, c.name.size());
  std::string out;
  int npass = 0;
  for (const auto& c : s.cases) {
    out += c.passed ? "PASS  " : "FAIL  ";
    out += c.name;
    out.append(width - c.name.size() + 2, ' ');
    out += c.detail;
    out += '\n';
    npass += c.passed;
  }
  out += "suite " + s.suite + ": " + std::to_string(npass) + "/" +
         std::to_string(s.cases.size()) + " cases passed\n";
  return out;
}

}  // namespace gau
