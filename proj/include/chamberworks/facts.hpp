#pragma once

#include "chamberworks/json_io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace chamberworks {

struct FactResult {
  std::string id;
  std::string anchor; // human-readable statement of the checked fact
  bool pass = false;
  std::string computed;
  std::string expected;
};

struct FactReport {
  std::string complex_name;
  std::vector<FactResult> facts;
  bool all_pass = true;
};

/// Collector used by the per-type fact suites.
class FactSink {
public:
  explicit FactSink(std::string complex_name) {
    report_.complex_name = std::move(complex_name);
  }

  void check(const std::string& id, const std::string& anchor,
             const std::string& computed, const std::string& expected) {
    FactResult r{id, anchor, computed == expected, computed, expected};
    report_.all_pass = report_.all_pass && r.pass;
    report_.facts.push_back(std::move(r));
  }
  void check_bool(const std::string& id, const std::string& anchor, bool ok,
                  const std::string& detail = "") {
    FactResult r{id, anchor, ok, detail.empty() ? (ok ? "true" : "false") : detail,
                 detail.empty() ? "true" : detail};
    if (!ok && !detail.empty()) r.expected = "(see anchor)";
    report_.all_pass = report_.all_pass && ok;
    report_.facts.push_back(std::move(r));
  }
  /// Computed-only entry (published, not asserted).
  void publish(const std::string& id, const std::string& anchor,
               const std::string& computed) {
    report_.facts.push_back({id, anchor, true, computed, "(published)"});
  }

  FactReport take() { return std::move(report_); }

private:
  FactReport report_;
};

FactReport run_facts_f4();
FactReport run_facts_e6();
FactReport run_facts_classical(const std::string& family, int rank);
/// The feature-gated E7 remark check (singular circle with trivial
/// induced Weyl group but induced antipodal involution).
FactReport run_facts_e7_remark();

/// Dispatcher used by the CLI: family in {a,b,d,f4,e6,e7}.
FactReport run_facts(const std::string& family, int rank, bool e7_remark);

ordered_json facts_to_json(const FactReport& r);

// shared helpers for the fact suites and the acceptance tests
std::string angles_to_string(const std::vector<ExactAngle>& as);
std::string angle_name(const ExactAngle& a);

namespace facts_detail {
std::string involution_string(const RootSystem& rs);
std::vector<int> vertices_of_type(const ComplexLattice& cc, int label);
std::string seg_string(const ComplexLattice& cc, const Vec& x, const Vec& y);
void check_pair_transitivity(FactSink& sink, const ComplexLattice& cc,
                             const std::string& fact_prefix, int label);
} // namespace facts_detail

} // namespace chamberworks
