#include "chamberworks/facts.hpp"

#include "chamberworks/aut.hpp"
#include "chamberworks/circle.hpp"
#include "chamberworks/geodesy.hpp"
#include "chamberworks/link.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace chamberworks {

std::string angle_name(const ExactAngle& a) {
  if (a.is_zero()) return "0";
  if (a.is_right()) return "pi/2";
  if (a.is_straight()) return "pi";
  if (a == ExactAngle(1, Rat(1, 4))) return "pi/3";
  if (a == ExactAngle(-1, Rat(1, 4))) return "2pi/3";
  if (a == ExactAngle(1, Rat(1, 2))) return "pi/4";
  if (a == ExactAngle(1, Rat(3, 4))) return "pi/6";
  std::ostringstream os;
  os << (a.cos_sign() < 0 ? "arccos(-sqrt(" : "arccos(sqrt(")
     << a.cos_squared().str() << "))";
  return os.str();
}

std::string angles_to_string(const std::vector<ExactAngle>& as) {
  std::string s = "{";
  for (std::size_t i = 0; i < as.size(); ++i) {
    if (i) s += ", ";
    s += angle_name(as[i]);
  }
  return s + "}";
}

namespace facts_detail {

std::string involution_string(const RootSystem& rs) {
  auto inv = canonical_involution(rs);
  std::string s;
  for (auto [a, b] : inv) {
    if (!s.empty()) s += " ";
    s += std::to_string(a) + "->" + std::to_string(b);
  }
  return s;
}

std::vector<int> vertices_of_type(const ComplexLattice& cc, int label) {
  std::vector<int> out;
  for (int v = 0; v < cc.num_vertices(); ++v)
    if (cc.vertex_label(v) == label) out.push_back(v);
  return out;
}

// the segment type string between two vertex rays, e.g. "121"
std::string seg_string(const ComplexLattice& cc, const Vec& x, const Vec& y) {
  SegmentTrace t = segment_trace(cc, x, y);
  if (!crossings_all_vertices(cc, t)) return "(non-singular trace)";
  return segment_type_string(cc, t);
}

// all distance classes of type-b vertices around the fundamental type-a
// vertex are single Stab-orbits, and the segment strings per class match
void check_pair_transitivity(FactSink& sink, const ComplexLattice& cc,
                             const std::string& fact_prefix, int label) {
  int base = cc.vertex_id(cc.rs().fundamental_vertex(label));
  std::map<ExactAngle, std::vector<int>, std::less<ExactAngle>> classes;
  for (int v : vertices_of_type(cc, label))
    if (v != base) classes[angle(cc.vertex_ray(base), cc.vertex_ray(v))].push_back(v);
  bool all = true;
  for (auto& [d, cls] : classes)
    if (!distance_class_transitive(cc, base, cls)) all = false;
  sink.check_bool(fact_prefix + ".pair_transitivity." + std::to_string(label) +
                      std::to_string(label),
                  "pairs of type-" + std::to_string(label) +
                      " vertices at equal distance are Weyl-equivalent "
                      "(distance classes are single stabilizer orbits)",
                  all);
}

} // namespace facts_detail

FactReport run_facts(const std::string& family, int rank, bool e7_remark) {
  std::string f = family;
  for (char& c : f) c = (char)std::tolower(c);
  if (f == "f4") return run_facts_f4();
  if (f == "e6") return run_facts_e6();
  if (f == "e7") {
    if (!e7_remark)
      throw std::invalid_argument(
          "E7 facts are limited to the --remark-circle check");
    return run_facts_e7_remark();
  }
  if (f == "a" || f == "b" || f == "d") {
    std::string fam;
    fam += (char)std::toupper(f[0]);
    return run_facts_classical(fam, rank);
  }
  throw std::invalid_argument("no fact suite for " + family);
}

ordered_json facts_to_json(const FactReport& r) {
  ordered_json j;
  j["complex"] = r.complex_name;
  j["all_pass"] = r.all_pass;
  ordered_json fs = ordered_json::array();
  for (const FactResult& f : r.facts) {
    ordered_json e;
    e["id"] = f.id;
    e["anchor"] = f.anchor;
    e["status"] = f.pass ? "pass" : "fail";
    e["computed"] = f.computed;
    e["expected"] = f.expected;
    fs.push_back(e);
  }
  j["facts"] = fs;
  return j;
}

} // namespace chamberworks
