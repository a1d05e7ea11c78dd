#include "chamberworks/json_io.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace chamberworks {

ordered_json complex_to_json(const ComplexLattice& cc) {
  ordered_json j;
  j["complex"] = cc.rs().family;
  j["rank"] = cc.rs().rank;
  j["ambient_dim"] = cc.rs().ambient;
  j["dim"] = cc.dim();
  j["weyl_order"] = cc.num_chambers();
  ordered_json vs = ordered_json::array();
  for (int v = 0; v < cc.num_vertices(); ++v) {
    ordered_json entry;
    ordered_json coords = ordered_json::array();
    for (int i = 0; i < cc.rs().ambient; ++i)
      coords.push_back(cc.vertex_ray(v)[i].num()); // canonical rays are integer
    entry["coords"] = coords;
    entry["type"] = cc.vertex_label(v);
    vs.push_back(entry);
  }
  j["vertices"] = vs;
  ordered_json fs = ordered_json::array();
  for (int f = 0; f < cc.num_faces(); ++f) {
    ordered_json ids = ordered_json::array();
    for (std::int32_t v : cc.face_vertices(f)) ids.push_back(v);
    fs.push_back(ids);
  }
  j["faces"] = fs;
  ordered_json ws = ordered_json::array();
  for (int w = 0; w < cc.num_walls(); ++w) {
    ordered_json coords = ordered_json::array();
    for (int i = 0; i < cc.rs().ambient; ++i)
      coords.push_back(cc.wall_normal(w)[i].num());
    ws.push_back(coords);
  }
  j["walls"] = ws;
  return j;
}

ordered_json subcomplex_to_json(const ComplexLattice& cc, const Subcomplex& k) {
  ordered_json j;
  j["complex"] = cc.rs().family;
  j["rank"] = cc.rs().rank;
  ordered_json fs = ordered_json::array();
  for (int f : k.faces) {
    ordered_json ids = ordered_json::array();
    for (std::int32_t v : cc.face_vertices(f)) ids.push_back(v);
    fs.push_back(ids);
  }
  j["faces"] = fs;
  return j;
}

Subcomplex subcomplex_from_json(const ComplexLattice& cc,
                                const ordered_json& j) {
  std::string err;
  if (!validate_against_schema(j, "subcomplex", &err))
    throw std::invalid_argument("subcomplex file: " + err);
  if (j.at("complex").get<std::string>() != cc.rs().family ||
      j.at("rank").get<int>() != cc.rs().rank)
    throw std::invalid_argument("subcomplex file targets a different complex");
  std::vector<int> faces;
  for (const auto& ids : j.at("faces")) {
    std::vector<std::int32_t> vs;
    for (const auto& v : ids) {
      int id = v.get<int>();
      if (id < 0 || id >= cc.num_vertices())
        throw std::invalid_argument("vertex index out of range");
      vs.push_back(id);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    int f = cc.face_id(vs);
    if (f < 0)
      throw std::invalid_argument("vertex set is not a face of the complex");
    faces.push_back(f);
  }
  return make_subcomplex(cc, faces);
}

ordered_json verdict_to_json(const ComplexLattice& cc, const VerdictResult& v) {
  ordered_json j;
  switch (v.kind) {
  case VerdictKind::Subbuilding: j["verdict"] = "subbuilding"; break;
  case VerdictKind::FixedFace: j["verdict"] = "fixed_face"; break;
  case VerdictKind::Counterexample: j["verdict"] = "counterexample"; break;
  }
  j["stabilizer_order"] = v.stabilizer_order;
  if (v.kind == VerdictKind::FixedFace) {
    ordered_json w;
    ordered_json ids = ordered_json::array();
    for (std::int32_t u : cc.face_vertices(v.fixed_face)) ids.push_back(u);
    w["face"] = ids;
    w["face_types"] = cc.face_types(v.fixed_face);
    // display-only floating coordinates of the sum of unit rays; the
    // invariance certificate itself is the setwise-fixed face
    ordered_json pt = ordered_json::array();
    std::vector<double> p(cc.rs().ambient, 0.0);
    for (std::int32_t u : cc.face_vertices(v.fixed_face)) {
      double nm = std::sqrt(norm2(cc.vertex_ray(u)).to_double());
      for (int i = 0; i < cc.rs().ambient; ++i)
        p[i] += cc.vertex_ray(u)[i].to_double() / nm;
    }
    for (double x : p) pt.push_back(x);
    w["point"] = pt;
    j["witness"] = w;
  } else if (v.kind == VerdictKind::Counterexample) {
    ordered_json w;
    w["vertices_without_antipode"] = v.antipode_failures;
    j["witness"] = w;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

ordered_json shipped_schemas() {
  ordered_json s;
  s["subcomplex"] = {
      {"type", "object"},
      {"required", {"complex", "rank", "faces"}},
      {"properties",
       {{"complex", {{"type", "string"}}},
        {"rank", {{"type", "integer"}}},
        {"faces",
         {{"type", "array"},
          {"items",
           {{"type", "array"}, {"items", {{"type", "integer"}}}}}}}}}};
  s["verdict"] = {
      {"type", "object"},
      {"required", {"verdict", "stabilizer_order", "witness"}},
      {"properties",
       {{"verdict",
         {{"type", "string"},
          {"enum", {"subbuilding", "fixed_face", "counterexample"}}}},
        {"stabilizer_order", {{"type", "integer"}}}}}};
  s["facts"] = {
      {"type", "object"},
      {"required", {"complex", "facts", "all_pass"}},
      {"properties",
       {{"complex", {{"type", "string"}}},
        {"all_pass", {{"type", "boolean"}}},
        {"facts",
         {{"type", "array"},
          {"items",
           {{"type", "object"},
            {"required", {"id", "anchor", "status"}}}}}}}}};
  s["sweep"] = {
      {"type", "object"},
      {"required",
       {"complex", "seeds_run", "subbuilding", "fixed_face", "counterexample"}},
      {"properties",
       {{"complex", {{"type", "string"}}},
        {"seeds_run", {{"type", "integer"}}},
        {"counterexample", {{"type", "integer"}}}}}};
  return s;
}

namespace {

bool type_matches(const ordered_json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "boolean") return v.is_boolean();
  if (t == "number") return v.is_number();
  return true;
}

bool check_schema(const ordered_json& doc, const ordered_json& schema,
                  std::string* error) {
  if (schema.contains("type") &&
      !type_matches(doc, schema["type"].get<std::string>())) {
    if (error) *error = "expected " + schema["type"].get<std::string>();
    return false;
  }
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& e : schema["enum"])
      if (e == doc) hit = true;
    if (!hit) {
      if (error) *error = "value not in enum";
      return false;
    }
  }
  if (doc.is_object() && schema.contains("required"))
    for (const auto& r : schema["required"])
      if (!doc.contains(r.get<std::string>())) {
        if (error) *error = "missing required key " + r.get<std::string>();
        return false;
      }
  if (doc.is_object() && schema.contains("properties"))
    for (auto it = schema["properties"].begin(); it != schema["properties"].end();
         ++it)
      if (doc.contains(it.key()) &&
          !check_schema(doc.at(it.key()), it.value(), error))
        return false;
  if (doc.is_array() && schema.contains("items"))
    for (const auto& el : doc)
      if (!check_schema(el, schema["items"], error)) return false;
  return true;
}

} // namespace

bool validate_against_schema(const ordered_json& doc, const std::string& which,
                             std::string* error) {
  ordered_json schemas = shipped_schemas();
  if (!schemas.contains(which)) {
    if (error) *error = "unknown schema " + which;
    return false;
  }
  return check_schema(doc, schemas[which], error);
}

std::shared_ptr<ComplexLattice> build_named_complex(const std::string& family,
                                                    int rank) {
  return ComplexLattice::build(build_root_system(family, rank));
}

} // namespace chamberworks
