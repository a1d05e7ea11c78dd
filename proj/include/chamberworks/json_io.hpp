#pragma once

#include "chamberworks/convexity.hpp"
#include "chamberworks/verdict.hpp"

#include "json.hpp"

#include <string>

namespace chamberworks {

using ordered_json = nlohmann::ordered_json;

/// Face-lattice export: vertices as integer coordinate arrays, faces as
/// vertex index lists grouped by dimension.
ordered_json complex_to_json(const ComplexLattice& cc);

/// Subcomplex file format: {"complex": ..., "rank": ..., "faces": [[i,...],...]}
ordered_json subcomplex_to_json(const ComplexLattice& cc, const Subcomplex& k);
Subcomplex subcomplex_from_json(const ComplexLattice& cc, const ordered_json& j);

ordered_json verdict_to_json(const ComplexLattice& cc, const VerdictResult& v);

/// JSON schemas for the file formats above (informal JSON-Schema subset).
ordered_json shipped_schemas();

/// Structural validation of a document against one of the shipped
/// schemas ("subcomplex", "verdict", "facts", "sweep").
bool validate_against_schema(const ordered_json& doc, const std::string& which,
                             std::string* error = nullptr);

std::shared_ptr<ComplexLattice> build_named_complex(const std::string& family,
                                                    int rank);

} // namespace chamberworks
