#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "stringy/epoly.hpp"
#include "stringy/hitchin.hpp"
#include "stringy/hklinear.hpp"
#include "stringy/orbifold.hpp"
#include "stringy/torus.hpp"

namespace stringy {

// Insertion-ordered JSON keeps every document byte-stable: keys come out in
// the order written here, arrays in the canonical orders of the core types.
using Json = nlohmann::ordered_json;

// E-polynomial as [[p, q, "coeff"], ...] in ascending (p, q) order, with
// decimal-string coefficients (exact at any size).
Json epoly_to_json(const EPolynomial& poly);
EPolynomial epoly_from_json(const Json& json);

// {"n":…, "g":…, "sectors":[{"gamma":[…], "shift":…, "isotypic":
//   [{"character":[…], "epoly":…}, …]}, …]}
Json presentation_to_json(const OrbifoldPresentation& presentation);
OrbifoldPresentation presentation_from_json(const Json& json);

// {"g":…, "n":…, "m":…, "c":…, "d":…, "generic_weights":…, "coprime_case":…}
Json curve_setup_to_json(const CurveSetup& setup);
CurveSetup curve_setup_from_json(const Json& json);

// {"pairing": row-major integer matrix}
Json lattice_to_json(const PolarizedLatticeTorus& torus);
PolarizedLatticeTorus lattice_from_json(const Json& json);

// {"side":"SL"|"PGL", "degree":…, "base":…, "has_lagrangian_section":…}
Json torsor_to_json(const TorsorLabel& label);
TorsorLabel torsor_from_json(const Json& json);

// Rational matrices as row-major arrays of "p/q" strings ("p" when q = 1).
Json rat_matrix_to_json(const RatMatrix& matrix);
RatMatrix rat_matrix_from_json(const Json& json);

// {"k":…, "j1":…, "j2":…, "j3":…, "metric":…}
Json model_to_json(const HyperkahlerModel& model);
HyperkahlerModel model_from_json(const Json& json);

// {"basis": rational matrix, rows are basis vectors}
Json subspace_to_json(const LinearSubspace& subspace);
LinearSubspace subspace_from_json(const Json& json);

// Two-space indentation plus trailing newline: the on-disk framing every
// writer uses, so golden files compare bit-exactly.
std::string dump_json(const Json& json);

Json load_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& json);

}  // namespace stringy
