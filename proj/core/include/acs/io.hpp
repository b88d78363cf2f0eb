#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "acs/diffeo.hpp"
#include "acs/invariants.hpp"
#include "acs/jet.hpp"

namespace acs::io {

/// Malformed input: bad JSON, wrong arity, unparseable polynomial.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structure file: { "n": int, "S": [[poly-string x 2n] x 2n] }
TensorField structure_from_json(const nlohmann::json& j);
nlohmann::json structure_to_json(const TensorField& field);
TensorField load_structure(const std::filesystem::path& path);

// Diffeo file: { "n": int, "f": [poly-string x 2n], "f_inv": optional [poly-string x 2n] }
PolyDiffeo diffeo_from_json(const nlohmann::json& j);
nlohmann::json diffeo_to_json(const PolyDiffeo& f);
PolyDiffeo load_diffeo(const std::filesystem::path& path);

/// "r1,r2,..." with integer or a/b entries.
RatVector parse_point(std::string_view text);

nlohmann::json rational_list(const RatVector& v);
nlohmann::json matrix_to_json(const RatMatrix& m);
nlohmann::json jet_to_json(const Jet1& jet);
/// Sparse map "i,j,k" (1-based, j < k) -> exact value, nonzero entries only.
nlohmann::json two_form_to_json(const TwoForm& w);
nlohmann::json poly_two_form_to_json(const PolyTwoForm& w);
nlohmann::json report_to_json(const IntegrabilityReport& report);

void write_json(const nlohmann::json& j, const std::filesystem::path& path);

}  // namespace acs::io
