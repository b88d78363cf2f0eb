#include "acs/io.hpp"

#include <fstream>
#include <sstream>

namespace acs::io {

using nlohmann::json;

namespace {

std::size_t read_n(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw InputError("expected an integer field \"n\"");
    const auto n = j["n"].get<long long>();
    if (n < 1) throw InputError("\"n\" must be at least 1");
    return static_cast<std::size_t>(n);
}

Polynomial read_poly(const json& v, std::size_t nvars, const std::string& where) {
    try {
        if (v.is_string()) return Polynomial::parse(v.get<std::string>(), nvars);
        if (v.is_number_integer()) return Polynomial::constant(nvars, Rational(v.get<long long>()));
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected a polynomial string");
}

std::vector<Polynomial> read_poly_list(const json& arr, std::size_t count, std::size_t nvars, const std::string& key) {
    if (!arr.is_array() || arr.size() != count)
        throw InputError("\"" + key + "\" must be an array of " + std::to_string(count) + " polynomials");
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(read_poly(arr[i], nvars, key + "[" + std::to_string(i) + "]"));
    return out;
}

json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

json poly_list(const std::vector<Polynomial>& ps) {
    json arr = json::array();
    for (const auto& p : ps) arr.push_back(p.str());
    return arr;
}

std::string key(std::size_t i, std::size_t j, std::size_t k) {
    return std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1);
}

}  // namespace

TensorField structure_from_json(const json& j) {
    const std::size_t n = read_n(j);
    const std::size_t d = 2 * n;
    if (!j.contains("S") || !j["S"].is_array() || j["S"].size() != d)
        throw InputError("\"S\" must be a " + std::to_string(d) + "x" + std::to_string(d) + " array");
    PolyMatrix entries(d, d, Polynomial(d));
    for (std::size_t i = 0; i < d; ++i) {
        const json& row = j["S"][i];
        if (!row.is_array() || row.size() != d)
            throw InputError("\"S\" row " + std::to_string(i + 1) + " must have " + std::to_string(d) + " entries");
        for (std::size_t c = 0; c < d; ++c)
            entries(i, c) = read_poly(row[c], d, "S[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    return TensorField(Chart(n), std::move(entries));
}

json structure_to_json(const TensorField& field) {
    json rows = json::array();
    for (std::size_t i = 0; i < field.dim(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < field.dim(); ++c) row.push_back(field(i, c).str());
        rows.push_back(std::move(row));
    }
    return json{{"n", field.chart().half_dim()}, {"S", std::move(rows)}};
}

TensorField load_structure(const std::filesystem::path& path) { return structure_from_json(parse_file(path)); }

PolyDiffeo diffeo_from_json(const json& j) {
    const std::size_t n = read_n(j);
    const std::size_t d = 2 * n;
    if (!j.contains("f")) throw InputError("missing \"f\"");
    auto f = read_poly_list(j["f"], d, d, "f");
    std::optional<std::vector<Polynomial>> inv;
    if (j.contains("f_inv") && !j["f_inv"].is_null()) inv = read_poly_list(j["f_inv"], d, d, "f_inv");
    try {
        return PolyDiffeo(n, std::move(f), std::move(inv));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

json diffeo_to_json(const PolyDiffeo& f) {
    json j{{"n", f.half_dim()}, {"f", poly_list(f.forward())}};
    if (f.has_inverse()) j["f_inv"] = poly_list(f.inverse_components());
    return j;
}

PolyDiffeo load_diffeo(const std::filesystem::path& path) { return diffeo_from_json(parse_file(path)); }

RatVector parse_point(std::string_view text) {
    RatVector out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
            throw InputError("bad coordinate '" + item + "' in point");
        }
    }
    if (out.empty()) throw InputError("empty point");
    return out;
}

json rational_list(const RatVector& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

json matrix_to_json(const RatMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rational_list(m.row(i)));
    return rows;
}

json jet_to_json(const Jet1& jet) {
    json du = json::array();
    for (const auto& dk : jet.du) du.push_back(matrix_to_json(dk));
    return json{{"p", rational_list(jet.point)}, {"u", matrix_to_json(jet.u)}, {"du", std::move(du)}};
}

json two_form_to_json(const TwoForm& w) {
    json out = json::object();
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            for (std::size_t k = j + 1; k < w.dim(); ++k)
                if (!w(i, j, k).is_zero()) out[key(i, j, k)] = w(i, j, k).str();
    return out;
}

json poly_two_form_to_json(const PolyTwoForm& w) {
    json out = json::object();
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < w.dim(); ++j)
            for (std::size_t k = j + 1; k < w.dim(); ++k)
                if (!w(i, j, k).is_zero()) out[key(i, j, k)] = w(i, j, k).str();
    return out;
}

json report_to_json(const IntegrabilityReport& report) {
    json points = json::array();
    for (const auto& p : report.points)
        points.push_back(json{{"p", rational_list(p.point)},
                              {"omega", two_form_to_json(p.omega)},
                              {"nijenhuis", two_form_to_json(p.nijenhuis)}});
    return json{{"omega_identically_zero", report.omega_identically_zero},
                {"nijenhuis_identically_zero", report.nijenhuis_identically_zero},
                {"consistent", report.consistent},
                {"pointwise_violations", report.pointwise_violations},
                {"points", std::move(points)}};
}

void write_json(const json& j, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

}  // namespace acs::io
