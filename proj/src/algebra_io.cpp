#include "schur/algebra_io.hpp"

#include <set>
#include <utility>

#include "json.hpp"

namespace schur {

using ordered_json = nlohmann::ordered_json;

LieAlgebra parse_algebra_file_raw(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw parse_error(std::string("algebra file: ") + e.what());
    }
    if (!doc.is_object()) throw parse_error("algebra file: top level must be an object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 0)
        throw parse_error("algebra file: 'dim' must be a nonnegative integer");
    if (doc["dim"].get<long>() > 4096)
        throw parse_error("algebra file: 'dim' exceeds the supported limit (4096)");
    const int dim = doc["dim"].get<int>();
    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw parse_error("algebra file: 'name' must be text");
        name = doc["name"].get<std::string>();
    }
    for (const auto& [key, value] : doc.items())
        if (key != "dim" && key != "name" && key != "brackets")
            throw parse_error("algebra file: unknown field '" + key + "'");

    LieAlgebra L(dim, name);
    if (!doc.contains("brackets")) return L;
    if (!doc["brackets"].is_array()) throw parse_error("algebra file: 'brackets' must be a list");

    std::set<std::pair<int, int>> seen;
    int pos = 0;
    for (const auto& b : doc["brackets"]) {
        const std::string at = "algebra file: brackets[" + std::to_string(pos) + "]";
        ++pos;
        if (!b.is_array() || b.size() != 3 || !b[0].is_number_integer() ||
            !b[1].is_number_integer() || !b[2].is_array())
            throw parse_error(at + ": expected [i, j, components]");
        const int i = b[0].get<int>();
        const int j = b[1].get<int>();
        if (i < 0 || j >= dim || i >= j)
            throw parse_error(at + ": need 0 <= i < j < dim, got i=" + std::to_string(i) +
                              " j=" + std::to_string(j));
        if (!seen.insert({i, j}).second)
            throw parse_error(at + ": duplicate pair (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
        std::set<int> seen_k;
        for (const auto& comp : b[2]) {
            if (!comp.is_array() || comp.size() != 2 || !comp[0].is_number_integer() ||
                !comp[1].is_string())
                throw parse_error(at + ": component must be [k, \"coefficient\"]");
            const int k = comp[0].get<int>();
            if (k < 0 || k >= dim)
                throw parse_error(at + ": component index " + std::to_string(k) +
                                  " out of range");
            if (!seen_k.insert(k).second)
                throw parse_error(at + ": duplicate component index " + std::to_string(k));
            const std::string coeff = comp[1].get<std::string>();
            auto r = Rational::parse(coeff);
            if (!r) throw parse_error(at + ": bad coefficient '" + coeff + "'");
            L.set_bracket_component(i, j, k, *r);
        }
    }
    return L;
}

LieAlgebra parse_algebra_file(const std::string& text) {
    LieAlgebra L = parse_algebra_file_raw(text);
    ValidationReport rep = validate(L);
    if (!rep.ok) {
        std::string msg = "algebra file: not a Lie algebra";
        for (const auto& v : rep.violations) msg += "; " + v;
        throw parse_error(msg);
    }
    return L;
}

std::string write_algebra_file(const LieAlgebra& L) {
    ordered_json doc;
    doc["dim"] = L.dim();
    if (!L.name().empty()) doc["name"] = L.name();
    ordered_json brackets = ordered_json::array();
    for (int i = 0; i < L.dim(); ++i)
        for (int j = i + 1; j < L.dim(); ++j) {
            ordered_json comps = ordered_json::array();
            for (int k = 0; k < L.dim(); ++k)
                if (!L.c(i, j, k).is_zero())
                    comps.push_back(ordered_json::array({k, L.c(i, j, k).str()}));
            if (!comps.empty()) brackets.push_back(ordered_json::array({i, j, comps}));
        }
    doc["brackets"] = std::move(brackets);
    return doc.dump(2) + "\n";
}

}  // namespace schur
