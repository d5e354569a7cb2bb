#include "schur/catalog.hpp"

#include <stdexcept>

#include "schur/constructions.hpp"

namespace schur {

namespace {

CatalogEntry entry(std::string name, std::string recipe, long mult, long n, long m, long d,
                   long cls, long gens) {
    return CatalogEntry{std::move(name),
                        std::move(recipe),
                        {{"multiplier", mult},
                         {"n", n},
                         {"m", m},
                         {"d", d},
                         {"class", cls},
                         {"gens", gens}}};
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> c;
    // Expected values computed by the pipeline and frozen; `catalog check`
    // rebuilds each recipe and compares.
    c.push_back(entry("A(0)", "abelian(0)", 0, 0, 0, 0, 0, 0));
    c.push_back(entry("A(1)", "abelian(1)", 0, 1, 0, 1, 1, 1));
    c.push_back(entry("A(2)", "abelian(2)", 1, 2, 0, 2, 1, 2));
    c.push_back(entry("A(3)", "abelian(3)", 3, 3, 0, 3, 1, 3));
    c.push_back(entry("A(4)", "abelian(4)", 6, 4, 0, 4, 1, 4));
    c.push_back(entry("A(5)", "abelian(5)", 10, 5, 0, 5, 1, 5));
    c.push_back(entry("A(6)", "abelian(6)", 15, 6, 0, 6, 1, 6));
    c.push_back(entry("H(1)", "heisenberg(1)", 2, 3, 1, 1, 2, 2));
    c.push_back(entry("H(2)", "heisenberg(2)", 5, 5, 1, 1, 2, 4));
    c.push_back(entry("H(3)", "heisenberg(3)", 14, 7, 1, 1, 2, 6));
    c.push_back(entry("filiform4", "filiform(4)", 2, 4, 2, 1, 3, 2));
    c.push_back(entry("F(2,1)", "free_nilpotent(2,1)", 1, 2, 0, 2, 1, 2));
    c.push_back(entry("F(2,2)", "free_nilpotent(2,2)", 2, 3, 1, 1, 2, 2));
    c.push_back(entry("F(2,3)", "free_nilpotent(2,3)", 3, 5, 3, 2, 3, 2));
    c.push_back(entry("F(3,2)", "free_nilpotent(3,2)", 8, 6, 3, 3, 2, 3));
    c.push_back(entry("H(1)+A(1)", "heisenberg(1)+abelian(1)", 4, 4, 1, 2, 2, 3));
    c.push_back(entry("H(1)+A(2)", "heisenberg(1)+abelian(2)", 7, 5, 1, 3, 2, 4));
    c.push_back(entry("H(1)+A(3)", "heisenberg(1)+abelian(3)", 11, 6, 1, 4, 2, 5));
    c.push_back(entry("H(2)+A(1)", "heisenberg(2)+abelian(1)", 9, 6, 1, 2, 2, 5));
    c.push_back(entry("A(2)+A(3)", "abelian(2)+abelian(3)", 10, 5, 0, 5, 1, 5));
    return c;
}

LieAlgebra build_term(const std::string& term) {
    auto open = term.find('(');
    auto close = term.rfind(')');
    if (open == std::string::npos || close != term.size() - 1 || close <= open)
        throw std::invalid_argument("recipe: malformed term '" + term + "'");
    std::string head = term.substr(0, open);
    std::string args = term.substr(open + 1, close - open - 1);
    std::vector<int> values;
    size_t pos = 0;
    while (pos <= args.size()) {
        size_t comma = args.find(',', pos);
        std::string piece = args.substr(pos, comma == std::string::npos ? args.size() - pos
                                                                        : comma - pos);
        try {
            size_t used = 0;
            values.push_back(std::stoi(piece, &used));
            if (used != piece.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("recipe: bad argument '" + piece + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (head == "abelian" && values.size() == 1) return abelian(values[0]);
    if (head == "heisenberg" && values.size() == 1) return heisenberg(values[0]);
    if (head == "filiform" && values.size() == 1) return filiform(values[0]);
    if (head == "free_nilpotent" && values.size() == 2)
        return free_nilpotent(values[0], values[1]);
    throw std::invalid_argument("recipe: unknown term '" + term + "'");
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> c = make_catalog();
    return c;
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
    for (const auto& e : catalog_entries())
        if (e.name == name) return &e;
    return nullptr;
}

std::vector<LieAlgebra> recipe_components(const std::string& recipe) {
    std::vector<LieAlgebra> parts;
    size_t pos = 0;
    while (pos <= recipe.size()) {
        size_t plus = recipe.find('+', pos);
        std::string term = recipe.substr(pos, plus == std::string::npos ? recipe.size() - pos
                                                                        : plus - pos);
        if (term.empty()) throw std::invalid_argument("recipe: empty term");
        parts.push_back(build_term(term));
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    if (parts.empty()) throw std::invalid_argument("recipe: empty expression");
    return parts;
}

LieAlgebra build_recipe(const std::string& recipe) {
    std::vector<LieAlgebra> parts = recipe_components(recipe);
    LieAlgebra result = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) result = direct_sum(result, parts[i]);
    return result;
}

LieAlgebra catalog_algebra(const std::string& name) {
    const CatalogEntry* e = find_catalog_entry(name);
    if (!e) throw std::invalid_argument("catalog: unknown entry '" + name + "'");
    LieAlgebra L = build_recipe(e->recipe);
    L.set_name(e->name);
    return L;
}

}  // namespace schur
