#pragma once

#include <map>
#include <string>
#include <vector>

#include "schur/lie_algebra.hpp"

namespace schur {

/// One built-in test algebra. The expected map freezes invariant values that
/// were produced by the computation pipeline itself; `catalog check`
/// recomputes every one of them from the recipe and compares exactly.
struct CatalogEntry {
    std::string name;
    std::string recipe;
    std::map<std::string, long> expected;  // multiplier, n, m, d, class, gens
};

const std::vector<CatalogEntry>& catalog_entries();

/// Entry with the given name, or nullptr.
const CatalogEntry* find_catalog_entry(const std::string& name);

/// Evaluates a recipe expression: terms abelian(N), heisenberg(M),
/// filiform(N), free_nilpotent(N,C) joined by '+' (direct sum, left to
/// right). Throws std::invalid_argument on malformed input.
LieAlgebra build_recipe(const std::string& recipe);

/// The direct summands of a recipe, in order (a single algebra for sum-free
/// recipes). Block k occupies the coordinate range starting at the sum of the
/// previous block dimensions.
std::vector<LieAlgebra> recipe_components(const std::string& recipe);

/// Builds the named catalog entry; throws if the name is unknown.
LieAlgebra catalog_algebra(const std::string& name);

}  // namespace schur
