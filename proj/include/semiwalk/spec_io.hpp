#pragma once

// JSON semigroup specifications.

#include "semiwalk/families.hpp"
#include "semiwalk/semigroup.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace semiwalk {

struct LoadedSpec {
    Semigroup semigroup;
    std::optional<Family> family;
};

/// Accepted shapes (keys in any order):
///   {"kind":"table", "generators":["a","b"], "table":[[...],...], "generator_elements":[i,...], "labels":[...]}
///     generator_elements defaults to 0..k-1; table[i][j] is the product of elements i and j.
///   {"kind":"transformations", "states":n, "maps":{"a":[...], ...}}  (maps keep their written order)
///   {"kind":"family", "family":"rees_zp", "n":2, "p":2}  or  {"kind":"family", "family":"tsetlin:3"}
/// Throws Error(Parse) on malformed input. Tables are checked for associativity unless
/// `check_tables` is false, in which case a broken table is loaded as given.
LoadedSpec parse_spec(std::string_view json_text, bool check_tables = true);
LoadedSpec load_spec_file(const std::string& path, bool check_tables = true);

}  // namespace semiwalk
