#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "genshift/derivcheck.hpp"
#include "genshift/linop.hpp"
#include "genshift/structure.hpp"

namespace genshift::io {

using json = nlohmann::json;

// Complex scalars are [re, im] pairs; plain numbers are accepted on input.
// p is a number or the string "inf". IndexMap is {"n": n, "map": [...]}.
// LinOp is {"n": n, "dense": [[[re, im], ...], ...]} or
// {"n": n, "r": [[re, im], ...], "phi": [...]}.
//
// Parsers throw ParseError for malformed structure and InvalidInput for
// well-formed values that violate an invariant.

json to_json(const Complex& z);
json to_json(const Vec& v);
json to_json(const PExponent& p);
json to_json(const IndexMap& phi);
json to_json(const LinOp& op);
json to_json(const FiberReport& f);
json to_json(const Witness& w);
json to_json(const CheckResult& c);
json to_json(const Classification& c);
json to_json(const SolveReport& s);

Complex parse_complex(const json& j);
Vec parse_vector(const json& j);
PExponent parse_p(const json& j);
PExponent parse_p(const std::string& text);
IndexMap parse_index_map(const json& j);
LinOp parse_linop(const json& j);
std::vector<LinOp> parse_linop_list(const json& j);

json read_json_file(const std::filesystem::path& path);

}  // namespace genshift::io
