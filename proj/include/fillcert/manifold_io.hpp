#pragma once

#include <string>

#include "fillcert/theorem_checker.hpp"

namespace fillcert {

// A manifold description as it arrives on disk. Schema (version 1):
//
// {
//   "schema_version": 1,
//   "name": "m003",                     optional, defaults to ""
//   "cusps": [
//     {"meridian": [x, y], "longitude": [x, y]}, ...
//   ],
//   "fillings": [[p, q], null, ...],    optional, defaults to all null
//   "genus": 2
// }
//
// fillings entries are integer pairs in meridian/longitude coordinates;
// null leaves that cusp unfilled.
struct ManifoldDocument {
    int schema_version = 1;
    std::string name;
    ManifoldInput input;
};

// Parses and validates a manifold document. Throws std::invalid_argument
// with a location-bearing message for malformed JSON, and with a cusp-index
// message for semantic problems ("degenerate cusp lattice at cusp 1",
// "slope not primitive at cusp 0", ...).
ManifoldDocument parse_manifold(const std::string& json_text);

// Reads the file and hands it to parse_manifold. Throws std::runtime_error
// if the file cannot be read.
ManifoldDocument load_manifold(const std::string& path);

}  // namespace fillcert
