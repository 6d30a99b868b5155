// JSON input for companion models and text serialization of results.
// Models arrive as one of three shapes:
//   {"thin":     {"tau": int, "squares": [{"center": int, "count": int}]}}
//   {"lspace":   {"sign": 1 | -1, "r": [int, ...]}}
//   {"explicit": {"generators": [{"name", "alexander", "maslov"}],
//                 "arrows": [{"kind": "vertical" | "horizontal",
//                             "src", "dst", "length"}],
//                 "tau": int, "epsilon": int}}
// Every parsed model is run through validate() before it is returned.
#pragma once

#include <cstdint>
#include <string>

#include "floerbox/cfk.hpp"
#include "floerbox/csc.hpp"
#include "floerbox/error.hpp"
#include "floerbox/homology.hpp"
#include "floerbox/invariants.hpp"

namespace floerbox {

CfkModel parse_model_json(const std::string& text);
CfkModel load_model_file(const std::string& path);

// Rank table: one row per (A, delta_rel) cell, ordered by A then delta_rel.
std::string hfk_tsv(const HfkTable& table);
std::string hfk_json(const HfkTable& table, const std::string& pattern,
                     int64_t n);

std::string invariants_tsv(const Invariants& inv);
std::string invariants_json(const Invariants& inv, const std::string& pattern,
                            int64_t n);

std::string csc_tsv(const CscVerdict& verdict);
std::string csc_json(const CscVerdict& verdict, int64_t n);

// Sweep rows share the invariant columns prefixed with the framing.
std::string sweep_header_tsv();
std::string sweep_row_tsv(int64_t n, const Invariants& inv);
std::string sweep_header_json(const std::string& pattern);
std::string sweep_row_json(int64_t n, const Invariants& inv);

std::string error_json(ErrorCode code, const std::string& message);

}  // namespace floerbox
