#pragma once
#include <string>

namespace dybe {

// Outcome of one JSON request.  The CLI prints output_json to stdout (or the
// --out file), report_text to stderr, and exits with exit_code.
struct RunResult {
  int exit_code = 0;        // 0 pass | 1 verification failed | 2 bad request | 3 genericity exhausted
  std::string output_json;  // empty when the request produced no payload
  std::string report_text;  // human-readable progress/summary lines
};

// Request object:
//   {
//     "command": "compute" | "verify",
//     "target":  compute: "fusion" | "exchange" | "qmatrix" | "diffop" | "trace"
//                verify:  "cocycle" | "qdybe" | "fusion-exchange" | "q-identities"
//                         | "eta" | "diffop-commute" | "mr" | "all",
//     "algebra": "A1" | "A2" | ...,
//     "modules": ["L(1)", ...],            operand roles in declaration order
//     "mode":    "symbolic" | "numeric",   default "symbolic"
//     "seed":    uint64,                   required in numeric mode
//     "samples": int,                      numeric verifications, default 1
//     "depth":   int,                      eta truncation depth, default 4
//     "order":   int,                      series order, default 10
//     "weighted": bool                     trace: weighted trace instead of plain
//   }
// Never throws; every failure is folded into exit_code + report_text.
RunResult run_request(const std::string& request_json);

}  // namespace dybe
