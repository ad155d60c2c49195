#pragma once

#include <string>

namespace krammer {

// Outcome of one verification op. `ok` covers every sub-check that ran;
// `skipped` flags sub-checks bypassed at degenerate parameter values, with an
// explanation in `detail`. On failure `detail` holds the first witness.
struct VerifyResult {
  bool ok = true;
  bool skipped = false;
  std::string detail;

  void fail(const std::string& witness) {
    if (ok) detail = witness;
    ok = false;
  }
  void skip(const std::string& note) {
    skipped = true;
    if (!detail.empty()) detail += "; ";
    detail += note;
  }
};

} // namespace krammer
