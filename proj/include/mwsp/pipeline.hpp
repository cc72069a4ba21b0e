#pragma once

// Search, numbering, tables and checks in one pass.

#include "reference_tables.hpp"
#include "search.hpp"

#include <thread>

namespace mwsp {

struct PipelineResult {
  std::vector<Survivor> survivors;  // reference numbering when matched
  bool reference_numbering = false;
  Tables tables;
  FixedPointReport fixed_point;
  ClosureReport closure;
  reference::Diff diff;  // empty unless reference_numbering
};

inline unsigned default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

inline PipelineResult run_pipeline(const SearchOptions& opts = {},
                                   unsigned threads = default_threads()) {
  PipelineResult r;
  r.survivors = enumerate_survivors(opts);
  if (auto mapping = reference::match_numbering(r.survivors)) {
    r.survivors = renumber(r.survivors, *mapping);
    r.reference_numbering = true;
  }
  r.tables = emit_tables(r.survivors, threads);
  r.fixed_point = verify_fixed_point(r.survivors, threads);
  r.closure = theorem_closure_check(r.survivors);
  if (r.reference_numbering) r.diff = reference::compare(r.survivors, r.tables);
  return r;
}

}  // namespace mwsp
