#pragma once

#include <filesystem>
#include <string>

#include "qcms/graded_ideal.hpp"
#include "qcms/presentations.hpp"
#include "qcms/report.hpp"

namespace qcms {

struct CacheConfig {
  std::filesystem::path dir;
  bool enabled = false;
};

// Degree cap used for the named family ideals: wide enough for quotient
// dimension certification at index r and for the cross-index chain checks.
int family_cap(int r);

// The ideal generated by the family triple at (kind, genus, r), degree cap
// family_cap(r).  With caching enabled, the reduced span is read back from
// "{kind}-g{genus}-r{r}-cap{cap}.json" under cfg.dir when the file is intact
// (version, parameters, shape, and fingerprint all match and the span passes
// the rebuild checks); otherwise it is computed fresh and written back
// atomically.  Results are bit-identical either way.
GradedIdeal family_ideal(RingKind kind, int genus, int r,
                         const CacheConfig& cfg = {});

// Chain structure of the quantum family at one genus: for k = 0..g-1,
// γ·gen lies in J_{k+1} for every generator of J_k, and every generator of
// J_{k+1} lies back in J_k.  One check per inclusion, deterministic order;
// the family caps are wide enough for every product involved.  Genus >= 2.
Report ideal_chain_check(int genus, const CacheConfig& cfg = {});

// Quotient dimensions across all three families: for r = 1..genus and each
// ring kind, quotient_dim(r, family ideal) must equal C(r+2, 3).
Report dimension_check(int genus, const CacheConfig& cfg = {});

}  // namespace qcms
