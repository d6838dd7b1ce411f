#pragma once

#include <array>
#include <vector>

#include "qcms/algebra.hpp"

namespace qcms {

enum class RingKind { classical, floer, quantum };

const char* ring_kind_name(RingKind kind);

// Ordered relation triple (P1, P2, P3) over the invariant ring, produced by
// the step recursion below.  `index` is the recursion depth r >= 0 and
// `genus` tags which family parameters were used (quantum triples depend on
// it; the other kinds carry genus = 0).
struct PresentationTriple {
  RingKind kind;
  int index = 0;
  int genus = 0;
  std::array<AlgebraElement, 3> rel;

  const AlgebraElement& p1() const { return rel[0]; }
  const AlgebraElement& p2() const { return rel[1]; }
  const AlgebraElement& p3() const { return rel[2]; }
};

// One recursion step: from the triple at index k-1 build the triple at
// index k using the deformation constants c_k, d_k.
//   P1' = α·P1 + (k-1)²·P2
//   P2' = (β + c_k)·P1 + (2(k-1)/k)·P3
//   P3' = γ·P1 + d_k·P2
// Base triple at index 0 is (1, 0, 0).
std::array<AlgebraElement, 3> recursion_step(
    const std::array<AlgebraElement, 3>& prev, int k,
    const GaussianRational& c_k, const GaussianRational& d_k);

// Generic family: caller supplies the full constant vectors; c[j], d[j] are
// used at step k = j+1.  Vectors shorter than r are padded with zeros.
PresentationTriple generic_triple(int r, const std::vector<GaussianRational>& c,
                                  const std::vector<GaussianRational>& d);

// Named families.  classical and floer use c_k = (-1)^k·8, d_k = 0 and are
// therefore identical term by term; both entry points are kept because the
// two rings are presented independently elsewhere and callers check the
// coincidence rather than assume it.
PresentationTriple classical_triple(int r);
PresentationTriple floer_triple(int r);

// Quantum family: c_k = (-1)^(k+g)·8, d_k = 0.
PresentationTriple quantum_triple(int r, int genus);

// All-zero-constant reference triple (the j = 0 part of every deformation).
PresentationTriple homogeneous_reference_triple(int r);

// Splits p into homogeneous components of degree topdeg - 4j, j = 0, 1, ...
// Throws DegreeError if p has a nonzero component whose degree exceeds
// topdeg or is not congruent to topdeg mod 4.  Trailing zero components are
// trimmed; interior zeros are kept so indices line up with j.
std::vector<AlgebraElement> deformation_split(const AlgebraElement& p,
                                              int topdeg);

}  // namespace qcms
