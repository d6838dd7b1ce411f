#pragma once

#include <set>
#include <vector>

#include "qcms/algebra.hpp"

namespace qcms {

// All monomials α^a β^b γ^c of total degree <= cap, in canonical order:
// degree descending, then MonomialOrder within each degree.
std::vector<Monomial> invariant_monomials_up_to(int cap);

// Monomials α^a β^b γ^c with a + b + c < r; there are C(r+2,3) of them.
std::vector<Monomial> quotient_basis(int r);

// Degree-filtered model of an ideal in ℚ(i)[α,β,γ]: the exact row space of
// all products m·gen_i whose top degree stays within the cap.  Everything
// the model spans lies in the ideal, so zero residuals are genuine
// membership certificates; a nonzero residual only certifies non-membership
// when the leading forms of the generators span the lead ideal through the
// cap, which the dimension checks downstream verify.
class GradedIdeal {
 public:
  GradedIdeal(std::vector<AlgebraElement> generators, int cap);

  int cap() const { return cap_; }
  const std::vector<AlgebraElement>& generators() const { return gens_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Reduced spanning rows, ordered by top degree descending then by leading
  // monomial; each row has a distinct leading monomial with coefficient 1.
  const std::vector<AlgebraElement>& rows() const { return rows_; }
  // True when every generator was concentrated in a single degree class
  // mod 4 and the elimination ran in two independent parity blocks.
  bool parity_blocked() const { return blocked_; }

  // Subtracts the unique row combination matching p's pivot coordinates.
  // The result has no support on any leading monomial.  Throws CapError if
  // p reaches beyond the cap, SignatureError off ℚ(i)[α,β,γ].
  AlgebraElement reduce(const AlgebraElement& p) const;
  bool contains(const AlgebraElement& p) const { return reduce(p).is_zero(); }

  // Rows whose top degree is exactly `degree`: count and leading forms.
  int lead_dimension(int degree) const;
  std::vector<AlgebraElement> lead_forms(int degree) const;

  // Degree-d monomials that are not the leading monomial of any row.
  std::vector<Monomial> surviving_monomials(int degree) const;

 private:
  friend GradedIdeal rebuild_from_span(std::vector<AlgebraElement> generators,
                                       int cap,
                                       const std::vector<AlgebraElement>& span);
  struct from_span_tag {};
  GradedIdeal(std::vector<AlgebraElement> generators, int cap,
              const std::vector<AlgebraElement>& span, from_span_tag);
  void eliminate(const std::vector<AlgebraElement>& span_rows);

  SignaturePtr sig_;
  std::vector<AlgebraElement> gens_;
  int cap_ = 0;
  bool blocked_ = false;
  std::vector<AlgebraElement> rows_;
  std::vector<Monomial> row_leads_;  // leading monomial of each row
  std::set<Monomial, MonomialOrder> pivot_set_;
};

// Reconstructs an ideal model from a previously computed spanning set
// (used by the cache layer): the span is re-eliminated and must reproduce
// its own rank, and every generator must reduce to zero, else CacheError.
GradedIdeal rebuild_from_span(std::vector<AlgebraElement> generators, int cap,
                              const std::vector<AlgebraElement>& span);

// Dimension of span(monomials of degree <= 6(r-1)) modulo the ideal, with a
// fullness check that no monomial strictly above 6(r-1) and within the cap
// survives reduction; VerificationError otherwise.
int quotient_dim(int r, const GradedIdeal& ideal);

// Rewrites p modulo the ideal as an exact combination of the C(r+2,3)
// monomials α^a β^b γ^c with a+b+c < r.  The combination must exist and be
// unique; VerificationError otherwise.
AlgebraElement normal_form(const AlgebraElement& p, int r,
                           const GradedIdeal& ideal);

// Mutual containment of generator sets.  Caps must agree (CapError), since
// models with different horizons certify different statements.
bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b);

}  // namespace qcms
