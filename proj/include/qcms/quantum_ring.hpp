#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qcms/jacobian.hpp"
#include "qcms/report.hpp"

namespace qcms {

// Quantum cohomology of the genus-g projective extension space:
// Λ(φ1..φ2g)[h] modulo h^g + c_1 h^{g-1} + ... + c_g = 1, with c_i the
// Chern classes 4^i/i!·ω^i.  Everything is exact over ℚ(i); grading is by
// total degree mod 2g once the relation is applied.
class QuantumRing {
 public:
  explicit QuantumRing(int genus);

  int genus() const { return genus_; }
  const SignaturePtr& signature() const { return sig_; }
  const JacobianContext& jacobian() const { return jac_; }

  const AlgebraElement& h() const { return h_; }
  // ω = Σ φ_i φ_{i+g}, embedded alongside h.
  const AlgebraElement& omega() const { return omega_; }
  // 1 - Σ_{i=1..g} c_i h^{g-i}, the element h^g rewrites to.
  const AlgebraElement& relation_rhs() const { return rhs_; }

  // Λ(φ) elements viewed inside the full ring.
  AlgebraElement embed(const AlgebraElement& e) const;
  // Coefficient of h^k as a Λ(φ) element.
  AlgebraElement h_slice(const AlgebraElement& e, int k) const;

  // Normal form: rewrites every h-exponent >= g through the relation until
  // all exponents are < g.  Exact; each rewrite strictly lowers the top
  // h-exponent, so this terminates.
  AlgebraElement reduce(const AlgebraElement& e) const;

  // Degree-2g Λ-part of the h^{g-1} coefficient: the only slice that pairs
  // against the fundamental class of the total space.  Requires a reduced
  // element (DegreeError otherwise).
  AlgebraElement top_component(const AlgebraElement& e) const;

  // Generator images in this ring.
  AlgebraElement alpha_image() const;        // 4ω + h
  // The cup-product square of the hyperplane slice.  As a quantum identity
  // this matches the point-class generator only for genus > 2; the genus-2
  // evaluators own that caveat.
  AlgebraElement beta_image() const;         // h²
  AlgebraElement psi_image(int i) const;     // -h·φ_i, i in 1..2g
  AlgebraElement gamma_image() const;        // -2ω·h²

 private:
  const AlgebraElement& reduced_h_power(int k) const;

  int genus_;
  JacobianContext jac_;
  SignaturePtr sig_;
  AlgebraElement h_;
  AlgebraElement omega_;
  AlgebraElement rhs_;
  mutable std::mutex memo_mutex_;
  mutable std::map<int, AlgebraElement> h_power_memo_;
};

// One pairing query: insert α a times, β b times, and ψ_i for each listed
// index.  Admissible queries balance 2a + 4b + 3·|psi| = 6g - 2 (which
// forces |psi| even).
struct GWQuery {
  int genus = 0;
  int a = 0;
  int b = 0;
  std::vector<int> psi;

  int r() const { return static_cast<int>(psi.size()); }
  // Repeated indices are admissible and pair to zero (odd squares vanish);
  // callers may want to surface that rather than report a silent zero.
  bool has_repeated_psi() const;
  // DomainError on bad genus or index range, DegreeError on imbalance.
  void validate() const;
  std::string str() const;
};

// Polynomial in a formal even variable X with Λ(φ1..φ2g) coefficients.
// This is the expansion vehicle for the direct evaluation rule: after
// expanding, X^k dies for k < 2g-1 and X^{2g-1+i} becomes (-8)^i/i!·ω^i.
class XPolynomial {
 public:
  explicit XPolynomial(SignaturePtr exterior_sig);

  const SignaturePtr& signature() const { return sig_; }
  const std::map<int, AlgebraElement>& parts() const { return parts_; }

  void add(int k, const AlgebraElement& coeff);
  XPolynomial shifted(int s) const;
  XPolynomial scaled(const AlgebraElement& f) const;
  // Apply the substitution rule and collapse to a single Λ(φ) element.
  AlgebraElement substituted(const JacobianContext& jac) const;

 private:
  SignaturePtr sig_;
  std::map<int, AlgebraElement> parts_;
};

// (4ω + X)^a expanded binomially; ω-powers above the genus vanish.
XPolynomial binomial_x_power(const JacobianContext& jac, int a);

// Evaluate the query inside QuantumRing: multiply the generator images,
// reduce, take the top component, integrate over the Jacobian.  Exact.
// DomainError for genus 2 with b > 0, where the h² image is not the point
// class; gw_via_formula is authoritative there.
GaussianRational gw_via_ring(const GWQuery& q);
// Same computation without the genus-2 guard, for side-by-side route
// comparison reports.  The value it returns at genus 2 with b > 0 carries
// the uncorrected h² image.
GaussianRational gw_via_ring_unchecked(const GWQuery& q);

// Evaluate the query by direct expansion: pair
// (4ω + X)^a (X²)^b φ_{i_1}..φ_{i_r} X^r against the Jacobian fundamental
// class under the X-substitution rule.  Exact; defined for every genus.
GaussianRational gw_via_formula(const GWQuery& q);

// For i = 0..g and s over the monomial basis of Λ^{2g-2i}: checks
// top_component(reduce(h^{2g-1+i}·s)) == (-8)^i/i!·ω^i·s.  One check per
// (i, s), deterministic order.  Genus >= 2.
Report substitution_rule_check(int genus);

// Every admissible (a, b) with r ∈ {0, 2, 4} ψ-insertions at this genus,
// with index patterns both containing and missing complete symplectic
// pairs: gw_via_ring must equal gw_via_formula exactly.  Genus >= 3.
Report dual_evaluator_check(int genus);

// Checks the γ-insertion identity: -2·Σ_{i=1..g} of the formula value at
// (a = 3g-4, psi = [i, i+g]) equals the direct pairing with γ's image
// -2·Σ φ_i φ_{i+g} X² inserted as one block.  Genus >= 3.
Report gamma_insertion_check(int genus);

// Sign bookkeeping between the pairing and the Donaldson-series value it
// determines: D = gw / (-1)^{g-1}, with the argument dictionary recorded.
// No independent Donaldson computation is performed.  Genus >= 3.
struct DonaldsonRecord {
  GWQuery query;
  GaussianRational gw_value;
  int sign = 1;  // (-1)^{g-1}
  GaussianRational donaldson_value;
  std::string translation;
};
DonaldsonRecord donaldson_translation(const GWQuery& q);

// Both evaluation routes on every balanced genus-2 query shape with b > 0
// (plus b = 0 context rows), reported side by side.  The two routes share
// the h² image of the point class, so their agreement is a statement about
// the implementation, not a certification of the genus-2 pairing; the
// summary check says so explicitly rather than omitting the comparison.
Report genus2_route_comparison();

}  // namespace qcms
