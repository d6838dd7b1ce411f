#pragma once

#include <vector>

#include "qcms/algebra.hpp"

namespace qcms {

enum class SegreKind {
  extension,          // rank-g bundle with total character g + 4ω
  doubled_extension,  // its doubling, total character 2g + 8ω
};

// Exterior cohomology of a genus-g Jacobian torus: Λ(φ1..φ2g) with the
// symplectic form ω = Σ_{i=1..g} φ_i φ_{i+g} and integration normalized so
// that ∫ ω^g = g!.
class JacobianContext {
 public:
  explicit JacobianContext(int genus);

  int genus() const { return genus_; }
  const SignaturePtr& signature() const { return sig_; }
  const AlgebraElement& omega() const { return powers_[1]; }
  // ω^k; the zero element for k > g.
  const AlgebraElement& omega_power(int k) const;

  // Coefficient pairing against the fundamental class, normalized so that
  // ∫ ω^g = g!; zero on every term below the top exterior degree.
  GaussianRational integrate(const AlgebraElement& a) const;

  // i-th Chern class 4^i/i! ω^i of the rank-g extension bundle.
  AlgebraElement chern_class(int i) const;
  // i-th Segre class: (-4)^i/i! ω^i or (-8)^i/i! ω^i by kind.
  AlgebraElement segre_class(int i, SegreKind kind) const;

  std::uint64_t full_mask() const { return full_mask_; }

 private:
  int genus_;
  SignaturePtr sig_;
  std::uint64_t full_mask_ = 0;
  std::vector<AlgebraElement> powers_;  // ω^0 .. ω^g, then one zero entry
  GaussianRational integral_unit_;      // ∫ of the canonical top monomial
};

// Dimension of the primitive component of Λ^k: the kernel of multiplication
// by ω^{g-k+1} from Λ^k to Λ^{2g-k+2}, computed by exact rank and verified
// against C(2g,k) - C(2g,k-2).
int primitive_dim(int genus, int k);

}  // namespace qcms
