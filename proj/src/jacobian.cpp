#include "qcms/jacobian.hpp"

#include <bit>

#include "qcms/error.hpp"
#include "qcms/linalg.hpp"

namespace qcms {

JacobianContext::JacobianContext(int genus) : genus_(genus), sig_(exterior_signature(genus)) {
  full_mask_ = (genus >= 32) ? ~std::uint64_t(0) : ((std::uint64_t(1) << (2 * genus)) - 1);
  AlgebraElement omega = AlgebraElement::zero(sig_);
  for (int i = 0; i < genus; ++i) {
    Monomial m{{}, (std::uint64_t(1) << i) | (std::uint64_t(1) << (i + genus))};
    omega = omega + AlgebraElement::monomial(sig_, std::move(m), GaussianRational(1));
  }
  powers_.push_back(AlgebraElement::constant(sig_, GaussianRational(1)));
  powers_.push_back(omega);
  for (int k = 2; k <= genus; ++k) powers_.push_back(powers_.back() * omega);
  powers_.push_back(AlgebraElement::zero(sig_));  // every power beyond g

  // ω^g is a signed multiple of the canonical full monomial; scale so the
  // normalization ∫ ω^g = g! holds.
  GaussianRational top = powers_[static_cast<size_t>(genus)].coefficient(Monomial{{}, full_mask_});
  if (top.is_zero()) throw VerificationError("top power of ω vanished");
  integral_unit_ = GaussianRational(mpq_class(factorial(genus))) / top;
}

const AlgebraElement& JacobianContext::omega_power(int k) const {
  if (k < 0) throw DomainError("negative power of ω");
  if (k > genus_) return powers_.back();
  return powers_[static_cast<size_t>(k)];
}

GaussianRational JacobianContext::integrate(const AlgebraElement& a) const {
  if (*a.signature() != *sig_) throw SignatureError("integrate: wrong signature");
  return a.coefficient(Monomial{{}, full_mask_}) * integral_unit_;
}

AlgebraElement JacobianContext::chern_class(int i) const {
  if (i < 0) throw DomainError("negative characteristic class index");
  mpq_class coef(mpz_class(1) << (2 * i), factorial(i));
  coef.canonicalize();
  return GaussianRational(coef) * omega_power(i);
}

AlgebraElement JacobianContext::segre_class(int i, SegreKind kind) const {
  if (i < 0) throw DomainError("negative characteristic class index");
  mpz_class base = (kind == SegreKind::extension) ? -4 : -8;
  mpz_class num = 1;
  for (int j = 0; j < i; ++j) num *= base;
  mpq_class coef(num, factorial(i));
  coef.canonicalize();
  return GaussianRational(coef) * omega_power(i);
}

int primitive_dim(int genus, int k) {
  if (genus < 1) throw DomainError("genus must be >= 1");
  if (k < 0 || k > genus) throw DomainError("primitive degree must be in 0..g");
  JacobianContext ctx(genus);
  const int n = 2 * genus;
  const AlgebraElement& power = ctx.omega_power(genus - k + 1);

  // Domain basis: exterior words of length k; codomain: length 2g-k+2.
  std::vector<std::uint64_t> domain, codomain;
  for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
    int pc = std::popcount(m);
    if (pc == k) domain.push_back(m);
    if (pc == n - k + 2) codomain.push_back(m);
  }
  std::map<std::uint64_t, int> codomain_index;
  for (size_t i = 0; i < codomain.size(); ++i)
    codomain_index[codomain[i]] = static_cast<int>(i);

  ExactMatrix images = ExactMatrix::Constant(
      static_cast<Eigen::Index>(domain.size()),
      static_cast<Eigen::Index>(std::max<size_t>(codomain.size(), 1)), GaussianRational(0));
  for (size_t r = 0; r < domain.size(); ++r) {
    AlgebraElement w =
        power * AlgebraElement::monomial(ctx.signature(), Monomial{{}, domain[r]},
                                         GaussianRational(1));
    for (const auto& [m, c] : w.terms())
      images(static_cast<Eigen::Index>(r), codomain_index.at(m.odd)) = c;
  }
  int kernel = map_kernel_dimension(images);
  mpz_class expected = binomial(n, k) - binomial(n, k - 2);
  if (mpz_class(kernel) != expected)
    throw VerificationError("primitive component dimension disagrees with C(2g,k)-C(2g,k-2)");
  return kernel;
}

}  // namespace qcms
