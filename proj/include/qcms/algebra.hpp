#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcms/scalar.hpp"

namespace qcms {

struct Generator {
  std::string name;
  int degree = 0;
};

// Immutable description of a graded-commutative algebra over Q(i):
// commuting generators carry even degree, anticommuting generators odd degree.
class AlgebraSignature {
 public:
  AlgebraSignature(std::vector<Generator> commuting, std::vector<Generator> anticommuting);

  const std::vector<Generator>& commuting() const { return commuting_; }
  const std::vector<Generator>& anticommuting() const { return anticommuting_; }

  // (is_commuting, index) for a generator name.
  std::optional<std::pair<bool, int>> find(std::string_view name) const;

  bool operator==(const AlgebraSignature& o) const;
  bool operator!=(const AlgebraSignature& o) const { return !(*this == o); }

 private:
  std::vector<Generator> commuting_;
  std::vector<Generator> anticommuting_;
};

using SignaturePtr = std::shared_ptr<const AlgebraSignature>;

// Q(i)[α(2), β(4), γ(6)], the invariant polynomial ring.
SignaturePtr invariant_ring_signature();
// Λ(φ1..φ2g), each of degree 1.
SignaturePtr exterior_signature(int genus);
// Λ(φ1..φ2g) ⊗ Q[h], h of degree 2 (listed first among commuting generators).
SignaturePtr quantum_ring_signature(int genus);

// A monomial: exponent vector over the commuting generators plus a bit set
// over the anticommuting ones (bit i = generator #i present, canonical
// ascending order with the sign already absorbed into the coefficient).
struct Monomial {
  std::vector<std::uint32_t> exp;
  std::uint64_t odd = 0;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.odd == b.odd && a.exp == b.exp;
  }
};

// Canonical term order: exponent vectors compared lexicographically with the
// larger vector first; ties broken by the anticommuting index sets compared as
// ascending sequences with the smaller sequence first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

int monomial_degree(const AlgebraSignature& sig, const Monomial& m);

// Immutable sparse element of a graded-commutative algebra. All operations
// are pure functions; canonical form keeps no zero coefficients and iterates
// terms in canonical order.
class AlgebraElement {
 public:
  using TermMap = std::map<Monomial, GaussianRational, MonomialOrder>;

  static AlgebraElement zero(SignaturePtr sig);
  static AlgebraElement constant(SignaturePtr sig, GaussianRational c);
  static AlgebraElement generator(SignaturePtr sig, std::string_view name);
  static AlgebraElement monomial(SignaturePtr sig, Monomial m, GaussianRational c);

  const SignaturePtr& signature() const { return sig_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  GaussianRational coefficient(const Monomial& m) const;
  // Highest / lowest total degree over terms; nullopt for the zero element.
  std::optional<int> top_degree() const;
  std::optional<int> min_degree() const;
  bool is_homogeneous() const;

  AlgebraElement grade_component(int degree) const;
  // Nonzero homogeneous parts keyed by degree.
  std::map<int, AlgebraElement> graded_parts() const;

  AlgebraElement pow(unsigned k) const;

  // Algebra morphism determined by generator images. Generators without an
  // image must exist in the target signature with the same parity and map to
  // themselves. Every image must be parity-homogeneous (throws ParityError).
  AlgebraElement substitute(const std::map<std::string, AlgebraElement>& images,
                            SignaturePtr target) const;
  AlgebraElement substitute(const std::map<std::string, AlgebraElement>& images) const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const GaussianRational& c, const AlgebraElement& a);
  friend AlgebraElement operator*(const AlgebraElement& a, const GaussianRational& c);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) {
    return !(a == b);
  }

  // Pretty form, terms in canonical order, e.g. "α^2β-8" or "φ1φ4+φ2φ5".
  std::string str() const;
  std::string monomial_str(const Monomial& m) const;

 private:
  AlgebraElement(SignaturePtr sig, TermMap terms)
      : sig_(std::move(sig)), terms_(std::move(terms)) {}
  void add_term(const Monomial& m, const GaussianRational& c);
  static void check_same_signature(const AlgebraElement& a, const AlgebraElement& b);

  SignaturePtr sig_;
  TermMap terms_;
};

// Sign of interleaving two disjoint ascending anticommuting words: (-1)^k
// where k counts pairs (x in a, y in b) with x > y.
int interleave_sign(std::uint64_t a, std::uint64_t b);

}  // namespace qcms
