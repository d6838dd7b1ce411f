#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "qcms/algebra.hpp"
#include "qcms/error.hpp"

using qcms::AlgebraElement;
using qcms::GaussianRational;
using qcms::Monomial;

namespace {

// Reference product of two square-free anticommuting words, computed the
// slow way: concatenate the index sequences, then bubble-sort while
// counting transpositions.  Returns 0 sign on a repeated index.
int slow_sign(std::uint64_t a, std::uint64_t b) {
  if (a & b) return 0;
  std::vector<int> word;
  for (int i = 0; i < 64; ++i)
    if (a >> i & 1) word.push_back(i);
  for (int i = 0; i < 64; ++i)
    if (b >> i & 1) word.push_back(i);
  int swaps = 0;
  for (std::size_t n = word.size(); n > 1; --n)
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        ++swaps;
      }
  return swaps % 2 == 0 ? 1 : -1;
}

AlgebraElement odd_word(qcms::SignaturePtr sig, std::uint64_t mask) {
  Monomial m;
  m.exp.assign(sig->commuting().size(), 0);
  m.odd = mask;
  return AlgebraElement::monomial(sig, m, GaussianRational(1));
}

}  // namespace

TEST_CASE("anticommuting product signs match transposition counting") {
  auto sig = qcms::exterior_signature(4);  // 8 odd generators
  std::mt19937 rng(20260816);
  std::uniform_int_distribution<std::uint64_t> dist(0, 255);
  for (int trial = 0; trial < 200; ++trial) {
    std::uint64_t a = dist(rng), b = dist(rng);
    auto prod = odd_word(sig, a) * odd_word(sig, b);
    int sign = slow_sign(a, b);
    if (sign == 0) {
      CHECK(prod.is_zero());
    } else {
      Monomial expect;
      expect.exp.assign(0, 0);
      expect.odd = a | b;
      CHECK(prod.coefficient(expect) == GaussianRational(sign));
    }
  }
}

TEST_CASE("one transposition flips the sign") {
  auto sig = qcms::exterior_signature(2);
  auto phi = [&](int k) {
    return AlgebraElement::generator(sig, "φ" + std::to_string(k));
  };
  // (φ1φ3)·φ2 moves φ2 past φ3 once.
  CHECK((phi(1) * phi(3)) * phi(2) == -(phi(1) * phi(2) * phi(3)));
  CHECK(phi(1) * phi(1) == AlgebraElement::zero(sig));
  CHECK(phi(2) * phi(4) == -(phi(4) * phi(2)));
}

TEST_CASE("graded commutativity, associativity, distributivity") {
  auto sig = qcms::quantum_ring_signature(3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::uint64_t> mask(0, 63);
  std::uniform_int_distribution<std::uint32_t> hexp(0, 3);
  std::uniform_int_distribution<int> coef(-5, 5);
  auto random_term = [&]() {
    Monomial m;
    m.exp = {hexp(rng)};
    m.odd = mask(rng);
    return AlgebraElement::monomial(sig, m, GaussianRational(coef(rng)));
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_term();
    auto y = random_term();
    auto z = random_term() + random_term();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    auto dx = x.top_degree(), dy = y.top_degree();
    if (dx && dy) {
      long s = (*dx % 2 != 0 && *dy % 2 != 0) ? -1 : 1;
      CHECK(x * y == GaussianRational(s) * (y * x));
    }
  }
}

TEST_CASE("commuting generators expand binomially") {
  auto sig = qcms::invariant_ring_signature();
  auto a = AlgebraElement::generator(sig, "α");
  auto b = AlgebraElement::generator(sig, "β");
  CHECK(a * b == b * a);
  CHECK((a + b) * (a + b) == a * a + GaussianRational(2) * (a * b) + b * b);
  CHECK(a.pow(3) * a.pow(2) == a.pow(5));
  CHECK((a - a).is_zero());
}

TEST_CASE("degrees and graded parts") {
  auto sig = qcms::invariant_ring_signature();
  auto a = AlgebraElement::generator(sig, "α");  // degree 2
  auto b = AlgebraElement::generator(sig, "β");  // degree 4
  auto g = AlgebraElement::generator(sig, "γ");  // degree 6
  auto p = a * a + b - GaussianRational(8) * AlgebraElement::constant(sig, 1) + g;
  CHECK(p.top_degree() == 6);
  CHECK(p.min_degree() == 0);
  CHECK_FALSE(p.is_homogeneous());
  CHECK(p.grade_component(4) == a * a + b);
  CHECK(p.grade_component(2).is_zero());
  auto parts = p.graded_parts();
  CHECK(parts.size() == 3);
  CHECK(parts.at(0) == AlgebraElement::constant(sig, GaussianRational(-8)));
  CHECK(parts.at(6) == g);
  CHECK_FALSE(AlgebraElement::zero(sig).top_degree().has_value());
  CHECK((a * b).is_homogeneous());
}

TEST_CASE("substitution maps generators and respects parity") {
  auto sig = qcms::invariant_ring_signature();
  auto a = AlgebraElement::generator(sig, "α");
  auto g = AlgebraElement::generator(sig, "γ");
  auto i = GaussianRational::i();

  // γ ↦ i³γ = -iγ, α untouched.
  auto img = (a + g).substitute({{"γ", GaussianRational::i_power(3) * g}});
  CHECK(img == a - i * g);
  CHECK(img.str() == "α-iγ");

  // Quadratic image: α ↦ α+β picks up cross terms on α².
  auto b = AlgebraElement::generator(sig, "β");
  auto sq = (a * a).substitute({{"α", a + b}});
  CHECK(sq == a * a + GaussianRational(2) * (a * b) + b * b);

  // An odd-degree image for an even generator is rejected.
  auto ext = qcms::exterior_signature(1);
  auto phi1 = AlgebraElement::generator(ext, "φ1");
  CHECK_THROWS_AS(a.substitute({{"α", phi1}}, ext), qcms::ParityError);
  // Unknown generator names are rejected too.
  CHECK_THROWS_AS(a.substitute({{"δ", a}}), qcms::SignatureError);
  // Cross-signature substitution without an image needs a matching name.
  CHECK_THROWS_AS(a.substitute({}, ext), qcms::SignatureError);
}

TEST_CASE("cross signature substitution lands in the target ring") {
  auto src = qcms::invariant_ring_signature();
  auto dst = qcms::quantum_ring_signature(2);
  auto h = AlgebraElement::generator(dst, "h");
  auto a = AlgebraElement::generator(src, "α");
  auto b = AlgebraElement::generator(src, "β");
  auto g = AlgebraElement::generator(src, "γ");
  std::map<std::string, AlgebraElement> images = {
      {"α", h}, {"β", h * h}, {"γ", h * h * h}};
  auto out = (a * b + g).substitute(images, dst);
  CHECK(out == GaussianRational(2) * (h * h * h));
  CHECK(out.signature() == dst);
}

TEST_CASE("string rendering") {
  auto sig = qcms::invariant_ring_signature();
  auto a = AlgebraElement::generator(sig, "α");
  auto b = AlgebraElement::generator(sig, "β");
  auto g = AlgebraElement::generator(sig, "γ");
  CHECK(AlgebraElement::zero(sig).str() == "0");
  CHECK(AlgebraElement::constant(sig, 1).str() == "1");
  CHECK(a.str() == "α");
  CHECK((a * a * b).str() == "α^2β");
  CHECK((a - b).str() == "α-β");
  CHECK((a * a + b - AlgebraElement::constant(sig, 8)).str() == "α^2+β-8");
  auto ext = qcms::exterior_signature(2);
  auto phi = [&](int k) {
    return AlgebraElement::generator(ext, "φ" + std::to_string(k));
  };
  CHECK((phi(4) * phi(1)).str() == "-φ1φ4");
}

TEST_CASE("signature construction rules") {
  CHECK_THROWS_AS(qcms::exterior_signature(0), qcms::DomainError);
  CHECK_THROWS_AS(qcms::exterior_signature(33), qcms::DomainError);
  auto q = qcms::quantum_ring_signature(2);
  CHECK(q->commuting().size() == 1);
  CHECK(q->anticommuting().size() == 4);
  CHECK(q->commuting()[0].degree == 2);
  CHECK(q->anticommuting()[3].name == "φ4");
  CHECK(q->anticommuting()[3].degree == 1);
  auto inv = qcms::invariant_ring_signature();
  auto found = inv->find("β");
  REQUIRE(found.has_value());
  CHECK(found->first);  // commuting
  CHECK(found->second == 1);
}
