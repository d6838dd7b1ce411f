#include "doctest.h"
#include "qcms/algebra.hpp"
#include "qcms/error.hpp"
#include "qcms/presentations.hpp"

using qcms::AlgebraElement;
using qcms::GaussianRational;

namespace {

struct Gens {
  qcms::SignaturePtr sig = qcms::invariant_ring_signature();
  AlgebraElement a = AlgebraElement::generator(sig, "α");
  AlgebraElement b = AlgebraElement::generator(sig, "β");
  AlgebraElement g = AlgebraElement::generator(sig, "γ");
  AlgebraElement c(long n) const { return AlgebraElement::constant(sig, n); }
};

}  // namespace

TEST_CASE("base and first steps of the classical family") {
  Gens x;
  auto t0 = qcms::classical_triple(0);
  CHECK(t0.p1() == x.c(1));
  CHECK(t0.p2().is_zero());
  CHECK(t0.p3().is_zero());

  auto t1 = qcms::classical_triple(1);
  CHECK(t1.p1() == x.a);
  CHECK(t1.p2() == x.b - x.c(8));
  CHECK(t1.p3() == x.g);

  auto t2 = qcms::classical_triple(2);
  CHECK(t2.p1() == x.a * x.a + x.b - x.c(8));
  CHECK(t2.p2() == x.a * x.b + x.c(8) * x.a + x.g);
  CHECK(t2.p3() == x.a * x.g);
}

TEST_CASE("floer and classical families coincide termwise") {
  for (int r = 0; r <= 8; ++r) {
    auto f = qcms::floer_triple(r);
    auto c = qcms::classical_triple(r);
    CHECK(f.kind == qcms::RingKind::floer);
    for (int j = 0; j < 3; ++j) CHECK(f.rel[j] == c.rel[j]);
  }
}

TEST_CASE("quantum family flips the deformation sign with the genus") {
  Gens x;
  auto q1 = qcms::quantum_triple(1, 1);
  CHECK(q1.p1() == x.a);
  CHECK(q1.p2() == x.b + x.c(8));
  CHECK(q1.p3() == x.g);

  auto q2 = qcms::quantum_triple(2, 1);
  CHECK(q2.p1() == x.a * x.a + x.b + x.c(8));
  CHECK(q2.p2() == x.a * x.b - x.c(8) * x.a + x.g);
  CHECK(q2.p3() == x.a * x.g);

  // Even genus realigns with the classical signs.
  auto e2 = qcms::quantum_triple(2, 2);
  auto c2 = qcms::classical_triple(2);
  for (int j = 0; j < 3; ++j) CHECK(e2.rel[j] == c2.rel[j]);
  // Odd genus agrees with genus 1.
  auto o2 = qcms::quantum_triple(2, 3);
  for (int j = 0; j < 3; ++j) CHECK(o2.rel[j] == q2.rel[j]);

  CHECK_THROWS_AS(qcms::quantum_triple(1, 0), qcms::DomainError);
}

TEST_CASE("relation degrees grow linearly in the index") {
  for (int r = 1; r <= 7; ++r) {
    auto t = qcms::classical_triple(r);
    CHECK(t.p1().top_degree() == 2 * r);
    CHECK(t.p2().top_degree() == 2 * r + 2);
    CHECK(t.p3().top_degree() == 2 * r + 4);
  }
}

TEST_CASE("generic recursion pads short constant vectors with zeros") {
  Gens x;
  std::vector<GaussianRational> c = {GaussianRational(-8)};
  auto t = qcms::generic_triple(2, c, {});
  // Step 2 then uses c_2 = 0, so no 8α term enters the second relation.
  CHECK(t.p1() == x.a * x.a + x.b - x.c(8));
  CHECK(t.p2() == x.a * x.b + x.g);
  CHECK_THROWS_AS(qcms::generic_triple(-1, {}, {}), qcms::DomainError);
}

TEST_CASE("nonzero d constants feed the second relation into the third") {
  Gens x;
  std::vector<GaussianRational> d = {GaussianRational(0), GaussianRational(3)};
  auto t = qcms::generic_triple(2, {}, d);
  // With all c = 0: step1 (α, β, γ); step2 P3 = γα + 3β.
  CHECK(t.p3() == x.a * x.g + x.c(3) * x.b);
}

TEST_CASE("homogeneous reference is the zero-constant specialization") {
  Gens x;
  auto h2 = qcms::homogeneous_reference_triple(2);
  CHECK(h2.p1() == x.a * x.a + x.b);
  CHECK(h2.p2() == x.a * x.b + x.g);
  CHECK(h2.p3() == x.a * x.g);
}

TEST_CASE("deformation split peels homogeneous layers four apart") {
  Gens x;
  auto r2 = qcms::classical_triple(2);
  auto parts = qcms::deformation_split(r2.p1(), 4);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == x.a * x.a + x.b);
  CHECK(parts[1] == -x.c(8));

  // Degree gaps keep their slot.
  auto p = x.a.pow(4) + x.c(5);  // degrees 8 and 0, slots j = 0 and j = 2
  auto gap = qcms::deformation_split(p, 8);
  REQUIRE(gap.size() == 3);
  CHECK(gap[0] == x.a.pow(4));
  CHECK(gap[1].is_zero());
  CHECK(gap[2] == x.c(5));

  CHECK(qcms::deformation_split(AlgebraElement::zero(x.sig), 12).empty());
  CHECK_THROWS_AS(qcms::deformation_split(x.a + x.b, 4), qcms::DegreeError);
  CHECK_THROWS_AS(qcms::deformation_split(x.b, 2), qcms::DegreeError);
}

TEST_CASE("leading layers of the deformed families are the reference triple") {
  for (int r = 1; r <= 6; ++r) {
    auto ref = qcms::homogeneous_reference_triple(r);
    int degs[3] = {2 * r, 2 * r + 2, 2 * r + 4};
    auto check_family = [&](const qcms::PresentationTriple& t) {
      for (int j = 0; j < 3; ++j) {
        auto parts = qcms::deformation_split(t.rel[j], degs[j]);
        if (ref.rel[j].is_zero()) {
          CHECK(parts.empty());
        } else {
          REQUIRE(!parts.empty());
          CHECK(parts[0] == ref.rel[j]);
        }
      }
    };
    check_family(qcms::classical_triple(r));
    check_family(qcms::quantum_triple(r, 1));
    check_family(qcms::quantum_triple(r, 2));
  }
}
