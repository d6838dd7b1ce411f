#include <algorithm>

#include "doctest.h"
#include "qcms/error.hpp"
#include "qcms/graded_ideal.hpp"
#include "qcms/presentations.hpp"

using qcms::AlgebraElement;
using qcms::GaussianRational;
using qcms::GradedIdeal;
using qcms::Monomial;

namespace {

struct Gens {
  qcms::SignaturePtr sig = qcms::invariant_ring_signature();
  AlgebraElement a = AlgebraElement::generator(sig, "α");
  AlgebraElement b = AlgebraElement::generator(sig, "β");
  AlgebraElement g = AlgebraElement::generator(sig, "γ");
  AlgebraElement c(long n) const { return AlgebraElement::constant(sig, n); }
};

GradedIdeal family_r(int r, int cap) {
  auto t = qcms::classical_triple(r);
  return GradedIdeal({t.p1(), t.p2(), t.p3()}, cap);
}

}  // namespace

TEST_CASE("monomial enumeration is degree-major and lex within degree") {
  auto ms = qcms::invariant_monomials_up_to(6);
  // Degrees 6,4,2,0; within 6: α³, αβ, γ.
  REQUIRE(ms.size() == 7);
  CHECK(ms[0].exp == std::vector<std::uint32_t>{3, 0, 0});
  CHECK(ms[1].exp == std::vector<std::uint32_t>{1, 1, 0});
  CHECK(ms[2].exp == std::vector<std::uint32_t>{0, 0, 1});
  CHECK(ms[3].exp == std::vector<std::uint32_t>{2, 0, 0});
  CHECK(ms[4].exp == std::vector<std::uint32_t>{0, 1, 0});
  CHECK(ms[5].exp == std::vector<std::uint32_t>{1, 0, 0});
  CHECK(ms[6].exp == std::vector<std::uint32_t>{0, 0, 0});

  CHECK(qcms::quotient_basis(1).size() == 1);
  CHECK(qcms::quotient_basis(2).size() == 4);
  CHECK(qcms::quotient_basis(3).size() == 10);
  CHECK(qcms::quotient_basis(6).size() == 56);
  CHECK_THROWS_AS(qcms::quotient_basis(0), qcms::DomainError);
}

TEST_CASE("membership certificates for the index one ideal") {
  Gens x;
  GradedIdeal ideal = family_r(1, 12);
  CHECK(ideal.parity_blocked());
  CHECK(ideal.contains(x.a * x.b));
  CHECK(ideal.contains(x.b - x.c(8)));
  CHECK(ideal.contains((x.b - x.c(8)) * (x.b + x.c(3))));
  CHECK_FALSE(ideal.contains(x.c(1)));
  CHECK_FALSE(ideal.contains(x.b));
  CHECK(ideal.reduce(x.b) == x.c(8));
  CHECK(ideal.reduce(x.b * x.b) == x.c(64));
  // A residual never touches a leading monomial again.
  CHECK(ideal.reduce(x.a.pow(3) + x.b + x.g + x.c(5)) == x.c(13));
}

TEST_CASE("rows are unit-led, distinct, and degree-sorted") {
  GradedIdeal ideal = family_r(2, 12);
  auto rows = ideal.rows();
  REQUIRE(!rows.empty());
  int prev = 1 << 20;
  std::vector<std::string> seen;
  for (const auto& row : rows) {
    int d = *row.top_degree();
    CHECK(d <= prev);
    prev = d;
    // Leading coefficient 1 at the first monomial of the top component.
    auto top = row.grade_component(d);
    auto lead = top.terms().begin();
    CHECK(lead->second == GaussianRational(1));
    seen.push_back(row.monomial_str(lead->first));
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  for (const auto& row : rows) CHECK(ideal.contains(row));
}

TEST_CASE("quotient dimensions count surviving monomials with fullness") {
  GradedIdeal i1 = family_r(1, 12);
  CHECK(qcms::quotient_dim(1, i1) == 1);
  GradedIdeal i2 = family_r(2, 12);
  CHECK(qcms::quotient_dim(2, i2) == 4);
  // The four survivors of the index-2 ideal are 1, α, β, γ.
  CHECK(i2.surviving_monomials(0).size() == 1);
  CHECK(i2.surviving_monomials(2).size() == 1);
  CHECK(i2.surviving_monomials(4).size() == 1);
  CHECK(i2.surviving_monomials(4)[0].exp == std::vector<std::uint32_t>{0, 1, 0});
  CHECK(i2.surviving_monomials(6).size() == 1);
  CHECK(i2.surviving_monomials(6)[0].exp == std::vector<std::uint32_t>{0, 0, 1});
  CHECK(i2.surviving_monomials(8).empty());

  GradedIdeal i3 = family_r(3, 18);
  CHECK(qcms::quotient_dim(3, i3) == 10);

  // A non-cofinite span cannot certify a dimension: survivors linger above
  // the socle window.
  Gens x;
  GradedIdeal thin({x.a}, 12);
  CHECK_THROWS_AS(qcms::quotient_dim(1, thin), qcms::VerificationError);
  // Cap shorter than the socle window.
  CHECK_THROWS_AS(qcms::quotient_dim(3, i1), qcms::CapError);
}

TEST_CASE("lead data groups rows by their top degree") {
  GradedIdeal i2 = family_r(2, 12);
  Gens x;
  // Degree 4 leading forms: only the top of α²+β-8.
  CHECK(i2.lead_dimension(4) == 1);
  auto forms = i2.lead_forms(4);
  REQUIRE(forms.size() == 1);
  CHECK(forms[0] == x.a * x.a + x.b);
  CHECK(i2.lead_dimension(0) == 0);
  // All four degree-8 monomials are led by some row.
  CHECK(i2.lead_dimension(8) + static_cast<int>(i2.surviving_monomials(8).size()) == 4);
}

TEST_CASE("normal forms rewrite against the quotient basis") {
  Gens x;
  GradedIdeal i1 = family_r(1, 12);
  CHECK(qcms::normal_form(x.b, 1, i1) == x.c(8));
  CHECK(qcms::normal_form(x.a * x.b + x.c(3), 1, i1) == x.c(3));

  GradedIdeal i2 = family_r(2, 12);
  // α² ≡ 8 - β mod (α²+β-8, ...).
  CHECK(qcms::normal_form(x.a * x.a, 2, i2) == x.c(8) - x.b);
  CHECK(qcms::normal_form(x.g, 2, i2) == x.g);
  // α·(αβ+8α+γ) ∈ I so α²β ≡ -8α²-αγ; both reduce further.
  auto nf = qcms::normal_form(x.a * x.a * x.b, 2, i2);
  CHECK(i2.contains(x.a * x.a * x.b - nf));
  CHECK(nf.top_degree().value_or(0) <= 6);

  // Dependent residuals are refused: α ∈ (α) makes the basis collapse.
  GradedIdeal thin({x.a}, 12);
  CHECK_THROWS_AS(qcms::normal_form(x.b, 2, thin), qcms::VerificationError);
}

TEST_CASE("ideal equality by mutual generator containment") {
  Gens x;
  GradedIdeal i1 = family_r(1, 12);
  GradedIdeal same({x.a, x.b - x.c(8), x.g, x.a * x.a}, 12);
  CHECK(qcms::ideal_equal(i1, same));
  auto q1 = qcms::quantum_triple(1, 1);
  GradedIdeal j1({q1.p1(), q1.p2(), q1.p3()}, 12);
  CHECK_FALSE(qcms::ideal_equal(i1, j1));
  GradedIdeal other_cap({x.a, x.b - x.c(8), x.g}, 14);
  CHECK_THROWS_AS(qcms::ideal_equal(i1, other_cap), qcms::CapError);
}

TEST_CASE("cap discipline") {
  Gens x;
  CHECK_THROWS_AS(GradedIdeal({x.g}, 4), qcms::CapError);
  GradedIdeal i1 = family_r(1, 12);
  CHECK_THROWS_AS(i1.reduce(x.a.pow(7)), qcms::CapError);
  CHECK_THROWS_AS(GradedIdeal({x.a}, -1), qcms::CapError);
}

TEST_CASE("mixed parity generators fall back to a single block") {
  Gens x;
  GradedIdeal mixed({x.a + x.b}, 8);
  CHECK_FALSE(mixed.parity_blocked());
  CHECK(mixed.contains((x.a + x.b) * x.a));
  CHECK_FALSE(mixed.contains(x.a));
  GradedIdeal pure({x.a + x.g}, 8);  // degrees 2 and 6 share a class mod 4
  CHECK(pure.parity_blocked());
  CHECK(pure.contains(x.a * x.a + x.a * x.g));
}

TEST_CASE("span rebuilds accept honest rows and reject tampering") {
  Gens x;
  GradedIdeal i1 = family_r(1, 12);
  auto t = qcms::classical_triple(1);
  std::vector<AlgebraElement> gens = {t.p1(), t.p2(), t.p3()};
  GradedIdeal back = qcms::rebuild_from_span(gens, 12, i1.rows());
  CHECK(back.rank() == i1.rank());
  CHECK(qcms::ideal_equal(back, i1));
  CHECK(back.reduce(x.b) == x.c(8));

  // Dependent rows are rejected.
  auto rows = i1.rows();
  rows.push_back(rows.front());
  CHECK_THROWS_AS(qcms::rebuild_from_span(gens, 12, rows), qcms::CacheError);
  // A span that lost a generator is rejected.
  std::vector<AlgebraElement> partial = {x.a * x.a};
  GradedIdeal small({x.a * x.a}, 12);
  CHECK_THROWS_AS(qcms::rebuild_from_span(gens, 12, small.rows()),
                  qcms::CacheError);

  // Zero generators are dropped on both construction paths, so a rebuilt
  // ideal exposes the same generator list as a fresh one.
  auto base = qcms::classical_triple(0);
  std::vector<AlgebraElement> with_zeros = {base.p1(), base.p2(), base.p3()};
  GradedIdeal fresh(with_zeros, 12);
  GradedIdeal rebuilt = qcms::rebuild_from_span(with_zeros, 12, fresh.rows());
  REQUIRE(fresh.generators().size() == 1);
  CHECK(rebuilt.generators().size() == 1);
}

TEST_CASE("quotient dimensions match the closed count for deeper indices") {
  // C(r+2,3) for r = 1..4 over the classical family.
  int expect[] = {1, 4, 10, 20};
  for (int r = 1; r <= 4; ++r) {
    GradedIdeal ideal = family_r(r, std::max(6 * r, 12));
    CHECK(qcms::quotient_dim(r, ideal) == expect[r - 1]);
  }
}
