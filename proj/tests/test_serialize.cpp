#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "doctest.h"
#include "qcms/cache.hpp"
#include "qcms/error.hpp"
#include "qcms/serialize.hpp"

using qcms::AlgebraElement;
using qcms::GaussianRational;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("qcms-test-" + std::to_string(::getpid()) + "-" +
            std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  static int& counter() {
    static int n = 0;
    return n;
  }
};

}  // namespace

TEST_CASE("element json round trip preserves coefficients and monomials") {
  auto sig = qcms::quantum_ring_signature(2);
  auto h = AlgebraElement::generator(sig, "h");
  auto p1 = AlgebraElement::generator(sig, "φ1");
  auto p3 = AlgebraElement::generator(sig, "φ3");
  auto e = GaussianRational::fraction(-3, 2) * (h * h) +
           GaussianRational::i() * (p1 * p3) + AlgebraElement::constant(sig, 7);
  auto j = qcms::element_to_json(e);
  auto back = qcms::element_from_json(j, sig);
  CHECK(back == e);

  // The wire format is explicit about denominators and 1-based odd slots.
  bool saw_pair = false;
  for (const auto& term : j) {
    if (term.at("monomial").at("odd").size() == 2) {
      saw_pair = true;
      CHECK(term.at("monomial").at("odd")[0] == 1);
      CHECK(term.at("monomial").at("odd")[1] == 3);
      CHECK(term.at("coef").at("re") == "0/1");
      CHECK(term.at("coef").at("im") == "1/1");
    }
  }
  CHECK(saw_pair);
  CHECK(qcms::element_from_json(nlohmann::json::array(), sig).is_zero());
}

TEST_CASE("element json rejects malformed terms") {
  auto sig = qcms::invariant_ring_signature();
  auto good = qcms::element_to_json(AlgebraElement::generator(sig, "α"));
  auto wrong_arity = good;
  wrong_arity[0]["monomial"]["exp"] = {1, 0};
  CHECK_THROWS_AS(qcms::element_from_json(wrong_arity, sig), qcms::Error);
  auto bad_odd = good;
  bad_odd[0]["monomial"]["odd"] = {1};
  CHECK_THROWS_AS(qcms::element_from_json(bad_odd, sig), qcms::Error);
  auto zero_coef = good;
  zero_coef[0]["coef"]["re"] = "0/1";
  CHECK_THROWS_AS(qcms::element_from_json(zero_coef, sig), qcms::Error);
  CHECK_THROWS_AS(qcms::element_from_json(nlohmann::json::object(), sig),
                  qcms::Error);
}

TEST_CASE("pair strings and hashes are stable") {
  auto c = GaussianRational(mpq_class(-7, 2), mpq_class(1, 3));
  CHECK(qcms::gaussian_pair_string(c) == "-7/2,1/3");
  CHECK(qcms::gaussian_from_pair_string("-7/2,1/3") == c);
  CHECK_THROWS_AS(qcms::gaussian_from_pair_string("nope"), qcms::Error);

  // FNV-1a 64 reference vectors.
  CHECK(qcms::fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(qcms::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
  CHECK(qcms::fnv1a64_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("report rendering") {
  qcms::Report r{"iso", 3, {{"map-applies", true, ""}, {"ideals-match", false, "offby 16"}}};
  CHECK_FALSE(r.all_pass());
  auto j = qcms::report_to_json(r);
  CHECK(j.at("suite") == "iso");
  CHECK(j.at("genus") == 3);
  CHECK(j.at("all_pass") == false);
  CHECK(j.at("checks").size() == 2);
  CHECK(j.at("checks")[1].at("pass") == false);
  auto text = qcms::report_to_text(r);
  CHECK(text.find("[pass] map-applies") != std::string::npos);
  CHECK(text.find("[FAIL] ideals-match: offby 16") != std::string::npos);
  CHECK(text.find("CHECKS FAILED") != std::string::npos);
}

TEST_CASE("family ideals cache transparently") {
  TempDir tmp;
  qcms::CacheConfig cfg{tmp.path, true};
  auto cold = qcms::family_ideal(qcms::RingKind::quantum, 2, 2, cfg);
  auto file = tmp.path / "quantum-g2-r2-cap12.json";
  REQUIRE(std::filesystem::exists(file));

  auto warm = qcms::family_ideal(qcms::RingKind::quantum, 2, 2, cfg);
  REQUIRE(warm.rank() == cold.rank());
  for (int k = 0; k < cold.rank(); ++k)
    CHECK(warm.rows()[static_cast<std::size_t>(k)] ==
          cold.rows()[static_cast<std::size_t>(k)]);

  auto uncached = qcms::family_ideal(qcms::RingKind::quantum, 2, 2);
  REQUIRE(uncached.rank() == cold.rank());
  for (int k = 0; k < cold.rank(); ++k)
    CHECK(uncached.rows()[static_cast<std::size_t>(k)] ==
          cold.rows()[static_cast<std::size_t>(k)]);
}

TEST_CASE("corrupted caches are rejected and rebuilt") {
  TempDir tmp;
  qcms::CacheConfig cfg{tmp.path, true};
  auto cold = qcms::family_ideal(qcms::RingKind::classical, 1, 1, cfg);
  auto file = tmp.path / "classical-g1-r1-cap12.json";
  REQUIRE(std::filesystem::exists(file));

  auto corrupt_with = [&](auto mutate) {
    nlohmann::json j;
    {
      std::ifstream in(file);
      in >> j;
    }
    mutate(j);
    std::ofstream out(file, std::ios::trunc);
    out << j.dump();
  };

  // Flip one coefficient: fingerprint must catch it and the rebuild must
  // restore the honest rows.
  corrupt_with([](nlohmann::json& j) {
    auto& spans = j.at("spans");
    auto& first_group = spans.begin().value();
    first_group[0][0] = "5/1,0/1";
  });
  auto healed = qcms::family_ideal(qcms::RingKind::classical, 1, 1, cfg);
  CHECK(healed.rank() == cold.rank());
  CHECK(qcms::ideal_equal(healed, cold));

  // Version bump.
  corrupt_with([](nlohmann::json& j) { j["version"] = 2; });
  CHECK(qcms::family_ideal(qcms::RingKind::classical, 1, 1, cfg).rank() ==
        cold.rank());

  // Not JSON at all.
  {
    std::ofstream out(file, std::ios::trunc);
    out << "}{ definitely not json";
  }
  CHECK(qcms::family_ideal(qcms::RingKind::classical, 1, 1, cfg).rank() ==
        cold.rank());
  // The rebuild repaired the file in place.
  nlohmann::json repaired;
  {
    std::ifstream in(file);
    in >> repaired;
  }
  CHECK(repaired.at("version") == 1);
}

TEST_CASE("family cap policy") {
  CHECK(qcms::family_cap(1) == 12);
  CHECK(qcms::family_cap(2) == 12);
  CHECK(qcms::family_cap(3) == 18);
  CHECK(qcms::family_cap(6) == 36);
}
