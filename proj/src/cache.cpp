#include "qcms/cache.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "qcms/error.hpp"
#include "qcms/serialize.hpp"

namespace qcms {

namespace {

PresentationTriple family_triple(RingKind kind, int genus, int r) {
  switch (kind) {
    case RingKind::classical:
      return classical_triple(r);
    case RingKind::floer:
      return floer_triple(r);
    case RingKind::quantum:
      return quantum_triple(r, genus);
  }
  throw DomainError("unknown ring kind");
}

std::filesystem::path cache_path(const CacheConfig& cfg, RingKind kind,
                                 int genus, int r, int cap) {
  std::ostringstream name;
  name << ring_kind_name(kind) << "-g" << genus << "-r" << r << "-cap" << cap
       << ".json";
  return cfg.dir / name.str();
}

// Core payload without the fingerprint; the fingerprint is the FNV-1a-64 of
// this object's compact dump.
nlohmann::json payload_core(RingKind kind, int genus, int r, int cap,
                            const GradedIdeal& ideal,
                            const std::vector<Monomial>& columns) {
  nlohmann::json spans = nlohmann::json::object();
  for (const auto& row : ideal.rows()) {
    std::vector<std::string> dense;
    dense.reserve(columns.size());
    for (const auto& m : columns)
      dense.push_back(gaussian_pair_string(row.coefficient(m)));
    spans[std::to_string(*row.top_degree())].push_back(std::move(dense));
  }
  return {{"version", 1},
          {"kind", ring_kind_name(kind)},
          {"g", genus},
          {"r", r},
          {"cap", cap},
          {"spans", spans}};
}

GradedIdeal load_cached(const std::filesystem::path& path, RingKind kind,
                        int genus, int r, int cap,
                        const std::vector<AlgebraElement>& gens,
                        const std::vector<Monomial>& columns) {
  std::ifstream in(path);
  if (!in) throw CacheError("cache file unreadable");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception&) {
    throw CacheError("cache file is not valid json");
  }
  try {
    if (!j.is_object() || j.value("version", 0) != 1)
      throw CacheError("cache version mismatch");
    if (j.value("kind", "") != ring_kind_name(kind) || j.value("g", -1) != genus ||
        j.value("r", -1) != r || j.value("cap", -1) != cap)
      throw CacheError("cache parameters mismatch");
    nlohmann::json core = j;
    if (!core.contains("fingerprint")) throw CacheError("cache fingerprint missing");
    std::string fp = core.at("fingerprint").get<std::string>();
    core.erase("fingerprint");
    if (fnv1a64_hex(core.dump()) != fp) throw CacheError("cache fingerprint mismatch");

    auto sig = invariant_ring_signature();
    std::vector<AlgebraElement> rows;
    const auto& spans = j.at("spans");
    if (!spans.is_object()) throw CacheError("cache spans must be an object");
    // Degrees descending to match the construction-order convention.
    std::vector<std::pair<int, const nlohmann::json*>> groups;
    for (auto it = spans.begin(); it != spans.end(); ++it)
      groups.emplace_back(std::stoi(it.key()), &it.value());
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [degree, rows_json] : groups) {
      if (!rows_json->is_array()) throw CacheError("cache span group must be a list");
      for (const auto& dense : *rows_json) {
        if (!dense.is_array() || dense.size() != columns.size())
          throw CacheError("cache span row has the wrong arity");
        AlgebraElement row = AlgebraElement::zero(sig);
        for (std::size_t k = 0; k < columns.size(); ++k) {
          GaussianRational c =
              gaussian_from_pair_string(dense[k].get<std::string>());
          if (!c.is_zero())
            row = row + AlgebraElement::monomial(sig, columns[k], c);
        }
        if (row.top_degree().value_or(-1) != degree)
          throw CacheError("cache span row degree disagrees with its group");
        rows.push_back(std::move(row));
      }
    }
    return rebuild_from_span(gens, cap, rows);
  } catch (const CacheError&) {
    throw;
  } catch (const nlohmann::json::exception&) {
    throw CacheError("cache file shape mismatch");
  } catch (const Error& e) {
    throw CacheError(std::string("cache content rejected: ") + e.what());
  } catch (const std::exception& e) {
    throw CacheError(std::string("cache unreadable: ") + e.what());
  }
}

void save_cache(const std::filesystem::path& path, nlohmann::json core) {
  core["fingerprint"] = fnv1a64_hex(core.dump());
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  // Atomic publish: write a sibling temp file, then rename over the target.
  std::random_device rd;
  std::filesystem::path tmp =
      path.parent_path() / (path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp);
    if (!out) return;  // caching is best-effort; the computed ideal is already in hand
    out << core.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace

int family_cap(int r) { return std::max(6 * r, 12); }

GradedIdeal family_ideal(RingKind kind, int genus, int r, const CacheConfig& cfg) {
  if (genus < 1) throw DomainError("family ideals need genus >= 1");
  if (r < 0) throw DomainError("family ideals need r >= 0");
  PresentationTriple t = family_triple(kind, genus, r);
  std::vector<AlgebraElement> gens(t.rel.begin(), t.rel.end());
  const int cap = family_cap(r);

  if (!cfg.enabled || cfg.dir.empty()) return GradedIdeal(std::move(gens), cap);

  std::vector<Monomial> columns = invariant_monomials_up_to(cap);
  std::filesystem::path path = cache_path(cfg, kind, genus, r, cap);
  if (std::filesystem::exists(path)) {
    try {
      return load_cached(path, kind, genus, r, cap, gens, columns);
    } catch (const CacheError&) {
      // fall through to a fresh build that overwrites the bad file
    }
  }
  GradedIdeal ideal(gens, cap);
  save_cache(path, payload_core(kind, genus, r, cap, ideal, columns));
  return ideal;
}

Report ideal_chain_check(int genus, const CacheConfig& cfg) {
  if (genus < 2) throw DomainError("ideal_chain_check needs genus >= 2");
  Report rep{"ideal-chain", genus, {}};
  AlgebraElement gamma =
      AlgebraElement::generator(invariant_ring_signature(), "γ");
  GradedIdeal lower = family_ideal(RingKind::quantum, genus, 0, cfg);
  for (int k = 0; k < genus; ++k) {
    GradedIdeal upper = family_ideal(RingKind::quantum, genus, k + 1, cfg);
    const auto& lg = lower.generators();
    for (std::size_t j = 0; j < lg.size(); ++j) {
      Check c;
      c.name = "k=" + std::to_string(k) + ": γ·(J_" + std::to_string(k) +
               " gen " + std::to_string(j + 1) + ") in J_" + std::to_string(k + 1);
      c.pass = upper.contains(gamma * lg[j]);
      c.detail = c.pass ? "reduces to zero" : "nonzero residual";
      rep.checks.push_back(std::move(c));
    }
    const auto& ug = upper.generators();
    for (std::size_t j = 0; j < ug.size(); ++j) {
      Check c;
      c.name = "k=" + std::to_string(k) + ": J_" + std::to_string(k + 1) +
               " gen " + std::to_string(j + 1) + " in J_" + std::to_string(k);
      c.pass = lower.contains(ug[j]);
      c.detail = c.pass ? "reduces to zero" : "nonzero residual";
      rep.checks.push_back(std::move(c));
    }
    lower = std::move(upper);
  }
  return rep;
}

Report dimension_check(int genus, const CacheConfig& cfg) {
  if (genus < 1) throw DomainError("dimension_check needs genus >= 1");
  Report rep{"quotient-dimensions", genus, {}};
  for (int r = 1; r <= genus; ++r) {
    mpz_class want = binomial(r + 2, 3);
    for (RingKind kind :
         {RingKind::classical, RingKind::floer, RingKind::quantum}) {
      GradedIdeal ideal = family_ideal(kind, genus, r, cfg);
      int dim = quotient_dim(r, ideal);
      Check c;
      c.name = std::string(ring_kind_name(kind)) + " quotient at r=" +
               std::to_string(r);
      c.pass = mpz_class(dim) == want;
      c.detail = "dim = " + std::to_string(dim) + ", C(" +
                 std::to_string(r + 2) + ",3) = " + want.get_str();
      rep.checks.push_back(std::move(c));
    }
  }
  return rep;
}

}  // namespace qcms
