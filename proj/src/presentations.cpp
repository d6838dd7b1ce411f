#include "qcms/presentations.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "qcms/error.hpp"

namespace qcms {

const char* ring_kind_name(RingKind kind) {
  switch (kind) {
    case RingKind::classical:
      return "classical";
    case RingKind::floer:
      return "floer";
    case RingKind::quantum:
      return "quantum";
  }
  throw DomainError("unknown ring kind");
}

std::array<AlgebraElement, 3> recursion_step(
    const std::array<AlgebraElement, 3>& prev, int k,
    const GaussianRational& c_k, const GaussianRational& d_k) {
  if (k < 1) throw DomainError("recursion step index must be >= 1");
  auto sig = invariant_ring_signature();
  AlgebraElement alpha = AlgebraElement::generator(sig, "α");
  AlgebraElement beta = AlgebraElement::generator(sig, "β");
  AlgebraElement gamma = AlgebraElement::generator(sig, "γ");

  GaussianRational km1_sq(static_cast<long>(k - 1) * (k - 1));
  GaussianRational ratio = GaussianRational::fraction(2 * (k - 1), k);

  std::array<AlgebraElement, 3> next = {
      alpha * prev[0] + km1_sq * prev[1],
      (beta + AlgebraElement::constant(sig, c_k)) * prev[0] + ratio * prev[2],
      gamma * prev[0] + d_k * prev[1],
  };
  return next;
}

namespace {

std::array<AlgebraElement, 3> base_triple() {
  auto sig = invariant_ring_signature();
  return {AlgebraElement::constant(sig, GaussianRational(1)),
          AlgebraElement::zero(sig), AlgebraElement::zero(sig)};
}

std::array<AlgebraElement, 3> run_recursion(
    int r, const std::vector<GaussianRational>& c,
    const std::vector<GaussianRational>& d) {
  auto triple = base_triple();
  for (int k = 1; k <= r; ++k) {
    GaussianRational ck =
        k - 1 < static_cast<int>(c.size()) ? c[k - 1] : GaussianRational(0);
    GaussianRational dk =
        k - 1 < static_cast<int>(d.size()) ? d[k - 1] : GaussianRational(0);
    triple = recursion_step(triple, k, ck, dk);
  }
  return triple;
}

// Sign-alternating constant vector c_k = (-1)^(k+offset)·8, length r.
std::vector<GaussianRational> alternating_eights(int r, int offset) {
  std::vector<GaussianRational> c;
  c.reserve(static_cast<std::size_t>(r));
  for (int k = 1; k <= r; ++k) {
    long sign = (k + offset) % 2 == 0 ? 1 : -1;
    c.emplace_back(sign * 8);
  }
  return c;
}

// Named-family triples are pure functions of (kind, r, genus); memoized
// since ideal construction requests the same triples repeatedly.
std::mutex memo_mutex;
std::map<std::tuple<int, int, int>, PresentationTriple> memo;

PresentationTriple memoized(RingKind kind, int r, int genus) {
  if (r < 0) throw DomainError("presentation index must be >= 0");
  auto key = std::make_tuple(static_cast<int>(kind), r, genus);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  std::vector<GaussianRational> c;
  switch (kind) {
    case RingKind::classical:
    case RingKind::floer:
      c = alternating_eights(r, 0);
      break;
    case RingKind::quantum:
      c = alternating_eights(r, genus);
      break;
  }
  PresentationTriple out{kind, r, genus, run_recursion(r, c, {})};
  std::lock_guard<std::mutex> lock(memo_mutex);
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

PresentationTriple generic_triple(int r, const std::vector<GaussianRational>& c,
                                  const std::vector<GaussianRational>& d) {
  if (r < 0) throw DomainError("presentation index must be >= 0");
  return PresentationTriple{RingKind::classical, r, 0, run_recursion(r, c, d)};
}

PresentationTriple classical_triple(int r) {
  return memoized(RingKind::classical, r, 0);
}

PresentationTriple floer_triple(int r) {
  PresentationTriple t = memoized(RingKind::classical, r, 0);
  t.kind = RingKind::floer;
  return t;
}

PresentationTriple quantum_triple(int r, int genus) {
  if (genus < 1) throw DomainError("quantum triples need genus >= 1");
  return memoized(RingKind::quantum, r, genus);
}

PresentationTriple homogeneous_reference_triple(int r) {
  PresentationTriple t = generic_triple(r, {}, {});
  return t;
}

std::vector<AlgebraElement> deformation_split(const AlgebraElement& p,
                                              int topdeg) {
  std::vector<AlgebraElement> parts;
  for (const auto& [deg, comp] : p.graded_parts()) {
    if (deg > topdeg)
      throw DegreeError("component degree exceeds the declared top degree");
    int drop = topdeg - deg;
    if (drop % 4 != 0)
      throw DegreeError(
          "component degree differs from the top degree by a non-multiple "
          "of 4");
    std::size_t j = static_cast<std::size_t>(drop / 4);
    if (parts.size() <= j)
      parts.resize(j + 1, AlgebraElement::zero(p.signature()));
    parts[j] = comp;
  }
  while (!parts.empty() && parts.back().is_zero()) parts.pop_back();
  return parts;
}

}  // namespace qcms
