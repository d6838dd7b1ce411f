#include "qcms/graded_ideal.hpp"

#include <algorithm>
#include <map>

#include "qcms/error.hpp"
#include "qcms/linalg.hpp"

namespace qcms {

namespace {

std::vector<Monomial> monomials_of_degree(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  for (int c = 0; 6 * c <= d; ++c)
    for (int b = 0; 4 * b + 6 * c <= d; ++b) {
      int rem = d - 4 * b - 6 * c;
      if (rem % 2 != 0) continue;
      out.push_back(Monomial{{static_cast<std::uint32_t>(rem / 2),
                              static_cast<std::uint32_t>(b),
                              static_cast<std::uint32_t>(c)},
                             0});
    }
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

void require_invariant_ring(const SignaturePtr& sig, const char* what) {
  if (*sig != *invariant_ring_signature())
    throw SignatureError(std::string(what) + ": expected ℚ(i)[α,β,γ]");
}

// Residue class mod 4 shared by every term, or -1 if mixed.
int purity_class(const AlgebraElement& e) {
  int res = -1;
  for (const auto& [m, c] : e.terms()) {
    int d = monomial_degree(*e.signature(), m) % 4;
    if (res < 0)
      res = d;
    else if (res != d)
      return -1;
  }
  return res;
}

}  // namespace

std::vector<Monomial> invariant_monomials_up_to(int cap) {
  std::vector<Monomial> out;
  for (int d = cap - cap % 2; d >= 0; d -= 2) {
    auto layer = monomials_of_degree(d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::vector<Monomial> quotient_basis(int r) {
  if (r < 1) throw DomainError("quotient basis needs r >= 1");
  std::vector<Monomial> out = invariant_monomials_up_to(6 * (r - 1));
  std::erase_if(out, [r](const Monomial& m) {
    return static_cast<int>(m.exp[0] + m.exp[1] + m.exp[2]) >= r;
  });
  return out;
}

GradedIdeal::GradedIdeal(std::vector<AlgebraElement> generators, int cap)
    : sig_(invariant_ring_signature()), gens_(std::move(generators)), cap_(cap) {
  if (cap_ < 0) throw CapError("negative degree cap");
  std::erase_if(gens_, [](const AlgebraElement& g) { return g.is_zero(); });
  for (const auto& g : gens_) {
    require_invariant_ring(g.signature(), "GradedIdeal");
    if (*g.top_degree() > cap_)
      throw CapError("generator reaches beyond the degree cap");
  }

  // Span: every m·gen_i that fits under the cap whole.
  std::vector<AlgebraElement> span;
  for (const auto& g : gens_) {
    int room = cap_ - *g.top_degree();
    for (const auto& m : invariant_monomials_up_to(room))
      span.push_back(AlgebraElement::monomial(sig_, m, GaussianRational(1)) * g);
  }
  eliminate(span);
}

GradedIdeal::GradedIdeal(std::vector<AlgebraElement> generators, int cap,
                         const std::vector<AlgebraElement>& span, from_span_tag)
    : sig_(invariant_ring_signature()), gens_(std::move(generators)), cap_(cap) {
  if (cap_ < 0) throw CapError("negative degree cap");
  std::erase_if(gens_, [](const AlgebraElement& g) { return g.is_zero(); });
  for (const auto& row : span) {
    require_invariant_ring(row.signature(), "GradedIdeal");
    if (!row.top_degree() || *row.top_degree() > cap_)
      throw CacheError("cached span row is empty or exceeds the cap");
  }
  eliminate(span);
}

void GradedIdeal::eliminate(const std::vector<AlgebraElement>& span_rows) {
  // Split by parity class mod 4 when possible: multiplying a pure element by
  // a monomial keeps it pure, so the two classes never interact and the
  // elimination decomposes into independent halves.
  blocked_ = !span_rows.empty();
  for (const auto& row : span_rows)
    if (purity_class(row) < 0) blocked_ = false;

  std::vector<std::vector<const AlgebraElement*>> groups;
  if (blocked_) {
    groups.resize(2);
    for (const auto& row : span_rows)
      groups[static_cast<std::size_t>(purity_class(row) / 2)].push_back(&row);
  } else {
    groups.resize(1);
    for (const auto& row : span_rows) groups[0].push_back(&row);
  }

  std::vector<Monomial> all_columns = invariant_monomials_up_to(cap_);
  for (const auto& group : groups) {
    if (group.empty()) continue;
    // Columns this block can touch, in the global canonical order.
    std::vector<Monomial> columns;
    if (blocked_) {
      int res = purity_class(*group.front());
      for (const auto& m : all_columns)
        if (monomial_degree(*sig_, m) % 4 == res) columns.push_back(m);
    } else {
      columns = all_columns;
    }
    std::map<Monomial, int, MonomialOrder> col_index;
    for (std::size_t j = 0; j < columns.size(); ++j)
      col_index.emplace(columns[j], static_cast<int>(j));

    ExactMatrix m = ExactMatrix::Constant(static_cast<Eigen::Index>(group.size()),
                                          static_cast<Eigen::Index>(columns.size()),
                                          GaussianRational(0));
    for (std::size_t r = 0; r < group.size(); ++r)
      for (const auto& [mono, coef] : group[r]->terms())
        m(static_cast<Eigen::Index>(r), col_index.at(mono)) = coef;

    std::vector<int> pivots = reduced_row_echelon(m);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      AlgebraElement row = AlgebraElement::zero(sig_);
      for (std::size_t j = static_cast<std::size_t>(pivots[r]); j < columns.size(); ++j) {
        const GaussianRational& c = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j));
        if (!c.is_zero())
          row = row + AlgebraElement::monomial(sig_, columns[j], c);
      }
      rows_.push_back(std::move(row));
      row_leads_.push_back(columns[static_cast<std::size_t>(pivots[r])]);
      pivot_set_.insert(row_leads_.back());
    }
  }

  // Deterministic row order across blocks: top degree descending, then the
  // canonical order on leading monomials.
  std::vector<std::size_t> perm(rows_.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    int da = monomial_degree(*sig_, row_leads_[a]);
    int db = monomial_degree(*sig_, row_leads_[b]);
    if (da != db) return da > db;
    return MonomialOrder{}(row_leads_[a], row_leads_[b]);
  });
  std::vector<AlgebraElement> rows;
  std::vector<Monomial> leads;
  rows.reserve(rows_.size());
  leads.reserve(rows_.size());
  for (std::size_t k : perm) {
    rows.push_back(std::move(rows_[k]));
    leads.push_back(row_leads_[k]);
  }
  rows_ = std::move(rows);
  row_leads_ = std::move(leads);
}

AlgebraElement GradedIdeal::reduce(const AlgebraElement& p) const {
  require_invariant_ring(p.signature(), "reduce");
  if (p.top_degree() && *p.top_degree() > cap_)
    throw CapError("element reaches beyond the degree cap");
  AlgebraElement r = p;
  // One pass suffices: each row has coefficient 1 at its own leading
  // monomial and 0 at every other row's, so subtractions never reintroduce
  // support on a pivot already cleared.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    GaussianRational c = r.coefficient(row_leads_[k]);
    if (!c.is_zero()) r = r - c * rows_[k];
  }
  return r;
}

int GradedIdeal::lead_dimension(int degree) const {
  int n = 0;
  for (const auto& lead : row_leads_)
    if (monomial_degree(*sig_, lead) == degree) ++n;
  return n;
}

std::vector<AlgebraElement> GradedIdeal::lead_forms(int degree) const {
  std::vector<AlgebraElement> out;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (monomial_degree(*sig_, row_leads_[k]) == degree)
      out.push_back(rows_[k].grade_component(degree));
  return out;
}

std::vector<Monomial> GradedIdeal::surviving_monomials(int degree) const {
  std::vector<Monomial> out;
  for (const auto& m : monomials_of_degree(degree))
    if (!pivot_set_.count(m)) out.push_back(m);
  return out;
}

GradedIdeal rebuild_from_span(std::vector<AlgebraElement> generators, int cap,
                              const std::vector<AlgebraElement>& span) {
  GradedIdeal ideal(std::move(generators), cap, span, GradedIdeal::from_span_tag{});
  if (ideal.rank() != static_cast<int>(span.size()))
    throw CacheError("cached span rows are not independent");
  for (const auto& g : ideal.generators())
    if (!ideal.contains(g))
      throw CacheError("cached span does not contain the generators");
  return ideal;
}

int quotient_dim(int r, const GradedIdeal& ideal) {
  if (r < 1) throw DomainError("quotient_dim needs r >= 1");
  const int socle = 6 * (r - 1);
  // A strict inequality keeps the fullness window nonempty; with cap == socle
  // the count would carry no evidence that the filtration has stabilized.
  if (ideal.cap() <= socle)
    throw CapError("cap must exceed the socle degree 6(r-1)");
  int count = 0;
  for (int d = 0; d <= socle; d += 2)
    count += static_cast<int>(ideal.surviving_monomials(d).size());
  for (int d = socle + 2; d <= ideal.cap(); d += 2)
    if (!ideal.surviving_monomials(d).empty())
      throw VerificationError(
          "a monomial above degree 6(r-1) survives reduction; the filtered "
          "model does not certify this quotient dimension");
  return count;
}

AlgebraElement normal_form(const AlgebraElement& p, int r,
                           const GradedIdeal& ideal) {
  if (r < 1) throw DomainError("normal_form needs r >= 1");
  auto sig = invariant_ring_signature();
  std::vector<Monomial> basis = quotient_basis(r);
  AlgebraElement target = ideal.reduce(p);

  std::vector<AlgebraElement> residuals;
  residuals.reserve(basis.size());
  std::map<Monomial, int, MonomialOrder> support;
  auto note = [&support](const AlgebraElement& e) {
    for (const auto& [m, c] : e.terms()) support.emplace(m, 0);
  };
  for (const auto& b : basis) {
    residuals.push_back(
        ideal.reduce(AlgebraElement::monomial(sig, b, GaussianRational(1))));
    note(residuals.back());
  }
  note(target);
  int next = 0;
  for (auto& [m, idx] : support) idx = next++;

  ExactMatrix a = ExactMatrix::Constant(static_cast<Eigen::Index>(support.size()),
                                        static_cast<Eigen::Index>(basis.size()),
                                        GaussianRational(0));
  ExactVector b = ExactVector::Constant(static_cast<Eigen::Index>(support.size()),
                                        GaussianRational(0));
  for (std::size_t j = 0; j < residuals.size(); ++j)
    for (const auto& [m, c] : residuals[j].terms())
      a(support.at(m), static_cast<Eigen::Index>(j)) = c;
  for (const auto& [m, c] : target.terms()) b(support.at(m)) = c;

  LinearSolution sol = solve_exact(a, b);
  if (!sol.solvable)
    throw VerificationError("no expression over the quotient basis exists");
  if (!sol.unique)
    throw VerificationError("quotient basis residuals are dependent");
  AlgebraElement out = AlgebraElement::zero(sig);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    GaussianRational c = sol.x(static_cast<Eigen::Index>(j));
    if (!c.is_zero())
      out = out + AlgebraElement::monomial(sig, basis[j], c);
  }
  return out;
}

bool ideal_equal(const GradedIdeal& a, const GradedIdeal& b) {
  if (a.cap() != b.cap())
    throw CapError("ideal_equal needs matching degree caps");
  for (const auto& g : a.generators())
    if (!b.contains(g)) return false;
  for (const auto& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

}  // namespace qcms
