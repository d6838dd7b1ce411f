#include "qcms/algebra.hpp"

#include <bit>
#include <set>
#include <sstream>

#include "qcms/error.hpp"

namespace qcms {

AlgebraSignature::AlgebraSignature(std::vector<Generator> commuting,
                                   std::vector<Generator> anticommuting)
    : commuting_(std::move(commuting)), anticommuting_(std::move(anticommuting)) {
  if (anticommuting_.size() > 64)
    throw SignatureError("at most 64 anticommuting generators supported");
  std::set<std::string> seen;
  for (const auto& g : commuting_) {
    if (g.degree <= 0 || g.degree % 2 != 0)
      throw SignatureError("commuting generator " + g.name + " must have positive even degree");
    if (!seen.insert(g.name).second)
      throw SignatureError("duplicate generator name " + g.name);
  }
  for (const auto& g : anticommuting_) {
    if (g.degree <= 0 || g.degree % 2 != 1)
      throw SignatureError("anticommuting generator " + g.name + " must have positive odd degree");
    if (!seen.insert(g.name).second)
      throw SignatureError("duplicate generator name " + g.name);
  }
}

std::optional<std::pair<bool, int>> AlgebraSignature::find(std::string_view name) const {
  for (size_t i = 0; i < commuting_.size(); ++i)
    if (commuting_[i].name == name) return std::make_pair(true, static_cast<int>(i));
  for (size_t i = 0; i < anticommuting_.size(); ++i)
    if (anticommuting_[i].name == name) return std::make_pair(false, static_cast<int>(i));
  return std::nullopt;
}

bool AlgebraSignature::operator==(const AlgebraSignature& o) const {
  auto eq = [](const std::vector<Generator>& a, const std::vector<Generator>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i].name != b[i].name || a[i].degree != b[i].degree) return false;
    return true;
  };
  return eq(commuting_, o.commuting_) && eq(anticommuting_, o.anticommuting_);
}

SignaturePtr invariant_ring_signature() {
  static const SignaturePtr sig = std::make_shared<AlgebraSignature>(
      std::vector<Generator>{{"α", 2}, {"β", 4}, {"γ", 6}}, std::vector<Generator>{});
  return sig;
}

static std::vector<Generator> phi_generators(int genus) {
  if (genus < 1 || genus > 32) throw DomainError("genus must be in 1..32");
  std::vector<Generator> odd;
  odd.reserve(2 * genus);
  for (int i = 1; i <= 2 * genus; ++i) odd.push_back({"φ" + std::to_string(i), 1});
  return odd;
}

SignaturePtr exterior_signature(int genus) {
  return std::make_shared<AlgebraSignature>(std::vector<Generator>{}, phi_generators(genus));
}

SignaturePtr quantum_ring_signature(int genus) {
  return std::make_shared<AlgebraSignature>(std::vector<Generator>{{"h", 2}},
                                            phi_generators(genus));
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  if (a.exp != b.exp) return a.exp > b.exp;
  if (a.odd == b.odd) return false;
  std::uint64_t diff = a.odd ^ b.odd;
  std::uint64_t low = diff & (~diff + 1);
  return (a.odd & low) != 0;
}

int monomial_degree(const AlgebraSignature& sig, const Monomial& m) {
  int d = 0;
  for (size_t i = 0; i < m.exp.size(); ++i)
    d += static_cast<int>(m.exp[i]) * sig.commuting()[i].degree;
  std::uint64_t odd = m.odd;
  while (odd) {
    int b = std::countr_zero(odd);
    odd &= odd - 1;
    d += sig.anticommuting()[static_cast<size_t>(b)].degree;
  }
  return d;
}

int interleave_sign(std::uint64_t a, std::uint64_t b) {
  int swaps = 0;
  while (b) {
    int y = std::countr_zero(b);
    b &= b - 1;
    swaps += std::popcount(a >> (y + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

AlgebraElement AlgebraElement::zero(SignaturePtr sig) {
  return AlgebraElement(std::move(sig), TermMap{});
}

AlgebraElement AlgebraElement::constant(SignaturePtr sig, GaussianRational c) {
  Monomial one{std::vector<std::uint32_t>(sig->commuting().size(), 0), 0};
  return monomial(std::move(sig), std::move(one), std::move(c));
}

AlgebraElement AlgebraElement::generator(SignaturePtr sig, std::string_view name) {
  auto where = sig->find(name);
  if (!where) throw SignatureError("unknown generator " + std::string(name));
  Monomial m{std::vector<std::uint32_t>(sig->commuting().size(), 0), 0};
  if (where->first)
    m.exp[static_cast<size_t>(where->second)] = 1;
  else
    m.odd = std::uint64_t(1) << where->second;
  return monomial(std::move(sig), std::move(m), GaussianRational(1));
}

AlgebraElement AlgebraElement::monomial(SignaturePtr sig, Monomial m, GaussianRational c) {
  if (m.exp.size() != sig->commuting().size())
    throw SignatureError("monomial exponent vector does not match signature");
  if (sig->anticommuting().size() < 64 &&
      (m.odd >> sig->anticommuting().size()) != 0)
    throw SignatureError("monomial uses anticommuting generators outside signature");
  TermMap t;
  if (!c.is_zero()) t.emplace(std::move(m), std::move(c));
  return AlgebraElement(std::move(sig), std::move(t));
}

GaussianRational AlgebraElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

std::optional<int> AlgebraElement::top_degree() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_) {
    int d = monomial_degree(*sig_, m);
    if (!best || d > *best) best = d;
  }
  return best;
}

std::optional<int> AlgebraElement::min_degree() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_) {
    int d = monomial_degree(*sig_, m);
    if (!best || d < *best) best = d;
  }
  return best;
}

bool AlgebraElement::is_homogeneous() const {
  auto top = top_degree();
  return !top || top == min_degree();
}

AlgebraElement AlgebraElement::grade_component(int degree) const {
  TermMap t;
  for (const auto& [m, c] : terms_)
    if (monomial_degree(*sig_, m) == degree) t.emplace(m, c);
  return AlgebraElement(sig_, std::move(t));
}

std::map<int, AlgebraElement> AlgebraElement::graded_parts() const {
  std::map<int, TermMap> split;
  for (const auto& [m, c] : terms_) split[monomial_degree(*sig_, m)].emplace(m, c);
  std::map<int, AlgebraElement> out;
  for (auto& [d, t] : split) out.emplace(d, AlgebraElement(sig_, std::move(t)));
  return out;
}

AlgebraElement AlgebraElement::pow(unsigned k) const {
  AlgebraElement acc = constant(sig_, GaussianRational(1));
  for (unsigned j = 0; j < k; ++j) acc = acc * (*this);
  return acc;
}

void AlgebraElement::add_term(const Monomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_same_signature(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.sig_ == b.sig_) return;
  if (*a.sig_ != *b.sig_) throw SignatureError("operands built over different signatures");
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement::check_same_signature(a, b);
  AlgebraElement r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement::check_same_signature(a, b);
  AlgebraElement r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement::TermMap t;
  for (const auto& [m, c] : a.terms_) t.emplace(m, -c);
  return AlgebraElement(a.sig_, std::move(t));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement::check_same_signature(a, b);
  AlgebraElement r = AlgebraElement::zero(a.sig_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.odd & mb.odd) continue;  // a repeated anticommuting generator squares to zero
      Monomial m;
      m.exp.resize(ma.exp.size());
      for (size_t i = 0; i < ma.exp.size(); ++i) m.exp[i] = ma.exp[i] + mb.exp[i];
      m.odd = ma.odd | mb.odd;
      GaussianRational c = ca * cb;
      if (interleave_sign(ma.odd, mb.odd) < 0) c = -c;
      r.add_term(m, c);
    }
  }
  return r;
}

AlgebraElement operator*(const GaussianRational& c, const AlgebraElement& a) {
  AlgebraElement::TermMap t;
  if (!c.is_zero())
    for (const auto& [m, c0] : a.terms_) t.emplace(m, c * c0);
  return AlgebraElement(a.sig_, std::move(t));
}

AlgebraElement operator*(const AlgebraElement& a, const GaussianRational& c) {
  return c * a;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement::check_same_signature(a, b);
  return a.terms_ == b.terms_;
}

AlgebraElement AlgebraElement::substitute(
    const std::map<std::string, AlgebraElement>& images) const {
  return substitute(images, sig_);
}

AlgebraElement AlgebraElement::substitute(const std::map<std::string, AlgebraElement>& images,
                                          SignaturePtr target) const {
  // Resolve the image of every source generator once, validating parity.
  auto image_of = [&](const Generator& g, bool commuting) -> AlgebraElement {
    auto it = images.find(g.name);
    if (it != images.end()) {
      const AlgebraElement& img = it->second;
      if (*img.signature() != *target)
        throw SignatureError("image of " + g.name + " lives in the wrong signature");
      for (const auto& [m, c] : img.terms()) {
        int d = monomial_degree(*target, m);
        if ((d % 2 != 0) == commuting)
          throw ParityError("image of " + g.name + " violates parity");
      }
      return img;
    }
    auto where = target->find(g.name);
    if (!where || where->first != commuting)
      throw SignatureError("generator " + g.name +
                           " has no image and no matching target generator");
    return AlgebraElement::generator(target, g.name);
  };

  for (const auto& [name, img] : images)
    if (!sig_->find(name)) throw SignatureError("image given for unknown generator " + name);

  std::vector<AlgebraElement> commuting_images;
  std::vector<AlgebraElement> odd_images;
  for (const auto& g : sig_->commuting()) commuting_images.push_back(image_of(g, true));
  for (const auto& g : sig_->anticommuting()) odd_images.push_back(image_of(g, false));

  AlgebraElement result = AlgebraElement::zero(target);
  for (const auto& [m, c] : terms_) {
    AlgebraElement term = AlgebraElement::constant(target, c);
    for (size_t i = 0; i < m.exp.size(); ++i)
      if (m.exp[i] > 0) term = term * commuting_images[i].pow(m.exp[i]);
    std::uint64_t odd = m.odd;
    while (odd) {
      int b = std::countr_zero(odd);
      odd &= odd - 1;
      term = term * odd_images[static_cast<size_t>(b)];
    }
    result = result + term;
  }
  return result;
}

std::string AlgebraElement::monomial_str(const Monomial& m) const {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    any = true;
    os << sig_->commuting()[i].name;
    if (m.exp[i] > 1) os << "^" << m.exp[i];
  }
  std::uint64_t odd = m.odd;
  while (odd) {
    int b = std::countr_zero(odd);
    odd &= odd - 1;
    any = true;
    os << sig_->anticommuting()[static_cast<size_t>(b)].name;
  }
  if (!any) return "1";
  return os.str();
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = monomial_str(m);
    // Render the coefficient, folding a leading real/imaginary sign into the join.
    GaussianRational shown = c;
    bool negative = false;
    if (c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
      negative = true;
      shown = -c;
    }
    if (!first)
      os << (negative ? "-" : "+");
    else if (negative)
      os << "-";
    first = false;
    bool mixed = sgn(shown.re()) != 0 && sgn(shown.im()) != 0;
    if (mono == "1") {
      os << (mixed ? "(" + shown.str() + ")" : shown.str());
    } else if (shown.is_one()) {
      os << mono;
    } else if (mixed) {
      os << "(" << shown.str() << ")" << mono;
    } else {
      os << shown.str() << mono;
    }
  }
  return os.str();
}

}  // namespace qcms
