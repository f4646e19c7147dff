#include "weilkit/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace weilkit {

AlgebraTable::AlgebraTable(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::sort(gens_.begin(), gens_.end(), [](const Generator& a, const Generator& b) {
    return std::tie(a.tag, a.name) < std::tie(b.tag, b.name);
  });
  for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
    const Generator& g = gens_[static_cast<size_t>(i)];
    if (g.degree < 0) throw PresentationError("generator '" + g.name + "' has negative degree");
    if (!by_name_.emplace(g.name, i).second)
      throw PresentationError("duplicate generator name '" + g.name + "'");
    if (g.degree == 0) has_degree_zero_ = true;
  }
}

int AlgebraTable::index_of(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int AlgebraTable::require(std::string_view name) const {
  int i = index_of(name);
  if (i < 0) throw PresentationError("unknown generator '" + std::string(name) + "'");
  return i;
}

TablePtr make_table(std::vector<Generator> gens) {
  return std::make_shared<const AlgebraTable>(std::move(gens));
}

int Monomial::degree(const AlgebraTable& t) const {
  int d = 0;
  for (auto [g, e] : factors) d += t.degree(g) * e;
  return d;
}

int Monomial::exponent_of(int gen) const {
  for (auto [g, e] : factors)
    if (g == gen) return e;
  return 0;
}

GradedElement GradedElement::scalar(TablePtr table, Rational c) {
  GradedElement r(std::move(table));
  r.add_term(Monomial{}, c);
  return r;
}

GradedElement GradedElement::generator(TablePtr table, int index) {
  if (index < 0 || index >= table->size()) throw PresentationError("generator index out of range");
  GradedElement r(std::move(table));
  r.add_term(Monomial{{{index, 1}}}, Rational(1));
  return r;
}

GradedElement GradedElement::generator(TablePtr table, std::string_view name) {
  int i = table->require(name);
  return generator(std::move(table), i);
}

GradedElement GradedElement::monomial(TablePtr table, Monomial m, Rational c) {
  int prev = -1;
  for (auto [g, e] : m.factors) {
    if (g <= prev) throw PresentationError("monomial factors not in strict generator order");
    if (g >= table->size()) throw PresentationError("monomial references unknown generator");
    if (e < 1) throw PresentationError("monomial exponent below one");
    if (table->is_odd(g) && e > 1) return zero(std::move(table));  // odd square vanishes
    prev = g;
  }
  GradedElement r(std::move(table));
  r.add_term(m, c);
  return r;
}

std::optional<int> GradedElement::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) {
    int md = m.degree(*table_);
    if (!d) d = md;
    else if (*d != md) return std::nullopt;
  }
  return d;
}

bool GradedElement::is_homogeneous_of(int d) const {
  for (const auto& [m, c] : terms_)
    if (m.degree(*table_) != d) return false;
  return true;
}

GradedElement GradedElement::homogeneous_part(int d) const {
  GradedElement r(table_);
  for (const auto& [m, c] : terms_)
    if (m.degree(*table_) == d) r.terms_.emplace(m, c);
  return r;
}

std::vector<int> GradedElement::degrees_present() const {
  std::vector<int> ds;
  for (const auto& [m, c] : terms_) {
    int d = m.degree(*table_);
    if (std::find(ds.begin(), ds.end(), d) == ds.end()) ds.push_back(d);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Rational GradedElement::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GradedElement::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void require_same_table(const GradedElement& a, const GradedElement& b) {
  if (a.table() != b.table())
    throw PresentationError("operands live over different generator tables");
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  if (!table_) table_ = o.table_;
  else if (o.table_ && table_ != o.table_) require_same_table(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  if (!table_) table_ = o.table_;
  else if (o.table_ && table_ != o.table_) require_same_table(*this, o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedElement& GradedElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

GradedElement GradedElement::operator-() const {
  GradedElement r(table_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

std::optional<std::pair<Monomial, int>> multiply_monomials(const AlgebraTable& t,
                                                           const Monomial& a,
                                                           const Monomial& b) {
  Monomial out;
  out.factors.reserve(a.factors.size() + b.factors.size());
  size_t i = 0, j = 0;
  // Suffix counts of odd factors remaining in a; each odd factor of b taken
  // while odd a-factors remain ahead of it flips the sign once per crossing.
  int odd_suffix = 0;
  for (auto [g, e] : a.factors)
    if (t.is_odd(g)) odd_suffix += e;
  int sign = 1;
  while (i < a.factors.size() || j < b.factors.size()) {
    bool take_a;
    if (i == a.factors.size()) take_a = false;
    else if (j == b.factors.size()) take_a = true;
    else take_a = a.factors[i].first <= b.factors[j].first;
    if (take_a) {
      auto [g, e] = a.factors[i++];
      if (t.is_odd(g)) odd_suffix -= e;
      if (j < b.factors.size() && g == b.factors[j].first) {
        int combined = e + b.factors[j].second;
        if (t.is_odd(g)) {
          // the crossing already counted below would be zero anyway
          return std::nullopt;
        }
        ++j;
        out.factors.emplace_back(g, combined);
      } else {
        out.factors.emplace_back(g, e);
      }
    } else {
      auto [g, e] = b.factors[j++];
      if (t.is_odd(g)) {
        if (odd_suffix % 2 != 0) sign = -sign;
        if (e > 1) return std::nullopt;
      }
      out.factors.emplace_back(g, e);
    }
  }
  return std::make_pair(std::move(out), sign);
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
  require_same_table(a, b);
  GradedElement r(a.table());
  const AlgebraTable& t = *a.table();
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto prod = multiply_monomials(t, ma, mb);
      if (!prod) continue;
      Rational c = ca * cb;
      if (prod->second < 0) c = -c;
      r.add_term(prod->first, c);
    }
  }
  return r;
}

namespace {

// D applied to a single normal-form monomial, recursively through the signed
// Leibniz rule. images[g] may be zero.
GradedElement derive_monomial(int d, std::span<const GradedElement> images,
                              const TablePtr& table, const Monomial& m, size_t from) {
  GradedElement r(table);
  if (from >= m.factors.size()) return r;
  auto [g, e] = m.factors[from];
  const AlgebraTable& t = *table;
  int gdeg = t.degree(g);

  // D(g^e) = e g^{e-1} D(g) for even g, D(g) for odd g (e == 1).
  GradedElement head(table);
  if (!images[static_cast<size_t>(g)].is_zero()) {
    GradedElement power = GradedElement::unit(table);
    for (int k = 1; k < e; ++k) power = power * GradedElement::generator(table, g);
    head = Rational(e) * (power * images[static_cast<size_t>(g)]);
  }
  Monomial rest{std::vector(m.factors.begin() + static_cast<long>(from) + 1, m.factors.end())};
  GradedElement rest_el = GradedElement::monomial(table, rest, Rational(1));
  r += head * rest_el;

  GradedElement tail = derive_monomial(d, images, table, m, from + 1);
  if (!tail.is_zero()) {
    GradedElement factor =
        GradedElement::monomial(table, Monomial{{m.factors[from]}}, Rational(1));
    GradedElement contrib = factor * tail;
    if ((d * gdeg * e) % 2 != 0) contrib = -contrib;
    r += contrib;
  }
  return r;
}

}  // namespace

GradedElement apply_derivation(int d, std::span<const GradedElement> images,
                               const GradedElement& target) {
  const TablePtr& table = target.table();
  if (static_cast<int>(images.size()) != table->size())
    throw PresentationError("derivation image list does not match generator table");
  for (int g = 0; g < table->size(); ++g) {
    const GradedElement& im = images[static_cast<size_t>(g)];
    if (im.is_zero()) continue;
    if (im.table() != table)
      throw PresentationError("derivation images must live in the target's algebra");
    if (!im.is_homogeneous_of(table->degree(g) + d))
      throw PresentationError("derivation image of '" + table->gen(g).name +
                              "' is not homogeneous of the required degree");
  }
  GradedElement r(table);
  for (const auto& [m, c] : target.terms()) {
    GradedElement dm = derive_monomial(d, images, table, m, 0);
    r += c * dm;
  }
  return r;
}

GradedElement apply_homomorphism(const TablePtr& dst, std::span<const GradedElement> images,
                                 const GradedElement& target) {
  const TablePtr& src = target.table();
  if (static_cast<int>(images.size()) != src->size())
    throw PresentationError("homomorphism image list does not match generator table");
  for (int g = 0; g < src->size(); ++g) {
    const GradedElement& im = images[static_cast<size_t>(g)];
    if (!im.is_zero() && !im.is_homogeneous_of(src->degree(g)))
      throw PresentationError("homomorphism image of '" + src->gen(g).name +
                              "' does not preserve degree");
  }
  GradedElement r(dst);
  for (const auto& [m, c] : target.terms()) {
    GradedElement prod = GradedElement::scalar(dst, c);
    for (auto [g, e] : m.factors) {
      for (int k = 0; k < e && !prod.is_zero(); ++k)
        prod = prod * images[static_cast<size_t>(g)];
      if (prod.is_zero()) break;
    }
    r += prod;
  }
  return r;
}

namespace {

void enumerate_monomials(const AlgebraTable& t, int gen, int remaining, Monomial& acc,
                         std::vector<Monomial>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  if (gen >= t.size()) return;
  int d = t.degree(gen);
  int max_exp = t.is_odd(gen) ? 1 : remaining / d;
  enumerate_monomials(t, gen + 1, remaining, acc, out);  // exponent 0
  for (int e = 1; e <= max_exp; ++e) {
    if (d * e > remaining) break;
    acc.factors.emplace_back(gen, e);
    enumerate_monomials(t, gen + 1, remaining - d * e, acc, out);
    acc.factors.pop_back();
  }
}

}  // namespace

std::vector<Monomial> degree_window_basis(const AlgebraTable& t, int degree) {
  if (degree < 0) return {};
  if (t.has_degree_zero_generator())
    throw PresentationError("degree window is infinite: table has degree-zero generators");
  std::vector<Monomial> out;
  Monomial acc;
  enumerate_monomials(t, 0, degree, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string GradedElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    if (!first) os << (cs[0] == '-' ? " - " : " + ");
    else if (cs[0] == '-') os << "-";
    std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
    bool coeff_shown = mag != "1" || m.is_unit();
    if (coeff_shown) os << mag;
    bool first_factor = true;
    for (auto [g, e] : m.factors) {
      if (!first_factor || coeff_shown) os << "*";
      os << table_->gen(g).name;
      if (e > 1) os << "^" << e;
      first_factor = false;
    }
    first = false;
  }
  return os.str();
}

}  // namespace weilkit
