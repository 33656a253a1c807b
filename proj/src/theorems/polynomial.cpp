#include "ringlab/error.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

namespace {

void require_commutative(const Ring& r, const char* what) {
  if (!r.commutative()) throw UnsupportedError(std::string(what) + " requires a commutative ring");
}

int default_degree_bound(const Ring& r, int d) {
  const auto k = ideal_nilpotency_index(r, r.nilradical().members);
  if (!k) throw std::logic_error("nilradical of a finite commutative ring is not nilpotent");
  return d * *k + d;
}

// Enumerates every coefficient vector of length len over R, in index order.
template <class F>
void for_each_poly(const Ring& r, int len, std::size_t limit, F&& f) {
  std::uint64_t total = 1;
  for (int i = 0; i < len; ++i) {
    total *= r.size();
    if (total > limit) throw ConstructionError("too many polynomials to enumerate");
  }
  Poly p(static_cast<std::size_t>(len), r.zero());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t v = idx;
    for (int i = 0; i < len; ++i) {
      p[static_cast<std::size_t>(i)] = static_cast<Index>(v % r.size());
      v /= r.size();
    }
    f(p);
  }
}

constexpr std::size_t kEnumerationLimit = std::size_t{1} << 22;

}  // namespace

void poly_trim(const Ring& r, Poly& f) {
  while (!f.empty() && f.back() == r.zero()) f.pop_back();
}

Poly poly_multiply(const Ring& r, const Poly& f, const Poly& g) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, r.zero());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == r.zero()) continue;
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = r.add(out[i + j], r.mul(f[i], g[j]));
  }
  poly_trim(r, out);
  return out;
}

std::optional<Poly> poly_unit_check(const Ring& r, const Poly& f_in, int degree_bound) {
  require_commutative(r, "poly_unit_check");
  if (degree_bound < 0) throw PreconditionError("poly_unit_check: negative degree bound");
  Poly f = f_in;
  poly_trim(r, f);
  if (f.empty()) return std::nullopt;
  const std::size_t D = static_cast<std::size_t>(degree_bound);
  Poly g(D + 1, r.zero());

  // Coefficient k of f g, using g_0..g_k only.
  auto coefficient = [&](std::size_t k) {
    Index acc = r.zero();
    for (std::size_t i = 0; i < f.size() && i <= k; ++i) {
      if (k - i <= D) acc = r.add(acc, r.mul(f[i], g[k - i]));
    }
    return acc;
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k > D) {
      for (std::size_t t = D + 1; t < D + f.size(); ++t) {
        if (coefficient(t) != r.zero()) return false;
      }
      return true;
    }
    const Index want = k == 0 ? r.one() : r.zero();
    for (Index cand = 0; cand < r.size(); ++cand) {
      g[k] = cand;
      if (coefficient(k) == want && self(self, k + 1)) return true;
    }
    g[k] = r.zero();
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  poly_trim(r, g);
  return g;
}

bool poly_unit_criterion(const Ring& r, const Poly& f) {
  require_commutative(r, "poly_unit_criterion");
  if (f.empty() || !r.units().contains(f[0])) return false;
  const auto& nil = r.nilradical().members;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!nil.contains(f[i])) return false;
  }
  return true;
}

PolyUnitCharacterization poly_unit_characterization(const Ring& r, int d,
                                                    std::optional<int> degree_bound) {
  require_commutative(r, "poly_unit_characterization");
  if (d < 0) throw PreconditionError("poly_unit_characterization: negative degree");
  PolyUnitCharacterization rep;
  rep.d = d;
  rep.ideal_nilpotency = *ideal_nilpotency_index(r, r.nilradical().members);
  rep.degree_bound = degree_bound.value_or(default_degree_bound(r, d));
  for_each_poly(r, d + 1, kEnumerationLimit, [&](const Poly& f) {
    ++rep.polynomials;
    const auto inv = poly_unit_check(r, f, rep.degree_bound);
    if (inv && poly_multiply(r, f, *inv) != Poly{r.one()}) {
      throw std::logic_error("poly_unit_check returned a non-inverse");
    }
    const bool crit = poly_unit_criterion(r, f);
    rep.units_by_search += inv ? 1 : 0;
    rep.units_by_criterion += crit ? 1 : 0;
    if (inv.has_value() != crit) rep.mismatches.push_back(f);
  });
  return rep;
}

PolySigmaCertificate poly_x_not_sigma_witness(const Ring& r, int n_max, int d,
                                              std::optional<int> degree_bound) {
  require_commutative(r, "poly_x_not_sigma_witness");
  if (r.size() < 2) throw PreconditionError("poly_x_not_sigma_witness: zero ring");
  if (n_max < 1) throw PreconditionError("poly_x_not_sigma_witness: n_max must be >= 1");
  if (d < 1) throw PreconditionError("poly_x_not_sigma_witness: degree bound d must be >= 1");

  PolySigmaCertificate cert;
  cert.n_max = n_max;
  cert.d = d;
  cert.degree_bound = degree_bound.value_or(default_degree_bound(r, d));

  // (a) the degree-one coefficient of a sum of units is a sum of nilpotents.
  const auto& nil = r.nilradical().members;
  cert.nilradical_is_ideal = is_two_sided_ideal(r, nil);
  cert.one_outside_nilradical = !nil.contains(r.one());

  // (b) polynomials of degree <= d share the additive group of R[x]/(x^(d+1)).
  const Ring carrier = truncated_series(r, static_cast<Index>(d + 1));
  ElementSet unit_polys = carrier.empty_set();
  std::vector<Index> idempotent_polys;
  cert.units_confirmed_by_search = true;
  cert.idempotents_are_constants = true;
  for (Index p = 0; p < carrier.size(); ++p) {
    const Poly f = carrier.coordinates(p);
    if (poly_unit_criterion(r, f)) {
      unit_polys.insert(p);
      if (!poly_unit_check(r, f, cert.degree_bound)) cert.units_confirmed_by_search = false;
    }
    Poly trimmed = f;
    poly_trim(r, trimmed);
    if (poly_multiply(r, trimmed, trimmed) == trimmed) {
      idempotent_polys.push_back(p);
      if (trimmed.size() > 1) cert.idempotents_are_constants = false;
    }
  }
  cert.unit_polynomials = unit_polys.count();
  cert.idempotents = idempotent_polys.size();

  const Index x = poly_variable(carrier).index;
  const auto levels = sum_levels(carrier, unit_polys, n_max);
  for (int n = 1; n <= n_max && !cert.counterexample; ++n) {
    for (Index f : idempotent_polys) {
      if (levels[static_cast<std::size_t>(n - 1)].contains(carrier.sub(x, f))) {
        cert.counterexample = std::make_pair(f, n);
        break;
      }
      ++cert.combinations_ruled_out;
    }
  }
  return cert;
}

}  // namespace ringlab
