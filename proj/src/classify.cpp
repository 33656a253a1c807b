#include "ringlab/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "ringlab/error.hpp"

namespace ringlab {

bool Decomposition::strongly() const noexcept {
  return std::all_of(commutes.begin(), commutes.end(), [](bool b) { return b; });
}

Element Decomposition::value(const Ring& r) const {
  Index acc = r.index_of(idempotent);
  for (const auto& u : units) acc = r.add(acc, r.index_of(u));
  return Element{r.id(), acc};
}

Decomposition Decomposition::canonical() const {
  std::vector<std::size_t> order(units.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return units[a].index < units[b].index; });
  Decomposition out{idempotent, {}, {}};
  for (auto i : order) {
    out.units.push_back(units[i]);
    out.commutes.push_back(commutes[i]);
  }
  return out;
}

Decomposition make_decomposition(const Ring& r, Index e, std::vector<Index> units) {
  Decomposition d{r.element(e), {}, {}};
  d.units.reserve(units.size());
  d.commutes.reserve(units.size());
  for (Index u : units) {
    d.units.push_back(r.element(u));
    d.commutes.push_back(r.mul(e, u) == r.mul(u, e));
  }
  return d;
}

DecompositionCheck revalidate(const Ring& r, const Decomposition& d, std::optional<Element> x) {
  DecompositionCheck c;
  if (d.commutes.size() != d.units.size()) return c;
  const Index e = r.index_of(d.idempotent);
  c.idempotent_ok = r.mul(e, e) == e;
  c.units_ok = true;
  c.flags_ok = true;
  c.strongly = true;
  Index sum = e;
  const Index one = r.one();
  for (std::size_t i = 0; i < d.units.size(); ++i) {
    const Index u = r.index_of(d.units[i]);
    // Independent of the cached inverse table: scan for a two-sided inverse.
    bool invertible = false;
    for (Index v = 0; v < r.size() && !invertible; ++v) {
      invertible = r.mul(u, v) == one && r.mul(v, u) == one;
    }
    c.units_ok = c.units_ok && invertible;
    const bool commutes = r.mul(e, u) == r.mul(u, e);
    c.flags_ok = c.flags_ok && commutes == d.commutes[i];
    c.strongly = c.strongly && commutes;
    sum = r.add(sum, u);
  }
  if (x) c.sum_ok = sum == r.index_of(*x);
  return c;
}

ElementSet idempotents(const Ring& r) { return r.idempotents(); }
ElementSet units(const Ring& r) { return r.units(); }

Nilradical nilpotents(const Ring& r) {
  const Nilradical& nil = r.nilradical();
  // The nilradical of a commutative ring is closed under addition.
  const auto members = nil.members.to_vector();
  for (Index a : members) {
    for (Index b : members) {
      if (!nil.members.contains(r.add(a, b))) {
        throw std::logic_error("nilpotent elements not closed under addition");
      }
    }
  }
  return nil;
}

ElementSet jacobson_radical(const Ring& r) {
  const ElementSet& j = r.jacobson();
  if (!is_two_sided_ideal(r, j)) throw std::logic_error("computed J(R) is not an ideal");
  return j;
}

PeriodicityWitness periodicity(const Ring& r, Element x) {
  const Index a = r.index_of(x);
  std::unordered_map<Index, int> first_seen;
  Index p = a;
  for (int k = 1;; ++k) {
    auto [it, inserted] = first_seen.emplace(p, k);
    if (!inserted) return PeriodicityWitness{x, it->second, k};
    p = r.mul(p, a);
  }
}

std::optional<Decomposition> clean_witness(const Ring& r, Element x) {
  const Index a = r.index_of(x);
  const auto& u = r.units();
  std::optional<Decomposition> out;
  r.idempotents().for_each([&](Index e) {
    if (out) return;
    const Index v = r.sub(a, e);
    if (u.contains(v)) out = make_decomposition(r, e, {v});
  });
  return out;
}

// ---- StronglyCleanSolver ------------------------------------------------------

StronglyCleanSolver::StronglyCleanSolver(Ring ring) : ring_(std::move(ring)) {}

StronglyCleanSolver::Slot& StronglyCleanSolver::slot(Index e) {
  auto it = slots_.find(e);
  if (it != slots_.end()) return it->second;
  Slot s;
  s.idempotent = e;
  s.gen_set = ring_.units() & centralizer(ring_, ring_.element(e));
  s.gens = s.gen_set.to_vector();
  return slots_.emplace(e, std::move(s)).first->second;
}

const ElementSet& StronglyCleanSolver::level(Slot& s, int k) {
  if (s.levels.empty()) s.levels.push_back(s.gen_set);
  while (static_cast<int>(s.levels.size()) < k) {
    s.levels.push_back(sumset(ring_, s.levels.back(), s.gen_set));
  }
  return s.levels[static_cast<std::size_t>(k - 1)];
}

bool StronglyCleanSolver::reconstruct(Slot& s, int k, std::size_t lo, Index target,
                                      std::vector<Index>& out,
                                      std::unordered_set<std::uint64_t>& dead) {
  if (k == 1) {
    auto it = std::lower_bound(s.gens.begin() + static_cast<std::ptrdiff_t>(lo), s.gens.end(),
                               target);
    if (it == s.gens.end() || *it != target) return false;
    out.push_back(target);
    return true;
  }
  const std::uint64_t key =
      (std::uint64_t(k) << 56) | (std::uint64_t(lo) << 32) | std::uint64_t(target);
  if (dead.contains(key)) return false;
  for (std::size_t i = lo; i < s.gens.size(); ++i) {
    const Index rest = ring_.sub(target, s.gens[i]);
    if (!level(s, k - 1).contains(rest)) continue;
    out.push_back(s.gens[i]);
    if (reconstruct(s, k - 1, i, rest, out, dead)) return true;
    out.pop_back();
  }
  dead.insert(key);
  return false;
}

std::optional<Decomposition> StronglyCleanSolver::witness(Element x, int n) {
  if (n < 1) throw PreconditionError("n-strongly clean witness requires n >= 1");
  const Index a = ring_.index_of(x);
  std::optional<Decomposition> out;
  for (Index e : ring_.idempotents().to_vector()) {
    // e commutes with every u_i, hence with x.
    if (ring_.mul(e, a) != ring_.mul(a, e)) continue;
    Slot& s = slot(e);
    const Index target = ring_.sub(a, e);
    if (!level(s, n).contains(target)) continue;
    std::vector<Index> chosen;
    std::unordered_set<std::uint64_t> dead;
    if (!reconstruct(s, n, 0, target, chosen, dead)) {
      throw std::logic_error("sumset level membership without a reconstructible unit list");
    }
    return make_decomposition(ring_, e, std::move(chosen));
  }
  return out;
}

std::optional<int> StronglyCleanSolver::index(Element x, int n_max) {
  if (n_max < 1) throw PreconditionError("strongly clean index requires n_max >= 1");
  for (int n = 1; n <= n_max; ++n) {
    if (witness(x, n)) return n;
  }
  return std::nullopt;
}

std::optional<Decomposition> n_strongly_clean_witness(const Ring& r, Element x, int n) {
  return StronglyCleanSolver(r).witness(x, n);
}

std::optional<int> strongly_clean_index(const Ring& r, Element x, int n_max) {
  return StronglyCleanSolver(r).index(x, n_max);
}

ElementSet u_n_set(const Ring& r, int n) {
  if (n < 1) throw PreconditionError("U_n requires n >= 1");
  ElementSet out = r.empty_set();
  for (const auto& level : sum_levels(r, r.units(), n)) out |= level;
  return out;
}

int integer_strongly_clean_index(std::int64_t k) {
  const auto w = integer_strongly_clean_witness(k);
  return w.plus_ones + w.minus_ones;
}

IntegerWitness integer_strongly_clean_witness(std::int64_t k) {
  // With units {+1, -1}, exactly n of them reach t iff |t| <= n and
  // n = t (mod 2); t = 0 needs n = 2 since n >= 1.
  auto cost = [](std::int64_t t) { return t == 0 ? std::int64_t{2} : std::llabs(t); };
  const int e = cost(k - 1) < cost(k) ? 1 : 0;
  const std::int64_t t = k - e;
  IntegerWitness w{e, 0, 0};
  if (t > 0) {
    w.plus_ones = static_cast<int>(t);
  } else if (t < 0) {
    w.minus_ones = static_cast<int>(-t);
  } else {
    w.plus_ones = 1;
    w.minus_ones = 1;
  }
  return w;
}

std::optional<SemicleanWitness> semiclean_witness(const Ring& r, Element x) {
  const Index a = r.index_of(x);
  const auto& u = r.units();
  for (Index p = 0; p < r.size(); ++p) {
    const Index v = r.sub(a, p);
    if (u.contains(v)) return SemicleanWitness{periodicity(r, r.element(p)), r.element(v)};
  }
  return std::nullopt;
}

ClassifyReport classify_ring(const Ring& r, int n_max, std::optional<Index> only) {
  if (n_max < 1) throw PreconditionError("classify requires n_max >= 1");
  ClassifyReport report;
  report.ring_id = r.id();
  report.n_max = n_max;
  StronglyCleanSolver solver(r);
  const auto& idem = r.idempotents();
  const auto& unit = r.units();

  auto classify_one = [&](Index i) {
    ElementRecord rec;
    rec.element = i;
    rec.idempotent = idem.contains(i);
    rec.unit = unit.contains(i);
    const Element x = r.element(i);
    rec.clean = clean_witness(r, x);
    for (int n = 1; n <= n_max; ++n) {
      if (auto w = solver.witness(x, n)) {
        if (!rec.index) rec.index = n;
        rec.witnesses.emplace_back(n, std::move(*w));
      }
    }
    if (rec.clean) ++report.clean_count;
    ++report.index_histogram[rec.index.value_or(0)];
    report.records.push_back(std::move(rec));
  };

  if (only) {
    classify_one(r.element(*only).index);
  } else {
    for (Index i = 0; i < r.size(); ++i) classify_one(i);
  }
  return report;
}

}  // namespace ringlab
