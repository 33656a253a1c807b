#include <algorithm>
#include <charconv>
#include <chrono>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "ringlab/classify.hpp"
#include "ringlab/cli.hpp"
#include "ringlab/constructors.hpp"
#include "ringlab/expr.hpp"
#include "ringlab/theorems.hpp"

namespace ringlab {

namespace {

using cli::json;

// Rings up to this size are verified over every element; larger ones use
// --trials seeded samples.
constexpr Index kExhaustiveLimit = 4096;
constexpr std::int64_t kIntIndexLimit = 1'000'000'000;
constexpr std::int64_t kIntRangeLimit = 1'000'000;
constexpr Index kParseRowLimit = 65536;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string ring;
  std::string expr;
  std::string range;
  std::string subject;
  std::string format = "json";
  std::optional<std::int64_t> element;
  int nmax = 4;
  int trials = 100;
  std::uint64_t seed = 0;
  int deg = 2;
  bool timing = false;
};

// ---- JSON helpers -------------------------------------------------------------

json indices(const ElementSet& s) {
  json a = json::array();
  s.for_each([&](Index i) { a.push_back(i); });
  return a;
}

std::string decomposition_text(const Ring& r, const Decomposition& d) {
  std::string s = "(" + r.format(d.idempotent.index) + ")";
  for (const auto& u : d.units) s += " + (" + r.format(u.index) + ")";
  return s;
}

json decomposition_json(const Ring& r, const Decomposition& d) {
  json units = json::array();
  for (const auto& u : d.units) units.push_back(u.index);
  return json{{"idempotent", d.idempotent.index},
              {"units", units},
              {"strongly", d.strongly()},
              {"text", decomposition_text(r, d)}};
}

json ring_summary(const std::string& expression, const Ring& r) {
  json s;
  s["expression"] = expression;
  s["kind"] = std::string(to_string(r.kind()));
  s["size"] = r.size();
  s["commutative"] = r.commutative();
  s["units"] = r.units().count();
  s["idempotents"] = r.idempotents().count();
  s["nilpotents"] = r.commutative() ? json(r.nilradical().members.count()) : json(nullptr);
  s["jacobson"] = r.jacobson().count();
  return s;
}

std::string join_indices(const ElementSet& s) {
  std::string out;
  s.for_each([&](Index i) {
    if (!out.empty()) out += ';';
    out += std::to_string(i);
  });
  return out;
}

// Accumulates named checks for a verify report.
class Checks {
 public:
  void add(std::string name, bool passed, json detail = json::object()) {
    all_ = all_ && passed;
    list_.push_back(json{{"name", std::move(name)}, {"passed", passed}, {"detail", std::move(detail)}});
  }

  // Counted check: passed when every one of `total` cases passed.
  void count(std::string name, std::uint64_t passed, std::uint64_t total) {
    add(std::move(name), passed == total, json{{"passed", passed}, {"total", total}});
  }

  void counterexample(json c) {
    if (cex_.is_null()) cex_ = std::move(c);
  }

  bool all() const { return all_; }

  json payload(std::string subject, json stats) const {
    json p;
    p["subject"] = std::move(subject);
    p["checks"] = list_;
    p["counterexample"] = cex_;
    p["stats"] = std::move(stats);
    json table = cli::make_table({"check", "passed", "detail"});
    for (const auto& c : list_) table["rows"].push_back(json::array({c["name"], c["passed"], c["detail"].dump()}));
    p["table"] = std::move(table);
    return p;
  }

 private:
  json list_ = json::array();
  json cex_ = nullptr;
  bool all_ = true;
};

// Every element for small rings, otherwise `trials` seeded draws.
std::vector<Index> sample_elements(const Ring& r, const Options& o, bool& exhaustive) {
  std::vector<Index> xs;
  exhaustive = r.size() <= kExhaustiveLimit;
  if (exhaustive) {
    for (Index i = 0; i < r.size(); ++i) xs.push_back(i);
  } else {
    std::mt19937_64 rng(o.seed);
    for (int t = 0; t < o.trials; ++t) xs.push_back(static_cast<Index>(rng() % r.size()));
  }
  return xs;
}

json sampling_stats(bool exhaustive, std::size_t count) {
  return json{{"exhaustive", exhaustive}, {"elements", count}};
}

// Least-n canonical witness with n <= nmax.
std::optional<Decomposition> least_witness(StronglyCleanSolver& s, Element x, int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    if (auto w = s.witness(x, n)) return w;
  }
  return std::nullopt;
}

// ---- parsing helpers ------------------------------------------------------------

struct Parsed {
  RingExpr expr;
  Ring ring;
  std::string canonical;
};

Parsed load_ring(const std::string& text) {
  RingExpr e = parse_ring_expr(text);
  Ring r = build_ring(e);
  return Parsed{e, r, print_ring_expr(e)};
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  auto number = [&](std::string_view s) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw UsageError("--range expects LO..HI with integer bounds, got '" + text + "'");
    }
    return v;
  };
  if (dots == std::string::npos) throw UsageError("--range expects LO..HI, got '" + text + "'");
  const auto lo = number(std::string_view(text).substr(0, dots));
  const auto hi = number(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw UsageError("--range: LO must not exceed HI");
  if (lo < -kIntIndexLimit || hi > kIntIndexLimit) {
    throw UsageError("--range bounds must lie within +-" + std::to_string(kIntIndexLimit));
  }
  if (hi - lo >= kIntRangeLimit) throw UsageError("--range spans too many integers");
  return {lo, hi};
}

json ast_json(const RingExpr& e) {
  json j;
  j["kind"] = std::string(to_string(e.kind));
  j["span"] = json{{"offset", e.span.offset}, {"length", e.span.length},
                   {"line", e.span.line}, {"column", e.span.column}};
  using K = RingExpr::Kind;
  if (e.kind == K::zmod || e.kind == K::matrix || e.kind == K::series) j["number"] = e.number;
  if (e.kind == K::gring || e.kind == K::polyq || e.kind == K::quot) j["integers"] = e.integers;
  json children = json::array();
  for (const auto& c : e.children) children.push_back(ast_json(c));
  j["children"] = std::move(children);
  return j;
}

// ---- commands ---------------------------------------------------------------------

struct Outcome {
  json ring = nullptr;
  json payload;
  bool passed = true;
};

Outcome cmd_classify(const Options& o) {
  const Parsed p = load_ring(o.ring);
  const Ring& r = p.ring;
  std::optional<Index> only;
  if (o.element) {
    if (*o.element < 0 || *o.element >= std::int64_t(r.size())) {
      throw UsageError("--element " + std::to_string(*o.element) + " outside [0, " +
                       std::to_string(r.size()) + ")");
    }
    only = static_cast<Index>(*o.element);
  }
  const ClassifyReport rep = classify_ring(r, o.nmax, only);

  json elements = json::array();
  json table = cli::make_table({"index", "element", "idempotent", "unit", "clean",
                                "strongly_clean_index", "witness"});
  for (const auto& rec : rep.records) {
    json witnesses = json::array();
    for (const auto& [n, d] : rec.witnesses) {
      json w = decomposition_json(r, d);
      w["n"] = n;
      witnesses.push_back(std::move(w));
    }
    const json clean = rec.clean ? decomposition_json(r, *rec.clean) : json(nullptr);
    const json index = rec.index ? json(*rec.index) : json(nullptr);
    elements.push_back(json{{"index", rec.element},
                            {"element", r.format(rec.element)},
                            {"idempotent", rec.idempotent},
                            {"unit", rec.unit},
                            {"clean", rec.clean.has_value()},
                            {"clean_witness", clean},
                            {"strongly_clean_index", index},
                            {"witnesses", std::move(witnesses)}});
    const std::string first =
        rec.witnesses.empty() ? "" : decomposition_text(r, rec.witnesses.front().second);
    table["rows"].push_back(json::array({rec.element, r.format(rec.element), rec.idempotent,
                                         rec.unit, rec.clean.has_value(), index, first}));
  }
  json histogram = json::object();
  for (const auto& [k, count] : rep.index_histogram) {
    histogram[k == 0 ? std::string("none") : std::to_string(k)] = count;
  }

  Outcome out;
  out.ring = ring_summary(p.canonical, r);
  out.payload = json{{"nmax", o.nmax},
                     {"elements", std::move(elements)},
                     {"clean_count", rep.clean_count},
                     {"index_histogram", std::move(histogram)},
                     {"table", std::move(table)}};
  return out;
}

Outcome cmd_index_table(const Options& o) {
  const Parsed p = load_ring(o.ring);
  const Ring& r = p.ring;
  json levels = json::array();
  json table = cli::make_table({"n", "count", "members"});
  ElementSet acc = r.empty_set();
  const auto sums = sum_levels(r, r.units(), o.nmax);
  for (int n = 1; n <= o.nmax; ++n) {
    acc |= sums[static_cast<std::size_t>(n - 1)];
    levels.push_back(json{{"n", n}, {"count", acc.count()}, {"members", indices(acc)}});
    table["rows"].push_back(json::array({n, acc.count(), join_indices(acc)}));
  }
  StronglyCleanSolver solver(r);
  json sc = json::array();
  for (Index i = 0; i < r.size(); ++i) {
    const auto k = solver.index(r.element(i), o.nmax);
    sc.push_back(k ? json(*k) : json(nullptr));
  }
  Outcome out;
  out.ring = ring_summary(p.canonical, r);
  out.payload = json{{"nmax", o.nmax},
                     {"u_n", std::move(levels)},
                     {"strongly_clean_index", std::move(sc)},
                     {"table", std::move(table)}};
  return out;
}

Outcome cmd_int_index(const Options& o) {
  const auto [lo, hi] = parse_range(o.range);
  json rows = json::array();
  json table = cli::make_table({"k", "index", "idempotent", "plus_ones", "minus_ones"});
  for (std::int64_t k = lo; k <= hi; ++k) {
    const auto w = integer_strongly_clean_witness(k);
    const int index = w.plus_ones + w.minus_ones;
    rows.push_back(json{{"k", k},
                        {"index", index},
                        {"idempotent", w.idempotent},
                        {"plus_ones", w.plus_ones},
                        {"minus_ones", w.minus_ones}});
    table["rows"].push_back(json::array({k, index, w.idempotent, w.plus_ones, w.minus_ones}));
  }
  Outcome out;
  out.payload = json{{"range", json::array({lo, hi})}, {"values", std::move(rows)},
                     {"table", std::move(table)}};
  return out;
}

Outcome cmd_parse(const Options& o) {
  const Parsed p = load_ring(o.expr);
  const Ring& r = p.ring;
  json table = cli::make_table({"index", "element"});
  json elements = json::array();
  const Index shown = std::min(r.size(), kParseRowLimit);
  for (Index i = 0; i < shown; ++i) {
    elements.push_back(json{{"index", i}, {"element", r.format(i)}});
    table["rows"].push_back(json::array({i, r.format(i)}));
  }
  Outcome out;
  out.ring = ring_summary(p.canonical, r);
  out.payload = json{{"canonical", p.canonical},
                     {"ast", ast_json(p.expr)},
                     {"elements", std::move(elements)},
                     {"truncated", shown < r.size()},
                     {"table", std::move(table)}};
  return out;
}

// ---- verify subjects -------------------------------------------------------------

json verify_product(const Ring& r, const Options& o, Checks& c) {
  if (r.kind() != RingKind::product) throw PreconditionError("verify product needs a prod(...) ring");
  const auto& factors = std::get<ProductParams>(r.components().params).factors;
  StronglyCleanSolver whole(r);
  std::vector<StronglyCleanSolver> parts;
  for (const auto& f : factors) parts.emplace_back(f);

  bool exhaustive = false;
  const auto xs = sample_elements(r, o, exhaustive);
  std::uint64_t cases = 0, agree = 0, combined = 0, combined_ok = 0, split_ok = 0, witnessed = 0;
  for (Index x : xs) {
    for (int n = 1; n <= o.nmax; ++n) {
      ++cases;
      const auto w = whole.witness(r.element(x), n);
      std::vector<Decomposition> per;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto d = parts[i].witness(product_project(r, i, r.element(x)), n);
        if (!d) break;
        per.push_back(std::move(*d));
      }
      const bool factorwise = per.size() == factors.size();
      if (w.has_value() == factorwise) {
        ++agree;
      } else {
        c.counterexample(json{{"element", x}, {"n", n}, {"whole", w.has_value()},
                              {"factorwise", factorwise}});
      }
      if (factorwise) {
        ++combined;
        const auto d = product_combine(r, per);
        if (revalidate(r, d, r.element(x)).strongly_valid()) {
          ++combined_ok;
        } else {
          c.counterexample(json{{"element", x}, {"n", n}, {"combined", decomposition_json(r, d)}});
        }
      }
      if (w) {
        ++witnessed;
        const auto split = product_split(r, *w);
        bool ok = true;
        for (std::size_t i = 0; i < factors.size(); ++i) {
          ok = ok && revalidate(factors[i], split[i], product_project(r, i, r.element(x))).strongly_valid();
        }
        if (ok) {
          ++split_ok;
        } else {
          c.counterexample(json{{"element", x}, {"n", n}, {"split_of", decomposition_json(r, *w)}});
        }
      }
    }
  }
  c.count("existence_matches_factors", agree, cases);
  c.count("combine_revalidates", combined_ok, combined);
  c.count("split_revalidates", split_ok, witnessed);
  json s = sampling_stats(exhaustive, xs.size());
  s["factors"] = factors.size();
  return s;
}

json verify_quotient(const Ring& q, const Options& o, Checks& c) {
  if (q.kind() != RingKind::quotient) throw PreconditionError("verify quotient needs a quot(...) ring");
  const auto& params = std::get<QuotientParams>(q.components().params);
  const Ring& base = params.base.front();
  const QuotientRing quotient{q, RingHom{base, q, params.coset_of}};
  const HomCheck hom = verify_homomorphism(quotient.projection, 4096, o.seed);
  c.add("projection_is_homomorphism", hom.ok(), json{{"exhaustive", hom.exhaustive}});

  StronglyCleanSolver qsolver(q);
  StronglyCleanSolver bsolver(base);
  bool exhaustive = false;
  const auto xs = sample_elements(base, o, exhaustive);
  std::uint64_t lifted = 0, valid = 0, strongly = 0, residual = 0, within = 0, no_image = 0;
  std::uint64_t pushed = 0, push_ok = 0;
  for (Index x : xs) {
    const Element ex = base.element(x);
    if (auto image = least_witness(qsolver, quotient.projection(ex), o.nmax)) {
      ++lifted;
      const auto lift = lift_decomposition_mod_ideal(quotient, *image, ex);
      valid += lift.check.valid();
      strongly += lift.check.strongly_valid();
      residual += lift.residual_in_ideal;
      within += lift.idempotent_lift.iterations <= lift.idempotent_lift.bound;
      if (!lift.check.valid()) {
        c.counterexample(json{{"element", x}, {"lifted", decomposition_json(base, lift.lifted)}});
      }
    } else {
      ++no_image;
    }
    if (auto d = least_witness(bsolver, ex, o.nmax)) {
      ++pushed;
      const auto push = hom_image_push(quotient.projection, *d);
      if (push.check.valid()) {
        ++push_ok;
      } else {
        c.counterexample(json{{"element", x}, {"pushed", decomposition_json(q, push.image)}});
      }
    }
  }
  c.count("lift_valid", valid, lifted);
  c.count("residual_in_ideal", residual, lifted);
  c.count("idempotent_lift_within_bound", within, lifted);
  c.count("image_push_valid", push_ok, pushed);
  json s = sampling_stats(exhaustive, xs.size());
  s["ideal_size"] = params.ideal_size;
  s["strongly_valid_lifts"] = strongly;
  s["elements_without_quotient_witness"] = no_image;
  return s;
}

json verify_series(const Ring& r, const Options& o, Checks& c) {
  if (r.kind() != RingKind::poly_quotient ||
      !std::get<PolyQuotientParams>(r.components().params).series_order) {
    throw PreconditionError("verify series needs a series(...) ring");
  }
  const Ring& base = std::get<PolyQuotientParams>(r.components().params).base.front();
  StronglyCleanSolver solver(base);
  bool exhaustive = false;
  const auto xs = sample_elements(r, o, exhaustive);
  std::uint64_t lifted = 0, strongly = 0, recovered = 0, no_base = 0;
  for (Index f : xs) {
    const Element ef = r.element(f);
    const auto d0 = least_witness(solver, poly_constant_term(r, ef), o.nmax);
    if (!d0) {
      ++no_base;
      continue;
    }
    ++lifted;
    const auto lift = series_lift(r, ef, *d0);
    if (lift.check.strongly_valid()) {
      ++strongly;
    } else {
      c.counterexample(json{{"element", f}, {"lifted", decomposition_json(r, lift.lifted)}});
    }
    if (series_constant_part(r, lift.lifted) == *d0) {
      ++recovered;
    } else {
      c.counterexample(json{{"element", f}, {"base", decomposition_json(base, *d0)}});
    }
  }
  c.count("lift_strongly_valid", strongly, lifted);
  c.count("projection_recovers_base", recovered, lifted);
  json s = sampling_stats(exhaustive, xs.size());
  s["elements_without_base_witness"] = no_base;
  return s;
}

json verify_bijection(const Ring& r, const Options& o, Checks& c) {
  if (!r.units().contains(r.from_integer(2))) {
    throw PreconditionError("verify bijection needs 2 to be a unit");
  }
  StronglyCleanSolver solver(r);
  bool exhaustive = false;
  const auto xs = sample_elements(r, o, exhaustive);
  const int top = std::min(o.nmax, 2);
  const Index two = r.from_integer(2);
  std::uint64_t cases = 0, root_ok = 0, sum_ok = 0, round_trip = 0, back_valid = 0;
  for (Index x : xs) {
    for (int n = 1; n <= top; ++n) {
      const auto d = solver.witness(r.element(x), n);
      if (!d) continue;
      ++cases;
      const auto form = unit_sqrt_forward(r, *d);
      const Index s = form.root.index;
      root_ok += r.mul(s, s) == r.one();
      Index sum = s;
      for (const auto& v : form.units) sum = r.add(sum, v.index);
      sum_ok += sum == r.sub(r.mul(two, x), r.one());
      const auto back = unit_sqrt_backward(r, form);
      const bool same = back == *d;
      round_trip += same;
      back_valid += revalidate(r, back, r.element(x)).strongly_valid();
      if (!same) {
        c.counterexample(json{{"element", x}, {"n", n}, {"original", decomposition_json(r, *d)},
                              {"round_trip", decomposition_json(r, back)}});
      }
    }
  }
  c.count("root_squares_to_one", root_ok, cases);
  c.count("form_sums_to_2x_minus_1", sum_ok, cases);
  c.count("round_trip_identity", round_trip, cases);
  c.count("backward_strongly_valid", back_valid, cases);
  json s = sampling_stats(exhaustive, xs.size());
  s["decompositions"] = cases;
  return s;
}

// E11 for matrix rings, otherwise the smallest idempotent other than 0 and 1.
Index pierce_idempotent(const Ring& r) {
  if (r.kind() == RingKind::matrix) return matrix_unit(r, 0, 0).index;
  std::optional<Index> e;
  r.idempotents().for_each([&](Index i) {
    if (!e && i != r.zero() && i != r.one()) e = i;
  });
  if (!e) throw PreconditionError("verify pierce needs a nontrivial idempotent");
  return *e;
}

json verify_pierce(const Ring& r, const Options& o, Checks& c) {
  const Index e = pierce_idempotent(r);
  const std::vector<Element> es{r.element(e), r.element(r.sub(r.one(), e))};
  std::mt19937_64 rng(o.seed);
  std::uint64_t trials = 0, folded = 0, sums = 0, idem = 0, units = 0, closed = 0, cross = 0;
  std::uint64_t commuting = 0, closed_units = 0, total_units = 0, skipped = 0;
  for (int t = 0; t < o.trials; ++t) {
    const Index x = static_cast<Index>(rng() % r.size());
    const int n = (o.nmax >= 2 && t % 2 == 1) ? 2 : 1;
    ++trials;
    const auto res = orthogonal_pierce(r, es, r.element(x), n);
    if (res.steps.empty()) {
      ++skipped;  // a corner has no decomposition with n units
      continue;
    }
    ++folded;
    const auto& step = res.steps.back();
    sums += step.sum_ok;
    idem += step.idempotent_ok;
    units += step.all_units();
    closed += step.closed_forms_verified();
    cross += step.cross_terms_vanish();
    commuting += step.n_strongly_clean();
    for (const auto& u : step.units) {
      ++total_units;
      closed_units += u.closed_form_verified;
    }
    if (!step.n_clean() || !step.closed_forms_verified()) {
      json units_json = json::array();
      for (const auto& u : step.units) {
        units_json.push_back(json{{"unit", u.unit.index},
                                  {"inverse", u.inverse ? json(u.inverse->index) : json(nullptr)},
                                  {"source", std::string(to_string(u.source))},
                                  {"closed_form_verified", u.closed_form_verified}});
      }
      c.counterexample(json{{"trial", t}, {"element", x}, {"n", n},
                            {"combined", decomposition_json(r, step.combined)},
                            {"units", std::move(units_json)}});
    }
  }
  c.count("sum_equals_x", sums, folded);
  c.count("idempotent_law", idem, folded);
  c.count("combined_units_invertible", units, folded);
  c.count("closed_form_inverses_verified", closed, folded);
  const double rate = folded ? double(commuting) / double(folded) : 0.0;
  return json{{"idempotent", e},
              {"trials", trials},
              {"combined", folded},
              {"skipped_no_corner_decomposition", skipped},
              {"commuting", commuting},
              {"commutation_rate", rate},
              {"cross_terms_vanish", cross},
              {"closed_form_units", closed_units},
              {"units_total", total_units}};
}

json verify_uchain(const Ring& r, const Options& o, Checks& c) {
  json rows = json::array();
  for (int n = 1; n <= o.nmax; ++n) {
    const auto rep = u_chain_check(r, n);
    json d{{"all_n_strongly_clean", rep.all_n_strongly_clean},
           {"two_invertible", rep.two_invertible},
           {"u_next_is_universe", rep.u_next_is_universe},
           {"vacuous", rep.vacuous()}};
    if (rep.outside_u_next) d["outside_u_next"] = *rep.outside_u_next;
    if (rep.not_n_clean) d["not_n_strongly_clean"] = *rep.not_n_clean;
    c.add("implication_n" + std::to_string(n), rep.implication_holds(), d);
    if (!rep.implication_holds()) c.counterexample(json{{"n", n}, {"detail", d}});
    rows.push_back(std::move(d));
  }
  return json{{"levels", std::move(rows)}};
}

json poly_json(const Poly& f) { return json(f); }

json verify_polyunits(const Ring& r, const Options& o, Checks& c) {
  const auto rep = poly_unit_characterization(r, o.deg);
  c.add("search_matches_criterion", rep.holds(),
        json{{"mismatches", rep.mismatches.size()}, {"polynomials", rep.polynomials}});
  if (!rep.holds()) c.counterexample(json{{"polynomial", poly_json(rep.mismatches.front())}});
  return json{{"deg", rep.d},
              {"degree_bound", rep.degree_bound},
              {"ideal_nilpotency", rep.ideal_nilpotency},
              {"polynomials", rep.polynomials},
              {"units_by_search", rep.units_by_search},
              {"units_by_criterion", rep.units_by_criterion}};
}

json verify_polysigma(const Ring& r, const Options& o, Checks& c) {
  const auto cert = poly_x_not_sigma_witness(r, o.nmax, o.deg);
  c.add("nilradical_is_ideal", cert.nilradical_is_ideal);
  c.add("one_not_nilpotent", cert.one_outside_nilradical);
  c.add("criterion_units_confirmed_by_search", cert.units_confirmed_by_search);
  c.add("idempotents_are_constants", cert.idempotents_are_constants);
  c.add("x_minus_idempotent_not_sum_of_units", !cert.counterexample.has_value(),
        json{{"combinations_ruled_out", cert.combinations_ruled_out}});
  if (cert.counterexample) {
    c.counterexample(json{{"idempotent", cert.counterexample->first}, {"n", cert.counterexample->second}});
  }
  return json{{"nmax", cert.n_max},
              {"deg", cert.d},
              {"degree_bound", cert.degree_bound},
              {"unit_polynomials", cert.unit_polynomials},
              {"idempotent_polynomials", cert.idempotents},
              {"combinations_ruled_out", cert.combinations_ruled_out}};
}

json verify_semiclean2(const Ring& r, const Options& o, Checks& c) {
  if (!r.commutative()) throw PreconditionError("verify semiclean2 needs a commutative ring");
  bool exhaustive = false;
  const auto xs = sample_elements(r, o, exhaustive);
  std::uint64_t ok = 0;
  for (Index x : xs) {
    const auto route = semiclean_route_two_decomposition(r, r.element(x));
    if (route.check.strongly_valid()) {
      ++ok;
    } else {
      c.counterexample(json{{"element", x}, {"result", decomposition_json(r, route.result)}});
    }
  }
  c.count("two_unit_decomposition_valid", ok, xs.size());
  return sampling_stats(exhaustive, xs.size());
}

Outcome cmd_verify(const Options& o) {
  using Fn = json (*)(const Ring&, const Options&, Checks&);
  static const std::map<std::string, Fn> subjects{
      {"product", verify_product},       {"quotient", verify_quotient},
      {"series", verify_series},         {"bijection", verify_bijection},
      {"pierce", verify_pierce},         {"uchain", verify_uchain},
      {"polyunits", verify_polyunits},   {"polysigma", verify_polysigma},
      {"semiclean2", verify_semiclean2}};
  const auto it = subjects.find(o.subject);
  if (it == subjects.end()) throw UsageError("unknown verify subject '" + o.subject + "'");
  const Parsed p = load_ring(o.ring);
  Checks c;
  json stats = it->second(p.ring, o, c);
  Outcome out;
  out.ring = ring_summary(p.canonical, p.ring);
  out.payload = c.payload(o.subject, std::move(stats));
  out.passed = c.all();
  return out;
}

// ---- dispatch ------------------------------------------------------------------

void report_error(std::ostream& err, const std::string& text, const std::exception& e) {
  err << "ringlab: " << e.what() << "\n";
  const SourceSpan* where = nullptr;
  if (auto pe = dynamic_cast<const ParseError*>(&e)) where = &pe->where();
  if (auto ce = dynamic_cast<const PositionedConstructionError*>(&e)) where = &ce->where();
  if (where && text.find('\n') == std::string::npos && where->offset <= text.size()) {
    err << "  " << text << "\n  " << std::string(where->offset, ' ')
        << std::string(std::max<std::size_t>(where->length, 1), '^') << "\n";
  }
}

}  // namespace

int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-ring laboratory: clean and n-strongly clean decompositions", "ringlab"};
  app.require_subcommand(1);
  Options o;
  std::string nmax_help = "largest number of units to try (default 4)";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_flag("--timing", o.timing, "add wall-clock timing to the report");
  };
  auto ring_opt = [&](CLI::App* sub) { sub->add_option("--ring", o.ring, "ring expression")->required(); };
  auto nmax_opt = [&](CLI::App* sub) {
    sub->add_option("--nmax", o.nmax, nmax_help)->check(CLI::Range(1, 64));
  };

  auto* classify = app.add_subcommand("classify", "classify every element of a ring");
  ring_opt(classify);
  classify->add_option("--element", o.element, "classify only this element index");
  nmax_opt(classify);
  common(classify);

  auto* table = app.add_subcommand("index-table", "U_n sets and strongly clean indices");
  ring_opt(table);
  nmax_opt(table);
  common(table);

  auto* verify = app.add_subcommand("verify", "run a constructive verification");
  verify->add_option("subject", o.subject,
                     "product, quotient, series, bijection, pierce, uchain, polyunits, polysigma "
                     "or semiclean2")
      ->required();
  ring_opt(verify);
  verify->add_option("--trials", o.trials, "random trials (default 100)")->check(CLI::Range(1, 10'000'000));
  verify->add_option("--seed", o.seed, "random seed (default 0)");
  nmax_opt(verify);
  verify->add_option("--deg", o.deg, "polynomial degree bound (default 2)")->check(CLI::Range(0, 16));
  common(verify);

  auto* ints = app.add_subcommand("int-index", "strongly clean index of integers");
  ints->add_option("--range", o.range, "LO..HI")->required();
  common(ints);

  auto* parse = app.add_subcommand("parse", "parse a ring expression and list its elements");
  parse->add_option("--expr", o.expr, "ring expression")->required();
  common(parse);

  // Values such as "-5..5" would otherwise be read as option names.
  std::vector<std::string> argv;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const bool takes_value = args[i] == "--range" || args[i] == "--ring" || args[i] == "--expr";
    if (takes_value && i + 1 < args.size() && args[i + 1].starts_with("-")) {
      argv.push_back(args[i] + "=" + args[i + 1]);
      ++i;
    } else {
      argv.push_back(args[i]);
    }
  }
  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ringlab: " << e.what() << "\n";
    return 1;
  }

  const auto started = std::chrono::steady_clock::now();
  std::string expression_text;
  std::string name;
  try {
    Outcome result;
    if (classify->parsed()) {
      name = "classify";
      expression_text = o.ring;
      result = cmd_classify(o);
    } else if (table->parsed()) {
      name = "index-table";
      expression_text = o.ring;
      result = cmd_index_table(o);
    } else if (verify->parsed()) {
      name = "verify " + o.subject;
      expression_text = o.ring;
      result = cmd_verify(o);
    } else if (ints->parsed()) {
      name = "int-index";
      result = cmd_int_index(o);
    } else {
      name = "parse";
      expression_text = o.expr;
      result = cmd_parse(o);
    }

    json report;
    report["schema"] = std::string(cli::kSchemaVersion);
    report["command"] = json{{"name", name},
                             {"argv", std::vector<std::string>(args.begin(), args.end())},
                             {"seed", o.seed},
                             {"nmax", o.nmax},
                             {"trials", o.trials},
                             {"deg", o.deg}};
    report["ring"] = result.ring;
    report["payload"] = std::move(result.payload);
    report["status"] = result.passed ? "ok" : "failed";
    if (o.timing) {
      const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - started;
      report["timing"] = json{{"elapsed_ms", ms.count()}};
    }
    return cli::finish_report(report, *cli::parse_format(o.format), out, err);
  } catch (const ParseError& e) {
    report_error(err, expression_text, e);
    return 1;
  } catch (const UsageError& e) {
    report_error(err, expression_text, e);
    return 1;
  } catch (const Error& e) {
    // Construction, unsupported, precondition and ring-mismatch errors.
    report_error(err, expression_text, e);
    return 2;
  } catch (const std::exception& e) {
    err << "ringlab: internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ringlab
