#include "ringlab/ring.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ring_impl.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

namespace {

std::atomic<RingId> g_next_ring_id{1};

std::uint64_t initial_size_cap() {
  if (const char* env = std::getenv("RINGLAB_SIZE_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v >= 1) {
      return std::min<std::uint64_t>(v, std::uint64_t{1} << 31);
    }
  }
  return std::uint64_t{1} << 24;
}

std::atomic<std::uint64_t>& cap_storage() {
  static std::atomic<std::uint64_t> cap{initial_size_cap()};
  return cap;
}

}  // namespace

std::string_view to_string(RingKind kind) noexcept {
  switch (kind) {
    case RingKind::zmod: return "zmod";
    case RingKind::product: return "product";
    case RingKind::group_ring: return "group_ring";
    case RingKind::matrix: return "matrix";
    case RingKind::poly_quotient: return "poly_quotient";
    case RingKind::quotient: return "quotient";
    case RingKind::corner: return "corner";
    case RingKind::table: return "table";
  }
  return "unknown";
}

std::uint64_t size_cap() noexcept { return cap_storage().load(); }

void set_size_cap(std::uint64_t cap) {
  if (cap < 1 || cap > (std::uint64_t{1} << 31)) {
    throw PreconditionError("size cap must lie in [1, 2^31]");
  }
  cap_storage().store(cap);
}

// ---- RingImpl -------------------------------------------------------------

namespace detail {

namespace {

// x^j R strictly decreases until it vanishes, so the index is at most
// log2(|R|) + 1.
std::optional<int> element_nilpotency(const RingImpl& r, Index x) {
  const int limit = std::bit_width(r.size()) + 1;
  Index p = x;
  for (int k = 1; k <= limit; ++k) {
    if (p == r.zero()) return k;
    p = r.mul(p, x);
  }
  return std::nullopt;
}

}  // namespace

RingImpl::RingImpl(RingKind kind, Index size, RingComponents components)
    : id_(g_next_ring_id.fetch_add(1)), kind_(kind), size_(size),
      components_(std::move(components)) {}

void RingImpl::tabulate() {
  if (size_ > kTabulateLimit) return;
  const std::size_t n = size_;
  if (add_table_.empty()) {
    add_table_.resize(n * n);
    for (Index a = 0; a < size_; ++a)
      for (Index b = 0; b < size_; ++b) add_table_[a * n + b] = do_add(a, b);
  }
  if (mul_table_.empty()) {
    mul_table_.resize(n * n);
    for (Index a = 0; a < size_; ++a)
      for (Index b = 0; b < size_; ++b) mul_table_[a * n + b] = do_mul(a, b);
  }
  if (neg_table_.empty()) {
    neg_table_.resize(n);
    for (Index a = 0; a < size_; ++a) neg_table_[a] = do_neg(a);
  }
}

bool RingImpl::commutative() const {
  std::call_once(commutative_once_, [this] {
    if (auto known = structural_commutative()) {
      commutative_ = *known;
      return;
    }
    commutative_ = true;
    for (Index a = 0; a < size_ && commutative_; ++a) {
      for (Index b = a + 1; b < size_; ++b) {
        if (mul(a, b) != mul(b, a)) {
          commutative_ = false;
          break;
        }
      }
    }
  });
  return commutative_;
}

void RingImpl::build_units() const {
  units_ = ElementSet(id_, size_);
  inverse_.assign(size_, -1);
  const Index e = one();
  for (Index a = 0; a < size_; ++a) {
    if (inverse_[a] >= 0) continue;
    for (Index b = 0; b < size_; ++b) {
      // One-sided hits are never accepted: both products must equal one.
      if (mul(a, b) == e && mul(b, a) == e) {
        inverse_[a] = b;
        if (inverse_[b] < 0) inverse_[b] = a;
        break;
      }
    }
  }
  for (Index a = 0; a < size_; ++a) {
    if (inverse_[a] >= 0) units_.insert(a);
  }
}

const ElementSet& RingImpl::units() const {
  std::call_once(units_once_, [this] { build_units(); });
  return units_;
}

const std::vector<std::int64_t>& RingImpl::inverse_table() const {
  units();
  return inverse_;
}

const ElementSet& RingImpl::idempotents() const {
  std::call_once(idempotents_once_, [this] {
    idempotents_ = ElementSet(id_, size_);
    for (Index a = 0; a < size_; ++a) {
      if (mul(a, a) == a) idempotents_.insert(a);
    }
  });
  return idempotents_;
}

const ElementSet& RingImpl::jacobson() const {
  std::call_once(jacobson_once_, [this] {
    const auto& u = units();
    jacobson_ = ElementSet(id_, size_);
    const Index e = one();
    for (Index r = 0; r < size_; ++r) {
      bool in_radical = true;
      for (Index s = 0; s < size_ && in_radical; ++s) {
        // 1 - s r; membership in U(R) is a two-sided check.
        in_radical = u.contains(add(e, neg(mul(s, r))));
      }
      if (in_radical) jacobson_.insert(r);
    }
  });
  return jacobson_;
}

const Nilradical& RingImpl::nilradical() const {
  if (!commutative()) {
    throw UnsupportedError("nilradical is only supported for commutative rings");
  }
  std::call_once(nilradical_once_, [this] {
    Nilradical nil{ElementSet(id_, size_), 1};
    for (Index x = 0; x < size_; ++x) {
      if (auto k = element_nilpotency(*this, x)) {
        nil.members.insert(x);
        nil.index = std::max(nil.index, *k);
      }
    }
    nilradical_ = std::move(nil);
  });
  return *nilradical_;
}

Index checked_size(std::uint64_t size, const std::string& what) {
  if (size > size_cap()) {
    throw ConstructionError(what + ": size " + std::to_string(size) + " exceeds the universe cap " +
                            std::to_string(size_cap()));
  }
  return static_cast<Index>(size);
}

Index checked_power(Index base, std::uint64_t exponent, const std::string& what) {
  std::uint64_t total = 1;
  const auto cap = size_cap();
  for (std::uint64_t i = 0; i < exponent; ++i) {
    total *= base;
    if (total > cap) {
      throw ConstructionError(what + ": size " + std::to_string(base) + "^" +
                              std::to_string(exponent) + " exceeds the universe cap " +
                              std::to_string(cap));
    }
  }
  return static_cast<Index>(total);
}

// ---- table-driven fixture rings ------------------------------------------

namespace {

class TableRingImpl final : public RingImpl {
 public:
  TableRingImpl(Index size, std::vector<Index> add, std::vector<Index> mul, Index one)
      : RingImpl(RingKind::table, size, RingComponents{TableParams{}}), one_(one) {
    add_table_ = std::move(add);
    mul_table_ = std::move(mul);
  }

  Index one() const override { return one_; }
  std::string format(Index i) const override { return "#" + std::to_string(i); }
  std::vector<Index> coordinates(Index i) const override { return {i}; }
  Index from_coordinates(std::span<const Index> c) const override {
    if (c.size() != 1 || c[0] >= size()) throw PreconditionError("bad table-ring coordinates");
    return c[0];
  }
  std::string expression() const override { return "table(" + std::to_string(size()) + ")"; }

 protected:
  Index do_add(Index a, Index b) const override { return add_table_[std::size_t{a} * size() + b]; }
  Index do_mul(Index a, Index b) const override { return mul_table_[std::size_t{a} * size() + b]; }
  Index do_neg(Index a) const override {
    for (Index b = 0; b < size(); ++b) {
      if (do_add(a, b) == zero()) return b;
    }
    return zero();
  }

 private:
  Index one_;
};

}  // namespace
}  // namespace detail

Ring make_table_ring(Index size, std::vector<Index> add_table, std::vector<Index> mul_table,
                     Index one) {
  const std::size_t n = size;
  if (size == 0 || add_table.size() != n * n || mul_table.size() != n * n || one >= size) {
    throw ConstructionError("table ring: tables must be size*size and one < size");
  }
  for (auto v : add_table)
    if (v >= size) throw ConstructionError("table ring: add table entry out of range");
  for (auto v : mul_table)
    if (v >= size) throw ConstructionError("table ring: mul table entry out of range");
  return detail::make_ring<detail::TableRingImpl>(size, std::move(add_table), std::move(mul_table),
                                                  one);
}

// ---- Ring handle ------------------------------------------------------------

Ring::Ring(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {
  if (!impl_) throw std::invalid_argument("Ring: null descriptor");
}

RingId Ring::id() const noexcept { return impl_->id(); }
RingKind Ring::kind() const noexcept { return impl_->kind(); }
Index Ring::size() const noexcept { return impl_->size(); }
bool Ring::commutative() const { return impl_->commutative(); }
Index Ring::zero() const noexcept { return impl_->zero(); }
Index Ring::one() const noexcept { return impl_->one(); }
Index Ring::add(Index a, Index b) const { return impl_->add(a, b); }
Index Ring::sub(Index a, Index b) const { return impl_->add(a, impl_->neg(b)); }
Index Ring::mul(Index a, Index b) const { return impl_->mul(a, b); }
Index Ring::neg(Index a) const { return impl_->neg(a); }

Index Ring::pow(Index a, std::uint64_t k) const {
  Index result = one();
  Index base = a;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Index Ring::from_integer(std::int64_t k) const {
  const bool negative = k < 0;
  std::uint64_t m = negative ? std::uint64_t(0) - static_cast<std::uint64_t>(k)
                             : static_cast<std::uint64_t>(k);
  Index result = zero();
  Index step = one();
  while (m > 0) {
    if (m & 1u) result = add(result, step);
    m >>= 1;
    if (m > 0) step = add(step, step);
  }
  return negative ? neg(result) : result;
}

Element Ring::element(Index i) const {
  if (i >= size()) {
    throw std::out_of_range("element index " + std::to_string(i) + " outside ring of size " +
                            std::to_string(size()));
  }
  return Element{id(), i};
}

Index Ring::index_of(Element x) const {
  if (x.ring_id != id()) throw RingMismatchError("element belongs to a different ring");
  if (x.index >= size()) throw std::out_of_range("element index outside ring");
  return x.index;
}

std::string Ring::format(Index i) const { return impl_->format(i); }
std::vector<Index> Ring::coordinates(Index i) const { return impl_->coordinates(i); }
Index Ring::from_coordinates(std::span<const Index> coords) const {
  return impl_->from_coordinates(coords);
}
std::string Ring::expression() const { return impl_->expression(); }
const RingComponents& Ring::components() const noexcept { return impl_->components(); }

const ElementSet& Ring::units() const { return impl_->units(); }
const ElementSet& Ring::idempotents() const { return impl_->idempotents(); }
std::optional<Index> Ring::inverse(Index u) const {
  const auto v = impl_->inverse_table()[u];
  if (v < 0) return std::nullopt;
  return static_cast<Index>(v);
}
const ElementSet& Ring::jacobson() const { return impl_->jacobson(); }
const Nilradical& Ring::nilradical() const { return impl_->nilradical(); }

ElementSet Ring::empty_set() const { return ElementSet(id(), size()); }
ElementSet Ring::full_set() const { return ElementSet::full(id(), size()); }

Index GroupSpec::order() const {
  std::uint64_t n = 1;
  for (auto f : factors) {
    n *= f;
    if (n > (std::uint64_t{1} << 31)) throw ConstructionError("group order too large");
  }
  return static_cast<Index>(n);
}

// ---- ring-core operations ---------------------------------------------------

Element elem_arith(const Ring& r, ArithOp op, Element x, std::optional<Element> y) {
  const Index a = r.index_of(x);
  switch (op) {
    case ArithOp::neg:
      if (y) throw ArityError("neg takes one operand");
      return Element{r.id(), r.neg(a)};
    case ArithOp::add:
    case ArithOp::mul: {
      if (!y) throw ArityError("binary operation requires a second operand");
      const Index b = r.index_of(*y);
      return Element{r.id(), op == ArithOp::add ? r.add(a, b) : r.mul(a, b)};
    }
  }
  throw ArityError("unknown operation");
}

namespace {

class AxiomChecker {
 public:
  AxiomChecker(const Ring& r, AxiomReport& report) : r_(r), report_(report) {}

  void check_pair(Index x, Index y) {
    check(r_.add(x, y) == r_.add(y, x), "add_commutative", x, y, 0);
  }

  void check_triple(Index x, Index y, Index z) {
    ++report_.triples_checked;
    check(r_.add(r_.add(x, y), z) == r_.add(x, r_.add(y, z)), "add_associative", x, y, z);
    check(r_.mul(r_.mul(x, y), z) == r_.mul(x, r_.mul(y, z)), "mul_associative", x, y, z);
    check(r_.mul(x, r_.add(y, z)) == r_.add(r_.mul(x, y), r_.mul(x, z)), "left_distributive", x,
          y, z);
    check(r_.mul(r_.add(x, y), z) == r_.add(r_.mul(x, z), r_.mul(y, z)), "right_distributive", x,
          y, z);
  }

  void check_single(Index x) {
    check(r_.add(x, r_.zero()) == x && r_.add(r_.zero(), x) == x, "add_identity", x, 0, 0);
    check(r_.add(x, r_.neg(x)) == r_.zero(), "add_inverse", x, 0, 0);
    check(r_.mul(x, r_.one()) == x && r_.mul(r_.one(), x) == x, "mul_identity", x, 0, 0);
  }

 private:
  void check(bool ok, const char* law, Index x, Index y, Index z) {
    if (ok) return;
    ++report_.violation_count;
    if (report_.violations.size() < 16) report_.violations.push_back({law, x, y, z});
  }

  const Ring& r_;
  AxiomReport& report_;
};

}  // namespace

AxiomReport verify_axioms(const Ring& r, const AxiomOptions& options) {
  if (options.budget < 1) throw PreconditionError("verify_axioms: budget must be >= 1");
  AxiomReport report;
  AxiomChecker checker(r, report);
  const std::uint64_t n = r.size();

  if (r.size() >= 2 && r.zero() == r.one()) {
    ++report.violation_count;
    report.violations.push_back({"zero_ne_one", r.zero(), r.one(), 0});
  }
  for (Index x = 0; x < r.size(); ++x) checker.check_single(x);

  // n <= 2^31, so n * n fits in 64 bits; n^3 is compared by division.
  const std::uint64_t cap = options.exhaustive_cap;
  const bool pairs_exhaustive = n * n <= cap;
  report.exhaustive = pairs_exhaustive && n * n <= cap / n;
  std::mt19937_64 rng(options.seed);
  auto pick = [&] { return static_cast<Index>(rng() % n); };

  if (report.exhaustive) {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        for (Index z = 0; z < n; ++z) checker.check_triple(x, y, z);
  } else {
    for (std::uint64_t t = 0; t < options.budget; ++t) checker.check_triple(pick(), pick(), pick());
  }

  report.commutative = true;
  report.commutativity_exhaustive = pairs_exhaustive;
  if (pairs_exhaustive) {
    for (Index x = 0; x < n; ++x) {
      for (Index y = x; y < n; ++y) {
        checker.check_pair(x, y);
        if (report.commutative && r.mul(x, y) != r.mul(y, x)) report.commutative = false;
      }
    }
  } else {
    for (std::uint64_t t = 0; t < options.budget; ++t) {
      const Index x = pick();
      const Index y = pick();
      checker.check_pair(x, y);
      if (r.mul(x, y) != r.mul(y, x)) report.commutative = false;
    }
  }
  return report;
}

std::optional<Element> inverse(const Ring& r, Element u) {
  if (auto v = r.inverse(r.index_of(u))) return Element{r.id(), *v};
  return std::nullopt;
}

ElementSet centralizer(const Ring& r, Element e) {
  const Index a = r.index_of(e);
  ElementSet out = r.empty_set();
  for (Index y = 0; y < r.size(); ++y) {
    if (r.mul(y, a) == r.mul(a, y)) out.insert(y);
  }
  return out;
}

ElementSet sumset(const Ring& r, const ElementSet& a, const ElementSet& b) {
  if (a.ring_id() != r.id() || b.ring_id() != r.id()) {
    throw RingMismatchError("sumset operands belong to a different ring");
  }
  ElementSet out = r.empty_set();
  if (a.empty() || b.empty()) return out;
  const auto bs = b.to_vector();
  a.for_each([&](Index x) {
    for (Index y : bs) out.insert(r.add(x, y));
  });
  return out;
}

std::vector<ElementSet> sum_levels(const Ring& r, const ElementSet& gens, int n) {
  std::vector<ElementSet> levels;
  if (n < 1) return levels;
  levels.reserve(static_cast<std::size_t>(n));
  levels.push_back(gens);
  for (int k = 2; k <= n; ++k) levels.push_back(sumset(r, levels.back(), gens));
  return levels;
}

ElementSet ideal_closure(const Ring& r, std::span<const Element> gens) {
  ElementSet ideal = r.empty_set();
  std::vector<Index> members;
  std::vector<Index> queue;
  auto push = [&](Index x) {
    if (!ideal.contains(x)) {
      ideal.insert(x);
      queue.push_back(x);
    }
  };
  push(r.zero());
  for (const auto& g : gens) push(r.index_of(g));

  // Every queued element is combined with all current members (sums) and all
  // ring elements (two-sided products) exactly once.
  while (!queue.empty()) {
    const Index x = queue.back();
    queue.pop_back();
    for (Index s = 0; s < r.size(); ++s) {
      push(r.mul(s, x));
      push(r.mul(x, s));
    }
    push(r.neg(x));
    const auto snapshot = members.size();
    for (std::size_t i = 0; i < snapshot; ++i) push(r.add(x, members[i]));
    members.push_back(x);
  }
  return ideal;
}

bool is_two_sided_ideal(const Ring& r, const ElementSet& s) {
  if (s.ring_id() != r.id()) throw RingMismatchError("set belongs to a different ring");
  if (!s.contains(r.zero())) return false;
  const auto members = s.to_vector();
  for (Index x : members) {
    if (!s.contains(r.neg(x))) return false;
    for (Index y : members) {
      if (!s.contains(r.add(x, y))) return false;
    }
    for (Index t = 0; t < r.size(); ++t) {
      if (!s.contains(r.mul(t, x)) || !s.contains(r.mul(x, t))) return false;
    }
  }
  return true;
}

std::optional<int> ideal_nilpotency_index(const Ring& r, const ElementSet& ideal) {
  if (ideal.ring_id() != r.id()) throw RingMismatchError("set belongs to a different ring");
  const auto gens = ideal.to_vector();
  ElementSet products = ideal;
  const int limit = std::bit_width(r.size()) + 1;
  for (int k = 1; k <= limit; ++k) {
    if (products.count() == 1 && products.contains(r.zero())) return k;
    if (products.empty()) return k;
    ElementSet next = r.empty_set();
    products.for_each([&](Index p) {
      for (Index g : gens) next.insert(r.mul(p, g));
    });
    products = std::move(next);
  }
  return std::nullopt;
}

std::optional<int> nilpotency_index(const Ring& r, Index x) {
  return detail::element_nilpotency(r.impl(), x);
}

}  // namespace ringlab
