#include "ringlab/constructors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <random>
#include <sstream>

#include "ring_impl.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

namespace {

using detail::RingImpl;

constexpr std::size_t kMaxDigits = 64;
using Digits = std::array<Index, kMaxDigits>;

void decode_uniform(Index x, Index radix, std::size_t len, Digits& out) {
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = x % radix;
    x /= radix;
  }
}

Index encode_uniform(const Index* digits, Index radix, std::size_t len) {
  std::uint64_t x = 0;
  for (std::size_t i = len; i-- > 0;) x = x * radix + digits[i];
  return static_cast<Index>(x);
}

bool is_atomic_zmod(const Ring& r) { return r.kind() == RingKind::zmod; }

// Smallest non-negative integer whose image under Z -> R is `value`, used to
// print coefficients in ring-expression syntax.
std::string integer_literal(const Ring& base, Index value) {
  Index acc = base.zero();
  for (Index k = 0; k <= base.size(); ++k) {
    if (acc == value) return std::to_string(k);
    acc = base.add(acc, base.one());
  }
  return "#" + std::to_string(value);
}

std::string coefficient_text(const Ring& base, Index c) {
  const auto s = base.format(c);
  return is_atomic_zmod(base) ? s : "[" + s + "]";
}

// ---- Z/n --------------------------------------------------------------------

class ZmodImpl final : public RingImpl {
 public:
  explicit ZmodImpl(Index n) : RingImpl(RingKind::zmod, n, RingComponents{ZmodParams{n}}), n_(n) {}

  Index one() const override { return 1 % n_; }
  std::string format(Index i) const override { return std::to_string(i); }
  std::vector<Index> coordinates(Index i) const override { return {i}; }
  Index from_coordinates(std::span<const Index> c) const override {
    if (c.size() != 1 || c[0] >= n_) throw PreconditionError("Zmod coordinates: expected one residue");
    return c[0];
  }
  std::string expression() const override { return "Zmod(" + std::to_string(n_) + ")"; }
  std::optional<bool> structural_commutative() const override { return true; }

 protected:
  Index do_add(Index a, Index b) const override {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Index>(s >= n_ ? s - n_ : s);
  }
  Index do_mul(Index a, Index b) const override {
    return static_cast<Index>((std::uint64_t{a} * b) % n_);
  }
  Index do_neg(Index a) const override { return a == 0 ? 0 : n_ - a; }

 private:
  Index n_;
};

// ---- direct products ---------------------------------------------------------

class ProductImpl final : public RingImpl {
 public:
  ProductImpl(std::vector<Ring> factors, Index size)
      : RingImpl(RingKind::product, size, RingComponents{ProductParams{factors}}),
        factors_(std::move(factors)) {
    std::uint64_t stride = 1;
    for (const auto& f : factors_) {
      strides_.push_back(static_cast<Index>(stride));
      stride *= f.size();
    }
    one_ = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) one_ += factors_[i].one() * strides_[i];
  }

  Index component(Index x, std::size_t i) const { return (x / strides_[i]) % factors_[i].size(); }

  Index one() const override { return one_; }
  std::string format(Index x) const override {
    std::string s = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i != 0) s += ",";
      s += factors_[i].format(component(x, i));
    }
    return s + ")";
  }
  std::vector<Index> coordinates(Index x) const override {
    std::vector<Index> c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) c[i] = component(x, i);
    return c;
  }
  Index from_coordinates(std::span<const Index> c) const override {
    if (c.size() != factors_.size()) throw PreconditionError("product coordinates: wrong arity");
    Index x = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= factors_[i].size()) throw PreconditionError("product coordinates: out of range");
      x += c[i] * strides_[i];
    }
    return x;
  }
  std::string expression() const override {
    std::string s = "prod(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i != 0) s += ",";
      s += factors_[i].expression();
    }
    return s + ")";
  }
  std::optional<bool> structural_commutative() const override {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Ring& f) { return f.commutative(); });
  }

 protected:
  template <class Op>
  Index componentwise(Index a, Index b, Op op) const {
    Index x = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      x += op(factors_[i], component(a, i), component(b, i)) * strides_[i];
    }
    return x;
  }
  Index do_add(Index a, Index b) const override {
    return componentwise(a, b, [](const Ring& f, Index x, Index y) { return f.add(x, y); });
  }
  Index do_mul(Index a, Index b) const override {
    return componentwise(a, b, [](const Ring& f, Index x, Index y) { return f.mul(x, y); });
  }
  Index do_neg(Index a) const override {
    return componentwise(a, 0, [](const Ring& f, Index x, Index) { return f.neg(x); });
  }

 private:
  std::vector<Ring> factors_;
  std::vector<Index> strides_;
  Index one_ = 0;
};

// ---- group rings -----------------------------------------------------------

class GroupRingImpl final : public RingImpl {
 public:
  GroupRingImpl(Ring base, GroupSpec group, Index size)
      : RingImpl(RingKind::group_ring, size, RingComponents{GroupRingParams{{base}, group}}),
        base_(std::move(base)), group_(std::move(group)), order_(group_.order()) {
    // Group law: componentwise addition of exponent vectors.
    law_.resize(std::size_t{order_} * order_);
    std::vector<Index> gx(group_.factors.size()), gy(group_.factors.size());
    for (Index g = 0; g < order_; ++g) {
      exponents(g, gx);
      for (Index h = 0; h < order_; ++h) {
        exponents(h, gy);
        Index z = 0, stride = 1;
        for (std::size_t i = 0; i < gx.size(); ++i) {
          z += ((gx[i] + gy[i]) % group_.factors[i]) * stride;
          stride *= group_.factors[i];
        }
        law_[std::size_t{g} * order_ + h] = z;
      }
    }
  }

  void exponents(Index g, std::vector<Index>& out) const {
    for (std::size_t i = 0; i < group_.factors.size(); ++i) {
      out[i] = g % group_.factors[i];
      g /= group_.factors[i];
    }
  }

  Index one() const override {
    Digits d{};
    d[0] = base_.one();
    return encode_uniform(d.data(), base_.size(), order_);
  }

  std::string group_name(Index g) const {
    static constexpr char kLetters[] = "abcdefghijklmnopqrstuvwxyz";
    std::vector<Index> ex(group_.factors.size());
    exponents(g, ex);
    std::string s;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += kLetters[i % 26];
      if (ex[i] > 1) s += "^" + std::to_string(ex[i]);
    }
    return s.empty() ? "1" : s;
  }

  std::string format(Index x) const override {
    Digits d;
    decode_uniform(x, base_.size(), order_, d);
    std::string s;
    for (Index g = 0; g < order_; ++g) {
      if (d[g] == base_.zero()) continue;
      if (!s.empty()) s += " + ";
      const auto name = group_name(g);
      if (d[g] == base_.one()) {
        s += name;
      } else {
        s += coefficient_text(base_, d[g]);
        if (g != 0) s += "*" + name;
      }
    }
    return s.empty() ? "0" : s;
  }
  std::vector<Index> coordinates(Index x) const override {
    Digits d;
    decode_uniform(x, base_.size(), order_, d);
    return {d.begin(), d.begin() + order_};
  }
  Index from_coordinates(std::span<const Index> c) const override {
    if (c.size() != order_) throw PreconditionError("group-ring coordinates: wrong length");
    for (auto v : c)
      if (v >= base_.size()) throw PreconditionError("group-ring coordinates: out of range");
    return encode_uniform(c.data(), base_.size(), order_);
  }
  std::string expression() const override {
    std::string s = "gring(" + base_.expression() + ",";
    for (std::size_t i = 0; i < group_.factors.size(); ++i) {
      if (i != 0) s += "*";
      s += "C" + std::to_string(group_.factors[i]);
    }
    if (group_.factors.empty()) s += "C1";
    return s + ")";
  }
  std::optional<bool> structural_commutative() const override { return true; }

 protected:
  Index do_add(Index a, Index b) const override {
    Digits x, y;
    decode_uniform(a, base_.size(), order_, x);
    decode_uniform(b, base_.size(), order_, y);
    for (Index g = 0; g < order_; ++g) x[g] = base_.add(x[g], y[g]);
    return encode_uniform(x.data(), base_.size(), order_);
  }
  Index do_mul(Index a, Index b) const override {
    Digits x, y, z;
    decode_uniform(a, base_.size(), order_, x);
    decode_uniform(b, base_.size(), order_, y);
    z.fill(base_.zero());
    for (Index g = 0; g < order_; ++g) {
      if (x[g] == base_.zero()) continue;
      for (Index h = 0; h < order_; ++h) {
        const Index gh = law_[std::size_t{g} * order_ + h];
        z[gh] = base_.add(z[gh], base_.mul(x[g], y[h]));
      }
    }
    return encode_uniform(z.data(), base_.size(), order_);
  }
  Index do_neg(Index a) const override {
    Digits x;
    decode_uniform(a, base_.size(), order_, x);
    for (Index g = 0; g < order_; ++g) x[g] = base_.neg(x[g]);
    return encode_uniform(x.data(), base_.size(), order_);
  }

 private:
  Ring base_;
  GroupSpec group_;
  Index order_;
  std::vector<Index> law_;
};

// ---- matrix rings ----------------------------------------------------------

class MatrixImpl final : public RingImpl {
 public:
  MatrixImpl(Index k, Ring base, Index size)
      : RingImpl(RingKind::matrix, size, RingComponents{MatrixParams{{base}, k}}),
        k_(k), base_(std::move(base)) {}

  std::size_t cells() const { return std::size_t{k_} * k_; }

  Index one() const override {
    Digits d;
    d.fill(base_.zero());
    for (Index i = 0; i < k_; ++i) d[i * k_ + i] = base_.one();
    return encode_uniform(d.data(), base_.size(), cells());
  }
  std::string format(Index x) const override {
    Digits d;
    decode_uniform(x, base_.size(), cells(), d);
    std::string s = "[";
    for (Index i = 0; i < k_; ++i) {
      s += (i == 0 ? "[" : ",[");
      for (Index j = 0; j < k_; ++j) {
        if (j != 0) s += ",";
        s += base_.format(d[i * k_ + j]);
      }
      s += "]";
    }
    return s + "]";
  }
  std::vector<Index> coordinates(Index x) const override {
    Digits d;
    decode_uniform(x, base_.size(), cells(), d);
    return {d.begin(), d.begin() + static_cast<std::ptrdiff_t>(cells())};
  }
  Index from_coordinates(std::span<const Index> c) const override {
    if (c.size() != cells()) throw PreconditionError("matrix coordinates: wrong length");
    for (auto v : c)
      if (v >= base_.size()) throw PreconditionError("matrix coordinates: out of range");
    return encode_uniform(c.data(), base_.size(), cells());
  }
  std::string expression() const override {
    return "M(" + std::to_string(k_) + "," + base_.expression() + ")";
  }
  std::optional<bool> structural_commutative() const override {
    if (k_ == 1) return base_.commutative();
    return base_.size() == 1;
  }

 protected:
  Index do_add(Index a, Index b) const override {
    Digits x, y;
    decode_uniform(a, base_.size(), cells(), x);
    decode_uniform(b, base_.size(), cells(), y);
    for (std::size_t i = 0; i < cells(); ++i) x[i] = base_.add(x[i], y[i]);
    return encode_uniform(x.data(), base_.size(), cells());
  }
  Index do_mul(Index a, Index b) const override {
    Digits x, y, z;
    decode_uniform(a, base_.size(), cells(), x);
    decode_uniform(b, base_.size(), cells(), y);
    for (Index i = 0; i < k_; ++i) {
      for (Index j = 0; j < k_; ++j) {
        Index acc = base_.zero();
        for (Index t = 0; t < k_; ++t) acc = base_.add(acc, base_.mul(x[i * k_ + t], y[t * k_ + j]));
        z[i * k_ + j] = acc;
      }
    }
    return encode_uniform(z.data(), base_.size(), cells());
  }
  Index do_neg(Index a) const override {
    Digits x;
    decode_uniform(a, base_.size(), cells(), x);
    for (std::size_t i = 0; i < cells(); ++i) x[i] = base_.neg(x[i]);
    return encode_uniform(x.data(), base_.size(), cells());
  }

 private:
  Index k_;
  Ring base_;
};

// ---- polynomial quotients --------------------------------------------------

class PolyQuotientImpl final : public RingImpl {
 public:
  PolyQuotientImpl(Ring base, std::vector<Index> modulus, std::optional<Index> series_order,
                   Index size)
      : RingImpl(RingKind::poly_quotient, size,
                 RingComponents{PolyQuotientParams{{base}, modulus, series_order}}),
        base_(std::move(base)), modulus_(std::move(modulus)), series_order_(series_order),
        deg_(modulus_.size() - 1) {}

  Index one() const override {
    Digits d;
    d.fill(base_.zero());
    d[0] = base_.one();
    return encode_uniform(d.data(), base_.size(), deg_);
  }
  std::string format(Index x) const override {
    Digits d;
    decode_uniform(x, base_.size(), deg_, d);
    std::string s;
    for (std::size_t i = 0; i < deg_; ++i) {
      if (d[i] == base_.zero()) continue;
      if (!s.empty()) s += " + ";
      const std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
      if (i == 0) {
        s += coefficient_text(base_, d[i]);
      } else if (d[i] == base_.one()) {
        s += mono;
      } else {
        s += coefficient_text(base_, d[i]) + mono;
      }
    }
    return s.empty() ? "0" : s;
  }
  std::vector<Index> coordinates(Index x) const override {
    Digits d;
    decode_uniform(x, base_.size(), deg_, d);
    return {d.begin(), d.begin() + static_cast<std::ptrdiff_t>(deg_)};
  }
  Index from_coordinates(std::span<const Index> c) const override {
    if (c.size() != deg_) throw PreconditionError("polynomial coordinates: wrong length");
    for (auto v : c)
      if (v >= base_.size()) throw PreconditionError("polynomial coordinates: out of range");
    return encode_uniform(c.data(), base_.size(), deg_);
  }
  std::string expression() const override {
    if (series_order_) {
      return "series(" + base_.expression() + "," + std::to_string(*series_order_) + ")";
    }
    std::string s = "polyq(" + base_.expression() + ",[";
    for (std::size_t i = 0; i < modulus_.size(); ++i) {
      if (i != 0) s += ",";
      s += integer_literal(base_, modulus_[i]);
    }
    return s + "])";
  }
  std::optional<bool> structural_commutative() const override { return true; }

 protected:
  Index do_add(Index a, Index b) const override {
    Digits x, y;
    decode_uniform(a, base_.size(), deg_, x);
    decode_uniform(b, base_.size(), deg_, y);
    for (std::size_t i = 0; i < deg_; ++i) x[i] = base_.add(x[i], y[i]);
    return encode_uniform(x.data(), base_.size(), deg_);
  }
  Index do_mul(Index a, Index b) const override {
    Digits x, y;
    decode_uniform(a, base_.size(), deg_, x);
    decode_uniform(b, base_.size(), deg_, y);
    std::array<Index, 2 * kMaxDigits> z;
    const std::size_t len = 2 * deg_ - 1;
    std::fill(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(len), base_.zero());
    for (std::size_t i = 0; i < deg_; ++i) {
      if (x[i] == base_.zero()) continue;
      for (std::size_t j = 0; j < deg_; ++j) z[i + j] = base_.add(z[i + j], base_.mul(x[i], y[j]));
    }
    // Monic division: eliminate the top coefficients with f.
    for (std::size_t t = len; t-- > deg_;) {
      const Index c = z[t];
      if (c == base_.zero()) continue;
      for (std::size_t j = 0; j < deg_; ++j) {
        const std::size_t pos = t - deg_ + j;
        z[pos] = base_.sub(z[pos], base_.mul(c, modulus_[j]));
      }
      z[t] = base_.zero();
    }
    return encode_uniform(z.data(), base_.size(), deg_);
  }
  Index do_neg(Index a) const override {
    Digits x;
    decode_uniform(a, base_.size(), deg_, x);
    for (std::size_t i = 0; i < deg_; ++i) x[i] = base_.neg(x[i]);
    return encode_uniform(x.data(), base_.size(), deg_);
  }

 private:
  Ring base_;
  std::vector<Index> modulus_;
  std::optional<Index> series_order_;
  std::size_t deg_;
};

// ---- quotients by ideals ----------------------------------------------------

class QuotientImpl final : public RingImpl {
 public:
  QuotientImpl(Ring base, QuotientParams params, std::vector<Index> generators)
      : RingImpl(RingKind::quotient, static_cast<Index>(params.representatives.size()),
                 RingComponents{params}),
        base_(std::move(base)), reps_(std::move(params.representatives)),
        coset_of_(std::move(params.coset_of)), generators_(std::move(generators)) {}

  Index one() const override { return coset_of_[base_.one()]; }
  std::string format(Index x) const override { return base_.format(reps_[x]) + " + I"; }
  std::vector<Index> coordinates(Index x) const override { return {reps_[x]}; }
  Index from_coordinates(std::span<const Index> c) const override {
    if (c.size() != 1 || c[0] >= base_.size()) throw PreconditionError("quotient coordinates");
    return coset_of_[c[0]];
  }
  std::string expression() const override {
    std::string s = "quot(" + base_.expression() + ",[";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i != 0) s += ",";
      s += std::to_string(generators_[i]);
    }
    return s + "])";
  }
  std::optional<bool> structural_commutative() const override {
    if (base_.commutative()) return true;
    return std::nullopt;
  }

 protected:
  Index do_add(Index a, Index b) const override { return coset_of_[base_.add(reps_[a], reps_[b])]; }
  Index do_mul(Index a, Index b) const override { return coset_of_[base_.mul(reps_[a], reps_[b])]; }
  Index do_neg(Index a) const override { return coset_of_[base_.neg(reps_[a])]; }

 private:
  Ring base_;
  std::vector<Index> reps_;
  std::vector<Index> coset_of_;
  std::vector<Index> generators_;
};

// ---- corner rings -----------------------------------------------------------

class CornerImpl final : public RingImpl {
 public:
  CornerImpl(Ring base, Index e, std::vector<Index> members)
      : RingImpl(RingKind::corner, static_cast<Index>(members.size()),
                 RingComponents{CornerParams{{base}, e, members}}),
        base_(std::move(base)), e_(e), members_(std::move(members)),
        position_(base_.size(), -1) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
      position_[members_[i]] = static_cast<std::int64_t>(i);
    }
  }

  Index locate(Index ambient) const { return static_cast<Index>(position_[ambient]); }

  Index zero() const override { return locate(base_.zero()); }
  Index one() const override { return locate(e_); }
  std::string format(Index x) const override { return base_.format(members_[x]); }
  std::vector<Index> coordinates(Index x) const override { return {members_[x]}; }
  Index from_coordinates(std::span<const Index> c) const override {
    if (c.size() != 1 || c[0] >= base_.size() || position_[c[0]] < 0) {
      throw PreconditionError("corner coordinates: not a corner element");
    }
    return locate(c[0]);
  }
  std::string expression() const override {
    return "corner(" + base_.expression() + "," + std::to_string(e_) + ")";
  }
  std::optional<bool> structural_commutative() const override {
    if (base_.commutative()) return true;
    return std::nullopt;
  }

 protected:
  Index do_add(Index a, Index b) const override { return locate(base_.add(members_[a], members_[b])); }
  Index do_mul(Index a, Index b) const override { return locate(base_.mul(members_[a], members_[b])); }
  Index do_neg(Index a) const override { return locate(base_.neg(members_[a])); }

 private:
  Ring base_;
  Index e_;
  std::vector<Index> members_;
  std::vector<std::int64_t> position_;
};

void require_kind(const Ring& r, RingKind kind, const char* what) {
  if (r.kind() != kind) {
    throw PreconditionError(std::string(what) + ": expected a " + std::string(to_string(kind)) +
                            " ring, got " + std::string(to_string(r.kind())));
  }
}

const Ring& sole_base(const std::vector<Ring>& base) { return base.front(); }

void check_digit_count(std::uint64_t digits, const std::string& what) {
  if (digits > kMaxDigits) {
    throw ConstructionError(what + ": more than " + std::to_string(kMaxDigits) + " coordinates");
  }
}

}  // namespace

// ---- public constructors ----------------------------------------------------

MonicPoly MonicPoly::from_integers(const Ring& base, std::span<const std::int64_t> coeffs) {
  MonicPoly f;
  f.coefficients.reserve(coeffs.size());
  for (auto c : coeffs) f.coefficients.push_back(base.from_integer(c));
  return f;
}

MonicPoly MonicPoly::monomial(const Ring& base, Index m) {
  MonicPoly f;
  f.coefficients.assign(std::size_t{m} + 1, base.zero());
  f.coefficients.back() = base.one();
  return f;
}

Ring zmod(std::int64_t n) {
  if (n < 2) throw ConstructionError("Zmod(n) requires n >= 2, got " + std::to_string(n));
  const Index size = detail::checked_size(static_cast<std::uint64_t>(n), "Zmod");
  return detail::make_ring<ZmodImpl>(size);
}

Ring direct_product(std::span<const Ring> factors) {
  if (factors.empty()) throw ConstructionError("prod requires at least one factor");
  std::uint64_t size = 1;
  for (const auto& f : factors) {
    size *= f.size();
    detail::checked_size(size, "prod");
  }
  return detail::make_ring<ProductImpl>(std::vector<Ring>(factors.begin(), factors.end()),
                                        static_cast<Index>(size));
}

Element product_project(const Ring& product, std::size_t i, Element x) {
  require_kind(product, RingKind::product, "product_project");
  const auto& factors = std::get<ProductParams>(product.components().params).factors;
  if (i >= factors.size()) throw PreconditionError("product_project: factor index out of range");
  return factors[i].element(product.coordinates(product.index_of(x))[i]);
}

Element product_pack(const Ring& product, std::span<const Element> components) {
  require_kind(product, RingKind::product, "product_pack");
  const auto& factors = std::get<ProductParams>(product.components().params).factors;
  if (components.size() != factors.size()) throw PreconditionError("product_pack: wrong arity");
  std::vector<Index> coords(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) coords[i] = factors[i].index_of(components[i]);
  return product.element(product.from_coordinates(coords));
}

Ring group_ring(const Ring& base, const GroupSpec& group) {
  for (auto f : group.factors) {
    if (f < 2) throw ConstructionError("group invariant factors must be >= 2");
  }
  if (!base.commutative()) {
    throw UnsupportedError("group rings over a noncommutative base are not supported");
  }
  const Index order = group.order();
  check_digit_count(order, "gring");
  const Index size = detail::checked_power(base.size(), order, "gring");
  return detail::make_ring<GroupRingImpl>(base, group, size);
}

Element augmentation(const Ring& gr, Element x) {
  require_kind(gr, RingKind::group_ring, "augmentation");
  const Ring& base = sole_base(std::get<GroupRingParams>(gr.components().params).base);
  Index acc = base.zero();
  for (Index c : gr.coordinates(gr.index_of(x))) acc = base.add(acc, c);
  return base.element(acc);
}

Element group_element(const Ring& gr, std::span<const Index> exponents) {
  require_kind(gr, RingKind::group_ring, "group_element");
  const auto& params = std::get<GroupRingParams>(gr.components().params);
  const auto& factors = params.group.factors;
  if (exponents.size() != factors.size()) throw PreconditionError("group_element: wrong arity");
  Index g = 0, stride = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    g += (exponents[i] % factors[i]) * stride;
    stride *= factors[i];
  }
  const Ring& base = sole_base(params.base);
  std::vector<Index> coords(params.group.order(), base.zero());
  coords[g] = base.one();
  return gr.element(gr.from_coordinates(coords));
}

Ring matrix_ring(Index k, const Ring& base) {
  if (k < 1) throw ConstructionError("M(k, R) requires k >= 1");
  const std::uint64_t cells = std::uint64_t{k} * k;
  check_digit_count(cells, "M");
  const Index size = detail::checked_power(base.size(), cells, "M");
  return detail::make_ring<MatrixImpl>(k, base, size);
}

Element matrix_unit(const Ring& m, Index i, Index j) {
  require_kind(m, RingKind::matrix, "matrix_unit");
  const auto& params = std::get<MatrixParams>(m.components().params);
  if (i >= params.dim || j >= params.dim) throw PreconditionError("matrix_unit: index out of range");
  const Ring& base = sole_base(params.base);
  std::vector<Index> coords(std::size_t{params.dim} * params.dim, base.zero());
  coords[i * params.dim + j] = base.one();
  return m.element(m.from_coordinates(coords));
}

namespace {

Ring build_poly_quotient(const Ring& base, const MonicPoly& f, std::optional<Index> order) {
  if (f.coefficients.size() < 2) {
    throw ConstructionError("polyq requires a monic polynomial of degree >= 1");
  }
  for (auto c : f.coefficients) {
    if (c >= base.size()) throw ConstructionError("polyq: coefficient outside the base ring");
  }
  if (f.coefficients.back() != base.one()) {
    throw ConstructionError("polyq requires a monic polynomial (leading coefficient 1)");
  }
  if (!base.commutative()) {
    throw UnsupportedError("polynomial quotients over a noncommutative base are not supported");
  }
  const std::uint64_t deg = f.coefficients.size() - 1;
  check_digit_count(deg, "polyq");
  const Index size = detail::checked_power(base.size(), deg, "polyq");
  return detail::make_ring<PolyQuotientImpl>(base, f.coefficients, order, size);
}

}  // namespace

Ring poly_quotient(const Ring& base, const MonicPoly& f) {
  return build_poly_quotient(base, f, std::nullopt);
}

Ring truncated_series(const Ring& base, Index m) {
  if (m < 1) throw ConstructionError("series(R, m) requires m >= 1");
  return build_poly_quotient(base, MonicPoly::monomial(base, m), m);
}

Element poly_constant(const Ring& p, Element r) {
  require_kind(p, RingKind::poly_quotient, "poly_constant");
  const auto& params = std::get<PolyQuotientParams>(p.components().params);
  const Ring& base = sole_base(params.base);
  std::vector<Index> coords(params.degree(), base.zero());
  coords[0] = base.index_of(r);
  return p.element(p.from_coordinates(coords));
}

Element poly_constant_term(const Ring& p, Element f) {
  require_kind(p, RingKind::poly_quotient, "poly_constant_term");
  const Ring& base = sole_base(std::get<PolyQuotientParams>(p.components().params).base);
  return base.element(p.coordinates(p.index_of(f))[0]);
}

Element poly_variable(const Ring& p) {
  require_kind(p, RingKind::poly_quotient, "poly_variable");
  const auto& params = std::get<PolyQuotientParams>(p.components().params);
  const Ring& base = sole_base(params.base);
  std::vector<Index> coords(params.degree(), base.zero());
  if (params.degree() >= 2) {
    coords[1] = base.one();
  } else {
    // deg f = 1: x = -f_0 modulo f.
    coords[0] = base.neg(params.modulus[0]);
  }
  return p.element(p.from_coordinates(coords));
}

Element RingHom::operator()(Element x) const {
  return target.element(map[source.index_of(x)]);
}

QuotientRing quotient_ring(const Ring& base, const ElementSet& ideal) {
  if (ideal.ring_id() != base.id()) throw RingMismatchError("ideal belongs to a different ring");
  if (!is_two_sided_ideal(base, ideal)) {
    throw ConstructionError("quot: the given set is not a two-sided ideal");
  }
  const auto members = ideal.to_vector();
  QuotientParams params;
  params.base = {base};
  params.ideal_size = static_cast<Index>(members.size());
  params.coset_of.assign(base.size(), std::numeric_limits<Index>::max());
  for (Index r = 0; r < base.size(); ++r) {
    if (params.coset_of[r] != std::numeric_limits<Index>::max()) continue;
    const auto q = static_cast<Index>(params.representatives.size());
    params.representatives.push_back(r);  // first hit in index order is the minimum
    for (Index i : members) params.coset_of[base.add(r, i)] = q;
  }
  std::vector<Index> generators;
  for (Index i : members) {
    if (i != base.zero()) generators.push_back(i);
  }
  auto coset_of = params.coset_of;
  Ring q = detail::make_ring<QuotientImpl>(base, std::move(params), std::move(generators));
  return QuotientRing{q, RingHom{base, q, std::move(coset_of)}};
}

HomCheck verify_homomorphism(const RingHom& hom, std::uint64_t samples, std::uint64_t seed) {
  const Ring& s = hom.source;
  const Ring& t = hom.target;
  HomCheck check;
  check.exhaustive = s.size() <= 256;
  auto test_pair = [&](Index x, Index y) {
    ++check.pairs_checked;
    if (hom.map[s.add(x, y)] != t.add(hom.map[x], hom.map[y])) check.additive = false;
    if (hom.map[s.mul(x, y)] != t.mul(hom.map[x], hom.map[y])) check.multiplicative = false;
  };
  if (check.exhaustive) {
    for (Index x = 0; x < s.size(); ++x)
      for (Index y = 0; y < s.size(); ++y) test_pair(x, y);
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      test_pair(static_cast<Index>(rng() % s.size()), static_cast<Index>(rng() % s.size()));
    }
  }
  check.unital = hom.map[s.one()] == t.one();
  ElementSet image = t.empty_set();
  for (Index v : hom.map) image.insert(v);
  check.surjective = image.is_full();
  return check;
}

CornerRing corner_ring(const Ring& r, Element e) {
  const Index idem = r.index_of(e);
  if (r.mul(idem, idem) != idem) throw PreconditionError("corner_ring: e is not idempotent");
  ElementSet members = r.empty_set();
  for (Index x = 0; x < r.size(); ++x) members.insert(r.mul(r.mul(idem, x), idem));
  Ring corner = detail::make_ring<CornerImpl>(r, idem, members.to_vector());
  return CornerRing{corner, r, idem};
}

Element CornerRing::embed(Element local) const {
  return ambient.element(ring.coordinates(ring.index_of(local))[0]);
}

bool CornerRing::contains(Element x) const {
  const Index a = ambient.index_of(x);
  return ambient.mul(ambient.mul(idempotent, a), idempotent) == a;
}

Element CornerRing::restrict(Element x) const {
  if (!contains(x)) throw PreconditionError("element does not lie in the corner eRe");
  const Index a = ambient.index_of(x);
  return ring.element(ring.from_coordinates(std::span<const Index>(&a, 1)));
}

}  // namespace ringlab
