#include "metacover/padic.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "metacover/error.hpp"

namespace metacover::padic {

namespace {

// Irreducible modulus of degree f over F_2, lifted to Z; g_0..g_(f-1).
std::vector<std::int64_t> unramified_modulus_for(int f) {
  switch (f) {
    case 1: return {0};
    case 2: return {1, 1};
    case 3: return {1, 1, 0};
    case 4: return {1, 1, 0, 0};
    case 5: return {1, 0, 1, 0, 0};
    case 6: return {1, 1, 0, 0, 0, 0};
  }
  fail(ErrorKind::InvalidArgument, "unsupported residue degree");
}

std::uint64_t low_mask(int bits) {
  if (bits <= 0) return 0;
  if (bits >= 64) return ~std::uint64_t{0};
  return (std::uint64_t{1} << bits) - 1;
}

int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

std::uint64_t odd_inverse(std::uint64_t w) {
  std::uint64_t x = w;  // correct to 3 bits for odd w
  for (int i = 0; i < 6; ++i) x *= 2 - w * x;
  return x;
}

std::string poly_string(const std::vector<std::int64_t>& low, int degree) {
  std::ostringstream os;
  os << "x^" << degree;
  for (int k = degree - 1; k >= 0; --k) {
    std::int64_t c = low[k];
    if (c == 0) continue;
    os << (c < 0 ? " - " : " + ");
    std::int64_t a = c < 0 ? -c : c;
    if (k == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace

struct FieldSpec::Data {
  int e = 1;
  int f = 1;
  std::vector<std::int64_t> eis;
  std::vector<std::int64_t> g;
  int high_prec = 0;
  Integer two_over_pi;
  std::vector<bool> square_bits;
  std::vector<std::uint64_t> squares;
};

FieldSpec FieldSpec::make(int e, int f, std::vector<std::int64_t> eisenstein) {
  require(e >= 1 && f >= 1, "e and f must be positive");
  if (e * f > kMaxDegree)
    fail(ErrorKind::Unsupported, "field degree ef exceeds the supported limit of 6");
  if (eisenstein.empty()) {
    eisenstein.assign(e, 0);
    eisenstein[0] = -2;
  }
  if (static_cast<int>(eisenstein.size()) == e + 1) {
    require(eisenstein.back() == 1, "Eisenstein polynomial must be monic");
    eisenstein.pop_back();
  }
  require(static_cast<int>(eisenstein.size()) == e,
          "Eisenstein polynomial needs e coefficients c0..c(e-1)");
  for (int k = 0; k < e; ++k)
    require(eisenstein[k] % 2 == 0, "Eisenstein coefficients must be even");
  require(eisenstein[0] % 4 != 0, "Eisenstein constant term must have 2-adic valuation 1");

  auto d = std::make_shared<Data>();
  d->e = e;
  d->f = f;
  d->eis = std::move(eisenstein);
  d->g = unramified_modulus_for(f);
  d->high_prec = 56 * e;

  FieldSpec spec;
  spec.d_ = d;

  // 2/pi = -w^{-1} (pi^(e-1) + sum_{k>=1} c_k pi^(k-1)) where c_0 = 2w.
  std::uint64_t w = static_cast<std::uint64_t>(d->eis[0] / 2);
  std::uint64_t minus_winv = ~odd_inverse(w) + 1;
  Integer t;
  t.prec = d->high_prec;
  for (int k = 1; k < e; ++k) t.c[(k - 1) * f] = static_cast<std::uint64_t>(d->eis[k]) * minus_winv;
  t.c[(e - 1) * f] += minus_winv;
  d->two_over_pi = spec.reduce(t, d->high_prec);

  const int n = spec.precision();
  const int sq_digits = 2 * e + 1;
  d->square_bits.assign(spec.residue_count(sq_digits), false);
  const std::uint64_t count = spec.residue_count(e + 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    Integer v = spec.from_residue_index(i, e + 1, n);
    if (!spec.is_unit(v)) continue;
    std::uint64_t idx = spec.residue_index(spec.mul(v, v), sq_digits);
    if (!d->square_bits[idx]) {
      d->square_bits[idx] = true;
      d->squares.push_back(idx);
    }
  }
  std::sort(d->squares.begin(), d->squares.end());
  return spec;
}

int FieldSpec::e() const { return d_->e; }
int FieldSpec::f() const { return d_->f; }
const std::vector<std::int64_t>& FieldSpec::eisenstein() const { return d_->eis; }
const std::vector<std::int64_t>& FieldSpec::unramified_modulus() const { return d_->g; }

bool FieldSpec::operator==(const FieldSpec& o) const {
  return d_->e == o.d_->e && d_->f == o.d_->f && d_->eis == o.d_->eis;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "e=" << e() << " f=" << f() << " eisenstein " << poly_string(d_->eis, e());
  if (f() > 1) os << " over F_2[x]/(" << poly_string(d_->g, f()) << ")";
  return os.str();
}

Integer FieldSpec::reduce(const Integer& a, int prec) const {
  Integer r = a;
  r.prec = std::min(prec, a.prec);
  const int e = d_->e, f = d_->f;
  for (int k = 0; k < e; ++k) {
    std::uint64_t m = low_mask(ceil_div(r.prec - k, e));
    for (int j = 0; j < f; ++j) r.c[k * f + j] &= m;
  }
  for (int i = e * f; i < kMaxDegree; ++i) r.c[i] = 0;
  return r;
}

Integer FieldSpec::zero(int prec) const {
  Integer r;
  r.prec = prec;
  return r;
}

Integer FieldSpec::from_int(std::int64_t v, int prec) const {
  Integer r;
  r.prec = prec;
  r.c[0] = static_cast<std::uint64_t>(v);
  return reduce(r, prec);
}

Integer FieldSpec::uniformizer(int prec) const {
  if (d_->e == 1) return from_int(-d_->eis[0], prec);
  Integer r;
  r.prec = prec;
  r.c[d_->f] = 1;
  return reduce(r, prec);
}

Integer FieldSpec::pi_power(int k, int prec) const {
  Integer r = from_int(1, prec);
  Integer p = uniformizer(prec);
  for (int i = 0; i < k; ++i) r = mul(r, p);
  return r;
}

Integer FieldSpec::residue_lift(std::uint32_t bits, int prec) const {
  Integer r;
  r.prec = prec;
  for (int j = 0; j < d_->f; ++j) r.c[j] = (bits >> j) & 1u;
  return reduce(r, prec);
}

Integer FieldSpec::add(const Integer& a, const Integer& b) const {
  Integer r;
  r.prec = std::min(a.prec, b.prec);
  for (int i = 0; i < kMaxDegree; ++i) r.c[i] = a.c[i] + b.c[i];
  return reduce(r, r.prec);
}

Integer FieldSpec::sub(const Integer& a, const Integer& b) const {
  Integer r;
  r.prec = std::min(a.prec, b.prec);
  for (int i = 0; i < kMaxDegree; ++i) r.c[i] = a.c[i] - b.c[i];
  return reduce(r, r.prec);
}

Integer FieldSpec::neg(const Integer& a) const {
  Integer r;
  r.prec = a.prec;
  for (int i = 0; i < kMaxDegree; ++i) r.c[i] = std::uint64_t{0} - a.c[i];
  return reduce(r, r.prec);
}

Integer FieldSpec::mul(const Integer& a, const Integer& b) const {
  const int e = d_->e, f = d_->f;
  // t[k][j]: coefficient of x^j y^k before reduction.
  std::uint64_t t[2 * kMaxDegree][2 * kMaxDegree] = {};
  for (int k1 = 0; k1 < e; ++k1)
    for (int j1 = 0; j1 < f; ++j1) {
      std::uint64_t av = a.c[k1 * f + j1];
      if (av == 0) continue;
      for (int k2 = 0; k2 < e; ++k2)
        for (int j2 = 0; j2 < f; ++j2) t[k1 + k2][j1 + j2] += av * b.c[k2 * f + j2];
    }
  const auto& g = d_->g;
  for (int k = 0; k <= 2 * e - 2; ++k)
    for (int j = 2 * f - 2; j >= f; --j) {
      std::uint64_t v = t[k][j];
      if (v == 0) continue;
      t[k][j] = 0;
      for (int i = 0; i < f; ++i) t[k][j - f + i] -= v * static_cast<std::uint64_t>(g[i]);
    }
  const auto& eis = d_->eis;
  for (int k = 2 * e - 2; k >= e; --k)
    for (int j = 0; j < f; ++j) {
      std::uint64_t v = t[k][j];
      if (v == 0) continue;
      t[k][j] = 0;
      for (int i = 0; i < e; ++i) t[k - e + i][j] -= v * static_cast<std::uint64_t>(eis[i]);
    }
  Integer r;
  r.prec = std::min(a.prec, b.prec);
  for (int k = 0; k < e; ++k)
    for (int j = 0; j < f; ++j) r.c[k * f + j] = t[k][j];
  return reduce(r, r.prec);
}

std::optional<int> FieldSpec::valuation(const Integer& a) const {
  const int e = d_->e, f = d_->f;
  int best = a.prec;
  for (int k = 0; k < e; ++k)
    for (int j = 0; j < f; ++j) {
      std::uint64_t v = a.c[k * f + j];
      if (v == 0) continue;
      best = std::min(best, e * std::countr_zero(v) + k);
    }
  if (best >= a.prec) return std::nullopt;
  return best;
}

bool FieldSpec::is_unit(const Integer& a) const {
  if (a.prec < 1) fail(ErrorKind::Precision, "element known to no digits");
  return residue_bits(a) != 0;
}

std::uint32_t FieldSpec::residue_bits(const Integer& a) const {
  std::uint32_t bits = 0;
  for (int j = 0; j < d_->f; ++j) bits |= static_cast<std::uint32_t>(a.c[j] & 1u) << j;
  return bits;
}

Integer FieldSpec::divide_by_pi(const Integer& a) const {
  if (auto v = valuation(a); v && *v == 0)
    fail(ErrorKind::InvalidArgument, "division by the uniformizer of a unit");
  const int e = d_->e, f = d_->f;
  Integer half;
  half.prec = a.prec;
  for (int j = 0; j < f; ++j) half.c[j] = a.c[j] >> 1;
  Integer r = mul(half, d_->two_over_pi);
  for (int k = 0; k + 1 < e; ++k)
    for (int j = 0; j < f; ++j) r.c[k * f + j] += a.c[(k + 1) * f + j];
  r.prec = a.prec;
  return reduce(r, a.prec - 1);
}

Integer FieldSpec::unit_inverse(const Integer& a) const {
  if (!is_unit(a)) fail(ErrorKind::InvalidArgument, "inverse of a non-unit");
  const std::uint32_t q = 1u << d_->f;
  Integer r;
  bool found = false;
  for (std::uint32_t t = 1; t < q && !found; ++t) {
    Integer cand = residue_lift(t, a.prec);
    if (residue_bits(mul(a, cand)) == 1u) {
      r = cand;
      found = true;
    }
  }
  if (!found) fail(ErrorKind::Internal, "residue field inverse not found");
  Integer two = from_int(2, a.prec);
  for (int cur = 1; cur < a.prec; cur *= 2) r = mul(r, sub(two, mul(a, r)));
  return r;
}

std::uint64_t FieldSpec::residue_count(int digits) const {
  int bits = d_->f * digits;
  if (bits >= 63) fail(ErrorKind::Unsupported, "residue enumeration too large");
  return std::uint64_t{1} << bits;
}

std::uint64_t FieldSpec::residue_index(const Integer& a, int digits) const {
  if (a.prec < digits) fail(ErrorKind::Precision, "element not known to the requested digits");
  const int e = d_->e, f = d_->f;
  Integer r = reduce(a, digits);
  std::uint64_t idx = 0;
  int shift = 0;
  for (int k = 0; k < e; ++k) {
    int nb = ceil_div(digits - k, e);
    for (int j = 0; j < f; ++j) {
      idx |= r.c[k * f + j] << shift;
      shift += nb;
    }
  }
  return idx;
}

Integer FieldSpec::from_residue_index(std::uint64_t index, int digits, int prec) const {
  const int e = d_->e, f = d_->f;
  Integer r;
  r.prec = prec;
  int shift = 0;
  for (int k = 0; k < e; ++k) {
    int nb = ceil_div(digits - k, e);
    for (int j = 0; j < f; ++j) {
      r.c[k * f + j] = (index >> shift) & low_mask(nb);
      shift += nb;
    }
  }
  return reduce(r, prec);
}

Integer FieldSpec::from_digits(const std::vector<std::vector<std::int64_t>>& digits, int prec) const {
  Integer r = zero(prec);
  Integer p = from_int(1, prec);
  Integer pi = uniformizer(prec);
  for (const auto& d : digits) {
    require(static_cast<int>(d.size()) <= d_->f, "digit has more than f coordinates");
    Integer dig;
    dig.prec = prec;
    for (std::size_t j = 0; j < d.size(); ++j) dig.c[j] = static_cast<std::uint64_t>(d[j]);
    r = add(r, mul(reduce(dig, prec), p));
    p = mul(p, pi);
  }
  return r;
}

std::vector<std::vector<int>> FieldSpec::to_digits(const Integer& a) const {
  std::vector<std::vector<int>> out;
  Integer cur = a;
  const int total = a.prec;
  for (int i = 0; i < total; ++i) {
    std::uint32_t bits = residue_bits(cur);
    std::vector<int> dig(d_->f);
    for (int j = 0; j < d_->f; ++j) dig[j] = (bits >> j) & 1u;
    out.push_back(dig);
    if (i + 1 == total) break;
    cur = divide_by_pi(sub(cur, residue_lift(bits, cur.prec)));
  }
  return out;
}

bool FieldSpec::is_unit_square_residue(std::uint64_t index) const {
  return d_->square_bits[index];
}

const std::vector<std::uint64_t>& FieldSpec::unit_square_residues() const { return d_->squares; }

Element Element::zero(const FieldSpec& field) {
  Element x;
  x.field_ = field;
  return x;
}

Element Element::from_int(const FieldSpec& field, std::int64_t v) {
  return from_integer(field, field.from_int(v, field.precision() + 64 * field.e()));
}

Element Element::from_integer(const FieldSpec& field, const Integer& a) {
  Element x;
  x.field_ = field;
  auto v = field.valuation(a);
  if (!v) return x;
  Integer u = a;
  for (int i = 0; i < *v; ++i) u = field.divide_by_pi(u);
  x.zero_ = false;
  x.valuation_ = *v;
  x.unit_ = field.reduce(u, std::min(u.prec, field.precision()));
  return x;
}

Element Element::from_unit(const FieldSpec& field, int valuation, const Integer& unit) {
  if (!field.is_unit(unit)) fail(ErrorKind::InvalidArgument, "unit part is not a unit");
  Element x;
  x.field_ = field;
  x.zero_ = false;
  x.valuation_ = valuation;
  x.unit_ = unit;
  return x;
}

int Element::valuation() const {
  if (zero_) fail(ErrorKind::InvalidArgument, "valuation of zero");
  return valuation_;
}

Element Element::operator*(const Element& o) const {
  if (zero_ || o.zero_) return zero(field_);
  return from_unit(field_, valuation_ + o.valuation_, field_.mul(unit_, o.unit_));
}

Element Element::operator-() const {
  if (zero_) return *this;
  return from_unit(field_, valuation_, field_.neg(unit_));
}

Element Element::inverse() const {
  if (zero_) fail(ErrorKind::InvalidArgument, "inverse of zero");
  return from_unit(field_, -valuation_, field_.unit_inverse(unit_));
}

Integer Element::to_integer() const {
  if (zero_) return field_.zero(field_.precision());
  if (valuation_ < 0) fail(ErrorKind::InvalidArgument, "element is not integral");
  int prec = unit_.prec + valuation_;
  return field_.mul(field_.pi_power(valuation_, prec), unit_);
}

bool is_square(const Element& x) {
  if (x.is_zero()) fail(ErrorKind::InvalidArgument, "square test of zero");
  if (x.valuation() % 2 != 0) return false;
  const auto& F = x.field();
  const int digits = 2 * F.e() + 1;
  return F.is_unit_square_residue(F.residue_index(x.unit(), digits));
}

std::optional<Integer> lift_square_root(const FieldSpec& F, const Integer& u, int target) {
  const int e = F.e();
  if (target > u.prec) fail(ErrorKind::Precision, "target precision exceeds the input");
  auto congruent = [&](const Integer& a, const Integer& b, int digits) {
    auto v = F.valuation(F.sub(a, b));
    return !v || *v >= digits;
  };
  std::optional<Integer> root;
  const std::uint64_t start = F.residue_count(e + 1);
  for (std::uint64_t i = 0; i < start && !root; ++i) {
    Integer v = F.from_residue_index(i, e + 1, u.prec);
    if (F.is_unit(v) && congruent(F.mul(v, v), u, 2 * e + 1)) root = v;
  }
  if (!root) return std::nullopt;
  Integer v = *root;
  const std::uint32_t q = 1u << F.f();
  for (int m = e + 1; m + e < target; ++m) {
    Integer step = F.pi_power(m, u.prec);
    bool lifted = false;
    for (std::uint32_t d = 0; d < q && !lifted; ++d) {
      Integer cand = F.add(v, F.mul(step, F.residue_lift(d, u.prec)));
      if (congruent(F.mul(cand, cand), u, m + e + 1)) {
        v = cand;
        lifted = true;
      }
    }
    if (!lifted) return std::nullopt;
  }
  if (!congruent(F.mul(v, v), u, target)) return std::nullopt;
  return v;
}

ClassSubgroup::ClassSubgroup(const FieldSpec& field)
    : field_(field), digits_(2 * field.e() + 1), residues_(field.residue_count(2 * field.e() + 1)) {
  const std::uint64_t q = static_cast<std::uint64_t>(field.residue_size());
  universe_ = 2 * (residues_ / q) * (q - 1);
  coords_.assign(2 * residues_, 0xffff);
  for (std::uint64_t s : field.unit_square_residues()) {
    coords_[s] = 0;
    members_.push_back(s);
  }
}

std::uint64_t ClassSubgroup::key(const Element& x) const {
  if (x.is_zero()) fail(ErrorKind::InvalidArgument, "zero has no square class");
  std::uint64_t parity = static_cast<std::uint64_t>(x.valuation() & 1);
  return parity * residues_ + field_.residue_index(x.unit(), digits_);
}

bool ClassSubgroup::contains_key(std::uint64_t key) const { return coords_[key] != 0xffff; }

std::optional<f2::Vec> ClassSubgroup::coordinates(std::uint64_t key) const {
  if (!contains_key(key)) return std::nullopt;
  return coords_[key];
}

bool ClassSubgroup::insert(const Element& x) {
  const std::uint64_t k = key(x);
  if (contains_key(k)) return false;
  const std::uint64_t parity = k / residues_;
  const Integer g = field_.from_residue_index(k % residues_, digits_, digits_);
  const std::uint16_t bit = static_cast<std::uint16_t>(1u << generators_);
  const std::size_t old = members_.size();
  for (std::size_t i = 0; i < old; ++i) {
    const std::uint64_t m = members_[i];
    Integer u = field_.from_residue_index(m % residues_, digits_, digits_);
    std::uint64_t idx = field_.residue_index(field_.mul(u, g), digits_);
    std::uint64_t nk = ((m / residues_) ^ parity) * residues_ + idx;
    coords_[nk] = static_cast<std::uint16_t>(coords_[m] ^ bit);
    members_.push_back(nk);
  }
  ++generators_;
  return true;
}

namespace {

Element parity_normalized(const Element& a) {
  return Element::from_unit(a.field(), a.valuation() & 1, a.unit());
}

}  // namespace

ClassSubgroup norm_subgroup(const Element& a_in) {
  if (a_in.is_zero()) fail(ErrorKind::InvalidArgument, "norm group of zero");
  const Element a = parity_normalized(a_in);
  if (is_square(a)) fail(ErrorKind::InvalidArgument, "norm group requested for a square");
  const FieldSpec& F = a.field();
  const int e = F.e();
  const int n = F.precision();
  ClassSubgroup sub(F);
  const std::uint64_t target = sub.universe_size() / 2;
  const Integer ai = a.to_integer();
  const int digits = 3 * e + 1;
  const std::uint64_t count = F.residue_count(digits);
  for (std::uint64_t yi = 1; yi < count; ++yi) {
    Integer y = F.from_residue_index(yi, digits, n);
    const bool y_unit = F.is_unit(y);
    Integer ay2 = F.mul(ai, F.mul(y, y));
    for (std::uint64_t xi = 0; xi < count; ++xi) {
      Integer x = F.from_residue_index(xi, digits, n);
      if (!y_unit && !F.is_unit(x)) continue;
      Integer v = F.sub(F.mul(x, x), ay2);
      auto val = F.valuation(v);
      if (!val || *val > 2 * e + 1) continue;
      sub.insert(Element::from_integer(F, v));
      if (sub.size() == target) return sub;
    }
  }
  fail(ErrorKind::Internal, "norm classes did not fill an index-2 subgroup");
}

int hilbert(const Element& a_in, const Element& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) fail(ErrorKind::InvalidArgument, "Hilbert symbol of zero");
  const Element a = parity_normalized(a_in);
  if (is_square(a)) return 1;
  return norm_subgroup(a).contains(b_in) ? 1 : -1;
}

int hilbert_conic(const Element& a_in, const Element& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) fail(ErrorKind::InvalidArgument, "Hilbert symbol of zero");
  const FieldSpec& F = a_in.field();
  Element a = parity_normalized(a_in);
  Element b = parity_normalized(b_in);
  if (a.valuation() == 1 && b.valuation() == 1)
    b = Element::from_unit(F, 0, F.neg(F.mul(a.unit(), b.unit())));
  const int digits = 2 * F.e() + 1;
  const int n = F.precision();
  const std::uint64_t count = F.residue_count(digits);
  const Integer A = a.to_integer();
  const Integer B = b.to_integer();
  const Integer one = F.from_int(1, n);

  auto scaled_squares = [&](const Integer& coef) {
    std::vector<bool> hit(count, false);
    for (std::uint64_t i = 0; i < count; ++i) {
      Integer t = F.from_residue_index(i, digits, n);
      hit[F.residue_index(F.mul(coef, F.mul(t, t)), digits)] = true;
    }
    return hit;
  };

  // z = 1:  a x^2 + b y^2 = 1.
  {
    auto by2 = scaled_squares(B);
    for (std::uint64_t i = 0; i < count; ++i) {
      Integer x = F.from_residue_index(i, digits, n);
      if (by2[F.residue_index(F.sub(one, F.mul(A, F.mul(x, x))), digits)]) return 1;
    }
  }
  auto z2 = scaled_squares(one);
  // x = 1 (a a unit):  z^2 = a + b y^2.
  if (a.valuation() == 0) {
    for (std::uint64_t i = 0; i < count; ++i) {
      Integer y = F.from_residue_index(i, digits, n);
      if (z2[F.residue_index(F.add(A, F.mul(B, F.mul(y, y))), digits)]) return 1;
    }
  }
  // y = 1 (b a unit):  z^2 = b + a x^2.
  if (b.valuation() == 0) {
    for (std::uint64_t i = 0; i < count; ++i) {
      Integer x = F.from_residue_index(i, digits, n);
      if (z2[F.residue_index(F.add(B, F.mul(A, F.mul(x, x))), digits)]) return 1;
    }
  }
  return -1;
}

SquareClassSpace SquareClassSpace::build(const FieldSpec& F) {
  SquareClassSpace s;
  s.field_ = F;
  const int e = F.e(), f = F.f();
  const int n = F.precision();
  auto table = std::make_shared<ClassSubgroup>(F);

  auto consider = [&](const Element& x, const std::string& label) {
    if (table->insert(x)) {
      s.basis_.push_back(x);
      s.labels_.push_back(label);
    }
  };
  consider(Element::from_unit(F, 1, F.from_int(1, n)), "pi");
  consider(Element::from_int(F, -1), "-1");
  auto one_plus = [&](int k, int j) {
    Integer t = F.add(F.from_int(1, n), F.mul(F.pi_power(k, n), F.residue_lift(1u << j, n)));
    std::string label;
    if (e == 1 && j == 0) {
      label = std::to_string(1 + (std::int64_t{1} << k));
    } else {
      label = "1+pi";
      if (k > 1) label += "^" + std::to_string(k);
      if (j > 0) label += "*x" + (j > 1 ? "^" + std::to_string(j) : std::string());
    }
    consider(Element::from_integer(F, t), label);
  };
  for (int j = 0; j < f; ++j) one_plus(2 * e, j);
  for (int k = 1; k < 2 * e; ++k)
    for (int j = 0; j < f; ++j) one_plus(k, j);

  if (s.dimension() != e * f + 2 || table->size() != table->universe_size())
    fail(ErrorKind::Internal, "square class basis does not have dimension ef+2");
  s.table_ = table;

  const int dim = s.dimension();
  s.gram_.assign(dim, 0);
  for (int i = 0; i < dim; ++i) {
    ClassSubgroup norms = norm_subgroup(s.basis_[i]);
    for (int j = 0; j < dim; ++j)
      if (!norms.contains(s.basis_[j])) s.gram_[i] |= f2::Vec{1} << j;
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (((s.gram_[i] >> j) & 1u) != ((s.gram_[j] >> i) & 1u))
        fail(ErrorKind::Internal, "Hilbert symbol Gram matrix is not symmetric");
  return s;
}

f2::Vec SquareClassSpace::unit_mask() const {
  return ((f2::Vec{1} << dimension()) - 1) & ~f2::Vec{1};
}

f2::Vec SquareClassSpace::coords(const Element& x) const {
  auto c = table_->coordinates(table_->key(x));
  if (!c) fail(ErrorKind::Internal, "square class outside the computed basis");
  return *c;
}

Element SquareClassSpace::representative(f2::Vec v) const {
  Element r = Element::from_int(field_, 1);
  for (int i = 0; i < dimension(); ++i)
    if ((v >> i) & 1u) r = r * basis_[i];
  return r;
}

int SquareClassSpace::symbol(f2::Vec a, f2::Vec b) const {
  return f2::form(gram_, a, b) ? -1 : 1;
}

bool RadicalReport::ok() const {
  return radical != 0 && annihilates_units && u2e_classes_are_radical &&
         unit_form_radical_order == 2 && u2e_square_count * 2 == u2e_residue_count &&
         odd_pairing && hensel_lifts;
}

RadicalReport integral_radical(const SquareClassSpace& space) {
  const FieldSpec& F = space.field();
  const int e = F.e(), f = F.f(), n = F.precision();
  const std::uint32_t q = 1u << f;
  RadicalReport rep;

  std::set<f2::Vec> classes;
  for (std::uint32_t t = 0; t < q; ++t) {
    Integer u = F.add(F.from_int(1, n), F.mul(F.pi_power(2 * e, n), F.residue_lift(t, n)));
    Element x = Element::from_integer(F, u);
    f2::Vec c = space.coords(x);
    classes.insert(c);
    ++rep.u2e_residue_count;
    if (c == 0) {
      ++rep.u2e_square_count;
    } else if (rep.radical == 0) {
      rep.radical = c;
      rep.generator = x;
      rep.generator_label = "1+pi^" + std::to_string(2 * e);
      if (t != 1) rep.generator_label += "*r" + std::to_string(t);
      if (e == 1 && t == 1) rep.generator_label = std::to_string(1 + (1 << (2 * e)));
    }
  }
  if (rep.radical == 0) return rep;

  const f2::Vec units = space.unit_mask();
  rep.annihilates_units = true;
  for (int i = 1; i < space.dimension(); ++i)
    if (space.symbol(rep.radical, f2::Vec{1} << i) != 1) rep.annihilates_units = false;

  std::vector<f2::Vec> unit_rows;
  for (int i = 1; i < space.dimension(); ++i) unit_rows.push_back(space.gram()[i] & units);
  int order = 0;
  for (f2::Vec c = 0; c <= units; c += 2) {
    bool in_radical = true;
    for (f2::Vec row : unit_rows)
      if (f2::dot(row, c)) in_radical = false;
    if (in_radical) ++order;
  }
  rep.unit_form_radical_order = order;
  rep.index_in_units = (std::uint64_t{1} << (e * f + 1)) / static_cast<std::uint64_t>(order);
  rep.u2e_classes_are_radical = classes == std::set<f2::Vec>{0, rep.radical} && order == 2;

  rep.odd_pairing = true;
  const Element pi = space.basis()[0];
  const Element pi3 = pi * pi * pi;
  std::vector<Element> units_to_try{Element::from_int(F, 1)};
  for (int i = 1; i < space.dimension(); ++i) units_to_try.push_back(space.basis()[i]);
  const ClassSubgroup norms = norm_subgroup(rep.generator);
  for (const auto& a : units_to_try) {
    if (norms.contains(a * pi) || norms.contains(a * pi3)) rep.odd_pairing = false;
  }

  rep.hensel_lifts = true;
  for (std::uint32_t t = 0; t < q; ++t) {
    Integer u = F.add(F.from_int(1, n), F.mul(F.pi_power(2 * e + 1, n), F.residue_lift(t, n)));
    if (!lift_square_root(F, u, n)) rep.hensel_lifts = false;
  }
  return rep;
}

namespace {

f2::Vec radical_class(const SquareClassSpace& space) {
  const FieldSpec& F = space.field();
  const int n = F.precision();
  for (std::uint32_t t = 1; t < static_cast<std::uint32_t>(F.residue_size()); ++t) {
    Integer u = F.add(F.from_int(1, n), F.mul(F.pi_power(2 * F.e(), n), F.residue_lift(t, n)));
    f2::Vec c = space.coords(Element::from_integer(F, u));
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace

f2::Vec UnitDecomposition::reduce(f2::Vec unit_class) const {
  std::vector<f2::Vec> gens = basis;
  gens.push_back(radical);
  auto sol = f2::solve(gens, unit_class);
  if (!sol) fail(ErrorKind::InvalidArgument, "class is not a unit class");
  return *sol & ((f2::Vec{1} << basis.size()) - 1);
}

UnitDecomposition decompose_units(const SquareClassSpace& space) {
  UnitDecomposition dec;
  const f2::Vec radical = radical_class(space);
  if (radical == 0) fail(ErrorKind::Internal, "integral radical not found");
  dec.radical = radical;
  const int dim = space.dimension();
  const int pivot = std::countr_zero(radical);
  std::vector<int> qbits;
  for (int i = 1; i < dim; ++i)
    if (i != pivot) qbits.push_back(i);
  const int d = static_cast<int>(qbits.size());

  auto lift = [&](f2::Vec v) {
    f2::Vec out = 0;
    for (int i = 0; i < d; ++i)
      if ((v >> i) & 1u) out |= f2::Vec{1} << qbits[i];
    return out;
  };
  auto quotient = [&](f2::Vec c) {
    if ((c >> pivot) & 1u) c ^= radical;
    f2::Vec out = 0;
    for (int i = 0; i < d; ++i)
      if ((c >> qbits[i]) & 1u) out |= f2::Vec{1} << i;
    return out;
  };
  auto B = [&](f2::Vec a, f2::Vec b) { return space.symbol(lift(a), lift(b)) == -1 ? 1 : 0; };

  const f2::Vec m = quotient(space.coords(Element::from_int(space.field(), -1)));
  std::vector<f2::Vec> us;
  if (m == 0) {
    dec.case_number = 1;
  } else if (B(m, m)) {
    dec.case_number = 2;
    us.push_back(m);
  } else {
    dec.case_number = 3;
    for (f2::Vec v = 1; v < (f2::Vec{1} << d); ++v)
      if (B(m, v)) {
        us.push_back(v);
        us.push_back(v ^ m);
        break;
      }
    if (us.size() != 2) fail(ErrorKind::Internal, "no unit pairs nontrivially with -1");
  }

  std::vector<f2::Vec> constraints;
  for (f2::Vec u : us) {
    f2::Vec row = 0;
    for (int i = 0; i < d; ++i)
      if (B(u, f2::Vec{1} << i)) row |= f2::Vec{1} << i;
    constraints.push_back(row);
  }
  std::vector<f2::Vec> rest = f2::kernel(constraints, d);
  std::vector<f2::Vec> qbasis = us;
  while (!rest.empty()) {
    const f2::Vec ev = rest.front();
    auto it = std::find_if(rest.begin(), rest.end(), [&](f2::Vec w) { return B(ev, w) == 1; });
    if (it == rest.end()) fail(ErrorKind::Internal, "orthogonal complement is degenerate");
    const f2::Vec fv = *it;
    qbasis.push_back(ev);
    qbasis.push_back(fv);
    f2::Echelon ech;
    std::vector<f2::Vec> next;
    for (f2::Vec w : rest) {
      if (w == ev || w == fv) continue;
      f2::Vec p = w;
      if (B(w, fv)) p ^= ev;
      if (B(w, ev)) p ^= fv;
      if (p != 0 && ech.insert(p)) next.push_back(p);
    }
    rest = next;
  }
  if (static_cast<int>(qbasis.size()) != d) fail(ErrorKind::Internal, "decomposition lost dimension");

  dec.k = static_cast<int>(us.size());
  dec.l = (d - dec.k) / 2;
  for (f2::Vec v : qbasis) {
    dec.basis.push_back(lift(v));
    dec.representatives.push_back(space.representative(lift(v)));
  }
  dec.gram.assign(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (B(qbasis[i], qbasis[j])) dec.gram[i] |= f2::Vec{1} << j;
  dec.minus_one = dec.reduce(space.coords(Element::from_int(space.field(), -1)));
  return dec;
}

std::vector<f2::Vec> filtration_classes(const SquareClassSpace& space, const UnitDecomposition& dec,
                                        int j) {
  require(j == 0 || j == 1, "filtration index must be 0 or 1");
  const FieldSpec& F = space.field();
  const int digits = 2 * F.e() + 1, n = F.precision();
  std::set<f2::Vec> out;
  if (j == 0) {
    const std::uint64_t count = F.residue_count(digits);
    for (std::uint64_t i = 0; i < count; ++i) {
      Integer u = F.from_residue_index(i, digits, n);
      if (!F.is_unit(u)) continue;
      out.insert(dec.reduce(space.coords(Element::from_integer(F, u))));
    }
  } else {
    const std::uint64_t count = F.residue_count(digits - 1);
    const Integer one = F.from_int(1, n), pi = F.uniformizer(n);
    for (std::uint64_t i = 0; i < count; ++i) {
      Integer u = F.add(one, F.mul(pi, F.from_residue_index(i, digits - 1, n)));
      out.insert(dec.reduce(space.coords(Element::from_integer(F, u))));
    }
  }
  return {out.begin(), out.end()};
}

std::uint64_t unit_quotient_order(const FieldSpec& F, int k) {
  require(k >= 1, "filtration level must be positive");
  const std::uint64_t count = F.residue_count(k);
  std::uint64_t units = 0;
  for (std::uint64_t i = 0; i < count; ++i)
    if (F.is_unit(F.from_residue_index(i, k, k))) ++units;
  return units;
}

}  // namespace metacover::padic
