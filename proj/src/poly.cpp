#include "hurwitz/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set(static_cast<int>(i), exps[i]);
  return m;
}

void Monomial::set(int i, int e) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index");
  if (e < 0 || e > 0xffff) throw std::overflow_error("exponent out of 16-bit range");
  exp_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    unsigned s = unsigned{exp_[i]} + other.exp_[i];
    if (s > 0xffff) throw std::overflow_error("exponent overflow");
    r.exp_[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp_.size(); ++i) {
    if (other.exp_[i] > exp_[i]) throw std::invalid_argument("monomial does not divide");
    r.exp_[i] = static_cast<std::uint16_t>(exp_[i] - other.exp_[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = std::max(exp_[i], other.exp_[i]);
  return r;
}

std::size_t Monomial::hash() const {
  std::uint64_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < 4; ++i) lo |= std::uint64_t{exp_[i]} << (16 * i);
  for (std::size_t i = 4; i < 8; ++i) hi |= std::uint64_t{exp_[i]} << (16 * (i - 4));
  std::uint64_t h = lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x632be59bd9b4e019ULL + (lo << 6) + (lo >> 2));
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

// ----------------------------------------------------------- MonomialOrder

std::string MonomialOrder::describe() const {
  std::string s = kind_ == Kind::GradedReverseLex ? "GRevLex" : "Eliminate " + std::to_string(block_);
  if (last_ >= 0) s += " (last " + std::to_string(last_) + ")";
  return s;
}

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(PrimeField field, std::vector<std::string> names, std::vector<MultiDegree> degrees,
                   MonomialOrder order, bool allow_ghost)
    : field_(field), names_(std::move(names)), degrees_(std::move(degrees)), order_(order) {
  if (names_.empty() || names_.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument("ring needs 1.." + std::to_string(kMaxVars) + " variables");
  if (degrees_.size() != names_.size()) throw std::invalid_argument("one degree vector per variable");
  grading_rank_ = static_cast<int>(degrees_.front().size());
  if (grading_rank_ < 1) throw std::invalid_argument("empty degree vector");
  for (const auto& d : degrees_) {
    if (static_cast<int>(d.size()) != grading_rank_) throw std::invalid_argument("degree vectors differ in length");
    int sum = 0;
    for (int c : d) {
      if (c < 0) throw std::invalid_argument("negative variable degree");
      sum += c;
    }
    if (sum == 0 && !allow_ghost) throw std::invalid_argument("variable of degree zero");
    heft_.push_back(sum);
  }
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable " + names_[i]);
  const int n = num_vars();
  if (order_.kind() == MonomialOrder::Kind::Eliminate && (order_.block() < 1 || order_.block() >= n))
    throw std::invalid_argument("elimination block out of range");
  if (order_.last_variable() >= n) throw std::invalid_argument("order variable out of range");
  if (order_.last_variable() >= 0) revlex_sequence_.push_back(order_.last_variable());
  for (int v = n - 1; v >= 0; --v)
    if (v != order_.last_variable()) revlex_sequence_.push_back(v);
}

RingPtr PolyRing::create(std::uint32_t p, std::vector<std::string> names, std::vector<MultiDegree> degrees,
                         MonomialOrder order) {
  return RingPtr(new PolyRing(PrimeField(p), std::move(names), std::move(degrees), order, false));
}

RingPtr PolyRing::bigraded(std::uint32_t p, MonomialOrder order) {
  return create(p, {"x0", "x1", "y0", "y1", "y2"}, {{1, 0}, {1, 0}, {0, 1}, {0, 1}, {0, 1}}, order);
}

RingPtr PolyRing::plane(std::uint32_t p) { return create(p, {"y0", "y1", "y2"}, {{1}, {1}, {1}}); }

RingPtr PolyRing::binary(std::uint32_t p) { return create(p, {"x0", "x1"}, {{1}, {1}}); }

RingPtr PolyRing::with_order(MonomialOrder order) const {
  bool ghost = std::find(heft_.begin(), heft_.end(), 0) != heft_.end();
  return RingPtr(new PolyRing(field_, names_, degrees_, order, ghost));
}

RingPtr PolyRing::with_ghost_variable(std::string name) const {
  std::vector<std::string> names{std::move(name)};
  names.insert(names.end(), names_.begin(), names_.end());
  std::vector<MultiDegree> degs{MultiDegree(static_cast<std::size_t>(grading_rank_), 0)};
  degs.insert(degs.end(), degrees_.begin(), degrees_.end());
  return RingPtr(new PolyRing(field_, std::move(names), std::move(degs), MonomialOrder::eliminate(1), true));
}

int PolyRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  if (order_.kind() == MonomialOrder::Kind::Eliminate) {
    int sa = 0, sb = 0;
    for (int i = 0; i < order_.block(); ++i) {
      sa += a[i];
      sb += b[i];
    }
    if (sa != sb) return sa > sb ? 1 : -1;
  }
  const int n = num_vars();
  int da = 0, db = 0;
  for (int i = 0; i < n; ++i) {
    da += heft_[static_cast<std::size_t>(i)] * a[i];
    db += heft_[static_cast<std::size_t>(i)] * b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (int v : revlex_sequence_) {
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  return 0;
}

MultiDegree PolyRing::multidegree(const Monomial& m) const {
  MultiDegree d(static_cast<std::size_t>(grading_rank_), 0);
  for (int i = 0; i < num_vars(); ++i)
    for (int k = 0; k < grading_rank_; ++k)
      d[static_cast<std::size_t>(k)] += m[i] * degrees_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  return d;
}

int PolyRing::heft_degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < num_vars(); ++i) d += heft_[static_cast<std::size_t>(i)] * m[i];
  return d;
}

bool PolyRing::same_variables(const PolyRing& other) const {
  return field_ == other.field_ && names_ == other.names_ && degrees_ == other.degrees_;
}

bool operator==(const PolyRing& a, const PolyRing& b) {
  return &a == &b || (a.same_variables(b) && a.order_ == b.order_);
}

std::string PolyRing::header() const {
  std::string s = "ring p=" + std::to_string(modulus()) + " vars=";
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) s += ',';
    s += names_[i];
  }
  s += " degrees=";
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) s += ',';
    s += format_degree(degrees_[i]);
  }
  return s;
}

void require_same_ring(const PolyRing& a, const PolyRing& b) {
  if (!(a == b)) throw RingMismatch("polynomials live in different rings");
}

std::string format_degree(const MultiDegree& deg) {
  std::string s = "{";
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(deg[i]);
  }
  return s + "}";
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  std::uint32_t v = ring->field().from_int(c);
  std::vector<Term> t;
  if (v != 0) t.push_back({Monomial{}, v});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->num_vars()) throw std::out_of_range("variable index");
  Monomial m;
  m.set(index, 1);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, std::uint32_t coeff) {
  coeff %= ring->modulus();
  std::vector<Term> t;
  if (coeff != 0) t.push_back({m, coeff});
  return Polynomial(std::move(ring), std::move(t));
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& r = *ring;
  std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) { return r.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  const PrimeField& f = r.field();
  for (auto& t : terms) {
    std::uint32_t c = t.coeff % f.modulus();
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = f.add(out.back().coeff, c);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back({t.mono, c});
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  return Polynomial(std::move(ring), std::move(terms));
}

bool Polynomial::is_homogeneous() const {
  if (terms_.size() <= 1) return true;
  MultiDegree d = ring_->multidegree(terms_.front().mono);
  for (const auto& t : terms_)
    if (ring_->multidegree(t.mono) != d) return false;
  return true;
}

MultiDegree Polynomial::multidegree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
  return ring_->multidegree(terms_.front().mono);
}

int Polynomial::heft_degree() const {
  if (terms_.empty()) throw std::invalid_argument("degree of the zero polynomial");
  return ring_->heft_degree(terms_.front().mono);
}

namespace {

// a + c*b, both sorted decreasingly.
std::vector<Term> merge_axpy(const PolyRing& r, std::span<const Term> a, std::span<const Term> b, std::uint32_t c) {
  const PrimeField& f = r.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = r.compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      std::uint32_t v = f.mul(c, b[j].coeff);
      if (v) out.push_back({b[j].mono, v});
      ++j;
    } else {
      std::uint32_t v = f.add(a[i].coeff, f.mul(c, b[j].coeff));
      if (v) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(*ring_, *other.ring_);
  return Polynomial(ring_, merge_axpy(*ring_, terms_, other.terms_, 1));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(*ring_, *other.ring_);
  return Polynomial(ring_, merge_axpy(*ring_, terms_, other.terms_, ring_->modulus() - 1));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->modulus() - 1); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(*ring_, *other.ring_);
  const Polynomial& small = size() <= other.size() ? *this : other;
  const Polynomial& big = size() <= other.size() ? other : *this;
  std::vector<Term> acc;
  for (const auto& t : small.terms_) {
    Polynomial part = big.times_term(t.mono, t.coeff);
    acc = merge_axpy(*ring_, acc, part.terms_, 1);
  }
  return Polynomial(ring_, std::move(acc));
}

Polynomial Polynomial::scaled(std::uint32_t c) const {
  const PrimeField& f = ring_->field();
  c %= f.modulus();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out(terms_);
  for (auto& t : out) t.coeff = f.mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, std::uint32_t c) const {
  const PrimeField& f = ring_->field();
  c %= f.modulus();
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, f.mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= ring_->num_vars()) throw std::out_of_range("variable index");
  std::vector<Term> out;
  const PrimeField& f = ring_->field();
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    std::uint32_t c = f.mul(t.coeff, f.from_int(e));
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, c});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::in_ring(const RingPtr& target) const {
  if (!ring_->same_variables(*target)) throw RingMismatch("in_ring: variables differ");
  if (ring_->order() == target->order()) return Polynomial(target, terms_);
  return from_terms(target, terms_);
}

Polynomial Polynomial::map_to(const RingPtr& target, std::span<const int> var_map) const {
  if (static_cast<int>(var_map.size()) != ring_->num_vars()) throw std::invalid_argument("map_to: map size");
  if (target->modulus() != ring_->modulus()) throw RingMismatch("map_to: different fields");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_->num_vars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      int j = var_map[static_cast<std::size_t>(i)];
      if (j < 0) throw std::invalid_argument("map_to: variable " + ring_->names()[static_cast<std::size_t>(i)] +
                                             " has no image");
      m.set(j, m[j] + e);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const PrimeField& f = ring_->field();
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = f.to_symmetric(t.coeff);
    bool neg = c < 0;
    std::int64_t a = neg ? -c : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || t.mono.is_one()) {
      os << a;
      wrote = true;
    }
    for (int i = 0; i < ring_->num_vars(); ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << '*';
      os << ring_->names()[static_cast<std::size_t>(i)];
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  TermParser(const PolyRing& ring, std::string_view text) : ring_(ring), s_(text) {}

  std::vector<Term> parse() {
    std::vector<Term> terms;
    skip();
    if (pos_ == s_.size()) throw error("empty polynomial");
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      bool neg = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        neg = s_[pos_] == '-';
        ++pos_;
        skip();
      } else if (!first) {
        throw error("expected + or -");
      }
      first = false;
      terms.push_back(term(neg));
    }
    return terms;
  }

 private:
  std::invalid_argument error(const std::string& what) const {
    return std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::int64_t number() {
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = (v * 10 + (s_[pos_] - '0')) % (std::int64_t{1} << 40);
      ++pos_;
    }
    if (pos_ == start) throw error("expected number");
    return v;
  }
  Term term(bool neg) {
    const PrimeField& f = ring_.field();
    std::uint32_t c = 1;
    Monomial m;
    while (true) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        c = f.mul(c, f.from_int(number()));
      } else {
        std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (pos_ == start) throw error("expected factor");
        std::string_view name = s_.substr(start, pos_ - start);
        int idx = ring_.variable_index(name);
        if (idx < 0) throw error("unknown variable " + std::string(name));
        int e = 1;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip();
          e = static_cast<int>(number());
        }
        m.set(idx, m[idx] + e);
      }
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return {m, neg ? f.neg(c) : c};
  }

  const PolyRing& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(const RingPtr& ring, std::string_view text) {
  return from_terms(ring, TermParser(*ring, text).parse());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

// ------------------------------------------------------------- free helpers

std::vector<Monomial> monomial_basis(const PolyRing& ring, const MultiDegree& deg) {
  if (static_cast<int>(deg.size()) != ring.grading_rank()) throw std::invalid_argument("degree has wrong rank");
  for (int c : deg)
    if (c < 0) return {};
  std::vector<Monomial> out;
  const int n = ring.num_vars();
  for (int v = 0; v < n; ++v)
    if (ring.heft(v) == 0) throw std::invalid_argument("monomial_basis: ring has a degree-zero variable");
  MultiDegree rest = deg;
  Monomial cur;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (int c : rest)
        if (c != 0) return;
      out.push_back(cur);
      return;
    }
    const MultiDegree& dv = ring.degrees()[static_cast<std::size_t>(v)];
    int maxe = 1 << 15;
    for (std::size_t k = 0; k < dv.size(); ++k)
      if (dv[k] > 0) maxe = std::min(maxe, rest[k] / dv[k]);
    for (int e = 0; e <= maxe; ++e) {
      for (std::size_t k = 0; k < dv.size(); ++k) rest[k] -= e * dv[k];
      cur.set(v, e);
      self(self, v + 1);
      for (std::size_t k = 0; k < dv.size(); ++k) rest[k] += e * dv[k];
    }
    cur.set(v, 0);
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [&ring](const Monomial& a, const Monomial& b) { return ring.greater(a, b); });
  return out;
}

Polynomial random_form(const RingPtr& ring, const MultiDegree& deg, SeededRng& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomial_basis(*ring, deg)) {
    std::uint32_t c = rng.uniform_below(ring->modulus());
    if (c) terms.push_back({m, c});
  }
  return Polynomial::from_sorted_terms(ring, std::move(terms));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw ArithmeticError("division by the zero polynomial");
  const PolyRing& r = f.ring();
  const PrimeField& fld = r.field();
  std::uint32_t inv_lc = fld.inv(g.lead_coeff());
  Polynomial rem = f;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    const Term& lt = rem.lead_term();
    if (!g.lead_monomial().divides(lt.mono)) throw ArithmeticError("exact_divide: not divisible");
    Monomial q = lt.mono / g.lead_monomial();
    std::uint32_t c = fld.mul(lt.coeff, inv_lc);
    quot.push_back({q, c});
    rem = rem - g.times_term(q, c);
  }
  return Polynomial::from_terms(f.ring_ptr(), std::move(quot));
}

}  // namespace hurwitz
