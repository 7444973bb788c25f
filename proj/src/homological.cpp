#include "hurwitz/homological.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hurwitz {

namespace {

std::vector<Monomial> lead_monomials(const Ideal& ideal) {
  std::vector<Monomial> leads;
  for (const auto& g : ideal.groebner_basis()) leads.push_back(g.lead_monomial());
  return leads;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& leads) {
  std::uint32_t mask = m.support_mask();
  for (const auto& l : leads)
    if ((l.support_mask() & ~mask) == 0 && l.divides(m)) return true;
  return false;
}

std::vector<Monomial> standard_monomials(const PolyRing& ring, const MultiDegree& deg,
                                         const std::vector<Monomial>& leads) {
  std::vector<Monomial> out;
  for (const auto& m : monomial_basis(ring, deg))
    if (!divisible_by_any(m, leads)) out.push_back(m);
  return out;
}

// Rank of a dense matrix over F_p; destroys the input.
std::size_t matrix_rank(std::vector<std::vector<std::uint32_t>>& rows, const PrimeField& field) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    auto& pr = rows[rank];
    std::uint32_t inv = field.inv(pr[col]);
    for (std::size_t c = col; c < ncols; ++c) pr[c] = field.mul(pr[c], inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      std::uint32_t f = rows[r][col];
      if (f == 0) continue;
      auto& row = rows[r];
      for (std::size_t c = col; c < ncols; ++c)
        if (pr[c] != 0) row[c] = field.sub(row[c], field.mul(f, pr[c]));
    }
    ++rank;
  }
  return rank;
}

bool standard_graded(const PolyRing& ring) {
  if (ring.grading_rank() != 1) return false;
  for (int v = 0; v < ring.num_vars(); ++v)
    if (ring.degrees()[static_cast<std::size_t>(v)][0] != 1) return false;
  return true;
}

// ---- Hilbert series numerator of a monomial ideal, by pivot splitting.

using Series = std::vector<std::int64_t>;

void add_shifted(Series& acc, const Series& s, int shift, std::int64_t sign) {
  if (acc.size() < s.size() + static_cast<std::size_t>(shift)) acc.resize(s.size() + static_cast<std::size_t>(shift), 0);
  for (std::size_t k = 0; k < s.size(); ++k) acc[k + static_cast<std::size_t>(shift)] += sign * s[k];
}

void trim_series(Series& s) {
  while (!s.empty() && s.back() == 0) s.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

Series numerator(const PolyRing& ring, std::vector<Monomial> gens) {
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {};
  const Monomial* mixed = nullptr;
  for (const auto& g : gens)
    if (std::popcount(g.support_mask()) > 1) {
      mixed = &g;
      break;
    }
  if (mixed == nullptr) {
    // pure powers (after minimalization at most one per variable): product of (1 - t^deg)
    Series s{1};
    for (const auto& g : gens) {
      Series next = s;
      add_shifted(next, s, ring.heft_degree(g), -1);
      s = std::move(next);
    }
    trim_series(s);
    return s;
  }
  int var = std::countr_zero(mixed->support_mask());
  Monomial pivot;
  pivot.set(var, (*mixed)[var]);

  std::vector<Monomial> with_pivot = gens;
  with_pivot.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q = g;
    q.set(var, std::max(0, g[var] - pivot[var]));
    colon.push_back(q);
  }
  Series out = numerator(ring, minimalize(std::move(with_pivot)));
  add_shifted(out, numerator(ring, minimalize(std::move(colon))), ring.heft_degree(pivot), 1);
  trim_series(out);
  return out;
}

}  // namespace

std::int64_t hilbert_function(const Ideal& ideal, const MultiDegree& deg) {
  for (int c : deg)
    if (c < 0) return 0;
  auto leads = lead_monomials(ideal);
  std::int64_t count = 0;
  for (const auto& m : monomial_basis(ideal.ring(), deg))
    if (!divisible_by_any(m, leads)) ++count;
  return count;
}

std::int64_t hilbert_function_by_matrix(const Ideal& ideal, const MultiDegree& deg) {
  const PolyRing& ring = ideal.ring();
  auto basis = monomial_basis(ring, deg);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], k);
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : ideal.generators()) {
    MultiDegree rest = deg;
    MultiDegree gd = g.multidegree();
    bool ok = true;
    for (std::size_t c = 0; c < rest.size(); ++c) {
      rest[c] -= gd[c];
      ok = ok && rest[c] >= 0;
    }
    if (!ok) continue;
    for (const auto& m : monomial_basis(ring, rest)) {
      std::vector<std::uint32_t> row(basis.size(), 0);
      for (const auto& t : g.terms()) row[index.at(t.mono * m)] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  return static_cast<std::int64_t>(basis.size() - matrix_rank(rows, ring.field()));
}

DimensionInfo dimension_codim(const Ideal& ideal) {
  const int n = ideal.ring().num_vars();
  if (ideal.is_unit()) return {0, n};
  std::vector<std::uint32_t> supports;
  for (const auto& m : lead_monomials(ideal)) supports.push_back(m.support_mask());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = std::popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (auto sup : supports)
      if ((sup & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return {best, n - best};
}

std::vector<std::int64_t> hilbert_numerator(const Ideal& ideal) {
  return numerator(ideal.ring(), minimalize(lead_monomials(ideal)));
}

std::int64_t multiplicity_degree(const Ideal& ideal) {
  if (!standard_graded(ideal.ring())) throw std::invalid_argument("multiplicity_degree needs a standard-graded ring");
  Series s = hilbert_numerator(ideal);
  if (s.empty()) return 0;
  // divide by (1 - t) while t = 1 is a root
  for (;;) {
    std::int64_t at_one = 0;
    for (auto c : s) at_one += c;
    if (at_one != 0) return at_one;
    Series q(s.size() - 1, 0);
    std::int64_t carry = 0;
    for (std::size_t k = 0; k + 1 < s.size(); ++k) {
      carry += s[k];
      q[k] = carry;
    }
    s = std::move(q);
  }
}

// ------------------------------------------------------------ Betti tables

void BettiTable::add(int index, int twist, std::int64_t rank) {
  if (rank == 0) return;
  entries_[{index, twist}] += rank;
}

std::int64_t BettiTable::at(int index, int twist) const {
  auto it = entries_.find({index, twist});
  return it == entries_.end() ? 0 : it->second;
}

std::map<int, std::int64_t> BettiTable::row(int index) const {
  std::map<int, std::int64_t> out;
  for (const auto& [key, rank] : entries_)
    if (key.first == index) out[key.second] = rank;
  return out;
}

std::int64_t BettiTable::total(int index) const {
  std::int64_t t = 0;
  for (const auto& [twist, rank] : row(index)) t += rank;
  return t;
}

int BettiTable::length() const {
  int len = -1;
  for (const auto& [key, rank] : entries_) len = std::max(len, key.first);
  return len;
}

std::string BettiTable::display() const {
  // column c of R/I is index c-1 of I; column 0 holds the single free generator
  const int cols = length() + 2;
  int max_row = 0;
  for (const auto& [key, rank] : entries_) max_row = std::max(max_row, key.second - (key.first + 1));
  auto cell = [&](int col, int r) -> std::int64_t {
    if (col == 0) return r == 0 ? 1 : 0;
    return at(col - 1, r + col);
  };
  std::vector<std::string> labels{"total:"};
  for (int r = 0; r <= max_row; ++r) labels.push_back(std::to_string(r) + ":");
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(static_cast<std::size_t>(cols), 1);
  for (int c = 0; c < cols; ++c) {
    std::int64_t tot = c == 0 ? 1 : total(c - 1);
    width[static_cast<std::size_t>(c)] = std::max(width[static_cast<std::size_t>(c)], std::to_string(tot).size());
  }
  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (int c = 0; c < cols; ++c) out << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(c)])) << c;
  out << '\n' << std::setw(static_cast<int>(label_width)) << "total:";
  for (int c = 0; c < cols; ++c)
    out << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(c)])) << (c == 0 ? 1 : total(c - 1));
  out << '\n';
  for (int r = 0; r <= max_row; ++r) {
    out << std::setw(static_cast<int>(label_width)) << (std::to_string(r) + ":");
    for (int c = 0; c < cols; ++c) {
      std::int64_t v = cell(c, r);
      out << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(c)]))
          << (v == 0 ? std::string(".") : std::to_string(v));
    }
    out << '\n';
  }
  return out.str();
}

BettiTable betti_table(const Ideal& ideal) {
  const PolyRing& ring = ideal.ring();
  if (!standard_graded(ring)) throw std::invalid_argument("betti_table needs a standard-graded ring");
  BettiTable table;
  if (ideal.is_zero() || ideal.is_unit()) return table;
  const int n = ring.num_vars();
  const auto& gb = ideal.groebner_basis();
  std::vector<Monomial> leads = lead_monomials(ideal);
  int max_deg = 0;
  for (const auto& l : leads) max_deg = std::max(max_deg, l.total_degree());
  // beta_{i,j}(R/I) <= beta_{i,j}(R/in I), which vanishes beyond i * max_deg
  const int top = n * max_deg;

  // standard monomial bases of (R/I)_t and multiplication by each variable
  std::vector<std::vector<Monomial>> basis(static_cast<std::size_t>(top + 1));
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index(static_cast<std::size_t>(top + 1));
  for (int t = 0; t <= top; ++t) {
    basis[static_cast<std::size_t>(t)] = standard_monomials(ring, {t}, leads);
    auto& idx = index[static_cast<std::size_t>(t)];
    for (std::size_t k = 0; k < basis[static_cast<std::size_t>(t)].size(); ++k)
      idx.emplace(basis[static_cast<std::size_t>(t)][k], k);
  }
  // mult[t][v][k]: normal form of y_v * basis[t][k] as (index in basis[t+1], coeff)
  using Sparse = std::vector<std::pair<std::size_t, std::uint32_t>>;
  std::vector<std::vector<std::vector<Sparse>>> mult(static_cast<std::size_t>(top));
  for (int t = 0; t < top; ++t) {
    auto& mt = mult[static_cast<std::size_t>(t)];
    mt.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      for (const auto& b : basis[static_cast<std::size_t>(t)]) {
        Monomial yv;
        yv.set(v, 1);
        Polynomial nf = normal_form(Polynomial::monomial(ideal.ring_ptr(), b * yv), gb);
        Sparse s;
        for (const auto& term : nf.terms()) s.emplace_back(index[static_cast<std::size_t>(t + 1)].at(term.mono), term.coeff);
        mt[static_cast<std::size_t>(v)].push_back(std::move(s));
      }
    }
  }

  std::vector<std::vector<std::uint32_t>> subsets(static_cast<std::size_t>(n + 1));
  for (std::uint32_t s = 0; s < (1u << n); ++s) subsets[static_cast<std::size_t>(std::popcount(s))].push_back(s);

  const PrimeField& field = ring.field();
  auto dim_k = [&](int i, int j) -> std::size_t {
    int t = j - i;
    if (i < 0 || i > n || t < 0 || t > top) return 0;
    return subsets[static_cast<std::size_t>(i)].size() * basis[static_cast<std::size_t>(t)].size();
  };
  // rank of d_i : K_{i,j} -> K_{i-1,j}
  auto rank_d = [&](int i, int j) -> std::size_t {
    if (i < 1 || i > n) return 0;
    int t = j - i;
    if (t < 0 || t >= top) return 0;
    std::size_t src = dim_k(i, j), dst = dim_k(i - 1, j);
    if (src == 0 || dst == 0) return 0;
    const auto& bt = basis[static_cast<std::size_t>(t)];
    const std::size_t nb_next = basis[static_cast<std::size_t>(t + 1)].size();
    const auto& lower = subsets[static_cast<std::size_t>(i - 1)];
    std::unordered_map<std::uint32_t, std::size_t> lower_pos;
    for (std::size_t k = 0; k < lower.size(); ++k) lower_pos.emplace(lower[k], k);
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(src);
    for (std::uint32_t s : subsets[static_cast<std::size_t>(i)]) {
      for (std::size_t k = 0; k < bt.size(); ++k) {
        std::vector<std::uint32_t> row(dst, 0);
        int sign_pos = 0;
        for (int v = 0; v < n; ++v) {
          if (!(s & (1u << v))) continue;
          std::size_t block = lower_pos.at(s & ~(1u << v));
          bool negative = sign_pos % 2 == 1;
          for (const auto& [col, c] : mult[static_cast<std::size_t>(t)][static_cast<std::size_t>(v)][k]) {
            std::size_t at = block * nb_next + col;
            row[at] = negative ? field.sub(row[at], c) : field.add(row[at], c);
          }
          ++sign_pos;
        }
        rows.push_back(std::move(row));
      }
    }
    return matrix_rank(rows, field);
  };

  std::vector<std::vector<std::size_t>> ranks(static_cast<std::size_t>(n + 2),
                                              std::vector<std::size_t>(static_cast<std::size_t>(top + n + 1), 0));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= top + n; ++j) ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rank_d(i, j);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= top; ++j) {
      auto b = static_cast<std::int64_t>(dim_k(i, j)) -
               static_cast<std::int64_t>(ranks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) -
               static_cast<std::int64_t>(ranks[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)]);
      if (b < 0) throw std::logic_error("negative Koszul homology");
      table.add(i - 1, j, b);
    }
  }
  return table;
}

}  // namespace hurwitz
