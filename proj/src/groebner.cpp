#include "hurwitz/groebner.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace hurwitz {

namespace {

std::vector<Term> axpy(const PolyRing& r, std::span<const Term> a, std::span<const Term> b, const Monomial& shift,
                       std::uint32_t c) {
  // a + c * shift * b
  const PrimeField& f = r.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial mb = b[j].mono * shift;
    int cmp = i == a.size() ? -1 : r.compare(a[i].mono, mb);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      std::uint32_t v = f.mul(c, b[j].coeff);
      if (v) out.push_back({mb, v});
      ++j;
    } else {
      std::uint32_t v = f.add(a[i].coeff, f.mul(c, b[j].coeff));
      if (v) out.push_back({mb, v});
      ++i;
      ++j;
    }
  }
  return out;
}

struct SparseRow {
  std::vector<std::uint32_t> cols;
  std::vector<std::uint32_t> coeffs;
};

struct Element {
  std::vector<Term> terms;  // monic
  Monomial lead;
  std::uint32_t mask = 0;
  int degree = 0;
  bool active = true;
};

struct Pair {
  int i;
  int j;
  Monomial lcm;
  int degree;
};

struct Input {
  std::size_t index;
  int degree;
};

class Engine {
 public:
  explicit Engine(const RingPtr& ring) : ring_(ring), r_(*ring), p_(ring->modulus()) {}

  GroebnerResult run(std::span<const Polynomial> gens);

 private:
  int find_reducer(const Monomial& m) const;
  void insert(std::vector<Term> terms);
  void update(int h);
  void process_batch(std::vector<std::vector<Term>> rows, const std::vector<long>& tags);
  std::vector<std::vector<Term>> interreduce(const std::vector<int>& ids);

  // Reduces the row held in `acc` from column `start`; survivors go to `out`.
  template <bool Lazy>
  void reduce_dense(std::vector<std::uint64_t>& acc, std::size_t start, const std::vector<int>& pivot_of,
                    const std::vector<SparseRow>& pivots, std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) const;

  RingPtr ring_;
  const PolyRing& r_;
  std::uint64_t p_;
  std::vector<Element> elems_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> minimal_inputs_;
  bool unit_ = false;
};

int Engine::find_reducer(const Monomial& m) const {
  const std::uint32_t mm = m.support_mask();
  int best = -1;
  std::size_t best_len = SIZE_MAX;
  for (int id : active_) {
    const Element& e = elems_[static_cast<std::size_t>(id)];
    if ((e.mask & ~mm) != 0) continue;
    if (!e.lead.divides(m)) continue;
    if (e.terms.size() < best_len) {
      best = id;
      best_len = e.terms.size();
    }
  }
  return best;
}

void Engine::insert(std::vector<Term> terms) {
  Element e;
  e.lead = terms.front().mono;
  e.mask = e.lead.support_mask();
  e.degree = r_.heft_degree(e.lead);
  e.terms = std::move(terms);
  elems_.push_back(std::move(e));
  const int h = static_cast<int>(elems_.size()) - 1;
  if (elems_.back().lead.is_one()) unit_ = true;
  update(h);
}

// Gebauer-Moeller installation of a new element h.
void Engine::update(int h) {
  const Monomial lh = elems_[static_cast<std::size_t>(h)].lead;
  struct Cand {
    int g;
    Monomial lcm;
    bool coprime;
  };
  std::vector<Cand> cands;
  cands.reserve(active_.size());
  for (int g : active_) {
    const Monomial& lg = elems_[static_cast<std::size_t>(g)].lead;
    cands.push_back({g, lh.lcm(lg), lh.coprime(lg)});
  }
  std::vector<Cand> kept;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    const Cand& c = cands[k];
    bool keep = c.coprime;
    if (!keep) {
      keep = true;
      for (std::size_t k2 = k + 1; k2 < cands.size() && keep; ++k2)
        if (cands[k2].lcm.divides(c.lcm)) keep = false;
      for (std::size_t k2 = 0; k2 < kept.size() && keep; ++k2)
        if (kept[k2].lcm.divides(c.lcm)) keep = false;
    }
    if (keep) kept.push_back(c);
  }
  std::vector<Pair> next;
  next.reserve(pairs_.size() + kept.size());
  for (const Pair& pr : pairs_) {
    if (lh.divides(pr.lcm)) {
      const Monomial& li = elems_[static_cast<std::size_t>(pr.i)].lead;
      const Monomial& lj = elems_[static_cast<std::size_t>(pr.j)].lead;
      if (!(li.lcm(lh) == pr.lcm) && !(lj.lcm(lh) == pr.lcm)) continue;
    }
    next.push_back(pr);
  }
  for (const Cand& c : kept)
    if (!c.coprime) next.push_back({c.g, h, c.lcm, r_.heft_degree(c.lcm)});
  pairs_ = std::move(next);

  std::vector<int> act;
  act.reserve(active_.size() + 1);
  for (int g : active_) {
    Element& e = elems_[static_cast<std::size_t>(g)];
    if (lh.divides(e.lead)) {
      e.active = false;
    } else {
      act.push_back(g);
    }
  }
  act.push_back(h);
  active_ = std::move(act);
}

template <bool Lazy>
void Engine::reduce_dense(std::vector<std::uint64_t>& acc, std::size_t start, const std::vector<int>& pivot_of,
                          const std::vector<SparseRow>& pivots,
                          std::vector<std::pair<std::uint32_t, std::uint32_t>>& out) const {
  const std::size_t ncols = acc.size();
  for (std::size_t c = start; c < ncols; ++c) {
    std::uint64_t v = acc[c] % p_;
    acc[c] = 0;
    if (v == 0) continue;
    int pr = pivot_of[c];
    if (pr < 0) {
      out.emplace_back(static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(v));
      continue;
    }
    const SparseRow& row = pivots[static_cast<std::size_t>(pr)];
    const std::uint64_t mult = p_ - v;
    const std::size_t len = row.cols.size();
    for (std::size_t k = 1; k < len; ++k) {
      if constexpr (Lazy) {
        acc[row.cols[k]] += mult * row.coeffs[k];
      } else {
        acc[row.cols[k]] = (acc[row.cols[k]] + mult * row.coeffs[k]) % p_;
      }
    }
  }
}

void Engine::process_batch(std::vector<std::vector<Term>> rows, const std::vector<long>& tags) {
  // symbolic preprocessing
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> colidx;
  std::vector<Monomial> cols;
  std::vector<std::uint32_t> todo;
  auto add_mono = [&](const Monomial& m) {
    auto [it, inserted] = colidx.emplace(m, static_cast<std::uint32_t>(cols.size()));
    if (inserted) {
      cols.push_back(m);
      todo.push_back(it->second);
    }
  };
  for (const auto& row : rows)
    for (const auto& t : row) add_mono(t.mono);

  struct Reducer {
    int elem;
    Monomial mult;
  };
  std::vector<Reducer> reducers;
  while (!todo.empty()) {
    std::uint32_t idx = todo.back();
    todo.pop_back();
    const Monomial m = cols[idx];
    int e = find_reducer(m);
    if (e < 0) continue;
    const Element& el = elems_[static_cast<std::size_t>(e)];
    Monomial mult = m / el.lead;
    reducers.push_back({e, mult});
    for (std::size_t k = 1; k < el.terms.size(); ++k) add_mono(el.terms[k].mono * mult);
  }

  // columns in decreasing monomial order
  const std::size_t ncols = cols.size();
  std::vector<std::uint32_t> perm(ncols);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) { return r_.greater(cols[a], cols[b]); });
  std::vector<std::uint32_t> pos(ncols);
  for (std::size_t k = 0; k < ncols; ++k) pos[perm[k]] = static_cast<std::uint32_t>(k);

  std::vector<SparseRow> pivots;
  pivots.reserve(reducers.size() + rows.size());
  std::vector<int> pivot_of(ncols, -1);
  for (const Reducer& red : reducers) {
    const Element& el = elems_[static_cast<std::size_t>(red.elem)];
    SparseRow row;
    row.cols.reserve(el.terms.size());
    row.coeffs.reserve(el.terms.size());
    for (const auto& t : el.terms) {
      row.cols.push_back(pos[colidx.at(t.mono * red.mult)]);
      row.coeffs.push_back(t.coeff);
    }
    pivot_of[row.cols.front()] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(row));
  }

  std::vector<std::uint64_t> acc(ncols, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  std::vector<std::vector<Term>> fresh;
  const bool lazy = p_ < (1u << 20);
  const PrimeField& f = r_.field();
  for (std::size_t ri = 0; ri < rows.size(); ++ri) {
    std::size_t start = ncols;
    for (const auto& t : rows[ri]) {
      std::uint32_t c = pos[colidx.at(t.mono)];
      acc[c] = t.coeff;
      start = std::min<std::size_t>(start, c);
    }
    out.clear();
    if (lazy) {
      reduce_dense<true>(acc, start, pivot_of, pivots, out);
    } else {
      reduce_dense<false>(acc, start, pivot_of, pivots, out);
    }
    if (out.empty()) continue;
    std::uint32_t inv = f.inv(out.front().second);
    SparseRow row;
    std::vector<Term> terms;
    terms.reserve(out.size());
    for (const auto& [c, v] : out) {
      std::uint32_t cv = f.mul(v, inv);
      row.cols.push_back(c);
      row.coeffs.push_back(cv);
      terms.push_back({cols[perm[c]], cv});
    }
    pivot_of[row.cols.front()] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(row));
    fresh.push_back(std::move(terms));
    if (tags[ri] >= 0) minimal_inputs_.push_back(static_cast<std::size_t>(tags[ri]));
  }
  for (auto& terms : fresh) insert(std::move(terms));
}

std::vector<std::vector<Term>> Engine::interreduce(const std::vector<int>& ids) {
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> colidx;
  std::vector<Monomial> cols;
  std::vector<std::uint32_t> todo;
  auto add_mono = [&](const Monomial& m) {
    auto [it, inserted] = colidx.emplace(m, static_cast<std::uint32_t>(cols.size()));
    if (inserted) {
      cols.push_back(m);
      todo.push_back(it->second);
    }
  };
  for (int id : ids)
    for (const auto& t : elems_[static_cast<std::size_t>(id)].terms) add_mono(t.mono);
  struct Reducer {
    int elem;
    Monomial mult;
  };
  std::vector<Reducer> reducers;
  while (!todo.empty()) {
    std::uint32_t idx = todo.back();
    todo.pop_back();
    const Monomial m = cols[idx];
    int e = find_reducer(m);
    if (e < 0) continue;
    const Element& el = elems_[static_cast<std::size_t>(e)];
    Monomial mult = m / el.lead;
    reducers.push_back({e, mult});
    for (std::size_t k = 1; k < el.terms.size(); ++k) add_mono(el.terms[k].mono * mult);
  }
  const std::size_t ncols = cols.size();
  std::vector<std::uint32_t> perm(ncols);
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) { return r_.greater(cols[a], cols[b]); });
  std::vector<std::uint32_t> pos(ncols);
  for (std::size_t k = 0; k < ncols; ++k) pos[perm[k]] = static_cast<std::uint32_t>(k);
  std::vector<SparseRow> pivots;
  std::vector<int> pivot_of(ncols, -1);
  for (const Reducer& red : reducers) {
    const Element& el = elems_[static_cast<std::size_t>(red.elem)];
    SparseRow row;
    for (const auto& t : el.terms) {
      row.cols.push_back(pos[colidx.at(t.mono * red.mult)]);
      row.coeffs.push_back(t.coeff);
    }
    pivot_of[row.cols.front()] = static_cast<int>(pivots.size());
    pivots.push_back(std::move(row));
  }
  std::vector<std::vector<Term>> result;
  std::vector<std::uint64_t> acc(ncols, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  const bool lazy = p_ < (1u << 20);
  for (int id : ids) {
    const Element& el = elems_[static_cast<std::size_t>(id)];
    const std::uint32_t lead_col = pos[colidx.at(el.lead)];
    for (std::size_t k = 1; k < el.terms.size(); ++k) acc[pos[colidx.at(el.terms[k].mono)]] = el.terms[k].coeff;
    out.clear();
    out.emplace_back(lead_col, 1u);
    if (lazy) {
      reduce_dense<true>(acc, lead_col + 1, pivot_of, pivots, out);
    } else {
      reduce_dense<false>(acc, lead_col + 1, pivot_of, pivots, out);
    }
    std::vector<Term> terms;
    terms.reserve(out.size());
    for (const auto& [c, v] : out) terms.push_back({cols[perm[c]], v});
    result.push_back(std::move(terms));
  }
  return result;
}

GroebnerResult Engine::run(std::span<const Polynomial> gens) {
  std::vector<Input> inputs;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    require_same_ring(gens[k].ring(), r_);
    if (gens[k].is_zero()) continue;
    int deg = 0;
    for (const auto& t : gens[k].terms()) deg = std::max(deg, r_.heft_degree(t.mono));
    inputs.push_back({k, deg});
  }
  std::stable_sort(inputs.begin(), inputs.end(), [](const Input& a, const Input& b) { return a.degree < b.degree; });

  std::size_t next = 0;
  while (!unit_ && (!pairs_.empty() || next < inputs.size())) {
    int d = INT_MAX;
    for (const Pair& pr : pairs_) d = std::min(d, pr.degree);
    if (next < inputs.size()) d = std::min(d, inputs[next].degree);

    std::vector<Pair> batch;
    std::vector<Pair> rest;
    for (const Pair& pr : pairs_) (pr.degree == d ? batch : rest).push_back(pr);
    pairs_ = std::move(rest);

    std::vector<std::vector<Term>> rows;
    std::vector<long> tags;
    for (const Pair& pr : batch) {
      const Element& a = elems_[static_cast<std::size_t>(pr.i)];
      const Element& b = elems_[static_cast<std::size_t>(pr.j)];
      std::vector<Term> left;
      left.reserve(a.terms.size());
      Monomial ma = pr.lcm / a.lead;
      for (const auto& t : a.terms) left.push_back({t.mono * ma, t.coeff});
      std::vector<Term> s = axpy(r_, left, b.terms, pr.lcm / b.lead, static_cast<std::uint32_t>(p_ - 1));
      if (s.empty()) continue;
      rows.push_back(std::move(s));
      tags.push_back(-1);
    }
    while (next < inputs.size() && inputs[next].degree == d) {
      const Polynomial& g = gens[inputs[next].index];
      rows.emplace_back(g.terms().begin(), g.terms().end());
      tags.push_back(static_cast<long>(inputs[next].index));
      ++next;
    }
    if (!rows.empty()) process_batch(std::move(rows), tags);
  }

  GroebnerResult res;
  if (unit_) {
    res.basis.push_back(Polynomial::constant(ring_, 1));
    // a constant input, if any, is the sole minimal generator
    for (const Input& in : inputs)
      if (gens[in.index].is_constant()) {
        res.minimal_inputs = {in.index};
        break;
      }
    if (res.minimal_inputs.empty()) res.minimal_inputs = minimal_inputs_;
    return res;
  }
  std::vector<int> ids = active_;
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    return r_.greater(elems_[static_cast<std::size_t>(b)].lead, elems_[static_cast<std::size_t>(a)].lead);
  });
  for (auto& terms : interreduce(ids)) res.basis.push_back(Polynomial::from_sorted_terms(ring_, std::move(terms)));
  res.minimal_inputs = minimal_inputs_;
  std::sort(res.minimal_inputs.begin(), res.minimal_inputs.end());
  return res;
}

}  // namespace

GroebnerResult compute_groebner(const RingPtr& ring, std::span<const Polynomial> gens) {
  Engine engine(ring);
  return engine.run(gens);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial of zero");
  Polynomial a = f.monic(), b = g.monic();
  Monomial l = a.lead_monomial().lcm(b.lead_monomial());
  return a.times_term(l / a.lead_monomial(), 1) - b.times_term(l / b.lead_monomial(), 1);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  const PolyRing& r = f.ring();
  const PrimeField& fld = r.field();
  std::vector<const Polynomial*> gs;
  for (const auto& g : basis) {
    require_same_ring(g.ring(), r);
    if (!g.is_zero()) gs.push_back(&g);
  }
  std::vector<Term> rem(f.terms().begin(), f.terms().end());
  std::vector<Term> result;
  std::size_t pos = 0;
  while (pos < rem.size()) {
    const Term lt = rem[pos];
    const Polynomial* div = nullptr;
    for (const Polynomial* g : gs)
      if (g->lead_monomial().divides(lt.mono)) {
        div = g;
        break;
      }
    if (!div) {
      result.push_back(lt);
      ++pos;
      continue;
    }
    std::uint32_t c = fld.neg(fld.div(lt.coeff, div->lead_coeff()));
    std::span<const Term> tail(rem.data() + pos, rem.size() - pos);
    rem = axpy(r, tail, div->terms(), lt.mono / div->lead_monomial(), c);
    pos = 0;
  }
  return Polynomial::from_sorted_terms(f.ring_ptr(), std::move(result));
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].is_zero() || basis[j].is_zero()) continue;
      if (!normal_form(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  return true;
}

}  // namespace hurwitz
