#include "strat/groebner.hpp"

#include <algorithm>
#include <deque>

#include "strat/error.hpp"

namespace strat {
namespace gb {

bool is_zero(const PolyVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

size_t lead_pos(const PolyVec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return i;
  return static_cast<size_t>(-1);
}

namespace {

PolyVec scaled(const PolyVec& v, const Laurent& c) {
  PolyVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

void axpy(PolyVec& dst, const Laurent& c, const PolyVec& src) {
  for (size_t i = 0; i < src.size(); ++i)
    if (!src[i].is_zero()) dst[i] += c * src[i];
}

void axpy_rep(std::vector<Laurent>& dst, const Laurent& c, const std::vector<Laurent>& src) {
  if (dst.size() < src.size()) dst.resize(src.size());
  for (size_t i = 0; i < src.size(); ++i)
    if (!src[i].is_zero()) dst[i] += c * src[i];
}

// Order on vectors for the canonical basis listing.
bool vec_less(const PolyVec& a, const PolyVec& b) {
  size_t pa = lead_pos(a), pb = lead_pos(b);
  if (pa != pb) return pa < pb;
  if (pa == static_cast<size_t>(-1)) return false;
  int da = a[pa].max_exp(), db = b[pb].max_exp();
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    return a[i] < b[i];
  }
  return false;
}

}  // namespace

Engine::Engine(size_t ambient, bool track_reps) : ambient_(ambient), track_(track_reps) {}

Engine::Lead Engine::lead(const PolyVec& v) {
  size_t p = lead_pos(v);
  require(p != static_cast<size_t>(-1), "InternalError", "lead of zero vector");
  return Lead{p, v[p].max_exp(), v[p].leading_coeff()};
}

void Engine::add_generator(const PolyVec& g) {
  require(g.size() == ambient_, "DimensionMismatch", "generator size");
  for (const auto& x : g)
    require(x.is_zero() || x.min_exp() >= 0, "InternalError", "engine input not in Z[t]");
  Elem e;
  e.v = g;
  if (track_) {
    e.rep.assign(ngens_ + 1, Laurent());
    e.rep[ngens_] = Laurent(1);
  }
  ++ngens_;
  if (!is_zero(e.v)) basis_.push_back(std::move(e));
  computed_ = false;
}

// One canonical reduction step on the leading monomial of f.  Returns false
// when the leading monomial is irreducible (caller peels it off).
bool Engine::reduce_step(PolyVec& f, std::vector<Laurent>* rep,
                         const std::vector<size_t>& skip) const {
  Lead lf = lead(f);
  // Applicable basis elements: same position, degree <= lf.deg.
  std::vector<size_t> app;
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
    const PolyVec& g = basis_[i].v;
    if (lead_pos(g) != lf.pos) continue;
    if (g[lf.pos].max_exp() > lf.deg) continue;
    app.push_back(i);
  }
  if (app.empty()) return false;
  // Extended gcd over all applicable leading coefficients.
  mpz_class g = 0;
  std::vector<mpz_class> bez(app.size(), 0);
  for (size_t k = 0; k < app.size(); ++k) {
    const mpz_class& lc = basis_[app[k]].v[lf.pos].leading_coeff();
    if (g == 0) {
      g = lc;
      bez[k] = 1;
    } else {
      mpz_class gn, s, t;
      mpz_gcdext(gn.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), lc.get_mpz_t());
      for (size_t j = 0; j < k; ++j) bez[j] *= s;
      bez[k] = t;
      g = gn;
    }
  }
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lf.lc.get_mpz_t(), g.get_mpz_t());
  if (q == 0) return false;  // coefficient already canonical
  for (size_t k = 0; k < app.size(); ++k) {
    if (bez[k] == 0) continue;
    const Elem& e = basis_[app[k]];
    int shift = lf.deg - e.v[lf.pos].max_exp();
    Laurent c = Laurent::term(-q * bez[k], shift);
    axpy(f, c, e.v);
    if (rep && track_) axpy_rep(*rep, -c, e.rep);
  }
  return true;
}

PolyVec Engine::nf_excluding(PolyVec f, std::vector<Laurent>* rep, size_t skip_index) const {
  std::vector<size_t> skip;
  if (skip_index != static_cast<size_t>(-1)) skip.push_back(skip_index);
  PolyVec out(ambient_);
  while (!is_zero(f)) {
    if (reduce_step(f, rep, skip)) continue;
    // Peel the (now irreducible) leading monomial into the output.
    Lead lf = lead(f);
    Laurent mono = Laurent::term(lf.lc, lf.deg);
    out[lf.pos] += mono;
    f[lf.pos] -= mono;
  }
  return out;
}

PolyVec Engine::normal_form(PolyVec f, std::vector<Laurent>* rep_out) const {
  require(f.size() == ambient_, "DimensionMismatch", "normal_form size");
  if (rep_out) {
    std::vector<Laurent> delta;
    PolyVec nf = nf_excluding(std::move(f), &delta, static_cast<size_t>(-1));
    delta.resize(ngens_, Laurent());
    *rep_out = std::move(delta);
    return nf;
  }
  return nf_excluding(std::move(f), nullptr, static_cast<size_t>(-1));
}

bool Engine::contains(const PolyVec& f) const {
  return is_zero(normal_form(f, nullptr));
}

void Engine::push_elem(Elem e) {
  // Sign-normalize: leading coefficient positive.
  Lead l = lead(e.v);
  if (l.lc < 0) {
    for (auto& x : e.v) x = -x;
    for (auto& x : e.rep) x = -x;
  }
  basis_.push_back(std::move(e));
}

void Engine::compute() {
  if (computed_) return;
  std::deque<std::pair<size_t, size_t>> pairs;
  auto queue_pairs_for = [&](size_t k) {
    size_t p = lead_pos(basis_[k].v);
    for (size_t i = 0; i < basis_.size(); ++i)
      if (i != k && lead_pos(basis_[i].v) == p) pairs.emplace_back(std::min(i, k), std::max(i, k));
  };
  for (size_t i = 0; i < basis_.size(); ++i) {
    Lead l = lead(basis_[i].v);
    if (l.lc < 0) {
      for (auto& x : basis_[i].v) x = -x;
      for (auto& x : basis_[i].rep) x = -x;
    }
  }
  for (size_t i = 0; i < basis_.size(); ++i) queue_pairs_for(i);

  auto process_candidate = [&](PolyVec cand, std::vector<Laurent> rep) {
    std::vector<Laurent> delta;
    PolyVec nf =
        nf_excluding(std::move(cand), track_ ? &delta : nullptr, static_cast<size_t>(-1));
    if (is_zero(nf)) return;
    Elem e;
    e.v = std::move(nf);
    if (track_) {
      rep.resize(ngens_, Laurent());
      delta.resize(ngens_, Laurent());
      for (size_t k = 0; k < ngens_; ++k) rep[k] -= delta[k];
      e.rep = std::move(rep);
    }
    push_elem(std::move(e));
    queue_pairs_for(basis_.size() - 1);
  };

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    Lead li = lead(basis_[i].v), lj = lead(basis_[j].v);
    if (li.pos != lj.pos) continue;
    int gamma = std::max(li.deg, lj.deg);
    // Build both candidates up front; push_elem may reallocate the basis.
    std::vector<std::pair<PolyVec, std::vector<Laurent>>> cands;
    {
      // S-combination kills the lcm of the leading terms.
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), li.lc.get_mpz_t(), lj.lc.get_mpz_t());
      PolyVec cand(ambient_);
      std::vector<Laurent> rep;
      Laurent ci = Laurent::term(l / li.lc, gamma - li.deg);
      Laurent cj = Laurent::term(l / lj.lc, gamma - lj.deg);
      axpy(cand, ci, basis_[i].v);
      axpy(cand, -cj, basis_[j].v);
      if (track_) {
        axpy_rep(rep, ci, basis_[i].rep);
        axpy_rep(rep, -cj, basis_[j].rep);
      }
      cands.emplace_back(std::move(cand), std::move(rep));
    }
    if (li.lc % lj.lc != 0 && lj.lc % li.lc != 0) {
      // G-combination realizes the gcd of the leading coefficients.
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), li.lc.get_mpz_t(),
                 lj.lc.get_mpz_t());
      PolyVec cand(ambient_);
      std::vector<Laurent> rep;
      Laurent ci = Laurent::term(s, gamma - li.deg);
      Laurent cj = Laurent::term(t, gamma - lj.deg);
      axpy(cand, ci, basis_[i].v);
      axpy(cand, cj, basis_[j].v);
      if (track_) {
        axpy_rep(rep, ci, basis_[i].rep);
        axpy_rep(rep, cj, basis_[j].rep);
      }
      cands.emplace_back(std::move(cand), std::move(rep));
    }
    for (auto& [cand, rep] : cands) process_candidate(std::move(cand), std::move(rep));
  }

  interreduce();
  sort_canonical();
  computed_ = true;
}

void Engine::interreduce() {
  bool changed = true;
  while (changed) {
    changed = false;
    // Drop elements whose leading term is strongly divisible by another's.
    for (size_t i = 0; i < basis_.size();) {
      Lead li = lead(basis_[i].v);
      bool drop = false;
      for (size_t j = 0; j < basis_.size(); ++j) {
        if (i == j) continue;
        Lead ljd = lead(basis_[j].v);
        if (ljd.pos == li.pos && ljd.deg <= li.deg && li.lc % ljd.lc == 0) {
          drop = true;
          break;
        }
      }
      if (drop) {
        // Fold it into its normal form; nonzero forms re-enter the basis.
        Elem e = std::move(basis_[i]);
        basis_.erase(basis_.begin() + i);
        std::vector<Laurent> acc = e.rep;
        PolyVec nf = nf_excluding(std::move(e.v), track_ ? &acc : nullptr,
                                  static_cast<size_t>(-1));
        if (!is_zero(nf)) {
          Elem ne;
          ne.v = std::move(nf);
          if (track_) ne.rep = std::move(acc);
          push_elem(std::move(ne));
        }
        changed = true;
        break;
      }
      ++i;
    }
    if (changed) continue;
    // Tail-reduce every element against the others.
    for (size_t i = 0; i < basis_.size(); ++i) {
      std::vector<Laurent> acc = basis_[i].rep;
      PolyVec nf = nf_excluding(basis_[i].v, track_ ? &acc : nullptr, i);
      if (nf != basis_[i].v) {
        if (is_zero(nf)) {
          basis_.erase(basis_.begin() + i);
        } else {
          basis_[i].v = std::move(nf);
          if (track_) basis_[i].rep = std::move(acc);
          Lead l = lead(basis_[i].v);
          if (l.lc < 0) {
            for (auto& x : basis_[i].v) x = -x;
            for (auto& x : basis_[i].rep) x = -x;
          }
        }
        changed = true;
        break;
      }
    }
  }
}

void Engine::sort_canonical() {
  std::sort(basis_.begin(), basis_.end(),
            [](const Elem& a, const Elem& b) { return vec_less(a.v, b.v); });
}

std::vector<PolyVec> strong_basis(size_t ambient, const std::vector<PolyVec>& gens) {
  Engine e(ambient, false);
  for (const auto& g : gens) e.add_generator(g);
  e.compute();
  std::vector<PolyVec> out;
  for (const auto& b : e.basis()) out.push_back(b.v);
  return out;
}

}  // namespace gb
}  // namespace strat
