#include "kummer/scanner.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

namespace kummer {

unsigned scan_threads() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("KUMMER_THREADS")) {
    long v = std::atol(env);
    if (v >= 1 && v < 1024) n = static_cast<unsigned>(v);
  }
  return n;
}

namespace {

// polynomial compiled to coefficient-indexed evaluation plans
struct CompiledPoly {
  struct Term {
    std::uint32_t coeff;
    std::array<std::uint8_t, 6> exp;
  };
  std::vector<Term> terms;

  static CompiledPoly compile(const F2Poly& p, Var first_var, int n_vars) {
    CompiledPoly cp;
    for (auto& [m, c] : p.t) {
      Term t{c.bits, {}};
      for (auto& [v, e] : m.vp) {
        if (v < first_var || v >= first_var + n_vars)
          throw std::invalid_argument("scan polynomial uses unexpected variable " + var_name(v));
        t.exp[v - first_var] = static_cast<std::uint8_t>(e);
      }
      cp.terms.push_back(t);
    }
    return cp;
  }

  std::uint32_t eval(const BinaryField* F, const std::uint32_t* coords, int n_vars) const {
    std::uint32_t acc = 0;
    for (auto& t : terms) {
      std::uint32_t v = t.coeff;
      for (int i = 0; i < n_vars && v; ++i)
        for (int e = 0; e < t.exp[i]; ++e) v = F->mul_bits(v, coords[i]);
      acc ^= v;
    }
    return acc;
  }
};

int matrix_rank_bits(const BinaryField* F, std::vector<std::uint32_t> m, int rows, int cols) {
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int p = rank;
    while (p < rows && m[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    for (int j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[rank * cols + j]);
    std::uint32_t inv = F->inv_bits(m[rank * cols + c]);
    for (int i = 0; i < rows; ++i) {
      if (i == rank || m[i * cols + c] == 0) continue;
      std::uint32_t f = F->mul_bits(m[i * cols + c], inv);
      for (int j = c; j < cols; ++j)
        m[i * cols + j] ^= F->mul_bits(f, m[rank * cols + j]);
    }
    ++rank;
  }
  return rank;
}

// Enumerate P^n(F) in canonical order: leading-one position from the last
// coordinate to the first, free coordinates counting up as base-q integers.
// Calls fn(coords) for every point; ranges allow parallel splits.
template <class Fn>
void enumerate_points(const BinaryField* F, int n, int lead, std::uint64_t lo, std::uint64_t hi,
                      Fn&& fn) {
  std::uint64_t q = F->order();
  int free_coords = n - lead;
  std::vector<std::uint32_t> c(n + 1, 0);
  c[lead] = 1;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < free_coords; ++i) {
      c[lead + 1 + i] = static_cast<std::uint32_t>(rest % q);
      rest /= q;
    }
    fn(c.data());
  }
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

SingularReport singular_scan(const std::vector<F2Poly>& polys, int n, const BinaryField* F,
                             Var first_var) {
  if (n != 3 && n != 5) throw std::invalid_argument("ambient dimension must be 3 or 5");
  std::uint64_t q = F->order();
  std::uint64_t limit = n == 3 ? (1ull << 16) : (1ull << 8);
  if (q > limit) {
    std::uint64_t npts = 0;
    for (int l = 0; l <= n; ++l) npts += pow_u64(q, n - l);
    throw std::runtime_error("budget exceeded: P^" + std::to_string(n) + " over " +
                             F->spec_string() + " has " + std::to_string(npts) + " points");
  }
  const int nv = n + 1;
  const int c = static_cast<int>(polys.size());
  std::vector<CompiledPoly> eqs, jac;
  for (auto& p : polys) {
    eqs.push_back(CompiledPoly::compile(p, first_var, nv));
    for (int i = 0; i < nv; ++i)
      jac.push_back(CompiledPoly::compile(p.derivative(static_cast<Var>(first_var + i)),
                                          first_var, nv));
  }
  const bool hypersurface = (c == 1);

  auto t0 = std::chrono::steady_clock::now();
  SingularReport rep;
  rep.F = F;
  rep.ambient_dim = n;
  rep.complete_intersection = !hypersurface;

  struct Shard {
    std::vector<ProjPoint> sing;
    std::uint64_t on_variety = 0;
    std::uint64_t scanned = 0;
  };

  unsigned nthreads = scan_threads();
  for (int lead = n; lead >= 0; --lead) {
    std::uint64_t total = pow_u64(q, n - lead);
    unsigned nt = total < 4096 ? 1 : nthreads;
    std::vector<Shard> shards(nt);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) {
      std::uint64_t lo = total * t / nt, hi = total * (t + 1) / nt;
      pool.emplace_back([&, t, lo, hi] {
        Shard& sh = shards[t];
        enumerate_points(F, n, lead, lo, hi, [&](const std::uint32_t* coords) {
          ++sh.scanned;
          for (int e = 0; e < c; ++e)
            if (eqs[e].eval(F, coords, nv) != 0) return;
          ++sh.on_variety;
          bool singular;
          if (hypersurface) {
            singular = true;
            for (int i = 0; i < nv && singular; ++i)
              if (jac[i].eval(F, coords, nv) != 0) singular = false;
          } else {
            std::vector<std::uint32_t> m(c * nv);
            for (int e = 0; e < c; ++e)
              for (int i = 0; i < nv; ++i) m[e * nv + i] = jac[e * nv + i].eval(F, coords, nv);
            singular = matrix_rank_bits(F, std::move(m), c, nv) < c;
          }
          if (singular) {
            ProjPoint p;
            for (int i = 0; i < nv; ++i) p.push_back(F->elem(coords[i]));
            sh.sing.push_back(std::move(p));
          }
        });
      });
    }
    for (auto& th : pool) th.join();
    for (auto& sh : shards) {
      rep.telemetry.points_scanned += sh.scanned;
      rep.telemetry.points_on_variety += sh.on_variety;
      for (auto& p : sh.sing) rep.singular_points.push_back(std::move(p));
    }
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.telemetry.seconds = std::chrono::duration<double>(t1 - t0).count();
  if (rep.telemetry.seconds > 0)
    rep.telemetry.points_per_second = rep.telemetry.points_scanned / rep.telemetry.seconds;
  return rep;
}

std::vector<ProjPoint> variety_points(const std::vector<F2Poly>& polys, int n,
                                      const BinaryField* F, Var first_var) {
  const int nv = n + 1;
  std::vector<CompiledPoly> eqs;
  for (auto& p : polys) eqs.push_back(CompiledPoly::compile(p, first_var, nv));
  std::vector<ProjPoint> out;
  std::uint64_t q = F->order();
  for (int lead = n; lead >= 0; --lead) {
    std::uint64_t total = pow_u64(q, n - lead);
    enumerate_points(F, n, lead, 0, total, [&](const std::uint32_t* coords) {
      for (auto& e : eqs)
        if (e.eval(F, coords, nv) != 0) return;
      ProjPoint p;
      for (int i = 0; i < nv; ++i) p.push_back(F->elem(coords[i]));
      out.push_back(std::move(p));
    });
  }
  return out;
}

MembershipReport membership_scan(const std::vector<ProjPoint>& source,
                                 const std::vector<F2Poly>& map, Var map_first_var,
                                 const std::vector<F2Poly>& target, Var target_first_var) {
  MembershipReport rep;
  rep.sources = source.size();
  for (auto& s : source) {
    const BinaryField* F = nullptr;
    for (auto& c : s)
      if (c.F) F = c.F;
    std::map<Var, F2k> a;
    for (std::size_t i = 0; i < s.size(); ++i)
      a[static_cast<Var>(map_first_var + i)] = s[i];
    ProjPoint img;
    bool zero = true;
    for (auto& mp : map) {
      F2k v = mp.eval(a, F->zero());
      zero = zero && v.is_zero();
      img.push_back(v);
    }
    if (zero) {
      rep.indeterminacy.push_back(s);
      continue;
    }
    ++rep.mapped;
    std::map<Var, F2k> ai;
    for (std::size_t i = 0; i < img.size(); ++i)
      ai[static_cast<Var>(target_first_var + i)] = img[i];
    bool ok = true;
    for (auto& tp : target)
      if (!tp.eval(ai, F->zero()).is_zero()) ok = false;
    if (ok)
      ++rep.on_target;
    else
      rep.failures.push_back(s);
  }
  return rep;
}

}  // namespace kummer
