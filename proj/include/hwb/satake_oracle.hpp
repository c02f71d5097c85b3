#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gln_model.hpp"

namespace hwb {

// Brute-force unnormalized Satake of (z)_K for the GL_n model, n <= 3.
// The coefficient of e^{lambda'} counts the K_B-cosets inside B ∩ K z K whose
// diagonal has valuation vector lambda'; representatives are z' u with the
// strict upper entries of u running over principal-part residues, and
// membership tested through cartan_invariant alone.
inline GroupAlgebraElement satake_counting_oracle(const LambdaVector& lambda, int p) {
  int n = static_cast<int>(lambda.size());
  if (n > 3) throw std::invalid_argument("satake_counting_oracle: n <= 3 only");
  if (!is_dominant_lambda(lambda))
    throw std::invalid_argument("satake_counting_oracle: lambda must be dominant");
  int lo = lambda.back(), hi = lambda.front();
  if (hi - lo > 6) throw std::invalid_argument("satake_counting_oracle: spread too large");
  long sum = 0;
  for (int x : lambda) sum += x;

  std::vector<int> target_nu_dom = nu(lambda);  // nu(z) dominant rep = sorted desc of -lambda
  std::sort(target_nu_dom.begin(), target_nu_dom.end(), std::greater<int>());

  GroupAlgebraElement out(n);

  // enumerate candidate lambda' in the box with matching sum and dominated orbit
  std::vector<int> lp(n, lo);
  while (true) {
    long s = 0;
    for (int x : lp) s += x;
    if (s == sum) {
      std::vector<int> nup_dom = nu(lp);
      std::sort(nup_dom.begin(), nup_dom.end(), std::greater<int>());
      if (dominance_leq(nup_dom, target_nu_dom)) {
        // count cosets: entry (i,j) runs over residues mod pi^{lp[j]-lp[i]}
        // with valuation at least lo - lp[i]
        struct Slot {
          int i, j, emin, emax;  // exponents emin..emax-1
        };
        std::vector<Slot> slots;
        long tuples = 1;
        bool feasible = true;
        for (int i = 0; i < n && feasible; ++i)
          for (int j = i + 1; j < n; ++j) {
            int emin = lo - lp[i], emax = lp[j] - lp[i];
            if (emin >= emax) { slots.push_back({i, j, 0, 0}); continue; }
            slots.push_back({i, j, emin, emax});
            for (int t = emin; t < emax; ++t) {
              tuples *= p;
              if (tuples > 4'000'000L) { feasible = false; break; }
            }
          }
        if (!feasible) throw std::invalid_argument("satake_counting_oracle: enumeration too large");
        GMatrix zp = GMatrix::diag_pi(lp, p);
        // flat base-p odometer over all slot digits
        std::vector<std::pair<std::size_t, int>> digit_home;  // (slot index, exponent)
        for (std::size_t t = 0; t < slots.size(); ++t)
          for (int e = slots[t].emin; e < slots[t].emax; ++e) digit_home.push_back({t, e});
        std::vector<int> flat(digit_home.size(), 0);
        long count = 0;
        while (true) {
          GMatrix u = GMatrix::identity(n, p);
          for (std::size_t t = 0; t < slots.size(); ++t) {
            if (slots[t].emin >= slots[t].emax) continue;
            int shift = std::min(0, slots[t].emin);
            std::vector<int> cs(slots[t].emax - shift, 0);
            bool nonzero = false;
            for (std::size_t d = 0; d < flat.size(); ++d)
              if (digit_home[d].first == t && flat[d]) {
                cs[digit_home[d].second - shift] = flat[d];
                nonzero = true;
              }
            if (nonzero)
              u.at(slots[t].i, slots[t].j) = LocalScalar(FpPoly(p, cs), FpPoly::monomial(p, -shift));
          }
          if (cartan_invariant(zp * u) == lambda) ++count;
          std::size_t d = 0;
          while (d < flat.size() && ++flat[d] == p) flat[d++] = 0;
          if (d == flat.size()) break;
        }
        if (count > 0) out.add_term(lp, LaurentScalar(count));
      }
    }
    int d = 0;
    while (d < n && ++lp[d] > hi) lp[d++] = lo;
    if (d == n) break;
  }
  return out;
}

// Memoizing wrapper; chi lifting for GL_3 queries repeated classes.
inline const GroupAlgebraElement& satake_counting_cached(const LambdaVector& lambda, int p) {
  static std::map<std::pair<LambdaVector, int>, GroupAlgebraElement> cache;
  auto key = std::make_pair(lambda, p);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, satake_counting_oracle(lambda, p)).first;
  return it->second;
}

}  // namespace hwb
