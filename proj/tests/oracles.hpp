// Brute-force reference computations used to cross-check the library.
// They work directly on multiplication tables and share no code with it
// beyond the table type.

#ifndef TPACT_TESTS_ORACLES_HPP_
#define TPACT_TESTS_ORACLES_HPP_

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tpact/semigroup.hpp"

namespace oracle {

  using tpact::elem;
  using Table = std::vector<std::vector<elem>>;

  inline Table table_of(tpact::FiniteSemigroup const& S) {
    Table t(S.size(), std::vector<elem>(S.size()));
    for (elem a = 0; a < S.size(); ++a) {
      for (elem b = 0; b < S.size(); ++b) {
        t[a][b] = S.mul(a, b);
      }
    }
    return t;
  }

  inline std::string read_corpus(std::string const& name) {
    std::ifstream      in(std::string(TPACT_CORPUS_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline bool is_idempotent(Table const& t, elem a) {
    return t[a][a] == a;
  }

  inline std::vector<elem> idempotents(Table const& t) {
    std::vector<elem> out;
    for (elem a = 0; a < t.size(); ++a) {
      if (is_idempotent(t, a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  //! All b with aba = a and bab = b.
  inline std::vector<elem> inverses(Table const& t, elem a) {
    std::vector<elem> out;
    for (elem b = 0; b < t.size(); ++b) {
      if (t[t[a][b]][a] == a && t[t[b][a]][b] == b) {
        out.push_back(b);
      }
    }
    return out;
  }

  //! s <= t iff s = e t for some idempotent e.
  inline bool natural_leq(Table const& t, elem s, elem u) {
    for (elem e : idempotents(t)) {
      if (t[e][u] == s) {
        return true;
      }
    }
    return false;
  }

  inline bool is_group(Table const& t) {
    auto E = idempotents(t);
    if (E.size() != 1) {
      return false;
    }
    elem one = E[0];
    for (elem a = 0; a < t.size(); ++a) {
      if (t[one][a] != a || t[a][one] != a) {
        return false;
      }
      bool has_inv = false;
      for (elem b = 0; b < t.size(); ++b) {
        has_inv = has_inv || (t[a][b] == one && t[b][a] == one);
      }
      if (!has_inv) {
        return false;
      }
    }
    return true;
  }

  //! Every set partition of {0..n-1} as a label vector.
  inline void for_each_partition(std::size_t n,
                                 std::function<void(std::vector<elem> const&)>
                                     fn) {
    std::vector<elem>               label(n, 0);
    std::function<void(elem, elem)> rec = [&](elem k, elem blocks) {
      if (k == n) {
        fn(label);
        return;
      }
      for (elem b = 0; b <= blocks; ++b) {
        label[k] = b;
        rec(k + 1, std::max(blocks, elem(b + 1)));
      }
    };
    rec(0, 0);
  }

  inline bool is_congruence(Table const& t, std::vector<elem> const& label) {
    std::size_t n = t.size();
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        if (label[a] != label[b]) {
          continue;
        }
        for (elem c = 0; c < n; ++c) {
          if (label[t[a][c]] != label[t[b][c]]
              || label[t[c][a]] != label[t[c][b]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  inline Table quotient(Table const& t, std::vector<elem> const& label) {
    elem  k = *std::max_element(label.begin(), label.end()) + 1;
    Table q(k, std::vector<elem>(k));
    for (elem a = 0; a < t.size(); ++a) {
      for (elem b = 0; b < t.size(); ++b) {
        q[label[a]][label[b]] = label[t[a][b]];
      }
    }
    return q;
  }

  //! All congruences with a group quotient.
  inline std::vector<std::vector<elem>> group_congruences(Table const& t) {
    std::vector<std::vector<elem>> out;
    for_each_partition(t.size(), [&](std::vector<elem> const& label) {
      if (is_congruence(t, label) && is_group(quotient(t, label))) {
        out.push_back(label);
      }
    });
    return out;
  }

  //! The least group congruence, as the intersection of all of them.
  inline std::vector<elem> least_group_congruence(Table const& t) {
    auto              all = group_congruences(t);
    std::size_t       n   = t.size();
    std::vector<elem> label(n, tpact::kNone);
    elem              next = 0;
    for (elem a = 0; a < n; ++a) {
      if (label[a] != tpact::kNone) {
        continue;
      }
      label[a] = next;
      for (elem b = a + 1; b < n; ++b) {
        bool together = true;
        for (auto const& c : all) {
          together = together && c[a] == c[b];
        }
        if (together) {
          label[b] = next;
        }
      }
      ++next;
    }
    return label;
  }

  inline bool same_partition(std::vector<elem> const& x,
                             std::vector<elem> const& y) {
    if (x.size() != y.size()) {
      return false;
    }
    for (elem a = 0; a < x.size(); ++a) {
      for (elem b = 0; b < x.size(); ++b) {
        if ((x[a] == x[b]) != (y[a] == y[b])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Isomorphism by trying every permutation.
  inline bool isomorphic(Table const& s, Table const& t) {
    if (s.size() != t.size()) {
      return false;
    }
    std::vector<elem> p(s.size());
    std::iota(p.begin(), p.end(), 0);
    do {
      bool ok = true;
      for (elem a = 0; a < s.size() && ok; ++a) {
        for (elem b = 0; b < s.size() && ok; ++b) {
          ok = p[s[a][b]] == t[p[a]][p[b]];
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
  }

  //! Every map a -> phi(a) into t that respects the products, by counting
  //! through all n^m maps.
  inline std::vector<std::vector<elem>> homomorphisms(Table const& s,
                                                      Table const& t) {
    std::vector<std::vector<elem>> out;
    std::size_t                    m = s.size(), n = t.size();
    std::vector<elem>              phi(m, 0);
    while (true) {
      bool ok = true;
      for (elem a = 0; a < m && ok; ++a) {
        for (elem b = 0; b < m && ok; ++b) {
          ok = phi[s[a][b]] == t[phi[a]][phi[b]];
        }
      }
      if (ok) {
        out.push_back(phi);
      }
      std::size_t k = 0;
      while (k < m && ++phi[k] == n) {
        phi[k++] = 0;
      }
      if (k == m) {
        break;
      }
    }
    return out;
  }

  //! Whether u lies in the image of f and is a two-sided identity on it.
  inline bool identity_of_image(Table const& t, std::vector<elem> const& f,
                                elem u) {
    bool in_image = false;
    for (elem b : f) {
      in_image = in_image || b == u;
      if (t[u][b] != b || t[b][u] != b) {
        return false;
      }
    }
    return in_image;
  }

  //! Endomorphisms phi with an endomorphism psi and idempotent e such that
  //! psi phi = e., phi psi = phi(e)., e is the identity of psi(A) and phi(e)
  //! the identity of phi(A).
  inline std::size_t relatively_invertible_count(Table const& t) {
    auto        ends  = homomorphisms(t, t);
    std::size_t n     = t.size();
    std::size_t count = 0;
    for (auto const& phi : ends) {
      bool found = false;
      for (elem e : idempotents(t)) {
        for (auto const& psi : ends) {
          bool ok = identity_of_image(t, psi, e)
                    && identity_of_image(t, phi, phi[e]);
          for (elem a = 0; a < n && ok; ++a) {
            ok = psi[phi[a]] == t[e][a] && phi[psi[a]] == t[phi[e]][a];
          }
          found = found || ok;
        }
      }
      count += found ? 1 : 0;
    }
    return count;
  }

  //! The unique inverse of a, assuming t is an inverse semigroup.
  inline elem inverse_of(Table const& t, elem a) {
    return inverses(t, a).at(0);
  }

  //! Raw module data checked against the defining identities: alpha an
  //! isomorphism E(S) -> E(A), f(s,t) in the component of alpha(st(st)^-1),
  //! each lambda_s relatively invertible, and identities (i)-(v) on lambda
  //! and f. ends lists the endomorphisms of A.
  inline bool module_axioms(Table const& S, Table const& A,
                            std::vector<elem> const& alpha,
                            std::vector<elem> const& lambda,
                            std::vector<elem> const& f,
                            std::vector<std::vector<elem>> const& ends) {
    std::size_t nS = S.size(), nA = A.size();
    auto lam = [&](elem s, elem a) { return lambda[s * nA + a]; };
    auto ff  = [&](elem s, elem u) { return f[s * nS + u]; };
    auto sinv = [&](elem s) { return inverse_of(S, s); };
    auto ainv = [&](elem a) { return inverse_of(A, a); };
    auto rng  = [&](elem s) { return S[s][sinv(s)]; };
    auto ES = idempotents(S), EA = idempotents(A);
    if (ES.size() != EA.size()) {
      return false;
    }
    std::set<elem> image;
    for (elem e : ES) {
      if (alpha[e] >= nA || !is_idempotent(A, alpha[e])) {
        return false;
      }
      image.insert(alpha[e]);
      for (elem g : ES) {
        if (alpha[S[e][g]] != A[alpha[e]][alpha[g]]) {
          return false;
        }
      }
    }
    if (image.size() != ES.size()) {
      return false;
    }
    auto in_component = [&](elem a, elem e) {
      return A[a][ainv(a)] == e;
    };
    for (elem s = 0; s < nS; ++s) {
      for (elem u = 0; u < nS; ++u) {
        if (!in_component(ff(s, u), alpha[rng(S[s][u])])) {
          return false;
        }
      }
      std::vector<elem> phi(nA);
      for (elem a = 0; a < nA; ++a) {
        phi[a] = lam(s, a);
      }
      bool rel_inv = false;
      for (elem e : EA) {
        for (auto const& psi : ends) {
          bool ok = identity_of_image(A, psi, e)
                    && identity_of_image(A, phi, phi[e]);
          for (elem a = 0; a < nA && ok; ++a) {
            ok = psi[phi[a]] == A[e][a] && phi[psi[a]] == A[phi[e]][a];
          }
          rel_inv = rel_inv || ok;
        }
      }
      if (!rel_inv
          || std::find(ends.begin(), ends.end(), phi) == ends.end()) {
        return false;
      }
    }
    for (elem e : ES) {
      for (elem a = 0; a < nA; ++a) {
        if (lam(e, a) != A[alpha[e]][a]) {
          return false;  // (i)
        }
      }
      for (elem s = 0; s < nS; ++s) {
        if (lam(s, alpha[e]) != alpha[S[S[s][e]][sinv(s)]]) {
          return false;  // (ii)
        }
        elem se = S[s][e], es = S[e][s];
        if (ff(se, e) != alpha[S[se][sinv(s)]]
            || ff(e, es) != alpha[S[es][sinv(s)]]) {
          return false;  // (iv)
        }
      }
    }
    for (elem s = 0; s < nS; ++s) {
      for (elem u = 0; u < nS; ++u) {
        elem c = ff(s, u), su = S[s][u];
        for (elem a = 0; a < nA; ++a) {
          if (lam(s, lam(u, a)) != A[A[c][lam(su, a)]][ainv(c)]) {
            return false;  // (iii)
          }
        }
        for (elem v = 0; v < nS; ++v) {
          if (A[lam(s, ff(u, v))][ff(s, S[u][v])]
              != A[ff(s, u)][ff(su, v)]) {
            return false;  // (v)
          }
        }
      }
    }
    return true;
  }

  //! Nonempty subsets closed under multiplication by anything.
  inline std::vector<std::vector<elem>> ideals(Table const& t) {
    std::vector<std::vector<elem>> out;
    std::size_t                    n = t.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      bool ok = true;
      for (elem a = 0; a < n && ok; ++a) {
        if (!(mask >> a & 1)) {
          continue;
        }
        for (elem b = 0; b < n && ok; ++b) {
          ok = (mask >> t[a][b] & 1) && (mask >> t[b][a] & 1);
        }
      }
      if (ok) {
        std::vector<elem> I;
        for (elem a = 0; a < n; ++a) {
          if (mask >> a & 1) {
            I.push_back(a);
          }
        }
        out.push_back(I);
      }
    }
    return out;
  }

  //! Pairs of maps (L, R) on an ideal I with L(ab) = L(a)b, R(ab) = aR(b)
  //! and aL(b) = R(a)b, found by enumerating all |I|^|I| maps per side.
  inline std::size_t multiplier_count(Table const& t,
                                      std::vector<elem> const& I) {
    std::size_t                    m = I.size();
    std::vector<std::vector<elem>> maps;
    std::vector<elem>              pick(m, 0);
    while (true) {
      std::vector<elem> f(t.size(), tpact::kNone);
      for (elem k = 0; k < m; ++k) {
        f[I[k]] = I[pick[k]];
      }
      maps.push_back(f);
      std::size_t k = 0;
      while (k < m && ++pick[k] == m) {
        pick[k++] = 0;
      }
      if (k == m) {
        break;
      }
    }
    std::vector<std::vector<elem>> lefts, rights;
    for (auto const& f : maps) {
      bool l = true, r = true;
      for (elem a : I) {
        for (elem b : I) {
          l = l && f[t[a][b]] == t[f[a]][b];
          r = r && f[t[a][b]] == t[a][f[b]];
        }
      }
      if (l) {
        lefts.push_back(f);
      }
      if (r) {
        rights.push_back(f);
      }
    }
    std::size_t count = 0;
    for (auto const& L : lefts) {
      for (auto const& R : rights) {
        bool ok = true;
        for (elem a : I) {
          for (elem b : I) {
            ok = ok && t[a][L[b]] == t[R[a]][b];
          }
        }
        count += ok ? 1 : 0;
      }
    }
    return count;
  }

  //! Isomorphisms between ideals eA and fA over idempotents e, f.
  inline std::size_t principal_ideal_iso_count(Table const& t) {
    std::size_t count = 0;
    for (elem e : idempotents(t)) {
      for (elem f : idempotents(t)) {
        std::set<elem> Ie, If;
        for (elem a = 0; a < t.size(); ++a) {
          Ie.insert(t[e][a]);
          If.insert(t[f][a]);
        }
        if (Ie.size() != If.size()) {
          continue;
        }
        std::vector<elem> src(Ie.begin(), Ie.end()), dst(If.begin(),
                                                         If.end());
        do {
          bool ok = true;
          for (std::size_t a = 0; a < src.size() && ok; ++a) {
            for (std::size_t b = 0; b < src.size() && ok; ++b) {
              elem           ab = t[src[a]][src[b]];
              std::size_t    k  = std::find(src.begin(), src.end(), ab)
                              - src.begin();
              ok = dst[k] == t[dst[a]][dst[b]];
            }
          }
          count += ok ? 1 : 0;
        } while (std::next_permutation(dst.begin(), dst.end()));
      }
    }
    return count;
  }

  //! Sorted multiset of element orders in a group table.
  inline std::vector<std::size_t> order_census(Table const& t) {
    auto                     E   = idempotents(t);
    elem                     one = E.at(0);
    std::vector<std::size_t> out;
    for (elem a = 0; a < t.size(); ++a) {
      std::size_t k = 1;
      for (elem p = a; p != one; p = t[p][a]) {
        ++k;
      }
      out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace oracle

#endif  // TPACT_TESTS_ORACLES_HPP_
