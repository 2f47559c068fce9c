// Twisted S-modules, extensions of Clifford semigroups by inverse semigroups,
// transversals and crossed products A *_Lambda S.

#ifndef TPACT_MODULE_HPP_
#define TPACT_MODULE_HPP_

#include <algorithm>  // for find, sort
#include <cstddef>    // for size_t
#include <functional> // for function
#include <optional>   // for optional
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "clifford.hpp"
#include "semigroup.hpp"

namespace tpact {

  ////////////////////////////////////////////////////////////////////////
  // Twisted S-modules
  ////////////////////////////////////////////////////////////////////////

  //! Raw data (alpha, lambda, f) of a candidate twisted S-module.
  struct ModuleTables {
    InverseSemigroup  S;
    CliffordAlgebra   A;
    std::vector<elem> alpha;   // |S|, kNone off E(S)
    std::vector<elem> lambda;  // |S| x |A|
    std::vector<elem> f;       // |S| x |S|
  };

  class TwistedSModule {
   public:
    TwistedSModule() = default;

    InverseSemigroup const& S() const noexcept {
      return _t.S;
    }
    CliffordAlgebra const& A() const noexcept {
      return _t.A;
    }
    ModuleTables const& tables() const noexcept {
      return _t;
    }
    elem alpha(elem e) const {
      return _t.alpha[e];
    }
    //! The idempotent e of S with alpha(e) = a.
    elem alpha_inv(elem a) const {
      return _alpha_inv[a];
    }
    elem lambda(elem s, elem a) const {
      return _t.lambda[s * _t.A.size() + a];
    }
    elem f(elem s, elem t) const {
      return _t.f[s * _t.S.size() + t];
    }
    //! alpha(s s^-1)
    elem alpha_range(elem s) const {
      return _t.alpha[_t.S.range_idem(s)];
    }

    friend TwistedSModule verify_module(ModuleTables);

   private:
    ModuleTables      _t;
    std::vector<elem> _alpha_inv;
  };

  inline TwistedSModule verify_module(ModuleTables tables) {
    TwistedSModule M;
    M._t           = std::move(tables);
    auto const& t  = M._t;
    auto const& S  = t.S;
    auto const& A  = t.A;
    std::size_t nS = S.size(), nA = A.size();
    auto bad = [](std::string law, std::vector<elem> w) {
      detail::fail(ErrorKind::axiom_violation, std::move(law), std::move(w));
    };
    if (t.alpha.size() != nS || t.lambda.size() != nS * nA
        || t.f.size() != nS * nS) {
      detail::fail(ErrorKind::malformed_input, "module-shape");
    }
    for (elem x : t.lambda) {
      if (x >= nA) {
        detail::fail(ErrorKind::malformed_input, "lambda-range", {x});
      }
    }
    for (elem x : t.f) {
      if (x >= nA) {
        detail::fail(ErrorKind::malformed_input, "f-range", {x});
      }
    }
    M._alpha_inv.assign(nA, kNone);
    // alpha: E(S) -> E(A) is an isomorphism
    for (elem s = 0; s < nS; ++s) {
      elem a = t.alpha[s];
      if (S.is_idempotent(s) != (a != kNone)) {
        bad("alpha-domain", {s});
      }
      if (a == kNone) {
        continue;
      }
      if (a >= nA || !A.is_idempotent(a) || M._alpha_inv[a] != kNone) {
        bad("alpha-bijective", {s});
      }
      M._alpha_inv[a] = s;
    }
    for (elem e : A.idempotents()) {
      if (M._alpha_inv[e] == kNone) {
        bad("alpha-bijective", {e});
      }
    }
    for (elem e : S.idempotents()) {
      for (elem g : S.idempotents()) {
        if (t.alpha[S.mul(e, g)] != A.mul(t.alpha[e], t.alpha[g])) {
          bad("alpha-hom", {e, g});
        }
      }
    }
    auto lam  = [&](elem s, elem a) { return M.lambda(s, a); };
    auto ff   = [&](elem s, elem u) { return M.f(s, u); };
    auto alph = [&](elem e) { return M.alpha(e); };
    // f(s, t) lies in A_{alpha(s t t^-1 s^-1)}
    for (elem s = 0; s < nS; ++s) {
      for (elem u = 0; u < nS; ++u) {
        if (A.idem(ff(s, u)) != alph(S.range_idem(S.mul(s, u)))) {
          bad("f-component", {s, u});
        }
      }
    }
    for (elem s = 0; s < nS; ++s) {
      for (elem a = 0; a < nA; ++a) {
        for (elem b = 0; b < nA; ++b) {
          if (lam(s, A.mul(a, b)) != A.mul(lam(s, a), lam(s, b))) {
            bad("lambda-endomorphism", {s, a, b});
          }
        }
      }
    }
    // (i) lambda_e(a) = alpha(e) a
    for (elem e : S.idempotents()) {
      for (elem a = 0; a < nA; ++a) {
        if (lam(e, a) != A.mul(alph(e), a)) {
          bad("i", {e, a});
        }
      }
    }
    // (ii) lambda_s(alpha(e)) = alpha(s e s^-1)
    for (elem s = 0; s < nS; ++s) {
      for (elem e : S.idempotents()) {
        if (lam(s, alph(e)) != alph(S.mul3(s, e, S.inv(s)))) {
          bad("ii", {s, e});
        }
      }
    }
    // (iii) lambda_s lambda_t (a) = f(s,t) lambda_st(a) f(s,t)^-1
    for (elem s = 0; s < nS; ++s) {
      for (elem u = 0; u < nS; ++u) {
        for (elem a = 0; a < nA; ++a) {
          if (lam(s, lam(u, a)) != A.conj(ff(s, u), lam(S.mul(s, u), a))) {
            bad("iii", {s, u, a});
          }
        }
      }
    }
    // (iv) f(se, e) = alpha(s e s^-1), f(e, es) = alpha(e s s^-1)
    for (elem s = 0; s < nS; ++s) {
      for (elem e : S.idempotents()) {
        if (ff(S.mul(s, e), e) != alph(S.mul3(s, e, S.inv(s)))) {
          bad("iv", {s, e});
        }
        if (ff(e, S.mul(e, s)) != alph(S.mul3(e, s, S.inv(s)))) {
          bad("iv", {e, s});
        }
      }
    }
    // (v) lambda_s(f(t,u)) f(s,tu) = f(s,t) f(st,u)
    for (elem s = 0; s < nS; ++s) {
      for (elem u = 0; u < nS; ++u) {
        for (elem v = 0; v < nS; ++v) {
          elem lhs = A.mul(lam(s, ff(u, v)), ff(s, S.mul(u, v)));
          elem rhs = A.mul(ff(s, u), ff(S.mul(s, u), v));
          if (lhs != rhs) {
            bad("v", {s, u, v});
          }
        }
      }
    }
    // derived identities, and lambda_s in iend(A)
    for (elem s = 0; s < nS; ++s) {
      elem si = S.inv(s);
      detail::invariant(lam(s, ff(si, s)) == ff(s, si), "lambda-f-inverse",
                        {s});
      std::vector<elem> phi(nA), bar(nA);
      for (elem a = 0; a < nA; ++a) {
        detail::invariant(A.mul(M.alpha_range(s), lam(s, a)) == lam(s, a),
                          "alpha-range-absorbs", {s, a});
        phi[a] = lam(s, a);
        bar[a] = A.conj(A.inv(ff(si, s)), lam(si, a));
      }
      if (!is_rel_inverse(A, phi, bar, alph(S.domain_idem(s)))) {
        bad("lambda-iend", {s});
      }
    }
    return M;
  }

  struct SiebenFlag {
    bool                           holds = true;
    std::vector<std::vector<elem>> witnesses;  // (s, e) or (e, s) pairs
  };

  //! f(s, e) = alpha(s e s^-1) and f(e, s) = alpha(e s s^-1) throughout.
  inline SiebenFlag is_sieben(TwistedSModule const& M) {
    auto const& S = M.S();
    SiebenFlag  R;
    bool        right_ok = true, left_ok = true;
    for (elem s = 0; s < S.size(); ++s) {
      for (elem e : S.idempotents()) {
        if (M.f(s, e) != M.alpha(S.mul3(s, e, S.inv(s)))) {
          right_ok = false;
          R.witnesses.push_back({s, e});
        }
        if (M.f(e, s) != M.alpha(S.mul3(e, s, S.inv(s)))) {
          left_ok = false;
          R.witnesses.push_back({e, s});
        }
      }
    }
    // either family of identities implies the other
    detail::invariant(left_ok == right_ok, "sieben-sides");
    R.holds = left_ok && right_ok;
    return R;
  }

  //! Lambda' = (alpha, xi_g o lambda, f') with
  //! f'(s,t) = g(s) lambda_s(g(t)) f(s,t) g(st)^-1.
  inline TwistedSModule twist_module(TwistedSModule const&    M,
                                     std::vector<elem> const& g) {
    auto const&  S = M.S();
    auto const&  A = M.A();
    ModuleTables t = M.tables();
    for (elem s = 0; s < S.size(); ++s) {
      for (elem a = 0; a < A.size(); ++a) {
        t.lambda[s * A.size() + a] = A.conj(g[s], M.lambda(s, a));
      }
      for (elem u = 0; u < S.size(); ++u) {
        elem v = A.mul(A.mul(g[s], M.lambda(s, g[u])), M.f(s, u));
        t.f[s * S.size() + u] = A.mul(v, A.inv(g[S.mul(s, u)]));
      }
    }
    return verify_module(std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Extensions by S and transversals
  ////////////////////////////////////////////////////////////////////////

  //! A -i-> U -j-> S with i injective, j surjective and idempotent
  //! separating, and i(A) = j^-1(E(S)).
  struct ExtensionByS {
    CliffordAlgebra   A;
    InverseSemigroup  U;
    InverseSemigroup  S;
    std::vector<elem> i;
    std::vector<elem> j;
    std::vector<elem> i_inv;  // U -> A, kNone off i(A)
  };

  inline ExtensionByS make_extension_by_s(CliffordAlgebra A, InverseSemigroup U,
                                          InverseSemigroup  S,
                                          std::vector<elem> i,
                                          std::vector<elem> j) {
    auto bad = [](std::string law, std::vector<elem> w) {
      detail::fail(ErrorKind::axiom_violation, std::move(law), std::move(w));
    };
    if (i.size() != A.size() || j.size() != U.size()) {
      detail::fail(ErrorKind::malformed_input, "extension-shape");
    }
    if (auto w = hom_violation(A.base(), U.base(), i)) {
      bad("i-hom", *w);
    }
    if (!is_injective(i)) {
      bad("i-injective", {});
    }
    if (auto w = hom_violation(U.base(), S.base(), j)) {
      bad("j-hom", *w);
    }
    if (!is_surjective(j, S.size())) {
      bad("j-surjective", {});
    }
    for (elem e : U.idempotents()) {
      for (elem f : U.idempotents()) {
        if (e != f && j[e] == j[f]) {
          bad("j-idempotent-separating", {e, f});
        }
      }
    }
    std::vector<elem> i_inv(U.size(), kNone);
    for (elem a = 0; a < A.size(); ++a) {
      i_inv[i[a]] = a;
    }
    for (elem u = 0; u < U.size(); ++u) {
      if ((i_inv[u] != kNone) != S.is_idempotent(j[u])) {
        bad("kernel", {u});
      }
    }
    return ExtensionByS{std::move(A), std::move(U), std::move(S),
                        std::move(i), std::move(j), std::move(i_inv)};
  }

  //! A map rho: S -> U with j rho = id and rho(E(S)) in E(U).
  struct TransversalRho {
    std::vector<elem> rho;

    elem operator()(elem s) const {
      return rho[s];
    }
    bool operator==(TransversalRho const&) const = default;
  };

  inline TransversalRho make_transversal(ExtensionByS const& ext,
                                         std::vector<elem>   rho) {
    auto const& U = ext.U;
    auto const& S = ext.S;
    if (rho.size() != S.size()) {
      detail::fail(ErrorKind::malformed_input, "transversal-shape");
    }
    for (elem s = 0; s < S.size(); ++s) {
      if (rho[s] >= U.size() || ext.j[rho[s]] != s) {
        detail::fail(ErrorKind::axiom_violation, "j-rho=id", {s});
      }
      if (S.is_idempotent(s) && !U.is_idempotent(rho[s])) {
        detail::fail(ErrorKind::axiom_violation, "rho-idempotents", {s});
      }
    }
    for (elem s = 0; s < S.size(); ++s) {
      detail::invariant(U.range_idem(rho[s]) == rho[S.range_idem(s)],
                        "rho-range", {s});
    }
    return TransversalRho{std::move(rho)};
  }

  //! A pair (s, t) with s <= t but rho(s) not <= rho(t).
  inline std::optional<std::vector<elem>>
  order_violation(ExtensionByS const& ext, TransversalRho const& rho) {
    for (elem s = 0; s < ext.S.size(); ++s) {
      for (elem t = 0; t < ext.S.size(); ++t) {
        if (ext.S.leq(s, t) && !ext.U.leq(rho(s), rho(t))) {
          return std::vector<elem>{s, t};
        }
      }
    }
    return std::nullopt;
  }

  inline bool is_order_preserving(ExtensionByS const&   ext,
                                  TransversalRho const& rho) {
    return !order_violation(ext, rho).has_value();
  }

  //! The unique (a, s) with u = i(a) rho(s) and i(aa^-1) = rho(s)rho(s)^-1,
  //! confirmed by exhaustive scan.
  inline std::pair<elem, elem> factorize(ExtensionByS const&   ext,
                                         TransversalRho const& rho, elem u) {
    auto const& U = ext.U;
    elem        s = ext.j[u];
    elem        a = ext.i_inv[U.mul(u, U.inv(rho(s)))];
    if (a == kNone || U.mul(ext.i[a], rho(s)) != u
        || ext.i[ext.A.idem(a)] != U.range_idem(rho(s))) {
      detail::fail(ErrorKind::factorization_failure, "existence", {u});
    }
    std::size_t count = 0;
    for (elem b = 0; b < ext.A.size(); ++b) {
      for (elem t = 0; t < ext.S.size(); ++t) {
        if (U.mul(ext.i[b], rho(t)) == u
            && ext.i[ext.A.idem(b)] == U.range_idem(rho(t))) {
          ++count;
        }
      }
    }
    if (count != 1) {
      detail::fail(ErrorKind::factorization_failure, "uniqueness",
                   {u, elem(count)});
    }
    return {a, s};
  }

  //! The module induced by a transversal:
  //! alpha = i^-1 rho, lambda_s(a) = i^-1(rho(s) i(a) rho(s)^-1) and
  //! rho(s) rho(t) = i(f(s,t)) rho(st).
  inline TwistedSModule module_from_extension(ExtensionByS const&   ext,
                                              TransversalRho const& rho) {
    auto const&  U = ext.U;
    auto const&  S = ext.S;
    auto const&  A = ext.A;
    ModuleTables t{S, A, std::vector<elem>(S.size(), kNone),
                   std::vector<elem>(S.size() * A.size()),
                   std::vector<elem>(S.size() * S.size())};
    for (elem e : S.idempotents()) {
      t.alpha[e] = ext.i_inv[rho(e)];
    }
    for (elem s = 0; s < S.size(); ++s) {
      for (elem a = 0; a < A.size(); ++a) {
        elem v = ext.i_inv[U.mul3(rho(s), ext.i[a], U.inv(rho(s)))];
        detail::invariant(v != kNone, "conjugation-in-A", {s, a});
        t.lambda[s * A.size() + a] = v;
      }
      for (elem u = 0; u < S.size(); ++u) {
        elem su   = S.mul(s, u);
        elem comp = t.alpha[S.range_idem(su)];
        elem hit  = kNone;
        for (elem a : A.component(comp)) {
          if (U.mul(ext.i[a], rho(su)) == U.mul(rho(s), rho(u))) {
            if (hit != kNone) {
              detail::fail(ErrorKind::factorization_failure, "f-unique",
                           {s, u});
            }
            hit = a;
          }
        }
        if (hit == kNone) {
          detail::fail(ErrorKind::factorization_failure, "f-exists", {s, u});
        }
        t.f[s * S.size() + u] = hit;
      }
    }
    return verify_module(std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Crossed product A *_Lambda S
  ////////////////////////////////////////////////////////////////////////

  struct CrossedProductS {
    InverseSemigroup                    U;
    std::vector<std::pair<elem, elem>>  pairs;  // (a, s), sorted by (s, a)
    ExtensionByS                        ext;

    elem index_of(elem a, elem s) const {
      auto it = std::lower_bound(
          pairs.begin(), pairs.end(), std::pair<elem, elem>{a, s},
          [](auto const& x, auto const& y) {
            return x.second != y.second ? x.second < y.second
                                        : x.first < y.first;
          });
      if (it == pairs.end() || it->first != a || it->second != s) {
        return kNone;
      }
      return static_cast<elem>(it - pairs.begin());
    }
  };

  //! Elements a delta_s with aa^-1 = alpha(ss^-1); product
  //! a delta_s . b delta_t = a lambda_s(b) f(s,t) delta_st.
  inline CrossedProductS crossed_product_module(TwistedSModule const& M) {
    auto const&     S = M.S();
    auto const&     A = M.A();
    CrossedProductS C;
    for (elem s = 0; s < S.size(); ++s) {
      for (elem a : A.component(M.alpha_range(s))) {
        C.pairs.emplace_back(a, s);
      }
      std::sort(C.pairs.end() - A.component(M.alpha_range(s)).size(),
                C.pairs.end());
    }
    std::size_t       n = C.pairs.size();
    std::vector<elem> table(n * n);
    for (elem x = 0; x < n; ++x) {
      auto [a, s] = C.pairs[x];
      for (elem y = 0; y < n; ++y) {
        auto [b, u] = C.pairs[y];
        elem c      = A.mul(A.mul(a, M.lambda(s, b)), M.f(s, u));
        elem z      = C.index_of(c, S.mul(s, u));
        detail::invariant(z != kNone, "crossed-product-closure", {x, y});
        table[x * n + y] = z;
      }
    }
    C.U = inverse_structure(n, std::move(table));
    // (a delta_s)^-1 = f(s^-1,s)^-1 lambda_{s^-1}(a^-1) delta_{s^-1}
    for (elem x = 0; x < n; ++x) {
      auto [a, s] = C.pairs[x];
      elem si     = S.inv(s);
      elem b = A.mul(A.inv(M.f(si, s)), M.lambda(si, A.inv(a)));
      detail::invariant(C.index_of(b, si) == C.U.inv(x), "inverse-formula",
                        {x});
    }
    std::vector<elem> i(A.size()), j(n);
    for (elem a = 0; a < A.size(); ++a) {
      i[a] = C.index_of(a, M.alpha_inv(A.idem(a)));
    }
    for (elem x = 0; x < n; ++x) {
      j[x] = C.pairs[x].second;
    }
    C.ext = make_extension_by_s(A, C.U, S, std::move(i), std::move(j));
    return C;
  }

  //! rho(s) = alpha(ss^-1) delta_s
  inline TransversalRho natural_transversal(TwistedSModule const&  M,
                                            CrossedProductS const& C) {
    std::vector<elem> rho;
    for (elem s = 0; s < M.S().size(); ++s) {
      rho.push_back(C.index_of(M.alpha_range(s), s));
    }
    return make_transversal(C.ext, std::move(rho));
  }

  //! The action induced by the natural transversal:
  //! lambda_s(a) f(s,s^-1)^-1 f(s, e_a) f(s e_a, s^-1) with e_a = alpha^-1(aa^-1).
  inline elem natural_lambda(TwistedSModule const& M, elem s, elem a) {
    auto const& S  = M.S();
    auto const& A  = M.A();
    elem        si = S.inv(s);
    elem        ea = M.alpha_inv(A.idem(a));
    elem        r  = A.mul(M.lambda(s, a), A.inv(M.f(s, si)));
    r              = A.mul(r, M.f(s, ea));
    return A.mul(r, M.f(S.mul(s, ea), si));
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalence of modules
  ////////////////////////////////////////////////////////////////////////

  struct ModuleEquivalence {
    bool                             equivalent = false;
    std::optional<std::vector<elem>> g;
    std::string                      failed_clause;
    std::vector<elem>                witness;
  };

  //! Checks the clauses of equivalence for a given g: S -> A.
  inline ModuleEquivalence check_module_equivalence(TwistedSModule const& M,
                                                    TwistedSModule const& N,
                                                    std::vector<elem> const& g) {
    auto const&       S = M.S();
    auto const&       A = M.A();
    ModuleEquivalence R;
    auto              fail = [&](std::string clause, std::vector<elem> w) {
      R.failed_clause = std::move(clause);
      R.witness       = std::move(w);
      return R;
    };
    if (!(M.S().base() == N.S().base()) || !(A.base() == N.A().base())) {
      return fail("same-S-and-A", {});
    }
    for (elem e : S.idempotents()) {
      if (M.alpha(e) != N.alpha(e)) {
        return fail("alpha", {e});
      }
      if (g[e] != M.alpha(e)) {
        return fail("g-on-E", {e});
      }
    }
    for (elem s = 0; s < S.size(); ++s) {
      if (A.idem(g[s]) != M.alpha_range(s)) {
        return fail("g-component", {s});
      }
      for (elem a = 0; a < A.size(); ++a) {
        if (N.lambda(s, a) != A.conj(g[s], M.lambda(s, a))) {
          return fail("lambda", {s, a});
        }
      }
    }
    for (elem s = 0; s < S.size(); ++s) {
      for (elem t = 0; t < S.size(); ++t) {
        elem lhs = A.mul(N.f(s, t), g[S.mul(s, t)]);
        elem rhs = A.mul(A.mul(g[s], M.lambda(s, g[t])), M.f(s, t));
        if (lhs != rhs) {
          return fail("f", {s, t});
        }
      }
    }
    R.equivalent = true;
    R.g          = g;
    return R;
  }

  //! Searches for the lexicographically least g making M and N equivalent.
  inline ModuleEquivalence modules_equivalent(TwistedSModule const& M,
                                              TwistedSModule const& N,
                                              std::size_t cap = 1'000'000) {
    auto const& S = M.S();
    auto const& A = M.A();
    if (!(M.S().base() == N.S().base()) || !(A.base() == N.A().base())) {
      return ModuleEquivalence{false, std::nullopt, "same-S-and-A", {}};
    }
    for (elem e : S.idempotents()) {
      if (M.alpha(e) != N.alpha(e)) {
        return ModuleEquivalence{false, std::nullopt, "alpha", {e}};
      }
    }
    std::size_t space = 1;
    for (elem s = 0; s < S.size(); ++s) {
      space *= A.component(M.alpha_range(s)).size();
      if (space > cap) {
        detail::fail(ErrorKind::size_cap_exceeded, "max-witness",
                     {elem(cap)});
      }
    }
    // per-s candidates from the lambda clause
    std::vector<std::vector<elem>> cand(S.size());
    for (elem s = 0; s < S.size(); ++s) {
      for (elem b : A.component(M.alpha_range(s))) {
        if (S.is_idempotent(s) && b != M.alpha(s)) {
          continue;
        }
        bool ok = true;
        for (elem a = 0; a < A.size() && ok; ++a) {
          ok = N.lambda(s, a) == A.conj(b, M.lambda(s, a));
        }
        if (ok) {
          cand[s].push_back(b);
        }
      }
      if (cand[s].empty()) {
        return ModuleEquivalence{false, std::nullopt, "lambda", {s}};
      }
    }
    std::vector<elem>                g(S.size(), kNone);
    std::optional<std::vector<elem>> found;
    auto f_ok = [&](elem s, elem t) {
      elem st = S.mul(s, t);
      if (g[s] == kNone || g[t] == kNone || g[st] == kNone) {
        return true;
      }
      return A.mul(N.f(s, t), g[st])
             == A.mul(A.mul(g[s], M.lambda(s, g[t])), M.f(s, t));
    };
    std::function<void(elem)> rec = [&](elem s) {
      if (found) {
        return;
      }
      if (s == S.size()) {
        found = g;
        return;
      }
      for (elem b : cand[s]) {
        g[s]    = b;
        bool ok = true;
        for (elem t = 0; t <= s && ok; ++t) {
          ok = f_ok(s, t) && f_ok(t, s);
          for (elem u = 0; u <= s && ok; ++u) {
            if (S.mul(t, u) == s) {
              ok = f_ok(t, u);
            }
          }
        }
        if (ok) {
          rec(s + 1);
        }
        if (found) {
          return;
        }
      }
      g[s] = kNone;
    };
    rec(0);
    if (!found) {
      return ModuleEquivalence{false, std::nullopt, "f", {}};
    }
    auto R = check_module_equivalence(M, N, *found);
    detail::invariant(R.equivalent, "equivalence-witness");
    return R;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transversal enumeration
  ////////////////////////////////////////////////////////////////////////

  //! Number of transversals, or cap + 1 if it exceeds cap.
  inline std::size_t transversal_count(ExtensionByS const& ext,
                                       std::size_t         cap) {
    std::vector<std::size_t> fiber(ext.S.size(), 0);
    for (elem u = 0; u < ext.U.size(); ++u) {
      ++fiber[ext.j[u]];
    }
    std::size_t count = 1;
    for (elem s = 0; s < ext.S.size(); ++s) {
      if (!ext.S.is_idempotent(s)) {
        count *= fiber[s];
        if (count > cap) {
          return cap + 1;
        }
      }
    }
    return count;
  }

  namespace detail {
    inline std::vector<TransversalRho>
    enumerate_transversals(ExtensionByS const& ext, bool only_op,
                           std::size_t cap) {
      auto const& U = ext.U;
      auto const& S = ext.S;
      if (transversal_count(ext, cap) > cap) {
        fail(ErrorKind::size_cap_exceeded, "max-witness", {elem(cap)});
      }
      std::vector<std::vector<elem>> fiber(S.size());
      for (elem u = 0; u < U.size(); ++u) {
        if (!S.is_idempotent(ext.j[u]) || U.is_idempotent(u)) {
          fiber[ext.j[u]].push_back(u);
        }
      }
      std::vector<elem>           rho(S.size(), kNone);
      std::vector<TransversalRho> out;
      std::function<void(elem)>   rec = [&](elem s) {
        if (s == S.size()) {
          out.push_back(make_transversal(ext, rho));
          return;
        }
        for (elem u : fiber[s]) {
          rho[s]  = u;
          bool ok = true;
          if (only_op) {
            for (elem t = 0; t <= s && ok; ++t) {
              ok = (!S.leq(s, t) || U.leq(rho[s], rho[t]))
                   && (!S.leq(t, s) || U.leq(rho[t], rho[s]));
            }
          }
          if (ok) {
            rec(s + 1);
          }
        }
        rho[s] = kNone;
      };
      rec(0);
      return out;
    }
  }  // namespace detail

  inline std::vector<TransversalRho> all_transversals(ExtensionByS const& ext,
                                                      std::size_t cap
                                                      = 1'000'000) {
    return detail::enumerate_transversals(ext, false, cap);
  }

  //! Order-preserving transversals; when S is F-inverse the transversal
  //! built from chosen images of the class maxima must be among them.
  inline std::vector<TransversalRho>
  order_preserving_transversals(ExtensionByS const& ext,
                                std::size_t         cap = 1'000'000) {
    auto out = detail::enumerate_transversals(ext, true, cap);
    auto const& S = ext.S;
    auto const& U = ext.U;
    if (auto maxima = is_f_inverse(S)) {
      auto              sigma = sigma_congruence(S);
      std::vector<elem> rho(S.size(), kNone);
      for (elem e : S.idempotents()) {
        for (elem u : U.idempotents()) {
          if (ext.j[u] == e) {
            rho[e] = u;
          }
        }
      }
      for (elem m : *maxima) {
        if (rho[m] != kNone) {
          continue;
        }
        for (elem u = 0; u < U.size(); ++u) {
          if (ext.j[u] == m) {
            rho[m] = u;
            break;
          }
        }
      }
      for (elem s = 0; s < S.size(); ++s) {
        elem m = (*maxima)[sigma.class_of[s]];
        rho[s] = U.mul(rho[S.range_idem(s)], rho[m]);
      }
      auto built = make_transversal(ext, rho);
      detail::invariant(is_order_preserving(ext, built)
                            && std::find(out.begin(), out.end(), built)
                                   != out.end(),
                        "f-inverse-transversal");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalence of extensions
  ////////////////////////////////////////////////////////////////////////

  //! Checks that mu: U -> U' commutes with the extension maps; mu is then
  //! bijective and mu o rho induces the same module as rho.
  inline void extensions_equivalent_S(ExtensionByS const&       ext,
                                      ExtensionByS const&       ext2,
                                      std::vector<elem> const&  mu,
                                      TransversalRho const&     rho) {
    auto bad = [](std::string law, std::vector<elem> w) {
      detail::fail(ErrorKind::diagram_failure, std::move(law), std::move(w));
    };
    if (mu.size() != ext.U.size()) {
      bad("shape", {});
    }
    if (auto w = hom_violation(ext.U.base(), ext2.U.base(), mu)) {
      bad("mu-hom", *w);
    }
    for (elem a = 0; a < ext.A.size(); ++a) {
      if (mu[ext.i[a]] != ext2.i[a]) {
        bad("mu-i", {a});
      }
    }
    for (elem u = 0; u < ext.U.size(); ++u) {
      if (ext2.j[mu[u]] != ext.j[u]) {
        bad("j-mu", {u});
      }
    }
    if (!is_injective(mu) || !is_surjective(mu, ext2.U.size())) {
      bad("mu-bijective", {});
    }
    std::vector<elem> rho2(ext.S.size());
    for (elem s = 0; s < ext.S.size(); ++s) {
      rho2[s] = mu[rho(s)];
    }
    auto M  = module_from_extension(ext, rho);
    auto M2 = module_from_extension(ext2, make_transversal(ext2, rho2));
    if (M.tables().alpha != M2.tables().alpha
        || M.tables().lambda != M2.tables().lambda
        || M.tables().f != M2.tables().f) {
      bad("induced-module", {});
    }
  }

}  // namespace tpact

#endif  // TPACT_MODULE_HPP_
