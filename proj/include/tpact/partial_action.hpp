// Twisted partial actions of finite groups on Clifford semigroups, their
// crossed products, extensions by groups, refinements and tau-transversals.

#ifndef TPACT_PARTIAL_ACTION_HPP_
#define TPACT_PARTIAL_ACTION_HPP_

#include <algorithm>  // for sort, find
#include <cstddef>    // for size_t
#include <functional> // for function
#include <optional>   // for optional
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "clifford.hpp"
#include "module.hpp"
#include "semigroup.hpp"

namespace tpact {

  ////////////////////////////////////////////////////////////////////////
  // TwistedPartialAction
  ////////////////////////////////////////////////////////////////////////

  struct TpaTables {
    FiniteGroup                    G;
    CliffordAlgebra                A;
    std::vector<Ideal>             domain;  // D_x
    std::vector<std::vector<elem>> theta;   // theta_x on D_{x^-1}, else kNone
    std::vector<Multiplier>        w;       // w_{x,y} at x |G| + y
  };

  class TwistedPartialAction {
   public:
    TwistedPartialAction() = default;

    FiniteGroup const& G() const noexcept {
      return _t.G;
    }
    CliffordAlgebra const& A() const noexcept {
      return _t.A;
    }
    TpaTables const& tables() const noexcept {
      return _t;
    }
    Ideal const& domain(elem x) const {
      return _t.domain[x];
    }
    //! D_x D_y
    Ideal const& domain2(elem x, elem y) const {
      return _dd[x * _t.G.size() + y];
    }
    elem theta(elem x, elem a) const {
      return a == kNone ? kNone : _t.theta[x][a];
    }
    //! The inverse of theta_x, defined on D_x.
    elem theta_inv(elem x, elem a) const {
      return a == kNone ? kNone : _theta_inv[x][a];
    }
    Multiplier const& w(elem x, elem y) const {
      return _t.w[x * _t.G.size() + y];
    }
    Multiplier const& w_inv(elem x, elem y) const {
      return _w_inv[x * _t.G.size() + y];
    }
    //! a w_{x,y}
    elem wr(elem x, elem y, elem a) const {
      return a == kNone ? kNone : w(x, y).right[a];
    }
    //! w_{x,y} a
    elem wl(elem x, elem y, elem a) const {
      return a == kNone ? kNone : w(x, y).left[a];
    }

    friend TwistedPartialAction verify_tpa(TpaTables);

   private:
    TpaTables                      _t;
    std::vector<std::vector<elem>> _theta_inv;
    std::vector<Multiplier>        _w_inv;
    std::vector<Ideal>             _dd;
  };

  namespace detail {
    inline elem at(std::vector<elem> const& m, elem a) {
      return a == kNone || a >= m.size() ? kNone : m[a];
    }
  }  // namespace detail

  inline TwistedPartialAction verify_tpa(TpaTables tables) {
    TwistedPartialAction P;
    P._t           = std::move(tables);
    auto&       t  = P._t;
    auto const& G  = t.G;
    auto const& A  = t.A;
    std::size_t nG = G.size(), nA = A.size();
    auto bad = [](std::string law, std::vector<elem> w) {
      detail::fail(ErrorKind::axiom_violation, std::move(law), std::move(w));
    };
    if (t.domain.size() != nG || t.theta.size() != nG
        || t.w.size() != nG * nG) {
      detail::fail(ErrorKind::malformed_input, "tpa-shape");
    }
    for (elem x = 0; x < nG; ++x) {
      if (t.theta[x].size() != nA) {
        detail::fail(ErrorKind::malformed_input, "theta-shape", {x});
      }
      if (t.domain[x].elements.empty()) {
        bad("domain-nonempty", {x});
      }
      t.domain[x] = make_ideal(A, t.domain[x].elements);
      if (!t.domain[x].idempotent) {
        bad("i", {x});
      }
    }
    P._dd.resize(nG * nG);
    for (elem x = 0; x < nG; ++x) {
      for (elem y = 0; y < nG; ++y) {
        P._dd[x * nG + y] = ideal_product(A, t.domain[x], t.domain[y]);
      }
    }
    for (elem x = 0; x < nG; ++x) {
      for (elem y = 0; y < nG; ++y) {
        if (!(P._dd[x * nG + y] == P._dd[y * nG + x])) {
          bad("i", {x, y});
        }
        detail::invariant(P._dd[x * nG + y]
                              == ideal_intersection(A, t.domain[x],
                                                    t.domain[y]),
                          "domain-product-is-intersection", {x, y});
      }
    }
    elem one = G.identity();
    if (t.domain[one].size() != nA) {
      bad("ii", {one});
    }
    for (elem a = 0; a < nA; ++a) {
      if (t.theta[one][a] != a) {
        bad("ii", {one, a});
      }
    }
    // theta_x: D_{x^-1} -> D_x is an isomorphism
    P._theta_inv.assign(nG, std::vector<elem>(nA, kNone));
    for (elem x = 0; x < nG; ++x) {
      auto const& src = t.domain[G.inv(x)];
      auto const& dst = t.domain[x];
      for (elem a = 0; a < nA; ++a) {
        elem b = t.theta[x][a];
        if (src.contains(a) != (b != kNone)) {
          bad("theta-domain", {x, a});
        }
        if (b == kNone) {
          continue;
        }
        if (!dst.contains(b) || P._theta_inv[x][b] != kNone) {
          bad("theta-bijective", {x, a});
        }
        P._theta_inv[x][b] = a;
      }
      if (src.size() != dst.size()) {
        bad("theta-bijective", {x});
      }
      for (elem a : src.elements) {
        for (elem b : src.elements) {
          if (t.theta[x][A.mul(a, b)]
              != A.mul(t.theta[x][a], t.theta[x][b])) {
            bad("theta-hom", {x, a, b});
          }
        }
      }
    }
    // (iii) theta_x(D_{x^-1} D_y) = D_x D_xy
    for (elem x = 0; x < nG; ++x) {
      for (elem y = 0; y < nG; ++y) {
        auto const&       src = P._dd[G.inv(x) * nG + y];
        std::vector<elem> img;
        for (elem a : src.elements) {
          img.push_back(t.theta[x][a]);
        }
        std::sort(img.begin(), img.end());
        if (img != P._dd[x * nG + G.mul(x, y)].elements) {
          bad("iii", {x, y});
        }
      }
    }
    // w_{x,y} is an invertible multiplier of D_x D_xy
    P._w_inv.resize(nG * nG);
    for (elem x = 0; x < nG; ++x) {
      for (elem y = 0; y < nG; ++y) {
        auto const& I = P._dd[x * nG + G.mul(x, y)];
        auto const& w = t.w[x * nG + y];
        if (auto v = multiplier_violation(A, I, w)) {
          auto wit = v->second;
          wit.insert(wit.begin(), {x, y});
          bad("multiplier " + v->first, wit);
        }
        auto inv = multiplier_inverse(A, I, w);
        if (!inv) {
          bad("multiplier-invertible", {x, y});
        }
        P._w_inv[x * nG + y] = *inv;
      }
    }
    // (v) w_{1,x} = w_{x,1} = id
    for (elem x = 0; x < nG; ++x) {
      auto id = identity_multiplier(A, t.domain[x]);
      if (!(t.w[one * nG + x] == id) || !(t.w[x * nG + one] == id)) {
        bad("v", {x});
      }
    }
    // (iv) theta_x theta_y (s) = w_{x,y} theta_xy(s) w_{x,y}^-1
    for (elem x = 0; x < nG; ++x) {
      for (elem y = 0; y < nG; ++y) {
        elem xy = G.mul(x, y);
        for (elem s : P.domain2(G.inv(y), G.inv(xy)).elements) {
          elem lhs = P.theta(x, P.theta(y, s));
          elem rhs = P.wl(x, y, detail::at(P.w_inv(x, y).right,
                                           P.theta(xy, s)));
          if (lhs == kNone || lhs != rhs) {
            bad("iv", {x, y, s});
          }
        }
      }
    }
    // (vi) theta_x(s w_{y,z}) w_{x,yz} = theta_x(s) w_{x,y} w_{xy,z}
    for (elem x = 0; x < nG; ++x) {
      for (elem y = 0; y < nG; ++y) {
        auto const& Dxy = P.domain2(G.inv(x), y);
        for (elem z = 0; z < nG; ++z) {
          elem yz = G.mul(y, z), xy = G.mul(x, y);
          for (elem s : Dxy.elements) {
            if (!P.domain(yz).contains(s)) {
              continue;
            }
            elem lhs = P.wr(x, yz, P.theta(x, P.wr(y, z, s)));
            elem rhs = P.wr(xy, z, P.wr(x, y, P.theta(x, s)));
            if (lhs == kNone || lhs != rhs) {
              bad("vi", {x, y, z, s});
            }
          }
        }
      }
    }
    return P;
  }

  //! theta_x^-1(a) = w_{x^-1,x}^-1 theta_{x^-1}(a) w_{x^-1,x}, checked
  //! against the inverse of the table.
  inline elem theta_inverse(TwistedPartialAction const& P, elem x, elem a) {
    elem xi = P.G().inv(x);
    elem v  = detail::at(P.w_inv(xi, x).left, P.wr(xi, x, P.theta(xi, a)));
    detail::invariant(v != kNone && v == P.theta_inv(x, a),
                      "theta-inverse-formula", {x, a});
    return v;
  }

  ////////////////////////////////////////////////////////////////////////
  // Extensions by groups
  ////////////////////////////////////////////////////////////////////////

  //! A -i-> U -j-> G with i injective, j surjective and i(A) = j^-1(1).
  struct ExtensionByG {
    CliffordAlgebra   A;
    InverseSemigroup  U;
    FiniteGroup       G;
    std::vector<elem> i;
    std::vector<elem> j;
    std::vector<elem> i_inv;
  };

  inline ExtensionByG make_extension_by_g(CliffordAlgebra A, InverseSemigroup U,
                                          FiniteGroup G, std::vector<elem> i,
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
    if (auto w = hom_violation(U.base(), G.base(), j)) {
      bad("j-hom", *w);
    }
    if (!is_surjective(j, G.size())) {
      bad("j-surjective", {});
    }
    std::vector<elem> i_inv(U.size(), kNone);
    for (elem a = 0; a < A.size(); ++a) {
      i_inv[i[a]] = a;
    }
    for (elem u = 0; u < U.size(); ++u) {
      if ((i_inv[u] != kNone) != (j[u] == G.identity())) {
        bad("kernel", {u});
      }
    }
    return ExtensionByG{std::move(A), std::move(U), std::move(G),
                        std::move(i), std::move(j), std::move(i_inv)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Crossed product A *_Theta G
  ////////////////////////////////////////////////////////////////////////

  struct CrossedProductG {
    InverseSemigroup                   U;
    std::vector<std::pair<elem, elem>> pairs;  // (a, x), sorted by (x, a)
    ExtensionByG                       ext;

    elem index_of(elem a, elem x) const {
      auto it = std::lower_bound(
          pairs.begin(), pairs.end(), std::pair<elem, elem>{a, x},
          [](auto const& p, auto const& q) {
            return p.second != q.second ? p.second < q.second
                                        : p.first < q.first;
          });
      if (it == pairs.end() || it->first != a || it->second != x) {
        return kNone;
      }
      return static_cast<elem>(it - pairs.begin());
    }
  };

  //! s delta_x . t delta_y = theta_x(theta_x^-1(s) t) w_{x,y} delta_xy
  inline CrossedProductG crossed_product_action(TwistedPartialAction const& P) {
    auto const&     G = P.G();
    auto const&     A = P.A();
    CrossedProductG C;
    for (elem x = 0; x < G.size(); ++x) {
      for (elem a : P.domain(x).elements) {
        C.pairs.emplace_back(a, x);
      }
    }
    std::size_t       n = C.pairs.size();
    std::vector<elem> table(n * n);
    for (elem p = 0; p < n; ++p) {
      auto [s, x] = C.pairs[p];
      elem pre    = P.theta_inv(x, s);
      for (elem q = 0; q < n; ++q) {
        auto [t, y] = C.pairs[q];
        elem c      = P.wr(x, y, P.theta(x, A.mul(pre, t)));
        elem r      = C.index_of(c, G.mul(x, y));
        detail::invariant(r != kNone, "crossed-product-closure", {p, q});
        table[p * n + q] = r;
      }
    }
    C.U = inverse_structure(n, std::move(table));
    for (elem p = 0; p < n; ++p) {
      auto [a, x] = C.pairs[p];
      elem xi     = G.inv(x);
      // (a delta_x)^-1 = w_{x^-1,x}^-1 theta_{x^-1}(a^-1) delta_{x^-1}
      elem b = detail::at(P.w_inv(xi, x).left, P.theta(xi, A.inv(a)));
      detail::invariant(C.index_of(b, xi) == C.U.inv(p), "inverse-formula",
                        {p});
      detail::invariant(C.U.range_idem(p)
                            == C.index_of(A.idem(a), G.identity()),
                        "range-idempotent", {p});
      detail::invariant(C.U.domain_idem(p)
                            == C.index_of(theta_inverse(P, x, A.idem(a)),
                                          G.identity()),
                        "domain-idempotent", {p});
      detail::invariant(C.U.is_idempotent(p) == (x == G.identity()
                                                 && A.is_idempotent(a)),
                        "idempotents", {p});
    }
    std::vector<elem> i(A.size()), j(n);
    for (elem a = 0; a < A.size(); ++a) {
      i[a] = C.index_of(a, G.identity());
    }
    for (elem p = 0; p < n; ++p) {
      j[p] = C.pairs[p].second;
    }
    C.ext = make_extension_by_g(A, C.U, G, std::move(i), std::move(j));
    return C;
  }

  ////////////////////////////////////////////////////////////////////////
  // Restriction to idempotents
  ////////////////////////////////////////////////////////////////////////

  struct RestrictedAction {
    TwistedPartialAction action;  // on E(A), untwisted
    std::vector<elem>    embed;   // E(A) index -> A index
    std::vector<elem>    index;   // A index -> E(A) index or kNone
  };

  inline RestrictedAction restrict_to_idempotents(TwistedPartialAction const& P) {
    auto const&      A = P.A();
    auto const&      G = P.G();
    RestrictedAction R;
    R.embed = A.idempotents();
    R.index.assign(A.size(), kNone);
    for (elem k = 0; k < R.embed.size(); ++k) {
      R.index[R.embed[k]] = k;
    }
    std::size_t m = R.embed.size();
    TpaTables   t;
    t.G = G;
    t.A = restrict_clifford(A, R.embed);
    for (elem x = 0; x < G.size(); ++x) {
      std::vector<elem> dom;
      for (elem e : P.domain(x).elements) {
        if (A.is_idempotent(e)) {
          dom.push_back(R.index[e]);
        }
      }
      t.domain.push_back(make_ideal(t.A, dom));
      std::vector<elem> th(m, kNone);
      for (elem e : P.domain(G.inv(x)).elements) {
        if (A.is_idempotent(e)) {
          elem img = R.index[P.theta(x, e)];
          detail::invariant(img != kNone, "theta-idempotents", {x, e});
          th[R.index[e]] = img;
        }
      }
      t.theta.push_back(std::move(th));
    }
    for (elem x = 0; x < G.size(); ++x) {
      for (elem y = 0; y < G.size(); ++y) {
        // E(D_x D_xy) = E(D_x) E(D_xy)
        auto const& I = P.domain2(x, G.mul(x, y));
        std::vector<elem> dom;
        for (elem e : I.elements) {
          if (A.is_idempotent(e)) {
            dom.push_back(R.index[e]);
          }
        }
        auto EI = ideal_product(t.A, t.domain[x], t.domain[G.mul(x, y)]);
        std::sort(dom.begin(), dom.end());
        detail::invariant(EI.elements == dom, "restricted-domain-product",
                          {x, y});
        t.w.push_back(identity_multiplier(t.A, EI));
      }
    }
    R.action = verify_tpa(std::move(t));
    return R;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalence of twisted partial actions
  ////////////////////////////////////////////////////////////////////////

  struct TpaEquivalence {
    bool                                    equivalent = false;
    std::optional<std::vector<Multiplier>>  eps;
    std::string                             failed_clause;
    std::vector<elem>                       witness;
  };

  namespace detail {
    // theta'_x(s) = eps_x theta_x(s) eps_x^-1 on D_{x^-1}
    inline bool conj_clause(TwistedPartialAction const& P,
                            TwistedPartialAction const& Q, elem x,
                            Multiplier const& e, Multiplier const& einv,
                            elem* witness = nullptr) {
      for (elem s : P.domain(P.G().inv(x)).elements) {
        if (Q.theta(x, s) != at(e.left, at(einv.right, P.theta(x, s)))) {
          if (witness != nullptr) {
            *witness = s;
          }
          return false;
        }
      }
      return true;
    }

    // theta'_x(s) w'_{x,y} eps_xy = eps_x theta_x(s eps_y) w_{x,y}
    inline bool cocycle_clause(TwistedPartialAction const& P,
                               TwistedPartialAction const& Q,
                               std::vector<Multiplier> const& eps, elem x,
                               elem y, elem* witness = nullptr) {
      auto const& G  = P.G();
      elem        xy = G.mul(x, y);
      for (elem s : P.domain2(G.inv(x), y).elements) {
        elem lhs = at(eps[xy].right, Q.wr(x, y, Q.theta(x, s)));
        elem rhs
            = P.wr(x, y, at(eps[x].left, P.theta(x, at(eps[y].right, s))));
        if (lhs == kNone || lhs != rhs) {
          if (witness != nullptr) {
            *witness = s;
          }
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  inline TpaEquivalence
  check_tpa_equivalence(TwistedPartialAction const&    P,
                        TwistedPartialAction const&    Q,
                        std::vector<Multiplier> const& eps) {
    auto const&    G = P.G();
    TpaEquivalence R;
    auto           fail = [&](std::string c, std::vector<elem> w) {
      R.failed_clause = std::move(c);
      R.witness       = std::move(w);
      return R;
    };
    if (!(G.base() == Q.G().base()) || !(P.A().base() == Q.A().base())) {
      return fail("same-G-and-A", {});
    }
    for (elem x = 0; x < G.size(); ++x) {
      if (!(P.domain(x) == Q.domain(x))) {
        return fail("i", {x});
      }
    }
    for (elem x = 0; x < G.size(); ++x) {
      auto inv = multiplier_inverse(P.A(), P.domain(x), eps[x]);
      if (multiplier_violation(P.A(), P.domain(x), eps[x]) || !inv) {
        return fail("eps-unit", {x});
      }
      elem s = kNone;
      if (!detail::conj_clause(P, Q, x, eps[x], *inv, &s)) {
        return fail("ii", {x, s});
      }
    }
    for (elem x = 0; x < G.size(); ++x) {
      for (elem y = 0; y < G.size(); ++y) {
        elem s = kNone;
        if (!detail::cocycle_clause(P, Q, eps, x, y, &s)) {
          return fail("iii", {x, y, s});
        }
      }
    }
    R.equivalent = true;
    R.eps        = eps;
    return R;
  }

  //! Searches units eps_x of M(D_x) in enumeration order.
  inline TpaEquivalence tpas_equivalent(TwistedPartialAction const& P,
                                        TwistedPartialAction const& Q,
                                        std::size_t mult_cap    = 10,
                                        std::size_t witness_cap = 1'000'000) {
    auto const& G = P.G();
    if (!(G.base() == Q.G().base()) || !(P.A().base() == Q.A().base())) {
      return TpaEquivalence{false, std::nullopt, "same-G-and-A", {}};
    }
    for (elem x = 0; x < G.size(); ++x) {
      if (!(P.domain(x) == Q.domain(x))) {
        return TpaEquivalence{false, std::nullopt, "i", {x}};
      }
    }
    std::vector<std::vector<Multiplier>> cand(G.size());
    std::size_t                          space = 1;
    for (elem x = 0; x < G.size(); ++x) {
      auto M = multiplier_monoid(P.A(), P.domain(x), mult_cap);
      space = std::min(space * M.units.size(), witness_cap + 1);
      if (space > witness_cap) {
        detail::fail(ErrorKind::size_cap_exceeded, "max-witness",
                     {elem(witness_cap)});
      }
      for (std::size_t k : M.units) {
        auto const& e    = M.elements[k];
        auto        einv = *multiplier_inverse(P.A(), P.domain(x), e);
        if (detail::conj_clause(P, Q, x, e, einv)) {
          cand[x].push_back(e);
        }
      }
      if (cand[x].empty()) {
        return TpaEquivalence{false, std::nullopt, "ii", {x}};
      }
    }
    std::vector<Multiplier>                eps(G.size());
    std::vector<bool>                      set(G.size(), false);
    std::optional<std::vector<Multiplier>> found;
    std::function<void(elem)>              rec = [&](elem x) {
      if (x == G.size()) {
        found = eps;
        return;
      }
      for (auto const& e : cand[x]) {
        eps[x]  = e;
        set[x]  = true;
        bool ok = true;
        for (elem y = 0; y <= x && ok; ++y) {
          for (elem z = 0; z <= x && ok; ++z) {
            if (set[G.mul(y, z)] && (y == x || z == x || G.mul(y, z) == x)) {
              ok = detail::cocycle_clause(P, Q, eps, y, z);
            }
          }
        }
        if (ok) {
          rec(x + 1);
        }
        if (found) {
          return;
        }
      }
      set[x] = false;
    };
    rec(0);
    if (!found) {
      return TpaEquivalence{false, std::nullopt, "iii", {}};
    }
    auto R = check_tpa_equivalence(P, Q, *found);
    detail::invariant(R.equivalent, "tpa-equivalence-witness");
    return R;
  }

  //! The action eps Theta eps^-1 with the twist forced by equivalence.
  inline TwistedPartialAction
  conjugate_tpa(TwistedPartialAction const&    P,
                std::vector<Multiplier> const& eps) {
    auto const&                 G = P.G();
    auto const&                 A = P.A();
    std::vector<Multiplier>     eps_inv;
    for (elem x = 0; x < G.size(); ++x) {
      auto inv = multiplier_inverse(A, P.domain(x), eps[x]);
      if (!inv) {
        detail::fail(ErrorKind::axiom_violation, "eps-unit", {x});
      }
      eps_inv.push_back(*inv);
    }
    TpaTables t = P.tables();
    for (elem x = 0; x < G.size(); ++x) {
      for (elem s : P.domain(G.inv(x)).elements) {
        t.theta[x][s]
            = detail::at(eps[x].left, detail::at(eps_inv[x].right,
                                                 P.theta(x, s)));
      }
    }
    for (elem x = 0; x < G.size(); ++x) {
      std::vector<elem> th_inv(A.size(), kNone);
      for (elem s : P.domain(G.inv(x)).elements) {
        if (t.theta[x][s] != kNone) {
          th_inv[t.theta[x][s]] = s;
        }
      }
      for (elem y = 0; y < G.size(); ++y) {
        elem  xy = G.mul(x, y);
        auto& w  = t.w[x * G.size() + y];
        std::fill(w.left.begin(), w.left.end(), kNone);
        std::fill(w.right.begin(), w.right.end(), kNone);
        // t w' = eps_x theta_x(s eps_y) w_{x,y} eps_xy^-1, t = theta'_x(s)
        for (elem u : P.domain2(x, xy).elements) {
          elem s = th_inv[u];
          elem v = detail::at(eps[y].right, s);
          v      = P.wr(x, y, detail::at(eps[x].left, P.theta(x, v)));
          w.right[u] = detail::at(eps_inv[xy].right, v);
        }
        // w' t = ((t^-1) w'^-1)^-1
        std::vector<elem> right_inv(A.size(), kNone);
        for (elem u : P.domain2(x, xy).elements) {
          if (w.right[u] != kNone) {
            right_inv[w.right[u]] = u;
          }
        }
        for (elem u : P.domain2(x, xy).elements) {
          elem r    = right_inv[A.inv(u)];
          w.left[u] = r == kNone ? kNone : A.inv(r);
        }
      }
    }
    auto Q = verify_tpa(std::move(t));
    detail::invariant(check_tpa_equivalence(P, Q, eps).equivalent,
                      "conjugate-equivalent");
    return Q;
  }

  //! Transports an action along a group isomorphism nu: G -> H.
  inline TwistedPartialAction relabel_group(TwistedPartialAction const& P,
                                            FiniteGroup const&          H,
                                            std::vector<elem> const&    nu) {
    auto const& G = P.G();
    detail::invariant(!hom_violation(G.base(), H.base(), nu)
                          && is_injective(nu) && nu.size() == H.size(),
                      "relabel-isomorphism");
    TpaTables t;
    t.G = H;
    t.A = P.A();
    t.domain.resize(G.size());
    t.theta.resize(G.size());
    t.w.resize(G.size() * G.size());
    for (elem x = 0; x < G.size(); ++x) {
      t.domain[nu[x]] = P.domain(x);
      t.theta[nu[x]]  = P.tables().theta[x];
      for (elem y = 0; y < G.size(); ++y) {
        t.w[nu[x] * G.size() + nu[y]] = P.w(x, y);
      }
    }
    return verify_tpa(std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Refinement and tau-transversals
  ////////////////////////////////////////////////////////////////////////

  //! U / rho_A for the kernel normal system {i(A)_e}: the E-unitary
  //! semigroup S with pi: U -> S and kappa: S -> G.
  struct RefinedExtension {
    ExtensionByG      ext;
    InverseSemigroup  S;
    std::vector<elem> pi;
    std::vector<elem> kappa;
    ExtensionByS      as_s;  // A -> U -> S
  };

  inline RefinedExtension refine_extension(ExtensionByG const& ext) {
    auto const&        U = ext.U;
    KernelNormalSystem N;
    for (elem e : U.idempotents()) {
      detail::invariant(ext.i_inv[e] != kNone, "idempotents-in-kernel", {e});
      N[e];
    }
    for (elem a = 0; a < ext.A.size(); ++a) {
      N[U.range_idem(ext.i[a])].push_back(ext.i[a]);
    }
    auto             Q = congruence_from_kns(U, N);
    RefinedExtension R;
    R.ext = ext;
    R.S   = inverse_structure(Q.quotient);
    R.pi  = Q.congruence.class_of;
    R.kappa.assign(R.S.size(), kNone);
    for (elem u = 0; u < U.size(); ++u) {
      elem& k = R.kappa[R.pi[u]];
      detail::invariant(k == kNone || k == ext.j[u], "kappa-well-defined",
                        {u});
      k = ext.j[u];
    }
    make_homomorphism(R.S.base(), ext.G.base(), R.kappa, "kappa-hom");
    // second description: pi(u) = pi(v) iff j(u) = j(v) and uu^-1 = vv^-1
    std::vector<elem> label(U.size());
    for (elem u = 0; u < U.size(); ++u) {
      label[u] = ext.j[u] * elem(U.size()) + U.range_idem(u);
    }
    auto C2 = partition_from_labels(label);
    detail::invariant(C2.class_of == Q.congruence.class_of,
                      "refinement-kernel");
    auto S2 = quotient_semigroup(U.base(), C2);
    detail::invariant(find_isomorphism(R.S.base(), S2, 1u << 16).has_value(),
                      "refinement-unique");
    if (!is_e_unitary(R.S)) {
      detail::fail(ErrorKind::internal_invariant_violation,
                   "refinement-e-unitary", *e_unitary_witness(R.S));
    }
    auto sigma = sigma_congruence(R.S);
    for (elem s = 0; s < R.S.size(); ++s) {
      for (elem t = 0; t < R.S.size(); ++t) {
        detail::invariant(sigma.related(s, t) == (R.kappa[s] == R.kappa[t]),
                          "ker-kappa-sigma", {s, t});
      }
    }
    R.as_s = make_extension_by_s(ext.A, U, R.S, ext.i, R.pi);
    return R;
  }

  //! tau(x, e) in U(x, e) = {u : j(u) = x, uu^-1 = e}, kNone where empty.
  struct TransversalTau {
    std::size_t       nU = 0;
    std::vector<elem> tau;  // |G| x |U|

    elem operator()(elem x, elem e) const {
      return tau[x * nU + e];
    }
    bool operator==(TransversalTau const&) const = default;
  };

  //! Whether U(x, e) is nonempty.
  inline bool fiber_nonempty(ExtensionByG const& ext, elem x, elem e) {
    for (elem u = 0; u < ext.U.size(); ++u) {
      if (ext.j[u] == x && ext.U.range_idem(u) == e) {
        return true;
      }
    }
    return false;
  }

  inline TransversalTau make_tau(ExtensionByG const& ext,
                                 std::vector<elem>   tau) {
    auto const&    U = ext.U;
    auto const&    G = ext.G;
    TransversalTau T{U.size(), std::move(tau)};
    if (T.tau.size() != G.size() * U.size()) {
      detail::fail(ErrorKind::malformed_input, "tau-shape");
    }
    for (elem x = 0; x < G.size(); ++x) {
      for (elem e = 0; e < U.size(); ++e) {
        elem u    = T(x, e);
        bool need = U.is_idempotent(e) && fiber_nonempty(ext, x, e);
        if (need != (u != kNone)) {
          detail::fail(ErrorKind::axiom_violation, "tau-domain", {x, e});
        }
        if (u != kNone
            && (u >= U.size() || ext.j[u] != x || U.range_idem(u) != e)) {
          detail::fail(ErrorKind::axiom_violation, "tau-fiber", {x, e});
        }
      }
    }
    for (elem e : U.idempotents()) {
      if (T(G.identity(), e) != e) {
        detail::fail(ErrorKind::axiom_violation, "tau(1,e)=e", {e});
      }
    }
    return T;
  }

  //! A pair u <= v with tau(j(u), uu^-1) not below tau(j(v), vv^-1).
  inline std::optional<std::vector<elem>>
  tau_order_violation(ExtensionByG const& ext, TransversalTau const& T) {
    auto const& U = ext.U;
    for (elem u = 0; u < U.size(); ++u) {
      for (elem v = 0; v < U.size(); ++v) {
        if (U.leq(u, v)
            && !U.leq(T(ext.j[u], U.range_idem(u)),
                      T(ext.j[v], U.range_idem(v)))) {
          return std::vector<elem>{u, v};
        }
      }
    }
    return std::nullopt;
  }

  //! tau(x, e) = rho(pi(u)) for any u in U(x, e).
  inline TransversalTau tau_from_rho(RefinedExtension const& R,
                                     TransversalRho const&   rho) {
    auto const&       U = R.ext.U;
    std::vector<elem> tau(R.ext.G.size() * U.size(), kNone);
    for (elem u = 0; u < U.size(); ++u) {
      elem& slot = tau[R.ext.j[u] * U.size() + U.range_idem(u)];
      detail::invariant(slot == kNone || slot == rho(R.pi[u]),
                        "tau-well-defined", {u});
      slot = rho(R.pi[u]);
    }
    return make_tau(R.ext, std::move(tau));
  }

  //! rho(s) = tau(kappa(s), pi^-1(ss^-1)).
  inline TransversalRho rho_from_tau(RefinedExtension const& R,
                                     TransversalTau const&   T) {
    auto const&       U = R.ext.U;
    std::vector<elem> lift(R.S.size(), kNone);
    for (elem e : U.idempotents()) {
      lift[R.pi[e]] = e;
    }
    std::vector<elem> rho(R.S.size());
    for (elem s = 0; s < R.S.size(); ++s) {
      rho[s] = T(R.kappa[s], lift[R.S.range_idem(s)]);
    }
    return make_transversal(R.as_s, std::move(rho));
  }

  //! Every (tau, rho) pair, with round trips and the matching of the two
  //! order conditions checked.
  inline std::vector<std::pair<TransversalTau, TransversalRho>>
  tau_rho_correspondence(RefinedExtension const& R,
                         std::size_t             cap = 1'000'000) {
    std::vector<std::pair<TransversalTau, TransversalRho>> out;
    for (auto const& rho : all_transversals(R.as_s, cap)) {
      auto tau = tau_from_rho(R, rho);
      detail::invariant(rho_from_tau(R, tau) == rho, "rho-tau-rho");
      detail::invariant(is_order_preserving(R.as_s, rho)
                            == !tau_order_violation(R.ext, tau).has_value(),
                        "order-conditions-match");
      out.emplace_back(std::move(tau), rho);
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (std::size_t l = 0; l < k; ++l) {
        detail::invariant(!(out[k].first == out[l].first), "tau-injective");
      }
    }
    return out;
  }

  //! The action built from an order-preserving tau.
  inline TwistedPartialAction tpa_from_tau(ExtensionByG const&   ext,
                                           TransversalTau const& T) {
    if (auto w = tau_order_violation(ext, T)) {
      detail::fail(ErrorKind::not_admissible, "tau-order", *w);
    }
    auto const& U = ext.U;
    auto const& G = ext.G;
    auto const& A = ext.A;
    TpaTables   t;
    t.G = G;
    t.A = A;
    for (elem x = 0; x < G.size(); ++x) {
      std::vector<elem> dom;
      for (elem a = 0; a < A.size(); ++a) {
        if (fiber_nonempty(ext, x, ext.i[A.idem(a)])) {
          dom.push_back(a);
        }
      }
      t.domain.push_back(make_ideal(A, dom));
    }
    for (elem x = 0; x < G.size(); ++x) {
      std::vector<elem> th(A.size(), kNone);
      for (elem a : t.domain[G.inv(x)].elements) {
        elem u = T(G.inv(x), ext.i[A.idem(a)]);
        elem v = T(x, U.domain_idem(u));
        th[a]  = ext.i_inv[U.mul3(v, ext.i[a], U.inv(v))];
        detail::invariant(th[a] != kNone, "theta-in-A", {x, a});
      }
      t.theta.push_back(std::move(th));
    }
    for (elem x = 0; x < G.size(); ++x) {
      for (elem y = 0; y < G.size(); ++y) {
        elem xy = G.mul(x, y);
        auto I  = ideal_product(A, t.domain[x], t.domain[xy]);
        Multiplier w{std::vector<elem>(A.size(), kNone),
                     std::vector<elem>(A.size(), kNone)};
        for (elem a : I.elements) {
          elem e     = ext.i[A.idem(a)];
          elem u     = T(x, e);
          elem v     = T(y, U.mul3(U.inv(u), e, u));
          elem omega = ext.i_inv[U.mul3(u, v, U.inv(T(xy, e)))];
          detail::invariant(omega != kNone, "omega-in-A", {x, y, a});
          w.left[a]  = A.mul(omega, a);
          w.right[a] = A.mul(a, omega);
        }
        t.w.push_back(std::move(w));
      }
    }
    return verify_tpa(std::move(t));
  }

  //! tau(x, e delta_1) = e delta_x
  inline TransversalTau natural_tau(CrossedProductG const& C) {
    auto const&       U = C.U;
    auto const&       G = C.ext.G;
    std::vector<elem> tau(G.size() * U.size(), kNone);
    for (elem e : U.idempotents()) {
      elem a = C.pairs[e].first;
      for (elem x = 0; x < G.size(); ++x) {
        tau[x * U.size() + e] = C.index_of(a, x);
      }
    }
    return make_tau(C.ext, std::move(tau));
  }

  struct AdmissibilityReport {
    bool                          admissible = false;
    std::optional<TransversalTau> tau;
    std::optional<TransversalRho> rho;
    bool                          f_inverse = false;
    std::vector<bool>             coset_max;  // per x in G
    RefinedExtension              refined;
  };

  inline AdmissibilityReport is_admissible(ExtensionByG const& ext,
                                           std::size_t cap = 1'000'000) {
    AdmissibilityReport R;
    R.refined   = refine_extension(ext);
    auto const& S = R.refined.S;
    auto const& U = ext.U;
    auto        ops = order_preserving_transversals(R.refined.as_s, cap);
    R.admissible    = !ops.empty();
    if (R.admissible) {
      R.rho = ops.front();
      R.tau = tau_from_rho(R.refined, ops.front());
    }
    R.f_inverse = is_f_inverse(S).has_value();
    detail::invariant(!R.f_inverse || R.admissible, "f-inverse-admissible");
    // kappa^-1(x) has a maximum iff j^-1(x) = u_x i(A) for some u_x
    for (elem x = 0; x < ext.G.size(); ++x) {
      std::vector<elem> fiber;
      for (elem u = 0; u < U.size(); ++u) {
        if (ext.j[u] == x) {
          fiber.push_back(u);
        }
      }
      bool coset = false;
      for (elem ux : fiber) {
        std::vector<elem> prod;
        for (elem a = 0; a < ext.A.size(); ++a) {
          prod.push_back(U.mul(ux, ext.i[a]));
        }
        std::sort(prod.begin(), prod.end());
        prod.erase(std::unique(prod.begin(), prod.end()), prod.end());
        if (prod == fiber) {
          coset = true;
          break;
        }
      }
      bool has_max = false;
      for (elem m = 0; m < S.size() && !has_max; ++m) {
        if (R.refined.kappa[m] != x) {
          continue;
        }
        has_max = true;
        for (elem s = 0; s < S.size(); ++s) {
          if (R.refined.kappa[s] == x && !S.leq(s, m)) {
            has_max = false;
            break;
          }
        }
      }
      detail::invariant(coset == has_max, "coset-maximum", {x});
      R.coset_max.push_back(coset);
    }
    return R;
  }

}  // namespace tpact

#endif  // TPACT_PARTIAL_ACTION_HPP_
