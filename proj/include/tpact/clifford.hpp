// Clifford semigroups, their ideals, multipliers and relatively invertible
// endomorphisms.

#ifndef TPACT_CLIFFORD_HPP_
#define TPACT_CLIFFORD_HPP_

#include <algorithm>  // for sort, find
#include <cstddef>    // for size_t
#include <map>        // for map
#include <optional>   // for optional
#include <vector>     // for vector

#include "morphisms.hpp"
#include "semigroup.hpp"

namespace tpact {

  ////////////////////////////////////////////////////////////////////////
  // CliffordAlgebra
  ////////////////////////////////////////////////////////////////////////

  //! An inverse semigroup with aa^-1 = a^-1a and central idempotents,
  //! i.e. a semilattice of groups A_e.
  class CliffordAlgebra {
   public:
    CliffordAlgebra() = default;

    InverseSemigroup const& inverse() const noexcept {
      return _S;
    }
    FiniteSemigroup const& base() const noexcept {
      return _S.base();
    }
    std::size_t size() const noexcept {
      return _S.size();
    }
    elem mul(elem a, elem b) const {
      return _S.mul(a, b);
    }
    elem mul3(elem a, elem b, elem c) const {
      return _S.mul3(a, b, c);
    }
    elem inv(elem a) const {
      return _S.inv(a);
    }
    bool is_idempotent(elem a) const {
      return _S.is_idempotent(a);
    }
    std::vector<elem> const& idempotents() const noexcept {
      return _S.idempotents();
    }
    //! The idempotent e with a in A_e.
    elem idem(elem a) const {
      return _S.range_idem(a);
    }
    std::vector<elem> const& component(elem e) const {
      return _components.at(e);
    }
    //! b a b^-1
    elem conj(elem b, elem a) const {
      return mul3(b, a, inv(b));
    }

    friend CliffordAlgebra certify_clifford(InverseSemigroup const&);

   private:
    InverseSemigroup                    _S;
    std::map<elem, std::vector<elem>>   _components;
  };

  inline CliffordAlgebra certify_clifford(InverseSemigroup const& S) {
    for (elem a = 0; a < S.size(); ++a) {
      if (S.range_idem(a) != S.domain_idem(a)) {
        detail::fail(ErrorKind::not_clifford, "aa^-1=a^-1a", {a});
      }
    }
    for (elem e : S.idempotents()) {
      for (elem a = 0; a < S.size(); ++a) {
        if (S.mul(e, a) != S.mul(a, e)) {
          detail::fail(ErrorKind::not_clifford, "central-idempotents",
                       {e, a});
        }
      }
    }
    CliffordAlgebra A;
    A._S = S;
    for (elem a = 0; a < S.size(); ++a) {
      A._components[S.range_idem(a)].push_back(a);
    }
    for (auto const& [e, Ae] : A._components) {
      for (auto const& [f, Af] : A._components) {
        for (elem a : Ae) {
          for (elem b : Af) {
            detail::invariant(S.range_idem(S.mul(a, b)) == S.mul(e, f),
                              "component-product", {a, b});
          }
        }
      }
    }
    return A;
  }

  inline CliffordAlgebra make_clifford(FiniteSemigroup const& S) {
    return certify_clifford(inverse_structure(S));
  }

  //! Restriction of A to a subset closed under products and inverses.
  inline CliffordAlgebra restrict_clifford(CliffordAlgebra const&   A,
                                           std::vector<elem> const& elems) {
    return make_clifford(restrict_table(A.base(), elems));
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////

  struct Ideal {
    std::vector<elem> elements;  // sorted
    std::vector<bool> member;
    bool              idempotent = false;
    elem              unit       = kNone;  // u with I = uA, if unital

    bool contains(elem a) const {
      return a < member.size() && member[a];
    }
    std::size_t size() const noexcept {
      return elements.size();
    }
    bool operator==(Ideal const& that) const {
      return elements == that.elements;
    }
  };

  //! Validates closure under multiplication by A on both sides.
  inline Ideal make_ideal(CliffordAlgebra const& A, std::vector<elem> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    Ideal I;
    I.member.assign(A.size(), false);
    for (elem a : elems) {
      if (a >= A.size()) {
        detail::fail(ErrorKind::malformed_input, "ideal-range", {a});
      }
      I.member[a] = true;
    }
    I.elements = std::move(elems);
    for (elem a : I.elements) {
      for (elem x = 0; x < A.size(); ++x) {
        if (!I.member[A.mul(a, x)] || !I.member[A.mul(x, a)]) {
          detail::fail(ErrorKind::axiom_violation, "ideal-closure", {a, x});
        }
      }
    }
    std::vector<bool> square(A.size(), false);
    for (elem a : I.elements) {
      for (elem b : I.elements) {
        square[A.mul(a, b)] = true;
      }
    }
    I.idempotent = square == I.member;
    for (elem u : A.idempotents()) {
      if (!I.member[u]) {
        continue;
      }
      bool generates = true;
      for (elem a : I.elements) {
        generates = generates && A.mul(u, a) == a;
      }
      if (generates) {
        I.unit = u;
        break;
      }
    }
    return I;
  }

  //! eA for an idempotent e.
  inline Ideal principal_ideal(CliffordAlgebra const& A, elem e) {
    std::vector<elem> elems;
    for (elem a = 0; a < A.size(); ++a) {
      elems.push_back(A.mul(e, a));
    }
    return make_ideal(A, elems);
  }

  inline Ideal ideal_product(CliffordAlgebra const& A, Ideal const& I,
                             Ideal const& J) {
    std::vector<elem> elems;
    for (elem a : I.elements) {
      for (elem b : J.elements) {
        elems.push_back(A.mul(a, b));
      }
    }
    return make_ideal(A, elems);
  }

  inline Ideal ideal_intersection(CliffordAlgebra const& A, Ideal const& I,
                                  Ideal const& J) {
    std::vector<elem> elems;
    for (elem a : I.elements) {
      if (J.contains(a)) {
        elems.push_back(a);
      }
    }
    return make_ideal(A, elems);
  }

  //! All nonempty ideals: unions of components over nonempty down-closed
  //! sets of idempotents.
  inline std::vector<Ideal> ideals(CliffordAlgebra const& A) {
    auto const& E = A.idempotents();
    if (E.size() > 20) {
      detail::fail(ErrorKind::size_cap_exceeded, "ideal-enumeration",
                   {elem(E.size())});
    }
    std::vector<Ideal> out;
    for (std::size_t mask = 1; mask < (std::size_t(1) << E.size()); ++mask) {
      bool down_closed = true;
      for (std::size_t i = 0; i < E.size() && down_closed; ++i) {
        if (!(mask >> i & 1)) {
          continue;
        }
        for (std::size_t j = 0; j < E.size(); ++j) {
          if (A.mul(E[i], E[j]) == E[j] && !(mask >> j & 1)) {
            down_closed = false;
            break;
          }
        }
      }
      if (!down_closed) {
        continue;
      }
      std::vector<elem> elems;
      for (std::size_t i = 0; i < E.size(); ++i) {
        if (mask >> i & 1) {
          auto const& c = A.component(E[i]);
          elems.insert(elems.end(), c.begin(), c.end());
        }
      }
      out.push_back(make_ideal(A, elems));
    }
    std::sort(out.begin(), out.end(), [](Ideal const& a, Ideal const& b) {
      return a.elements.size() != b.elements.size()
                 ? a.elements.size() < b.elements.size()
                 : a.elements < b.elements;
    });
    for (auto const& I : out) {
      detail::invariant(I.idempotent, "ideal-idempotent", {I.elements[0]});
      for (auto const& J : out) {
        detail::invariant(ideal_product(A, I, J) == ideal_intersection(A, I, J),
                          "ideal-product-is-intersection");
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Multipliers
  ////////////////////////////////////////////////////////////////////////

  //! A pair of maps on an ideal I written a -> wa (left) and a -> aw
  //! (right); entries outside I are kNone.
  struct Multiplier {
    std::vector<elem> left;
    std::vector<elem> right;

    bool operator==(Multiplier const&) const = default;
    bool operator<(Multiplier const& that) const {
      return left != that.left ? left < that.left : right < that.right;
    }
  };

  inline Multiplier identity_multiplier(CliffordAlgebra const& A,
                                        Ideal const&           I) {
    Multiplier w{std::vector<elem>(A.size(), kNone),
                 std::vector<elem>(A.size(), kNone)};
    for (elem a : I.elements) {
      w.left[a] = w.right[a] = a;
    }
    return w;
  }

  //! a -> za and a -> az on I.
  inline Multiplier multiplication_multiplier(CliffordAlgebra const& A,
                                              Ideal const& I, elem z) {
    Multiplier w{std::vector<elem>(A.size(), kNone),
                 std::vector<elem>(A.size(), kNone)};
    for (elem a : I.elements) {
      w.left[a]  = A.mul(z, a);
      w.right[a] = A.mul(a, z);
    }
    return w;
  }

  //! (L, R)(L', R') = (L o L', R' o R)
  inline Multiplier compose(Multiplier const& w, Multiplier const& v) {
    Multiplier r{std::vector<elem>(w.left.size(), kNone),
                 std::vector<elem>(w.left.size(), kNone)};
    for (elem a = 0; a < w.left.size(); ++a) {
      if (v.left[a] != kNone) {
        r.left[a] = w.left[v.left[a]];
      }
      if (w.right[a] != kNone) {
        r.right[a] = v.right[w.right[a]];
      }
    }
    return r;
  }

  //! First violated law and its witness, if w is not a multiplier of I.
  inline std::optional<std::pair<std::string, std::vector<elem>>>
  multiplier_violation(CliffordAlgebra const& A, Ideal const& I,
                       Multiplier const& w) {
    using R = std::pair<std::string, std::vector<elem>>;
    if (w.left.size() != A.size() || w.right.size() != A.size()) {
      return R{"shape", {}};
    }
    for (elem a = 0; a < A.size(); ++a) {
      bool in = I.contains(a);
      if (in != (w.left[a] != kNone) || in != (w.right[a] != kNone)) {
        return R{"domain", {a}};
      }
      if (in && (!I.contains(w.left[a]) || !I.contains(w.right[a]))) {
        return R{"range", {a}};
      }
    }
    for (elem s : I.elements) {
      for (elem t : I.elements) {
        elem st = A.mul(s, t);
        if (w.left[st] != A.mul(w.left[s], t)) {
          return R{"w(st)=(ws)t", {s, t}};
        }
        if (w.right[st] != A.mul(s, w.right[t])) {
          return R{"(st)w=s(tw)", {s, t}};
        }
        if (A.mul(s, w.left[t]) != A.mul(w.right[s], t)) {
          return R{"s(wt)=(sw)t", {s, t}};
        }
      }
    }
    return std::nullopt;
  }

  //! The inverse in the multiplier monoid, if w is a unit.
  inline std::optional<Multiplier> multiplier_inverse(CliffordAlgebra const& A,
                                                      Ideal const&      I,
                                                      Multiplier const& w) {
    Multiplier v{std::vector<elem>(A.size(), kNone),
                 std::vector<elem>(A.size(), kNone)};
    for (elem a : I.elements) {
      if (v.left[w.left[a]] != kNone || v.right[w.right[a]] != kNone) {
        return std::nullopt;
      }
      v.left[w.left[a]]   = a;
      v.right[w.right[a]] = a;
    }
    if (multiplier_violation(A, I, v)) {
      return std::nullopt;
    }
    auto id = identity_multiplier(A, I);
    if (compose(w, v) != id || compose(v, w) != id) {
      return std::nullopt;
    }
    return v;
  }

  struct MultiplierMonoid {
    Ideal                   ideal;
    std::vector<Multiplier> elements;  // sorted
    std::vector<std::size_t> units;    // positions of invertible elements
    std::size_t             identity = 0;
  };

  namespace detail {
    // Enumerates one-sided maps on I determined by their values on E(I):
    // left maps satisfy L(s) = L(ss^-1)s, right maps R(s) = sR(s^-1s).
    inline std::vector<std::vector<elem>>
    one_sided_maps(CliffordAlgebra const& A, Ideal const& I, bool left) {
      std::vector<elem> EI;
      for (elem e : I.elements) {
        if (A.is_idempotent(e)) {
          EI.push_back(e);
        }
      }
      auto act = [&](elem x, elem y) {
        return left ? A.mul(x, y) : A.mul(y, x);
      };
      std::vector<elem>              val(A.size(), kNone);
      std::vector<std::vector<elem>> out;
      std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == EI.size()) {
          std::vector<elem> m(A.size(), kNone);
          for (elem s : I.elements) {
            m[s] = act(val[A.idem(s)], s);
          }
          for (elem s : I.elements) {
            for (elem t : I.elements) {
              bool ok = left ? m[A.mul(s, t)] == A.mul(m[s], t)
                             : m[A.mul(s, t)] == A.mul(s, m[t]);
              if (!ok) {
                return;
              }
            }
          }
          out.push_back(std::move(m));
          return;
        }
        elem e = EI[k];
        for (elem a : I.elements) {
          if (act(a, e) != a) {
            continue;
          }
          val[e]  = a;
          bool ok = true;
          for (std::size_t i = 0; i <= k && ok; ++i) {
            for (std::size_t j = 0; j <= k && ok; ++j) {
              elem ef = A.mul(EI[i], EI[j]);
              if (val[ef] != kNone) {
                // L(ef) = L(e)f, R(ef) = eR(f)
                ok = left ? val[ef] == A.mul(val[EI[i]], EI[j])
                          : val[ef] == A.mul(EI[i], val[EI[j]]);
              }
            }
          }
          if (ok) {
            rec(k + 1);
          }
          val[e] = kNone;
        }
      };
      rec(0);
      return out;
    }
  }  // namespace detail

  inline MultiplierMonoid multiplier_monoid(CliffordAlgebra const& A,
                                            Ideal const& I,
                                            std::size_t  cap = 10) {
    detail::check_cap(I.size(), cap, "max-mult");
    auto Ls = detail::one_sided_maps(A, I, true);
    auto Rs = detail::one_sided_maps(A, I, false);
    MultiplierMonoid M;
    M.ideal = I;
    for (auto const& L : Ls) {
      for (auto const& R : Rs) {
        Multiplier w{L, R};
        if (!multiplier_violation(A, I, w)) {
          M.elements.push_back(std::move(w));
        }
      }
    }
    std::sort(M.elements.begin(), M.elements.end());
    auto id = identity_multiplier(A, I);
    auto it = std::find(M.elements.begin(), M.elements.end(), id);
    detail::invariant(it != M.elements.end(), "multiplier-identity");
    M.identity = static_cast<std::size_t>(it - M.elements.begin());
    for (std::size_t k = 0; k < M.elements.size(); ++k) {
      for (auto const& v : M.elements) {
        auto wv = compose(M.elements[k], v);
        detail::invariant(std::binary_search(M.elements.begin(),
                                             M.elements.end(), wv),
                          "multiplier-closure", {elem(k)});
      }
      if (multiplier_inverse(A, I, M.elements[k])) {
        M.units.push_back(k);
      }
    }
    if (I.unit != kNone) {
      // w -> w1 is an isomorphism onto I
      std::vector<elem> image;
      for (auto const& w : M.elements) {
        image.push_back(w.left[I.unit]);
      }
      detail::invariant(image.size() == I.size() && is_injective(image),
                        "unital-multipliers-bijective", {I.unit});
      for (std::size_t k = 0; k < M.elements.size(); ++k) {
        for (std::size_t l = 0; l < M.elements.size(); ++l) {
          auto wv = compose(M.elements[k], M.elements[l]);
          detail::invariant(wv.left[I.unit] == A.mul(image[k], image[l]),
                            "unital-multipliers-hom", {elem(k), elem(l)});
        }
      }
    }
    return M;
  }

  ////////////////////////////////////////////////////////////////////////
  // Relatively invertible endomorphisms
  ////////////////////////////////////////////////////////////////////////

  struct RelInvertibleEndo {
    std::vector<elem> map;
    std::vector<elem> bar;
    elem              e = kNone;  // identity of bar(A)
  };

  struct IendResult {
    std::size_t                    end_count = 0;
    std::vector<RelInvertibleEndo> endos;
    //! Composition semigroup, element k is endos[k], product is phi o psi.
    InverseSemigroup               semigroup;
  };

  //! Checks bar o phi = e(.) and phi o bar = phi(e)(.) with e the identity of
  //! bar(A) and phi(e) the identity of phi(A).
  inline bool is_rel_inverse(CliffordAlgebra const&   A,
                             std::vector<elem> const& phi,
                             std::vector<elem> const& bar, elem e) {
    for (elem a = 0; a < A.size(); ++a) {
      if (bar[phi[a]] != A.mul(e, a) || phi[bar[a]] != A.mul(phi[e], a)) {
        return false;
      }
      if (A.mul(e, bar[a]) != bar[a] || A.mul(phi[e], phi[a]) != phi[a]) {
        return false;
      }
    }
    return true;
  }

  inline IendResult rel_invertible_endos(CliffordAlgebra const& A,
                                         std::size_t            cap = 12) {
    detail::check_cap(A.size(), cap, "iend");
    auto       ends = all_homomorphisms(A.base(), A.base());
    IendResult R;
    R.end_count = ends.size();
    for (auto const& phi : ends) {
      bool done = false;
      for (elem e : A.idempotents()) {
        // phi(e) must be an identity for phi(A)
        bool unit = true;
        for (elem a = 0; a < A.size() && unit; ++a) {
          unit = A.mul(phi[e], phi[a]) == phi[a];
        }
        if (!unit) {
          continue;
        }
        for (auto const& psi : ends) {
          bool ok = true;
          for (elem a = 0; a < A.size() && ok; ++a) {
            ok = psi[phi[a]] == A.mul(e, a) && phi[psi[a]] == A.mul(phi[e], a);
          }
          if (!ok) {
            continue;
          }
          std::vector<elem> bar(A.size());
          for (elem a = 0; a < A.size(); ++a) {
            bar[a] = A.mul(e, psi[a]);
          }
          detail::invariant(!hom_violation(A.base(), A.base(), bar)
                                && is_rel_inverse(A, phi, bar, e),
                            "iend-normalized-bar", {e});
          R.endos.push_back({phi, bar, e});
          done = true;
          break;
        }
        if (done) {
          break;
        }
      }
    }
    // composition table
    std::size_t       m = R.endos.size();
    std::vector<elem> table(m * m);
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = 0; q < m; ++q) {
        std::vector<elem> pq(A.size());
        for (elem a = 0; a < A.size(); ++a) {
          pq[a] = R.endos[p].map[R.endos[q].map[a]];
        }
        auto it = std::find_if(R.endos.begin(), R.endos.end(),
                               [&](auto const& x) { return x.map == pq; });
        detail::invariant(it != R.endos.end(), "iend-closure",
                          {elem(p), elem(q)});
        table[p * m + q] = static_cast<elem>(it - R.endos.begin());
      }
    }
    R.semigroup = inverse_structure(m, std::move(table));
    for (std::size_t p = 0; p < m; ++p) {
      detail::invariant(R.endos[R.semigroup.inv(p)].map == R.endos[p].bar,
                        "iend-inverse-is-bar", {elem(p)});
    }
    return R;
  }

  //! An isomorphism between unital ideals eA -> fA.
  struct PartialIso {
    elem              e = kNone;
    elem              f = kNone;
    std::vector<elem> map;  // kNone outside eA

    bool operator==(PartialIso const&) const = default;
  };

  inline std::vector<PartialIso> unital_ideal_isos(CliffordAlgebra const& A) {
    std::vector<PartialIso> out;
    for (elem e : A.idempotents()) {
      auto I   = principal_ideal(A, e);
      auto SI  = restrict_table(A.base(), I.elements);
      for (elem f : A.idempotents()) {
        auto J = principal_ideal(A, f);
        if (J.size() != I.size()) {
          continue;
        }
        auto SJ = restrict_table(A.base(), J.elements);
        for (auto const& m : all_isomorphisms(SI, SJ)) {
          PartialIso p{e, f, std::vector<elem>(A.size(), kNone)};
          for (elem k = 0; k < m.size(); ++k) {
            p.map[I.elements[k]] = J.elements[m[k]];
          }
          out.push_back(std::move(p));
        }
      }
    }
    return out;
  }

  //! psi o psi' as partial maps.
  inline PartialIso compose(CliffordAlgebra const& A, PartialIso const& psi,
                            PartialIso const& psi2) {
    PartialIso r{kNone, kNone, std::vector<elem>(A.size(), kNone)};
    for (elem a = 0; a < A.size(); ++a) {
      if (psi2.map[a] != kNone && psi.map[psi2.map[a]] != kNone) {
        r.map[a] = psi.map[psi2.map[a]];
        if (A.is_idempotent(a)
            && (r.e == kNone || A.mul(r.e, a) == r.e)) {
          r.e = a;  // largest idempotent of the domain
        }
      }
    }
    if (r.e != kNone) {
      r.f = r.map[r.e];
    }
    return r;
  }

  struct IendIuiReport {
    std::size_t                    iend_size = 0;
    std::size_t                    iui_size  = 0;
    std::vector<std::size_t>       to_iui;  // iend index -> I_ui index
    std::vector<PartialIso>        iui;
  };

  //! phi -> phi restricted to e_phi A, checked to be a bijective homomorphism
  //! with inverse psi -> (a -> psi(ea)).
  inline IendIuiReport iend_iui_isomorphism(CliffordAlgebra const& A,
                                            std::size_t cap = 12) {
    auto          iend = rel_invertible_endos(A, cap);
    IendIuiReport R;
    R.iui       = unital_ideal_isos(A);
    R.iend_size = iend.endos.size();
    R.iui_size  = R.iui.size();
    auto index_of = [&](PartialIso const& p) {
      auto it = std::find(R.iui.begin(), R.iui.end(), p);
      return it == R.iui.end() ? R.iui.size()
                               : std::size_t(it - R.iui.begin());
    };
    for (std::size_t k = 0; k < iend.endos.size(); ++k) {
      auto const& phi = iend.endos[k];
      PartialIso  p{phi.e, phi.map[phi.e], std::vector<elem>(A.size(), kNone)};
      for (elem a = 0; a < A.size(); ++a) {
        if (A.mul(phi.e, a) == a) {
          p.map[a] = phi.map[a];
        }
      }
      std::size_t idx = index_of(p);
      detail::invariant(idx < R.iui.size(), "restriction-in-iui", {elem(k)});
      R.to_iui.push_back(idx);
    }
    detail::invariant(is_injective(std::vector<elem>(R.to_iui.begin(),
                                                     R.to_iui.end()))
                          && R.iend_size == R.iui_size,
                      "iend-iui-bijective");
    // inverse map and multiplicativity
    std::vector<std::size_t> from_iui(R.iui.size());
    for (std::size_t k = 0; k < R.to_iui.size(); ++k) {
      from_iui[R.to_iui[k]] = k;
    }
    for (std::size_t q = 0; q < R.iui.size(); ++q) {
      auto const& psi = R.iui[q];
      std::vector<elem> ext(A.size());
      for (elem a = 0; a < A.size(); ++a) {
        ext[a] = psi.map[A.mul(psi.e, a)];
      }
      detail::invariant(ext == iend.endos[from_iui[q]].map, "extension-inverse",
                        {elem(q)});
    }
    for (std::size_t p = 0; p < R.iui.size(); ++p) {
      for (std::size_t q = 0; q < R.iui.size(); ++q) {
        auto        pq  = compose(A, R.iui[p], R.iui[q]);
        std::size_t idx = index_of(pq);
        detail::invariant(idx < R.iui.size(), "iui-closure",
                          {elem(p), elem(q)});
        elem prod = iend.semigroup.mul(from_iui[p], from_iui[q]);
        detail::invariant(from_iui[idx] == prod, "iend-iui-hom",
                          {elem(p), elem(q)});
      }
    }
    // idempotents of iend(A) are exactly a -> ea
    std::vector<std::vector<elem>> mults;
    for (elem e : A.idempotents()) {
      std::vector<elem> m(A.size());
      for (elem a = 0; a < A.size(); ++a) {
        m[a] = A.mul(e, a);
      }
      mults.push_back(m);
    }
    std::size_t idem_count = 0;
    for (elem p : iend.semigroup.idempotents()) {
      ++idem_count;
      detail::invariant(std::find(mults.begin(), mults.end(),
                                  iend.endos[p].map)
                            != mults.end(),
                        "iend-idempotents", {p});
    }
    detail::invariant(idem_count == A.idempotents().size(),
                      "iend-idempotent-count");
    return R;
  }

}  // namespace tpact

#endif  // TPACT_CLIFFORD_HPP_
