// Small Clifford semigroups and groups, hand-built actions, and a seeded
// generator of twisted partial actions used by the test suites and the CLI.

#ifndef TPACT_CATALOG_HPP_
#define TPACT_CATALOG_HPP_

#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <map>         // for map
#include <random>      // for mt19937_64
#include <string>      // for string
#include <vector>      // for vector

#include "clifford.hpp"
#include "morphisms.hpp"
#include "partial_action.hpp"
#include "semigroup.hpp"

namespace tpact {

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  //! Z_n with element k the residue k.
  inline FiniteGroup cyclic_group(std::size_t n) {
    std::vector<elem> t(n * n);
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        t[a * n + b] = (a + b) % n;
      }
    }
    return make_group(FiniteSemigroup::from_table(n, std::move(t)));
  }

  //! Z2 x Z2 with elements 0..3 read as bit pairs.
  inline FiniteGroup klein_group() {
    std::vector<elem> t(16);
    for (elem a = 0; a < 4; ++a) {
      for (elem b = 0; b < 4; ++b) {
        t[a * 4 + b] = a ^ b;
      }
    }
    return make_group(FiniteSemigroup::from_table(4, std::move(t)));
  }

  struct NamedGroup {
    std::string name;
    FiniteGroup group;
    //! Normalized 2-cocycles G x G -> Z, used to build twists.
    std::vector<std::function<int(elem, elem)>> cocycles;
  };

  inline std::vector<NamedGroup> group_catalog() {
    std::vector<NamedGroup> out;
    out.push_back({"1", cyclic_group(1), {}});
    auto carry = [](std::size_t n) {
      return [n](elem x, elem y) { return int(x + y >= n); };
    };
    out.push_back({"Z2", cyclic_group(2), {carry(2)}});
    out.push_back({"Z3", cyclic_group(3), {carry(3)}});
    out.push_back({"Z2xZ2",
                   klein_group(),
                   {[](elem x, elem y) { return int((x & 1) & (y >> 1)); },
                    [](elem x, elem y) {
                      return int((x & 1) & (y & 1)) + int((x >> 1) & (y >> 1));
                    }}});
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Clifford semigroups from semilattices of cyclic groups
  ////////////////////////////////////////////////////////////////////////

  //! A semilattice Y of cyclic groups Z_{order[e]} with structure maps
  //! g -> r[e][f] g from Z_{order[e]} to Z_{order[f]} for f <= e.
  struct CliffordSpec {
    std::size_t                          k = 0;  // |Y|
    std::vector<elem>                    meet;   // k x k
    std::vector<std::size_t>             order;
    std::vector<std::vector<std::size_t>> r;
  };

  inline std::size_t spec_size(CliffordSpec const& c) {
    std::size_t n = 0;
    for (auto o : c.order) {
      n += o;
    }
    return n;
  }

  //! Element (e, g) has index offset(e) + g.  Throws if associativity fails.
  inline CliffordAlgebra build_clifford(CliffordSpec const& c) {
    std::vector<std::size_t> offset(c.k, 0);
    std::vector<elem>        idem_of, val_of;
    for (elem e = 0; e < c.k; ++e) {
      offset[e] = idem_of.size();
      for (elem g = 0; g < c.order[e]; ++g) {
        idem_of.push_back(e);
        val_of.push_back(g);
      }
    }
    std::size_t       n = idem_of.size();
    std::vector<elem> t(n * n);
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        elem e = idem_of[a], f = idem_of[b], m = c.meet[e * c.k + f];
        auto v = (c.r[e][m] * val_of[a] + c.r[f][m] * val_of[b]) % c.order[m];
        t[a * n + b] = static_cast<elem>(offset[m] + v);
      }
    }
    return make_clifford(FiniteSemigroup::from_table(n, std::move(t)));
  }

  namespace detail {
    inline bool leq_in(CliffordSpec const& c, elem f, elem e) {
      return c.meet[e * c.k + f] == f;
    }

    inline std::vector<std::size_t> hom_multipliers(std::size_t m,
                                                    std::size_t n) {
      std::vector<std::size_t> out;
      for (std::size_t r = 0; r < n; ++r) {
        if ((r * m) % n == 0) {
          out.push_back(r);
        }
      }
      return out;
    }

    // Fills in all structure maps given those on covering pairs.
    inline void enumerate_specs(CliffordSpec base,
                                std::vector<std::pair<elem, elem>> covers,
                                std::vector<CliffordSpec>& out) {
      std::size_t k = base.k;
      std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == covers.size()) {
          CliffordSpec c = base;
          // close under composition along chains e > f > g
          for (std::size_t pass = 0; pass < k; ++pass) {
            for (elem e = 0; e < k; ++e) {
              for (elem f = 0; f < k; ++f) {
                for (elem g = 0; g < k; ++g) {
                  if (e != f && f != g && leq_in(c, f, e) && leq_in(c, g, f)
                      && c.r[e][g] == std::size_t(-1)
                      && c.r[e][f] != std::size_t(-1)
                      && c.r[f][g] != std::size_t(-1)) {
                    c.r[e][g] = (c.r[f][g] * c.r[e][f]) % c.order[g];
                  }
                }
              }
            }
          }
          out.push_back(c);
          return;
        }
        auto [e, f] = covers[idx];
        for (auto r : hom_multipliers(base.order[e], base.order[f])) {
          base.r[e][f] = r;
          rec(idx + 1);
        }
        base.r[e][f] = std::size_t(-1);
      };
      rec(0);
    }

    inline CliffordSpec spec_shape(std::size_t k, std::vector<elem> meet,
                                   std::vector<std::size_t> order) {
      CliffordSpec c{k, std::move(meet), std::move(order), {}};
      c.r.assign(k, std::vector<std::size_t>(k, std::size_t(-1)));
      for (elem e = 0; e < k; ++e) {
        c.r[e][e] = 1 % c.order[e];
      }
      return c;
    }
  }  // namespace detail

  //! Meet table of the chain 0 > 1 > ... > k-1.
  inline std::vector<elem> chain_meet(std::size_t k) {
    std::vector<elem> m(k * k);
    for (elem a = 0; a < k; ++a) {
      for (elem b = 0; b < k; ++b) {
        m[a * k + b] = std::max(a, b);
      }
    }
    return m;
  }

  struct NamedClifford {
    std::string     name;
    CliffordAlgebra algebra;
  };

  //! Chains of at most `max_chain` idempotents with components Z1, Z2, Z3,
  //! plus (if `branching`) the semilattices V and diamond; at most
  //! `max_size` elements.  Specs rejected by the associativity check are
  //! skipped.
  inline std::vector<NamedClifford> clifford_catalog(std::size_t max_size,
                                                     std::size_t max_chain,
                                                     bool        branching) {
    std::vector<NamedClifford> out;
    auto add_shape = [&](std::string const& shape, std::size_t k,
                         std::vector<elem> const&                  meet,
                         std::vector<std::pair<elem, elem>> const& covers) {
      std::vector<std::size_t> order(k, 1);
      std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == k) {
          auto base = detail::spec_shape(k, meet, order);
          if (spec_size(base) > max_size) {
            return;
          }
          std::vector<CliffordSpec> specs;
          detail::enumerate_specs(base, covers, specs);
          std::size_t variant = 0;
          for (auto const& c : specs) {
            try {
              auto        A    = build_clifford(c);
              std::string name = shape + "[";
              for (std::size_t e = 0; e < k; ++e) {
                name += (e ? "," : "") + std::to_string(order[e]);
              }
              name += "]#" + std::to_string(variant++);
              out.push_back({name, std::move(A)});
            } catch (Error const&) {
              // incompatible structure maps
            }
          }
          return;
        }
        for (std::size_t o = 1; o <= 3; ++o) {
          order[idx] = o;
          rec(idx + 1);
        }
      };
      rec(0);
    };
    for (std::size_t k = 1; k <= max_chain; ++k) {
      std::vector<std::pair<elem, elem>> covers;
      for (elem e = 0; e + 1 < k; ++e) {
        covers.emplace_back(e, e + 1);
      }
      add_shape("chain" + std::to_string(k), k, chain_meet(k), covers);
    }
    if (branching) {
      // V: 0, 1 incomparable, 2 below both
      add_shape("V", 3, {0, 2, 2, 2, 1, 2, 2, 2, 2}, {{0, 2}, {1, 2}});
      // diamond: 0 > 1, 2 > 3
      add_shape("diamond", 4, {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3},
                {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Hand-built actions
  ////////////////////////////////////////////////////////////////////////

  //! E2 = {0 > 1}; Z2 acts with D_g = {1} and theta_g = id.
  inline TwistedPartialAction e2_z2_action() {
    TpaTables t;
    t.G = cyclic_group(2);
    t.A = make_clifford(load_table("2\n0 1\n1 1\n"));
    t.domain = {make_ideal(t.A, {0, 1}), make_ideal(t.A, {1})};
    t.theta  = {{0, 1}, {kNone, 1}};
    for (elem x = 0; x < 2; ++x) {
      for (elem y = 0; y < 2; ++y) {
        t.w.push_back(identity_multiplier(
            t.A, ideal_product(t.A, t.domain[x], t.domain[(x + y) % 2])));
      }
    }
    return verify_tpa(std::move(t));
  }

  //! Z2 acting trivially on Z2; twisted by w_{g,g} = multiplication by the
  //! generator when `twisted`.
  inline TwistedPartialAction z2_on_z2(bool twisted) {
    TpaTables t;
    t.G      = cyclic_group(2);
    t.A      = make_clifford(cyclic_group(2).base());
    auto all = make_ideal(t.A, {0, 1});
    t.domain = {all, all};
    t.theta  = {{0, 1}, {0, 1}};
    for (elem x = 0; x < 2; ++x) {
      for (elem y = 0; y < 2; ++y) {
        bool tw = twisted && x == 1 && y == 1;
        t.w.push_back(multiplication_multiplier(t.A, all, tw ? 1 : 0));
      }
    }
    return verify_tpa(std::move(t));
  }

  //! A = {e0} > {e1, g} with the lower component a copy of Z2; Z2 acts
  //! with D_g = A_{e1} and theta_g = id.
  inline TwistedPartialAction clifford3_action() {
    TpaTables t;
    t.G = cyclic_group(2);
    // 0 = e0 (top), 1 = e1, 2 = g
    t.A = make_clifford(load_table("3\n0 1 2\n1 1 2\n2 2 1\n"));
    t.domain = {make_ideal(t.A, {0, 1, 2}), make_ideal(t.A, {1, 2})};
    t.theta  = {{0, 1, 2}, {kNone, 1, 2}};
    for (elem x = 0; x < 2; ++x) {
      for (elem y = 0; y < 2; ++y) {
        t.w.push_back(identity_multiplier(
            t.A, ideal_product(t.A, t.domain[x], t.domain[(x + y) % 2])));
      }
    }
    return verify_tpa(std::move(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Seeded suite of twisted partial actions
  ////////////////////////////////////////////////////////////////////////

  struct SuiteInstance {
    std::string          name;
    TwistedPartialAction action;
  };

  namespace detail {
    inline std::vector<std::vector<std::vector<elem>>>
    group_actions(FiniteGroup const& G, std::vector<std::vector<elem>> const& aut) {
      // homomorphisms G -> Aut(B), as lists of automorphisms
      std::vector<std::vector<std::vector<elem>>> out;
      std::vector<std::size_t>                    pick(G.size(), 0);
      std::size_t                                 n = aut.front().size();
      std::vector<elem>                           id(n);
      for (elem a = 0; a < n; ++a) {
        id[a] = a;
      }
      std::function<void(elem)> rec = [&](elem x) {
        if (x == G.size()) {
          std::vector<std::vector<elem>> beta;
          for (elem y = 0; y < G.size(); ++y) {
            beta.push_back(aut[pick[y]]);
          }
          if (beta[G.identity()] != id) {
            return;
          }
          for (elem y = 0; y < G.size(); ++y) {
            for (elem z = 0; z < G.size(); ++z) {
              for (elem a = 0; a < n; ++a) {
                if (beta[y][beta[z][a]] != beta[G.mul(y, z)][a]) {
                  return;
                }
              }
            }
          }
          out.push_back(std::move(beta));
          return;
        }
        for (std::size_t k = 0; k < aut.size(); ++k) {
          pick[x] = k;
          rec(x + 1);
        }
      };
      rec(0);
      return out;
    }

    // Restriction of a global action beta of G on B to the ideal I.
    inline TpaTables restrict_global(FiniteGroup const& G,
                                     CliffordAlgebra const& B,
                                     std::vector<std::vector<elem>> const& beta,
                                     Ideal const& I) {
      TpaTables t;
      t.G = G;
      t.A = restrict_clifford(B, I.elements);
      std::vector<elem> pos(B.size(), kNone);
      for (elem k = 0; k < I.size(); ++k) {
        pos[I.elements[k]] = k;
      }
      for (elem x = 0; x < G.size(); ++x) {
        std::vector<elem> dom;
        for (elem b : I.elements) {
          // b in beta_x(I)
          for (elem c : I.elements) {
            if (beta[x][c] == b) {
              dom.push_back(pos[b]);
            }
          }
        }
        t.domain.push_back(make_ideal(t.A, dom));
      }
      for (elem x = 0; x < G.size(); ++x) {
        std::vector<elem> th(I.size(), kNone);
        for (elem a : t.domain[G.inv(x)].elements) {
          th[a] = pos[beta[x][I.elements[a]]];
        }
        t.theta.push_back(std::move(th));
      }
      for (elem x = 0; x < G.size(); ++x) {
        for (elem y = 0; y < G.size(); ++y) {
          t.w.push_back(identity_multiplier(
              t.A, ideal_product(t.A, t.domain[x], t.domain[G.mul(x, y)])));
        }
      }
      return t;
    }

    inline std::uint64_t pick_index(std::mt19937_64& rng, std::size_t n) {
      return rng() % n;
    }
  }  // namespace detail

  struct SuiteOptions {
    std::uint64_t seed       = 0;
    std::size_t   limit      = 200;
    std::size_t   max_size   = 6;
    std::size_t   mult_cap   = 10;
  };

  //! All actions obtained by restricting global actions on catalog algebras
  //! to ideals, with cocycle and conjugation twists, filtered through
  //! verify_tpa.  A seeded subset of `limit` instances is returned when the
  //! grid is larger; the hand-built actions are always included.
  inline std::vector<SuiteInstance> generate_suite(SuiteOptions const& opt = {}) {
    std::vector<SuiteInstance> grid;
    std::map<std::string, bool> seen;
    auto add = [&](std::string name, TpaTables t) {
      try {
        auto P = verify_tpa(std::move(t));
        std::string key;
        for (elem x : P.G().base().table()) key += std::to_string(x) + ",";
        key += "|";
        for (elem x : P.A().base().table()) key += std::to_string(x) + ",";
        for (auto const& th : P.tables().theta) {
          key += "|";
          for (elem x : th) key += std::to_string(x) + ",";
        }
        for (auto const& w : P.tables().w) {
          key += "|";
          for (elem x : w.left) key += std::to_string(x) + ",";
          for (elem x : w.right) key += std::to_string(x) + ",";
        }
        if (seen.emplace(key, true).second) {
          grid.push_back({std::move(name), std::move(P)});
        }
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::axiom_violation) {
          throw;
        }
      }
    };
    std::mt19937_64 rng(opt.seed);
    auto            groups = group_catalog();
    for (auto const& [bname, B] : clifford_catalog(opt.max_size, 3, true)) {
      auto aut = all_isomorphisms(B.base(), B.base());
      auto ids = ideals(B);
      for (auto const& NG : groups) {
        auto const& G = NG.group;
        auto        actions = detail::group_actions(G, aut);
        for (std::size_t bk = 0; bk < actions.size(); ++bk) {
          for (std::size_t ik = 0; ik < ids.size(); ++ik) {
            std::string base = bname + "/" + NG.name + "/beta"
                               + std::to_string(bk) + "/I"
                               + std::to_string(ik);
            auto t = detail::restrict_global(G, B, actions[bk], ids[ik]);
            auto const& A = t.A;
            add(base, t);
            // cocycle twists by central units of a monoid
            elem one = kNone;
            for (elem e : A.idempotents()) {
              bool top = true;
              for (elem a = 0; a < A.size() && top; ++a) {
                top = A.mul(e, a) == a;
              }
              if (top) {
                one = e;
              }
            }
            if (one != kNone) {
              for (elem z : A.component(one)) {
                if (z == one) {
                  continue;
                }
                for (std::size_t ck = 0; ck < NG.cocycles.size(); ++ck) {
                  TpaTables tw = t;
                  for (elem x = 0; x < G.size(); ++x) {
                    for (elem y = 0; y < G.size(); ++y) {
                      int  c  = NG.cocycles[ck](x, y);
                      elem zc = one;
                      for (int k = 0; k < c; ++k) {
                        zc = A.mul(zc, z);
                      }
                      auto I = ideal_product(A, t.domain[x],
                                             t.domain[G.mul(x, y)]);
                      tw.w[x * G.size() + y]
                          = multiplication_multiplier(A, I, zc);
                    }
                  }
                  add(base + "/z" + std::to_string(z) + "c"
                          + std::to_string(ck),
                      tw);
                }
              }
            }
          }
        }
      }
    }
    // conjugates of a seeded sample of the grid
    std::size_t base_count = grid.size();
    for (std::size_t k = 0; k < base_count; ++k) {
      if (detail::pick_index(rng, 4) != 0) {
        continue;
      }
      auto const&             P = grid[k].action;
      std::vector<Multiplier> eps;
      bool                    nontrivial = false;
      for (elem x = 0; x < P.G().size(); ++x) {
        auto M = multiplier_monoid(P.A(), P.domain(x), opt.mult_cap);
        auto u = M.units[detail::pick_index(rng, M.units.size())];
        nontrivial = nontrivial || u != M.identity;
        eps.push_back(M.elements[u]);
      }
      if (!nontrivial) {
        continue;
      }
      try {
        auto Q = conjugate_tpa(P, eps);
        add(grid[k].name + "/conj", Q.tables());
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::axiom_violation) {
          throw;
        }
      }
    }
    std::vector<SuiteInstance> out;
    out.push_back({"hand/E2-Z2", e2_z2_action()});
    out.push_back({"hand/Z2-on-Z2", z2_on_z2(false)});
    out.push_back({"hand/Z2-on-Z2-twisted", z2_on_z2(true)});
    out.push_back({"hand/C3-Z2", clifford3_action()});
    if (grid.size() + out.size() > opt.limit) {
      // seeded Fisher-Yates, then restore generation order
      std::vector<std::size_t> idx(grid.size());
      for (std::size_t k = 0; k < idx.size(); ++k) {
        idx[k] = k;
      }
      for (std::size_t k = idx.size(); k > 1; --k) {
        std::swap(idx[k - 1], idx[detail::pick_index(rng, k)]);
      }
      idx.resize(opt.limit > out.size() ? opt.limit - out.size() : 0);
      std::sort(idx.begin(), idx.end());
      for (auto k : idx) {
        out.push_back(std::move(grid[k]));
      }
    } else {
      for (auto& g : grid) {
        out.push_back(std::move(g));
      }
    }
    return out;
  }

}  // namespace tpact

#endif  // TPACT_CATALOG_HPP_
