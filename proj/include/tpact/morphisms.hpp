// Backtracking search for homomorphisms between finite semigroups.
//
// Assignments are made to the least unassigned source element, trying target
// elements in increasing order, and every assignment is closed under products
// before branching again.  The first complete map found is therefore the
// lexicographically least one.

#ifndef TPACT_MORPHISMS_HPP_
#define TPACT_MORPHISMS_HPP_

#include <algorithm>  // for sort
#include <array>      // for array
#include <cstddef>    // for size_t
#include <functional> // for function
#include <optional>   // for optional
#include <vector>     // for vector

#include "semigroup.hpp"

namespace tpact {

  namespace detail {

    //! Isomorphism-invariant description of an element.
    inline std::vector<std::size_t> element_signature(FiniteSemigroup const& S,
                                                      elem a) {
      std::size_t n = S.size();
      // index and period of the monogenic subsemigroup
      std::vector<elem> powers{a};
      std::size_t       index = 0, period = 0;
      while (true) {
        elem next = S.mul(powers.back(), a);
        auto it   = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
          index  = static_cast<std::size_t>(it - powers.begin());
          period = powers.size() - index;
          break;
        }
        powers.push_back(next);
      }
      std::size_t fix_left = 0, fix_right = 0, roots = 0;
      std::vector<std::size_t> row(n, 0), col(n, 0);
      for (elem x = 0; x < n; ++x) {
        fix_left += S.mul(x, a) == a;
        fix_right += S.mul(a, x) == a;
        roots += S.mul(x, x) == a;
        ++row[S.mul(a, x)];
        ++col[S.mul(x, a)];
      }
      std::sort(row.begin(), row.end());
      std::sort(col.begin(), col.end());
      std::vector<std::size_t> sig{index, period, fix_left, fix_right, roots};
      sig.insert(sig.end(), row.begin(), row.end());
      sig.insert(sig.end(), col.begin(), col.end());
      return sig;
    }

    //! (index, period) of the monogenic subsemigroup generated by a.
    inline std::array<std::size_t, 2> power_profile(FiniteSemigroup const& S,
                                                    elem                   a) {
      std::vector<elem> powers{a};
      while (true) {
        elem next = S.mul(powers.back(), a);
        auto it   = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
          auto index = static_cast<std::size_t>(it - powers.begin());
          return {index, powers.size() - index};
        }
        powers.push_back(next);
      }
    }

    inline elem power(FiniteSemigroup const& S, elem a, std::size_t k) {
      elem r = a;
      for (std::size_t i = 1; i < k; ++i) {
        r = S.mul(r, a);
      }
      return r;
    }

    class HomSearch {
     public:
      // visitor returns false to stop the search
      using Visitor = std::function<bool(std::vector<elem> const&)>;

      HomSearch(FiniteSemigroup const& S, FiniteSemigroup const& T,
                bool injective)
          : _S(S), _T(T), _injective(injective) {
        std::size_t n = S.size(), m = T.size();
        _allowed.assign(n, std::vector<bool>(m, true));
        if (injective) {
          std::vector<std::vector<std::size_t>> sigT(m);
          for (elem b = 0; b < m; ++b) {
            sigT[b] = element_signature(T, b);
          }
          for (elem a = 0; a < n; ++a) {
            auto sa = element_signature(S, a);
            for (elem b = 0; b < m; ++b) {
              _allowed[a][b] = sa == sigT[b];
            }
          }
        } else {
          // phi(a)^(i+p) = phi(a)^i where (i, p) is the profile of a
          for (elem a = 0; a < n; ++a) {
            auto [i, p] = power_profile(S, a);
            for (elem b = 0; b < m; ++b) {
              _allowed[a][b] = power(T, b, i + 1) == power(T, b, i + 1 + p);
            }
          }
        }
      }

      void run(Visitor const& visit) {
        _map.assign(_S.size(), kNone);
        _used.assign(_T.size(), false);
        _visit   = &visit;
        _stopped = false;
        search();
      }

     private:
      bool assign(elem a, elem b, std::vector<elem>& trail) {
        if (!_allowed[a][b] || (_injective && _used[b])) {
          return false;
        }
        _map[a] = b;
        _used[b] = true;
        trail.push_back(a);
        std::vector<elem> queue{a};
        while (!queue.empty()) {
          elem x = queue.back();
          queue.pop_back();
          for (elem y = 0; y < _S.size(); ++y) {
            if (_map[y] == kNone) {
              continue;
            }
            for (int side = 0; side < 2; ++side) {
              elem src = side == 0 ? _S.mul(x, y) : _S.mul(y, x);
              elem img = side == 0 ? _T.mul(_map[x], _map[y])
                                   : _T.mul(_map[y], _map[x]);
              if (_map[src] == kNone) {
                if (!_allowed[src][img] || (_injective && _used[img])) {
                  return false;
                }
                _map[src]  = img;
                _used[img] = true;
                trail.push_back(src);
                queue.push_back(src);
              } else if (_map[src] != img) {
                return false;
              }
            }
          }
        }
        return true;
      }

      void undo(std::vector<elem>& trail) {
        for (elem a : trail) {
          if (_injective) {
            _used[_map[a]] = false;
          }
          _map[a] = kNone;
        }
        trail.clear();
      }

      void search() {
        elem a = 0;
        while (a < _S.size() && _map[a] != kNone) {
          ++a;
        }
        if (a == _S.size()) {
          if (!(*_visit)(_map)) {
            _stopped = true;
          }
          return;
        }
        for (elem b = 0; b < _T.size() && !_stopped; ++b) {
          std::vector<elem> trail;
          if (assign(a, b, trail)) {
            search();
          }
          if (!_injective) {
            for (elem x : trail) {
              _map[x] = kNone;
            }
            // _used is only meaningful for injective searches
            trail.clear();
          } else {
            undo(trail);
          }
        }
      }

      FiniteSemigroup const&         _S;
      FiniteSemigroup const&         _T;
      bool                           _injective;
      std::vector<std::vector<bool>> _allowed;
      std::vector<elem>              _map;
      std::vector<bool>              _used;
      Visitor const*                 _visit   = nullptr;
      bool                           _stopped = false;
    };

    inline bool same_signatures(FiniteSemigroup const& S,
                                FiniteSemigroup const& T) {
      std::vector<std::vector<std::size_t>> a, b;
      for (elem x = 0; x < S.size(); ++x) {
        a.push_back(element_signature(S, x));
        b.push_back(element_signature(T, x));
      }
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }

    inline void check_cap(std::size_t n, std::size_t cap,
                          char const* what) {
      if (n > cap) {
        fail(ErrorKind::size_cap_exceeded, what, {elem(n), elem(cap)});
      }
    }
  }  // namespace detail

  //! The lexicographically least isomorphism S -> T, if one exists.
  inline std::optional<Homomorphism>
  find_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T,
                   std::size_t cap = 64) {
    detail::check_cap(std::max(S.size(), T.size()), cap, "max-iso");
    if (S.size() != T.size() || !detail::same_signatures(S, T)) {
      return std::nullopt;
    }
    std::optional<Homomorphism> found;
    detail::HomSearch           search(S, T, true);
    search.run([&](std::vector<elem> const& m) {
      found = Homomorphism{S.size(), T.size(), m};
      return false;
    });
    if (found) {
      detail::invariant(!hom_violation(S, T, found->map)
                            && is_injective(found->map),
                        "isomorphism-check");
    }
    return found;
  }

  inline std::vector<std::vector<elem>>
  all_isomorphisms(FiniteSemigroup const& S, FiniteSemigroup const& T,
                   std::size_t cap = 64) {
    detail::check_cap(std::max(S.size(), T.size()), cap, "max-iso");
    std::vector<std::vector<elem>> out;
    if (S.size() != T.size() || !detail::same_signatures(S, T)) {
      return out;
    }
    detail::HomSearch search(S, T, true);
    search.run([&](std::vector<elem> const& m) {
      out.push_back(m);
      return true;
    });
    return out;
  }

  //! Every homomorphism S -> T in lexicographic order.
  inline std::vector<std::vector<elem>>
  all_homomorphisms(FiniteSemigroup const& S, FiniteSemigroup const& T) {
    std::vector<std::vector<elem>> out;
    detail::HomSearch              search(S, T, false);
    search.run([&](std::vector<elem> const& m) {
      out.push_back(m);
      return true;
    });
    return out;
  }

}  // namespace tpact

#endif  // TPACT_MORPHISMS_HPP_
