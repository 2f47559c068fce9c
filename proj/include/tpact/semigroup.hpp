// Finite semigroups given by multiplication tables, their inverse structure,
// the natural partial order, congruences and the minimum group congruence.

#ifndef TPACT_SEMIGROUP_HPP_
#define TPACT_SEMIGROUP_HPP_

#include <algorithm>    // for sort, find
#include <cstddef>      // for size_t
#include <map>          // for map
#include <optional>     // for optional
#include <sstream>      // for istringstream, ostringstream
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

#include "error.hpp"

namespace tpact {

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  //! A semigroup on {0, ..., n-1}, stored row-major.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    //! Validates entry ranges and associativity.
    static FiniteSemigroup from_table(std::size_t n, std::vector<elem> table) {
      if (n == 0) {
        detail::fail(ErrorKind::malformed_input, "empty",
                     {}, "a semigroup needs at least one element");
      }
      if (table.size() != n * n) {
        detail::fail(ErrorKind::malformed_input, "table-shape", {},
                     "expected " + std::to_string(n * n) + " entries, got "
                         + std::to_string(table.size()));
      }
      for (std::size_t k = 0; k < table.size(); ++k) {
        if (table[k] >= n) {
          detail::fail(ErrorKind::malformed_input, "entry-range",
                       {elem(k / n), elem(k % n), table[k]});
        }
      }
      FiniteSemigroup S(n, std::move(table));
      for (elem a = 0; a < n; ++a) {
        for (elem b = 0; b < n; ++b) {
          elem ab = S.mul(a, b);
          for (elem c = 0; c < n; ++c) {
            if (S.mul(ab, c) != S.mul(a, S.mul(b, c))) {
              detail::fail(ErrorKind::not_associative, "associativity",
                           {a, b, c});
            }
          }
        }
      }
      return S;
    }

    std::size_t size() const noexcept {
      return _n;
    }

    elem mul(elem a, elem b) const {
      return _table[a * _n + b];
    }

    std::vector<elem> const& table() const noexcept {
      return _table;
    }

    bool operator==(FiniteSemigroup const& that) const {
      return _n == that._n && _table == that._table;
    }

   private:
    FiniteSemigroup(std::size_t n, std::vector<elem> table)
        : _n(n), _table(std::move(table)) {}

    std::size_t       _n = 0;
    std::vector<elem> _table;
  };

  namespace detail {
    //! Splits text into whitespace tokens, dropping '#' comments.
    inline std::vector<std::string> tokens(std::string_view text) {
      std::vector<std::string> out;
      std::string              line;
      std::istringstream       in{std::string(text)};
      while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
          line.erase(hash);
        }
        std::istringstream ls(line);
        std::string        tok;
        while (ls >> tok) {
          out.push_back(tok);
        }
      }
      return out;
    }

    inline elem parse_index(std::string const& tok, std::string const& what) {
      if (tok.empty()
          || tok.find_first_not_of("0123456789") != std::string::npos
          || tok.size() > 9) {
        fail(ErrorKind::malformed_input, what, {},
             "expected a non-negative integer, got '" + tok + "'");
      }
      return static_cast<elem>(std::stoul(tok));
    }
  }  // namespace detail

  //! Parses the .sgp format: an element count followed by n rows of n
  //! entries; '#' starts a comment.
  inline FiniteSemigroup load_table(std::string_view text) {
    auto toks = detail::tokens(text);
    if (toks.empty()) {
      detail::fail(ErrorKind::malformed_input, "sgp", {}, "empty input");
    }
    std::size_t n = detail::parse_index(toks[0], "sgp-size");
    if (toks.size() != 1 + n * n) {
      detail::fail(ErrorKind::malformed_input, "sgp", {},
                   "expected " + std::to_string(n * n) + " table entries, got "
                       + std::to_string(toks.size() - 1));
    }
    std::vector<elem> table;
    table.reserve(n * n);
    for (std::size_t k = 1; k < toks.size(); ++k) {
      table.push_back(detail::parse_index(toks[k], "sgp-entry"));
    }
    return FiniteSemigroup::from_table(n, std::move(table));
  }

  //! Writes S in the .sgp format.
  inline std::string to_sgp(FiniteSemigroup const& S) {
    std::ostringstream out;
    out << S.size() << '\n';
    for (elem a = 0; a < S.size(); ++a) {
      for (elem b = 0; b < S.size(); ++b) {
        out << (b == 0 ? "" : " ") << S.mul(a, b);
      }
      out << '\n';
    }
    return out.str();
  }

  //! The subsemigroup on a closed subset, reindexed by position in `elems`.
  inline FiniteSemigroup restrict_table(FiniteSemigroup const& S,
                                        std::vector<elem> const& elems) {
    std::vector<elem> pos(S.size(), kNone);
    for (elem k = 0; k < elems.size(); ++k) {
      pos[elems[k]] = k;
    }
    std::vector<elem> table;
    table.reserve(elems.size() * elems.size());
    for (elem a : elems) {
      for (elem b : elems) {
        elem p = pos[S.mul(a, b)];
        if (p == kNone) {
          detail::fail(ErrorKind::axiom_violation, "subsemigroup-closure",
                       {a, b});
        }
        table.push_back(p);
      }
    }
    return FiniteSemigroup::from_table(elems.size(), std::move(table));
  }

  ////////////////////////////////////////////////////////////////////////
  // InverseSemigroup
  ////////////////////////////////////////////////////////////////////////

  class InverseSemigroup {
   public:
    InverseSemigroup() = default;

    std::size_t size() const noexcept {
      return _base.size();
    }
    elem mul(elem a, elem b) const {
      return _base.mul(a, b);
    }
    elem inv(elem a) const {
      return _inv[a];
    }
    FiniteSemigroup const& base() const noexcept {
      return _base;
    }
    std::vector<elem> const& idempotents() const noexcept {
      return _idempotents;
    }
    bool is_idempotent(elem a) const {
      return _is_idem[a];
    }
    //! s s^-1
    elem range_idem(elem s) const {
      return mul(s, _inv[s]);
    }
    //! s^-1 s
    elem domain_idem(elem s) const {
      return mul(_inv[s], s);
    }
    //! Natural order via s = (s s^-1) t.
    bool leq(elem s, elem t) const {
      return s == mul(range_idem(s), t);
    }
    elem mul3(elem a, elem b, elem c) const {
      return mul(mul(a, b), c);
    }

    friend InverseSemigroup inverse_structure(FiniteSemigroup const&);

   private:
    FiniteSemigroup   _base;
    std::vector<elem> _inv;
    std::vector<elem> _idempotents;
    std::vector<bool> _is_idem;
  };

  //! Computes unique inverses and checks that idempotents commute.
  inline InverseSemigroup inverse_structure(FiniteSemigroup const& S) {
    std::size_t      n = S.size();
    InverseSemigroup T;
    T._base = S;
    T._inv.assign(n, kNone);
    T._is_idem.assign(n, false);
    for (elem s = 0; s < n; ++s) {
      for (elem t = 0; t < n; ++t) {
        if (S.mul(S.mul(s, t), s) == s && S.mul(S.mul(t, s), t) == t) {
          if (T._inv[s] != kNone) {
            detail::fail(ErrorKind::not_inverse, "unique-inverse",
                         {s, T._inv[s], t});
          }
          T._inv[s] = t;
        }
      }
      if (T._inv[s] == kNone) {
        detail::fail(ErrorKind::not_regular, "regular", {s});
      }
      if (S.mul(s, s) == s) {
        T._is_idem[s] = true;
        T._idempotents.push_back(s);
      }
    }
    for (elem e : T._idempotents) {
      for (elem f : T._idempotents) {
        if (S.mul(e, f) != S.mul(f, e)) {
          detail::fail(ErrorKind::not_inverse, "commuting-idempotents",
                       {e, f});
        }
      }
    }
    return T;
  }

  inline InverseSemigroup inverse_structure(std::size_t n,
                                            std::vector<elem> table) {
    return inverse_structure(FiniteSemigroup::from_table(n, std::move(table)));
  }

  //! Natural order, computed from both one-sided characterizations.
  inline bool natural_leq(InverseSemigroup const& S, elem s, elem t) {
    bool left = false, right = false;
    for (elem e : S.idempotents()) {
      left  = left || S.mul(e, t) == s;
      right = right || S.mul(t, e) == s;
    }
    detail::invariant(left == right, "natural-order-sides", {s, t});
    detail::invariant(left == S.leq(s, t), "natural-order-formula", {s, t});
    return left;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms, congruences, groups
  ////////////////////////////////////////////////////////////////////////

  struct Homomorphism {
    std::size_t       source_size = 0;
    std::size_t       target_size = 0;
    std::vector<elem> map;

    elem operator()(elem a) const {
      return map[a];
    }
  };

  //! First pair (a, b) with phi(ab) != phi(a) phi(b), if any.
  inline std::optional<std::vector<elem>>
  hom_violation(FiniteSemigroup const& S, FiniteSemigroup const& T,
                std::vector<elem> const& phi) {
    if (phi.size() != S.size()) {
      return std::vector<elem>{};
    }
    for (elem x : phi) {
      if (x >= T.size()) {
        return std::vector<elem>{x};
      }
    }
    for (elem a = 0; a < S.size(); ++a) {
      for (elem b = 0; b < S.size(); ++b) {
        if (phi[S.mul(a, b)] != T.mul(phi[a], phi[b])) {
          return std::vector<elem>{a, b};
        }
      }
    }
    return std::nullopt;
  }

  inline Homomorphism make_homomorphism(FiniteSemigroup const& S,
                                        FiniteSemigroup const& T,
                                        std::vector<elem>      phi,
                                        std::string const& law = "hom") {
    if (auto w = hom_violation(S, T, phi)) {
      detail::fail(ErrorKind::axiom_violation, law, *w);
    }
    return Homomorphism{S.size(), T.size(), std::move(phi)};
  }

  inline bool is_injective(std::vector<elem> const& phi) {
    std::vector<elem> v(phi);
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  }

  inline bool is_surjective(std::vector<elem> const& phi, std::size_t n) {
    std::vector<bool> hit(n, false);
    for (elem x : phi) {
      if (x < n) {
        hit[x] = true;
      }
    }
    return std::find(hit.begin(), hit.end(), false) == hit.end();
  }

  struct Congruence {
    std::vector<elem>              class_of;
    std::vector<std::vector<elem>> classes;

    std::size_t num_classes() const noexcept {
      return classes.size();
    }
    bool related(elem a, elem b) const {
      return class_of[a] == class_of[b];
    }
  };

  //! Builds a partition from arbitrary labels; classes are numbered in order
  //! of their least element.
  inline Congruence partition_from_labels(std::vector<elem> const& labels) {
    Congruence       C;
    std::map<elem, elem> renum;
    C.class_of.resize(labels.size());
    for (elem a = 0; a < labels.size(); ++a) {
      auto it = renum.find(labels[a]);
      if (it == renum.end()) {
        it = renum.emplace(labels[a], elem(C.classes.size())).first;
        C.classes.emplace_back();
      }
      C.class_of[a] = it->second;
      C.classes[it->second].push_back(a);
    }
    return C;
  }

  //! First (a, b, c) with a ~ b but ac !~ bc or ca !~ cb.
  inline std::optional<std::vector<elem>>
  congruence_violation(FiniteSemigroup const& S, Congruence const& C) {
    for (auto const& cls : C.classes) {
      elem a = cls.front();
      for (elem b : cls) {
        for (elem c = 0; c < S.size(); ++c) {
          if (!C.related(S.mul(a, c), S.mul(b, c))
              || !C.related(S.mul(c, a), S.mul(c, b))) {
            return std::vector<elem>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  inline FiniteSemigroup quotient_semigroup(FiniteSemigroup const& S,
                                            Congruence const&      C) {
    if (auto w = congruence_violation(S, C)) {
      detail::fail(ErrorKind::internal_invariant_violation, "congruence", *w);
    }
    std::size_t       m = C.num_classes();
    std::vector<elem> table(m * m);
    for (elem x = 0; x < m; ++x) {
      for (elem y = 0; y < m; ++y) {
        table[x * m + y]
            = C.class_of[S.mul(C.classes[x].front(), C.classes[y].front())];
      }
    }
    return FiniteSemigroup::from_table(m, std::move(table));
  }

  class FiniteGroup {
   public:
    FiniteGroup() = default;

    std::size_t size() const noexcept {
      return _base.size();
    }
    elem mul(elem a, elem b) const {
      return _base.mul(a, b);
    }
    elem inv(elem a) const {
      return _inv[a];
    }
    elem identity() const noexcept {
      return _one;
    }
    FiniteSemigroup const& base() const noexcept {
      return _base;
    }

    friend FiniteGroup make_group(FiniteSemigroup const&);

   private:
    FiniteSemigroup   _base;
    elem              _one = 0;
    std::vector<elem> _inv;
  };

  //! Requires a unique idempotent that is a two-sided identity and inverses.
  inline FiniteGroup make_group(FiniteSemigroup const& S) {
    FiniteGroup G;
    G._base = S;
    G._one  = kNone;
    for (elem a = 0; a < S.size(); ++a) {
      if (S.mul(a, a) == a) {
        if (G._one != kNone) {
          detail::fail(ErrorKind::not_group, "unique-idempotent",
                       {G._one, a});
        }
        G._one = a;
      }
    }
    if (G._one == kNone) {
      detail::fail(ErrorKind::not_group, "unique-idempotent");
    }
    G._inv.assign(S.size(), kNone);
    for (elem a = 0; a < S.size(); ++a) {
      if (S.mul(G._one, a) != a || S.mul(a, G._one) != a) {
        detail::fail(ErrorKind::not_group, "identity", {G._one, a});
      }
      for (elem b = 0; b < S.size(); ++b) {
        if (S.mul(a, b) == G._one && S.mul(b, a) == G._one) {
          G._inv[a] = b;
        }
      }
      if (G._inv[a] == kNone) {
        detail::fail(ErrorKind::not_group, "inverse", {a});
      }
    }
    return G;
  }

  inline bool is_group(FiniteSemigroup const& S) {
    try {
      make_group(S);
      return true;
    } catch (Error const&) {
      return false;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // sigma, E-unitary, F-inverse
  ////////////////////////////////////////////////////////////////////////

  //! (s, t) in sigma iff es = et for some idempotent e.
  inline bool sigma_related(InverseSemigroup const& S, elem s, elem t) {
    for (elem e : S.idempotents()) {
      if (S.mul(e, s) == S.mul(e, t)) {
        return true;
      }
    }
    return false;
  }

  inline Congruence sigma_congruence(InverseSemigroup const& S) {
    std::size_t       n = S.size();
    std::vector<elem> label(n, kNone);
    elem              next = 0;
    for (elem s = 0; s < n; ++s) {
      if (label[s] != kNone) {
        continue;
      }
      for (elem t = s; t < n; ++t) {
        if (label[t] == kNone && sigma_related(S, s, t)) {
          label[t] = next;
        }
      }
      ++next;
    }
    Congruence C = partition_from_labels(label);
    for (elem s = 0; s < n; ++s) {
      for (elem t = 0; t < n; ++t) {
        detail::invariant(sigma_related(S, s, t) == C.related(s, t),
                          "sigma-transitive", {s, t});
      }
    }
    auto Q = quotient_semigroup(S.base(), C);
    detail::invariant(is_group(Q), "sigma-group-quotient");
    return C;
  }

  struct GroupImage {
    Congruence   sigma;
    FiniteGroup  group;
    Homomorphism projection;
  };

  inline GroupImage max_group_image(InverseSemigroup const& S) {
    GroupImage R;
    R.sigma      = sigma_congruence(S);
    auto Q       = quotient_semigroup(S.base(), R.sigma);
    R.group      = make_group(Q);
    R.projection = make_homomorphism(S.base(), Q, R.sigma.class_of);
    return R;
  }

  //! A pair (e, s) with e idempotent, e <= s and s not idempotent.
  inline std::optional<std::vector<elem>>
  e_unitary_witness(InverseSemigroup const& S) {
    for (elem e : S.idempotents()) {
      for (elem s = 0; s < S.size(); ++s) {
        if (!S.is_idempotent(s) && S.leq(e, s)) {
          return std::vector<elem>{e, s};
        }
      }
    }
    return std::nullopt;
  }

  //! Checked against the description of sigma on E-unitary semigroups.
  inline bool is_e_unitary(InverseSemigroup const& S) {
    bool by_def  = !e_unitary_witness(S).has_value();
    bool by_char = true;
    for (elem s = 0; s < S.size() && by_char; ++s) {
      for (elem t = 0; t < S.size() && by_char; ++t) {
        bool quick = S.is_idempotent(S.mul(S.inv(s), t))
                     && S.is_idempotent(S.mul(s, S.inv(t)));
        by_char = quick == sigma_related(S, s, t);
      }
    }
    detail::invariant(by_def == by_char, "e-unitary-characterization");
    return by_def;
  }

  //! Maximum of each sigma-class, indexed by class, or nothing.
  inline std::optional<std::vector<elem>>
  is_f_inverse(InverseSemigroup const& S) {
    auto              sigma = sigma_congruence(S);
    std::vector<elem> maxima;
    for (auto const& cls : sigma.classes) {
      elem top = kNone;
      for (elem m : cls) {
        bool above_all = true;
        for (elem s : cls) {
          above_all = above_all && S.leq(s, m);
        }
        if (above_all) {
          top = m;
          break;
        }
      }
      if (top == kNone) {
        return std::nullopt;
      }
      maxima.push_back(top);
    }
    return maxima;
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernel normal systems
  ////////////////////////////////////////////////////////////////////////

  //! One subgroup N_e with identity e per idempotent e.
  using KernelNormalSystem = std::map<elem, std::vector<elem>>;

  struct KnsQuotient {
    Congruence      congruence;
    FiniteSemigroup quotient;
    Homomorphism    projection;
  };

  inline KnsQuotient congruence_from_kns(InverseSemigroup const&   S,
                                         KernelNormalSystem const& N) {
    auto bad = [](std::string law, std::vector<elem> w) {
      detail::fail(ErrorKind::invalid_kns, std::move(law), std::move(w));
    };
    std::size_t       n = S.size();
    std::vector<elem> owner(n, kNone);  // the e with a in N_e
    for (elem e : S.idempotents()) {
      if (N.find(e) == N.end()) {
        bad("keys", {e});
      }
    }
    for (auto const& [e, grp] : N) {
      if (e >= n || !S.is_idempotent(e)) {
        bad("keys", {e});
      }
      if (std::find(grp.begin(), grp.end(), e) == grp.end()) {
        bad("contains-identity", {e});
      }
      for (elem g : grp) {
        if (g >= n) {
          bad("range", {e, g});
        }
        if (owner[g] != kNone) {
          bad("disjoint", {owner[g], e, g});
        }
        owner[g] = e;
      }
    }
    for (auto const& [e, grp] : N) {
      for (elem g : grp) {
        if (S.range_idem(g) != e || S.domain_idem(g) != e) {
          bad("subgroup-identity", {e, g});
        }
        if (owner[S.inv(g)] != e) {
          bad("subgroup-inverse", {e, g});
        }
        for (elem h : grp) {
          if (owner[S.mul(g, h)] != e) {
            bad("subgroup-closure", {e, g, h});
          }
        }
      }
    }
    for (elem a = 0; a < n; ++a) {
      if (owner[a] == kNone) {
        continue;
      }
      for (elem b = 0; b < n; ++b) {
        if (owner[b] != kNone && owner[S.mul(a, b)] == kNone) {
          bad("subsemigroup", {a, b});
        }
      }
      for (elem s = 0; s < n; ++s) {
        if (owner[S.mul3(s, a, S.inv(s))] == kNone) {
          bad("normality", {s, a});
        }
      }
    }
    // class of s: s N_{s^-1 s}, which must agree with N_{ss^-1} s
    std::vector<std::vector<elem>> cls(n);
    for (elem s = 0; s < n; ++s) {
      std::vector<elem> right, left;
      for (elem g : N.at(S.domain_idem(s))) {
        right.push_back(S.mul(s, g));
      }
      for (elem g : N.at(S.range_idem(s))) {
        left.push_back(S.mul(g, s));
      }
      std::sort(right.begin(), right.end());
      right.erase(std::unique(right.begin(), right.end()), right.end());
      std::sort(left.begin(), left.end());
      left.erase(std::unique(left.begin(), left.end()), left.end());
      detail::invariant(left == right, "class-two-sided", {s});
      cls[s] = right;
    }
    std::vector<elem> label(n);
    for (elem s = 0; s < n; ++s) {
      label[s] = cls[s].front();
      for (elem t : cls[s]) {
        detail::invariant(cls[t] == cls[s], "class-partition", {s, t});
        // t = u s with u = t s^-1 the only such element of N_{ss^-1}
        elem u     = S.mul(t, S.inv(s));
        int  count = 0;
        for (elem v : N.at(S.range_idem(s))) {
          count += S.mul(v, s) == t;
        }
        detail::invariant(owner[u] == S.range_idem(s) && S.mul(u, s) == t
                              && count == 1,
                          "unique-translate", {s, t});
      }
    }
    KnsQuotient R;
    R.congruence = partition_from_labels(label);
    if (auto w = congruence_violation(S.base(), R.congruence)) {
      detail::fail(ErrorKind::internal_invariant_violation, "kns-congruence",
                   *w);
    }
    for (elem e : S.idempotents()) {
      for (elem f : S.idempotents()) {
        detail::invariant(e == f || !R.congruence.related(e, f),
                          "idempotent-separating", {e, f});
      }
    }
    R.quotient   = quotient_semigroup(S.base(), R.congruence);
    R.projection = make_homomorphism(S.base(), R.quotient,
                                     R.congruence.class_of);
    return R;
  }

}  // namespace tpact

#endif  // TPACT_SEMIGROUP_HPP_
