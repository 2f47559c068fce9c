// Text formats: .tpa (twisted partial action), .tsm (twisted module) and
// .ext (extension).  Semigroups are embedded in the .sgp format.

#ifndef TPACT_BUNDLE_IO_HPP_
#define TPACT_BUNDLE_IO_HPP_

#include <set>          // for set
#include <sstream>      // for ostringstream, istringstream
#include <string>       // for string
#include <string_view>  // for string_view
#include <variant>      // for variant
#include <vector>       // for vector

#include "clifford.hpp"
#include "module.hpp"
#include "partial_action.hpp"
#include "semigroup.hpp"

namespace tpact {

  namespace detail {
    inline std::string replace_all(std::string s, std::string const& from,
                                   std::string const& to) {
      std::size_t pos = 0;
      while ((pos = s.find(from, pos)) != std::string::npos) {
        s.replace(pos, from.size(), to);
        pos += to.size();
      }
      return s;
    }

    //! Line-oriented cursor over comment-free, nonempty lines.
    class BundleReader {
     public:
      explicit BundleReader(std::string_view text) {
        std::istringstream in{std::string(text)};
        std::string        line;
        std::size_t        no = 0;
        while (std::getline(in, line)) {
          ++no;
          auto hash = line.find('#');
          if (hash != std::string::npos) {
            line.erase(hash);
          }
          line = replace_all(line, "\xe2\x86\x92", " -> ");  // U+2192
          line = replace_all(line, "->", " -> ");
          line = replace_all(line, ":", " : ");
          std::istringstream ls(line);
          std::vector<std::string> toks;
          std::string              tok;
          while (ls >> tok) {
            toks.push_back(tok);
          }
          if (!toks.empty()) {
            _lines.push_back(std::move(toks));
            _numbers.push_back(no);
          }
        }
      }

      bool done() const {
        return _pos == _lines.size();
      }
      std::vector<std::string> const& peek() const {
        return _lines[_pos];
      }
      std::vector<std::string> const& next() {
        if (done()) {
          error("unexpected end of input");
        }
        return _lines[_pos++];
      }
      [[noreturn]] void error(std::string const& what) const {
        std::size_t no = _pos < _numbers.size() ? _numbers[_pos]
                         : _numbers.empty()     ? 0
                                                : _numbers.back();
        fail(ErrorKind::malformed_input, "bundle", {},
             "line " + std::to_string(no) + ": " + what);
      }

      //! Runs fn, tagging malformed-input errors raised below it with the
      //! last line read.
      template <typename Fn>
      void located(Fn&& fn) const {
        try {
          fn();
        } catch (Error const& e) {
          if (e.kind() != ErrorKind::malformed_input || e.law() == "bundle") {
            throw;
          }
          std::string what = e.what();
          auto        colon = what.find("]: ");
          std::size_t no    = _pos == 0 ? 0 : _numbers[_pos - 1];
          std::string tail
              = colon == std::string::npos ? "" : ": " + what.substr(colon + 3);
          fail(ErrorKind::malformed_input, e.law(), e.witness(),
               "line " + std::to_string(no) + tail);
        }
      }

      //! An embedded .sgp table: the size, then n*n entries over any lines.
      FiniteSemigroup semigroup() {
        auto const& first = next();
        if (first.size() != 1) {
          --_pos;
          error("expected the element count of an embedded table");
        }
        std::size_t       n = parse_index(first[0], "sgp-size");
        std::vector<elem> table;
        while (table.size() < n * n) {
          for (auto const& t : next()) {
            table.push_back(parse_index(t, "sgp-entry"));
          }
        }
        if (table.size() != n * n) {
          error("embedded table has too many entries");
        }
        return FiniteSemigroup::from_table(n, std::move(table));
      }

      //! Lines up to the next header keyword.
      std::vector<std::string> body(std::set<std::string> const& headers) {
        std::vector<std::string> out;
        while (!done() && headers.count(peek()[0]) == 0) {
          auto const& l = next();
          out.insert(out.end(), l.begin(), l.end());
        }
        return out;
      }

     private:
      std::vector<std::vector<std::string>> _lines;
      std::vector<std::size_t>              _numbers;
      std::size_t                           _pos = 0;
    };

    inline std::vector<std::pair<elem, elem>>
    parse_arrows(std::vector<std::string> const& toks, char const* what) {
      std::vector<std::pair<elem, elem>> out;
      if (toks.size() % 3 != 0) {
        fail(ErrorKind::malformed_input, what, {}, "expected pairs a->b");
      }
      for (std::size_t k = 0; k < toks.size(); k += 3) {
        if (toks[k + 1] != "->") {
          fail(ErrorKind::malformed_input, what, {}, "expected pairs a->b");
        }
        out.emplace_back(parse_index(toks[k], what),
                         parse_index(toks[k + 2], what));
      }
      return out;
    }

    inline std::vector<elem> parse_indices(std::vector<std::string> const& t,
                                           std::size_t from, char const* what) {
      std::vector<elem> out;
      for (std::size_t k = from; k < t.size(); ++k) {
        out.push_back(parse_index(t[k], what));
      }
      return out;
    }

    inline void write_table(std::ostringstream& out, FiniteSemigroup const& S) {
      out << to_sgp(S);
    }

    inline void write_row(std::ostringstream& out, std::vector<elem> const& v) {
      for (std::size_t k = 0; k < v.size(); ++k) {
        out << (k ? " " : "") << v[k];
      }
      out << '\n';
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // .tpa
  ////////////////////////////////////////////////////////////////////////

  inline TwistedPartialAction load_tpa(std::string_view text) {
    detail::BundleReader in(text);
    std::set<std::string> headers{"GROUP", "ALGEBRA", "DOMAIN", "THETA", "W"};
    TpaTables             t;
    bool                  have_g = false, have_a = false;
    std::vector<bool>     have_dom, have_theta, have_w;
    auto need_ga = [&]() {
      if (!have_g || !have_a) {
        in.error("GROUP and ALGEBRA must come first");
      }
    };
    in.located([&] {
      while (!in.done()) {
        auto head = in.next();
        auto key  = head[0];
        if (key == "GROUP" && head.size() == 1) {
          t.G    = make_group(in.semigroup());
          have_g = true;
        } else if (key == "ALGEBRA" && head.size() == 1) {
          t.A    = make_clifford(in.semigroup());
          have_a = true;
        } else if (key == "DOMAIN" || key == "THETA") {
          need_ga();
          if (t.domain.empty()) {
            std::size_t n = t.G.size();
            t.domain.resize(n);
            t.theta.assign(n, std::vector<elem>(t.A.size(), kNone));
            t.w.resize(n * n);
            have_dom.assign(n, false);
            have_theta.assign(n, false);
            have_w.assign(n * n, false);
          }
          if (head.size() < 3 || head[2] != ":") {
            in.error("expected '" + key + " x:'");
          }
          elem x = detail::parse_index(head[1], "group-index");
          if (x >= t.G.size()) {
            in.error("group index out of range");
          }
          if (key == "DOMAIN") {
            auto elems = detail::parse_indices(head, 3, "domain");
            for (elem a : elems) {
              if (a >= t.A.size()) {
                in.error("domain element out of range");
              }
            }
            t.domain[x] = make_ideal(t.A, elems);
            have_dom[x] = true;
          } else {
            std::vector<std::string> toks(head.begin() + 3, head.end());
            auto more = in.body(headers);
            toks.insert(toks.end(), more.begin(), more.end());
            for (auto [a, b] : detail::parse_arrows(toks, "theta")) {
              if (a >= t.A.size() || b >= t.A.size()) {
                in.error("theta entry out of range");
              }
              t.theta[x][a] = b;
            }
            have_theta[x] = true;
          }
        } else if (key == "W") {
          need_ga();
          if (t.domain.empty() || head.size() != 4 || head[3] != ":") {
            in.error("expected 'W x y:' after the domains");
          }
          elem x = detail::parse_index(head[1], "group-index");
          elem y = detail::parse_index(head[2], "group-index");
          if (x >= t.G.size() || y >= t.G.size()) {
            in.error("group index out of range");
          }
          elem xy = t.G.mul(x, y);
          if (!have_dom[x] || !have_dom[xy]) {
            in.error("W block before the domains it needs");
          }
          auto I     = ideal_product(t.A, t.domain[x], t.domain[xy]);
          auto left  = detail::parse_indices(in.next(), 0, "w-left");
          auto right = detail::parse_indices(in.next(), 0, "w-right");
          if (left.size() != I.size() || right.size() != I.size()) {
            in.error("W maps must list one value per element of D_x D_xy");
          }
          Multiplier w{std::vector<elem>(t.A.size(), kNone),
                       std::vector<elem>(t.A.size(), kNone)};
          for (std::size_t k = 0; k < I.size(); ++k) {
            if (left[k] >= t.A.size() || right[k] >= t.A.size()) {
              in.error("W entry out of range");
            }
            w.left[I.elements[k]]  = left[k];
            w.right[I.elements[k]] = right[k];
          }
          t.w[x * t.G.size() + y] = std::move(w);
          have_w[x * t.G.size() + y] = true;
        } else {
          in.error("unknown block '" + key + "'");
        }
      }
    });
    need_ga();
    for (std::size_t k = 0; k < have_dom.size(); ++k) {
      if (!have_dom[k] || !have_theta[k]) {
        detail::fail(ErrorKind::malformed_input, "bundle", {elem(k)},
                     "missing DOMAIN or THETA block");
      }
    }
    if (t.domain.empty()) {
      detail::fail(ErrorKind::malformed_input, "bundle", {},
                   "no DOMAIN blocks");
    }
    for (std::size_t k = 0; k < have_w.size(); ++k) {
      if (!have_w[k]) {
        // omitted blocks default to the identity multiplier
        elem x = elem(k / t.G.size()), y = elem(k % t.G.size());
        t.w[k] = identity_multiplier(
            t.A, ideal_product(t.A, t.domain[x], t.domain[t.G.mul(x, y)]));
      }
    }
    return verify_tpa(std::move(t));
  }

  inline std::string to_tpa(TwistedPartialAction const& P,
                            std::string const&          comment = "") {
    std::ostringstream out;
    if (!comment.empty()) {
      out << "# " << comment << '\n';
    }
    auto const& G = P.G();
    auto const& A = P.A();
    out << "GROUP\n";
    detail::write_table(out, G.base());
    out << "ALGEBRA\n";
    detail::write_table(out, A.base());
    for (elem x = 0; x < G.size(); ++x) {
      out << "DOMAIN " << x << ":";
      for (elem a : P.domain(x).elements) {
        out << ' ' << a;
      }
      out << '\n';
    }
    for (elem x = 0; x < G.size(); ++x) {
      out << "THETA " << x << ":";
      for (elem a : P.domain(G.inv(x)).elements) {
        out << ' ' << a << "->" << P.theta(x, a);
      }
      out << '\n';
    }
    for (elem x = 0; x < G.size(); ++x) {
      for (elem y = 0; y < G.size(); ++y) {
        auto const&       I = P.domain2(x, G.mul(x, y));
        std::vector<elem> l, r;
        for (elem a : I.elements) {
          l.push_back(P.wl(x, y, a));
          r.push_back(P.wr(x, y, a));
        }
        out << "W " << x << ' ' << y << ":\n";
        detail::write_row(out, l);
        detail::write_row(out, r);
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // .tsm
  ////////////////////////////////////////////////////////////////////////

  inline TwistedSModule load_tsm(std::string_view text) {
    detail::BundleReader  in(text);
    std::set<std::string> headers{"S", "A", "ALPHA", "LAMBDA", "F"};
    ModuleTables          t;
    bool have_s = false, have_a = false, have_alpha = false,
         have_lambda = false, have_f = false;
    in.located([&] {
      while (!in.done()) {
        auto head = in.next();
        auto key  = head[0];
        if (head.size() != 1) {
          in.error("block headers stand alone on their line");
        }
        if (key == "S") {
          t.S    = inverse_structure(in.semigroup());
          have_s = true;
        } else if (key == "A") {
          t.A    = make_clifford(in.semigroup());
          have_a = true;
        } else if (!have_s || !have_a) {
          in.error("S and A must come first");
        } else if (key == "ALPHA") {
          t.alpha.assign(t.S.size(), kNone);
          for (auto [e, a] : detail::parse_arrows(in.body(headers), "alpha")) {
            if (e >= t.S.size() || a >= t.A.size()) {
              in.error("alpha entry out of range");
            }
            t.alpha[e] = a;
          }
          have_alpha = true;
        } else if (key == "LAMBDA" || key == "F") {
          auto vals = detail::parse_indices(in.body(headers), 0, "table");
          std::size_t cols = key == "F" ? t.S.size() : t.A.size();
          if (vals.size() != t.S.size() * cols) {
            in.error(key + " needs " + std::to_string(t.S.size()) + " rows of "
                     + std::to_string(cols));
          }
          (key == "F" ? t.f : t.lambda) = std::move(vals);
          (key == "F" ? have_f : have_lambda) = true;
        } else {
          in.error("unknown block '" + key + "'");
        }
      }
    });
    if (!have_s || !have_a || !have_alpha || !have_lambda || !have_f) {
      detail::fail(ErrorKind::malformed_input, "bundle", {},
                   "a module needs S, A, ALPHA, LAMBDA and F blocks");
    }
    return verify_module(std::move(t));
  }

  inline std::string to_tsm(TwistedSModule const& M,
                            std::string const&    comment = "") {
    std::ostringstream out;
    if (!comment.empty()) {
      out << "# " << comment << '\n';
    }
    auto const& S = M.S();
    auto const& A = M.A();
    out << "S\n";
    detail::write_table(out, S.base());
    out << "A\n";
    detail::write_table(out, A.base());
    out << "ALPHA\n";
    bool first = true;
    for (elem e : S.idempotents()) {
      out << (first ? "" : " ") << e << "->" << M.alpha(e);
      first = false;
    }
    out << "\nLAMBDA\n";
    for (elem s = 0; s < S.size(); ++s) {
      std::vector<elem> row;
      for (elem a = 0; a < A.size(); ++a) {
        row.push_back(M.lambda(s, a));
      }
      detail::write_row(out, row);
    }
    out << "F\n";
    for (elem s = 0; s < S.size(); ++s) {
      std::vector<elem> row;
      for (elem u = 0; u < S.size(); ++u) {
        row.push_back(M.f(s, u));
      }
      detail::write_row(out, row);
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // .ext
  ////////////////////////////////////////////////////////////////////////

  //! A group quotient Q gives an extension by a group, otherwise by an
  //! inverse semigroup.
  using Extension = std::variant<ExtensionByG, ExtensionByS>;

  inline Extension load_ext(std::string_view text) {
    detail::BundleReader  in(text);
    std::set<std::string> headers{"A", "U", "Q", "I", "J"};
    std::optional<FiniteSemigroup> A, U, Q;
    std::optional<std::vector<elem>> i, j;
    in.located([&] {
      while (!in.done()) {
        auto head = in.next();
        auto key  = head[0];
        if ((key == "A" || key == "U" || key == "Q") && head.size() == 1) {
          (key == "A" ? A : key == "U" ? U : Q) = in.semigroup();
        } else if ((key == "I" || key == "J") && head.size() >= 2
                   && head[1] == ":") {
          std::vector<std::string> toks(head.begin() + 2, head.end());
          auto more = in.body(headers);
          toks.insert(toks.end(), more.begin(), more.end());
          (key == "I" ? i : j) = detail::parse_indices(toks, 0, "map");
        } else {
          in.error("unknown block '" + key + "'");
        }
      }
    });
    if (!A || !U || !Q || !i || !j) {
      detail::fail(ErrorKind::malformed_input, "bundle", {},
                   "an extension needs A, U, Q, I and J blocks");
    }
    for (elem v : *i) {
      if (v >= U->size()) {
        detail::fail(ErrorKind::malformed_input, "map-range", {v});
      }
    }
    for (elem v : *j) {
      if (v >= Q->size()) {
        detail::fail(ErrorKind::malformed_input, "map-range", {v});
      }
    }
    auto CA = make_clifford(*A);
    auto IU = inverse_structure(*U);
    if (is_group(*Q)) {
      return make_extension_by_g(CA, IU, make_group(*Q), *i, *j);
    }
    return make_extension_by_s(CA, IU, inverse_structure(*Q), *i, *j);
  }

  namespace detail {
    inline std::string ext_text(FiniteSemigroup const& A,
                                FiniteSemigroup const& U,
                                FiniteSemigroup const& Q,
                                std::vector<elem> const& i,
                                std::vector<elem> const& j,
                                std::string const& comment) {
      std::ostringstream out;
      if (!comment.empty()) {
        out << "# " << comment << '\n';
      }
      out << "A\n";
      write_table(out, A);
      out << "U\n";
      write_table(out, U);
      out << "Q\n";
      write_table(out, Q);
      out << "I:";
      for (elem x : i) {
        out << ' ' << x;
      }
      out << "\nJ:";
      for (elem x : j) {
        out << ' ' << x;
      }
      out << '\n';
      return out.str();
    }
  }  // namespace detail

  inline std::string to_ext(ExtensionByG const& e,
                            std::string const&  comment = "") {
    return detail::ext_text(e.A.base(), e.U.base(), e.G.base(), e.i, e.j,
                            comment);
  }

  inline std::string to_ext(ExtensionByS const& e,
                            std::string const&  comment = "") {
    return detail::ext_text(e.A.base(), e.U.base(), e.S.base(), e.i, e.j,
                            comment);
  }

}  // namespace tpact

#endif  // TPACT_BUNDLE_IO_HPP_
