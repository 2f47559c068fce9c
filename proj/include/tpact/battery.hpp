// Property battery over actions, modules and extensions, reported as
// "CHECK <name>: PASS" or "CHECK <name>: FAIL witness=(...) law=<law>".

#ifndef TPACT_BATTERY_HPP_
#define TPACT_BATTERY_HPP_

#include <algorithm>   // for max
#include <functional>  // for function
#include <optional>    // for optional
#include <ostream>     // for ostream
#include <string>      // for string
#include <vector>      // for vector

#include "correspondence.hpp"
#include "morphisms.hpp"

namespace tpact {

  struct BatteryCaps {
    std::size_t max_iso     = 64;
    std::size_t max_witness = 1'000'000;
    std::size_t max_mult    = 10;
  };

  struct CheckResult {
    std::string       name;
    bool              pass = true;
    std::vector<elem> witness;
    std::string       law;
  };

  //! A failed check: the law that broke and where.
  struct Failure {
    std::string       law;
    std::vector<elem> witness;
  };

  using CheckFn = std::function<std::optional<Failure>()>;

  inline std::string format_check(CheckResult const& r) {
    std::string out = "CHECK " + r.name + ": ";
    if (r.pass) {
      return out + "PASS";
    }
    return out + "FAIL witness=" + format_witness(r.witness) + " law=" + r.law;
  }

  class Battery {
   public:
    explicit Battery(BatteryCaps caps = {}) : _caps(caps) {}

    BatteryCaps const& caps() const noexcept {
      return _caps;
    }
    std::vector<CheckResult> const& results() const noexcept {
      return _results;
    }
    bool all_pass() const {
      for (auto const& r : _results) {
        if (!r.pass) {
          return false;
        }
      }
      return true;
    }
    std::size_t failures() const {
      std::size_t n = 0;
      for (auto const& r : _results) {
        n += r.pass ? 0 : 1;
      }
      return n;
    }

    //! Library errors thrown by fn count as failures of this check.
    bool run(std::string name, CheckFn const& fn) {
      CheckResult r{std::move(name), true, {}, {}};
      try {
        if (auto f = fn()) {
          r.pass    = false;
          r.law     = f->law;
          r.witness = f->witness;
        }
      } catch (Error const& e) {
        r.pass    = false;
        r.law     = std::string(to_string(e.kind())) + ":" + e.law();
        r.witness = e.witness();
      } catch (std::exception const& e) {
        r.pass = false;
        r.law  = e.what();
      }
      _results.push_back(std::move(r));
      return _results.back().pass;
    }

    void print(std::ostream& out, bool failures_only = false) const {
      for (auto const& r : _results) {
        if (!failures_only || !r.pass) {
          out << format_check(r) << '\n';
        }
      }
    }

   private:
    BatteryCaps              _caps;
    std::vector<CheckResult> _results;
  };

  ////////////////////////////////////////////////////////////////////////
  // Building blocks
  ////////////////////////////////////////////////////////////////////////

  inline std::optional<Failure> first_failure(CorrespondenceReport const& R) {
    for (auto const& d : R.diagnostics) {
      if (!d.pass) {
        return Failure{d.name, d.witness};
      }
    }
    return std::nullopt;
  }

  //! Associativity, unique inverses and commuting idempotents, checked
  //! directly on the table.
  inline std::optional<Failure> inverse_axioms(FiniteSemigroup const& S) {
    std::size_t n = S.size();
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) {
        for (elem c = 0; c < n; ++c) {
          if (S.mul(S.mul(a, b), c) != S.mul(a, S.mul(b, c))) {
            return Failure{"associative", {a, b, c}};
          }
        }
      }
    }
    for (elem a = 0; a < n; ++a) {
      std::size_t count = 0;
      for (elem b = 0; b < n; ++b) {
        if (S.mul(S.mul(a, b), a) == a && S.mul(S.mul(b, a), b) == b) {
          ++count;
        }
      }
      if (count != 1) {
        return Failure{"unique-inverse", {a}};
      }
    }
    for (elem e = 0; e < n; ++e) {
      for (elem f = 0; f < n; ++f) {
        if (S.mul(e, e) == e && S.mul(f, f) == f
            && S.mul(e, f) != S.mul(f, e)) {
          return Failure{"idempotents-commute", {e, f}};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Batteries
  ////////////////////////////////////////////////////////////////////////

  inline void check_action(Battery& B, std::string const& label,
                           TwistedPartialAction const& P) {
    auto const caps = B.caps();
    B.run(label + "/crossed-product", [&]() -> std::optional<Failure> {
      auto C = crossed_product_action(P);
      return inverse_axioms(C.U.base());
    });
    B.run(label + "/refinement", [&]() -> std::optional<Failure> {
      auto C = crossed_product_action(P);
      auto R = refine_extension(C.ext);
      if (auto w = e_unitary_witness(R.S)) {
        return Failure{"e-unitary", *w};
      }
      auto sigma = sigma_congruence(R.S);
      auto kern  = partition_from_labels(R.kappa);
      if (sigma.class_of != kern.class_of) {
        return Failure{"ker-kappa=sigma", {}};
      }
      auto E = crossed_product_action(restrict_to_idempotents(P).action);
      if (!find_isomorphism(R.S.base(), E.U.base(), caps.max_iso)) {
        return Failure{"iso-to-E(A)*G", {}};
      }
      return std::nullopt;
    });
    B.run(label + "/roundtrip-theta", [&]() {
      return first_failure(roundtrip_theta(P));
    });
    B.run(label + "/roundtrip-lambda", [&]() {
      return first_failure(roundtrip_lambda(lambda_from_theta(P).module));
    });
    B.run(label + "/phi-equivalence", [&]() {
      return first_failure(
          verify_phi_equivalence(lambda_from_theta(P).module));
    });
    B.run(label + "/admissible", [&]() -> std::optional<Failure> {
      auto C   = crossed_product_action(P);
      auto tau = natural_tau(C);
      auto Q   = admissible_to_crossed_product(C.ext, tau, caps.max_witness);
      if (Q.theta.tables().theta != P.tables().theta
          || !(Q.theta.tables().w == P.tables().w)) {
        return Failure{"natural-tau-recovers", {}};
      }
      auto adm = is_admissible(C.ext, caps.max_witness);
      if (!adm.admissible) {
        return Failure{"admissible", {}};
      }
      return std::nullopt;
    });
  }

  inline void check_module(Battery& B, std::string const& label,
                           TwistedSModule const& M) {
    B.run(label + "/crossed-product", [&]() {
      return inverse_axioms(crossed_product_module(M).U.base());
    });
    bool applies = B.run(label + "/sieben", [&]() -> std::optional<Failure> {
      if (auto w = e_unitary_witness(M.S())) {
        return Failure{"e-unitary", *w};
      }
      auto sb = is_sieben(M);
      if (!sb.holds) {
        return Failure{"sieben", sb.witnesses.front()};
      }
      return std::nullopt;
    });
    if (!applies) {
      return;
    }
    B.run(label + "/roundtrip-lambda",
          [&]() { return first_failure(roundtrip_lambda(M)); });
    B.run(label + "/roundtrip-theta", [&]() {
      return first_failure(roundtrip_theta(theta_from_lambda(M).theta));
    });
    B.run(label + "/phi-equivalence",
          [&]() { return first_failure(verify_phi_equivalence(M)); });
  }

  inline void check_extension(Battery& B, std::string const& label,
                              ExtensionByG const& ext) {
    auto const caps = B.caps();
    bool admissible = false;
    B.run(label + "/refinement", [&]() -> std::optional<Failure> {
      auto adm   = is_admissible(ext, caps.max_witness);
      admissible = adm.admissible;
      return std::nullopt;
    });
    if (admissible) {
      B.run(label + "/admissible-equivalence", [&]() {
        admissible_to_crossed_product(ext, std::nullopt, caps.max_witness);
        return std::optional<Failure>{};
      });
    }
  }

  //! Sieben condition of the induced module against order preservation of
  //! the transversal, over every transversal.
  inline void check_extension(Battery& B, std::string const& label,
                              ExtensionByS const& ext) {
    auto const caps = B.caps();
    B.run(label + "/sieben-order", [&]() -> std::optional<Failure> {
      auto all = all_transversals(ext, caps.max_witness);
      for (std::size_t k = 0; k < all.size(); ++k) {
        auto M = module_from_extension(ext, all[k]);
        if (is_sieben(M).holds != is_order_preserving(ext, all[k])) {
          return Failure{"sieben-iff-order-preserving", all[k].rho};
        }
      }
      return std::nullopt;
    });
  }

  //! Inverse axioms, and for small n that sigma lies below every congruence
  //! with a group quotient (all set partitions are tried).
  inline void check_semigroup(Battery& B, std::string const& label,
                              FiniteSemigroup const& S,
                              std::size_t            max_brute = 8) {
    bool inverse = B.run(label + "/inverse",
                         [&]() { return inverse_axioms(S); });
    if (!inverse || S.size() > max_brute) {
      return;
    }
    B.run(label + "/sigma-minimal", [&]() -> std::optional<Failure> {
      auto              I     = inverse_structure(S);
      auto              sigma = sigma_congruence(I);
      std::size_t       n     = S.size();
      std::vector<elem> label_of(n, 0);
      // restricted growth strings enumerate set partitions
      std::function<std::optional<Failure>(elem, elem)> rec =
          [&](elem k, elem blocks) -> std::optional<Failure> {
        if (k == n) {
          auto C = partition_from_labels(label_of);
          if (congruence_violation(S, C)
              || !is_group(quotient_semigroup(S, C))) {
            return std::nullopt;
          }
          for (elem s = 0; s < n; ++s) {
            for (elem t = 0; t < n; ++t) {
              if (sigma.class_of[s] == sigma.class_of[t]
                  && C.class_of[s] != C.class_of[t]) {
                return Failure{"sigma-below-group-congruence", {s, t}};
              }
            }
          }
          return std::nullopt;
        }
        for (elem b = 0; b <= blocks && b < n; ++b) {
          label_of[k] = b;
          if (auto f = rec(k + 1, std::max<elem>(blocks, b + 1))) {
            return f;
          }
        }
        return std::nullopt;
      };
      return rec(0, 0);
    });
  }

}  // namespace tpact

#endif  // TPACT_BATTERY_HPP_
