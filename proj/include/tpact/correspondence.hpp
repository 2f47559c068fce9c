// Passing between Sieben twisted modules over E-unitary inverse semigroups
// and twisted partial actions of groups, with round-trip checks.

#ifndef TPACT_CORRESPONDENCE_HPP_
#define TPACT_CORRESPONDENCE_HPP_

#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "module.hpp"
#include "partial_action.hpp"
#include "semigroup.hpp"

namespace tpact {

  struct Diagnostic {
    std::string       name;
    bool              pass = true;
    std::vector<elem> witness;
  };

  enum class Direction { lambda_to_theta, theta_to_lambda };

  struct CorrespondenceReport {
    Direction               direction = Direction::lambda_to_theta;
    std::vector<elem>       nu;
    bool                    verdict = true;
    std::vector<Diagnostic> diagnostics;

    //! Records a check; only the first failure's witness is kept.
    void check(std::string name, bool pass, std::vector<elem> witness = {}) {
      for (auto& d : diagnostics) {
        if (d.name == name) {
          if (d.pass && !pass) {
            d.pass    = false;
            d.witness = std::move(witness);
          }
          verdict = verdict && pass;
          return;
        }
      }
      diagnostics.push_back({std::move(name), pass,
                             pass ? std::vector<elem>{} : std::move(witness)});
      verdict = verdict && pass;
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Lambda -> Theta
  ////////////////////////////////////////////////////////////////////////

  struct ThetaFromLambda {
    TwistedPartialAction theta;
    GroupImage           image;  // G = S / sigma
    //! pick[x * |A| + e]: the s in class x with alpha(ss^-1) = e
    std::vector<elem>    pick;

    elem lift(elem x, elem e, std::size_t nA) const {
      return pick[x * nA + e];
    }
  };

  inline ThetaFromLambda theta_from_lambda(TwistedSModule const& M) {
    auto const& S = M.S();
    auto const& A = M.A();
    if (auto w = e_unitary_witness(S)) {
      detail::fail(ErrorKind::not_e_unitary, "e-unitary", *w);
    }
    auto sieben = is_sieben(M);
    if (!sieben.holds) {
      detail::fail(ErrorKind::not_sieben, "sieben", sieben.witnesses.front());
    }
    ThetaFromLambda R;
    R.image      = max_group_image(S);
    auto const& G = R.image.group;
    auto const& cls = R.image.sigma.class_of;
    std::size_t nA = A.size();
    R.pick.assign(G.size() * nA, kNone);
    for (elem s = 0; s < S.size(); ++s) {
      elem& slot = R.pick[cls[s] * nA + M.alpha_range(s)];
      detail::invariant(slot == kNone, "class-ranges-distinct", {s, slot});
      slot = s;
    }
    TpaTables t;
    t.G = G;
    t.A = A;
    for (elem x = 0; x < G.size(); ++x) {
      std::vector<elem> dom;
      for (elem s : R.image.sigma.classes[x]) {
        auto const& c = A.component(M.alpha_range(s));
        dom.insert(dom.end(), c.begin(), c.end());
      }
      t.domain.push_back(make_ideal(A, dom));
    }
    for (elem x = 0; x < G.size(); ++x) {
      std::vector<elem> th(nA, kNone);
      for (elem a : t.domain[G.inv(x)].elements) {
        // s in x with alpha(s^-1 s) = aa^-1, i.e. s^-1 picked in x^-1
        elem s = S.inv(R.lift(G.inv(x), A.idem(a), nA));
        th[a]  = M.lambda(s, a);
      }
      t.theta.push_back(std::move(th));
    }
    for (elem x = 0; x < G.size(); ++x) {
      for (elem y = 0; y < G.size(); ++y) {
        elem       xy = G.mul(x, y);
        auto       I  = ideal_product(A, t.domain[x], t.domain[xy]);
        Multiplier w{std::vector<elem>(nA, kNone),
                     std::vector<elem>(nA, kNone)};
        for (elem a : I.elements) {
          elem s     = R.lift(x, A.idem(a), nA);
          elem u     = R.lift(xy, A.idem(a), nA);
          elem omega = M.f(s, S.mul(S.inv(s), u));
          w.left[a]  = A.mul(omega, a);
          w.right[a] = A.mul(a, omega);
        }
        t.w.push_back(std::move(w));
      }
    }
    R.theta = verify_tpa(std::move(t));
    return R;
  }

  ////////////////////////////////////////////////////////////////////////
  // Theta -> Lambda
  ////////////////////////////////////////////////////////////////////////

  struct LambdaFromTheta {
    TwistedSModule   module;
    RestrictedAction restricted;
    CrossedProductG  skeleton;  // S = E(A) *_theta G
    //! kappa(e delta_x) = x
    elem kappa(elem s) const {
      return skeleton.pairs[s].second;
    }
  };

  inline LambdaFromTheta lambda_from_theta(TwistedPartialAction const& P) {
    auto const&     A = P.A();
    LambdaFromTheta R;
    R.restricted = restrict_to_idempotents(P);
    R.skeleton   = crossed_product_action(R.restricted.action);
    auto const& S     = R.skeleton.U;
    auto const& embed = R.restricted.embed;
    ModuleTables t{S, A, std::vector<elem>(S.size(), kNone),
                   std::vector<elem>(S.size() * A.size()),
                   std::vector<elem>(S.size() * S.size())};
    for (elem s : S.idempotents()) {
      t.alpha[s] = embed[R.skeleton.pairs[s].first];
    }
    for (elem s = 0; s < S.size(); ++s) {
      auto [e, x] = R.skeleton.pairs[s];
      elem pre    = P.theta_inv(x, embed[e]);
      for (elem a = 0; a < A.size(); ++a) {
        t.lambda[s * A.size() + a] = P.theta(x, A.mul(pre, a));
      }
      for (elem u = 0; u < S.size(); ++u) {
        elem y    = R.skeleton.pairs[u].second;
        elem rng  = embed[R.skeleton.pairs[S.range_idem(S.mul(s, u))].first];
        t.f[s * S.size() + u] = P.wr(x, y, rng);
      }
    }
    R.module = verify_module(std::move(t));
    detail::invariant(is_sieben(R.module).holds, "lambda-from-theta-sieben");
    detail::invariant(is_e_unitary(S), "lambda-from-theta-e-unitary");
    return R;
  }

  ////////////////////////////////////////////////////////////////////////
  // Round trips
  ////////////////////////////////////////////////////////////////////////

  //! Lambda -> Theta -> Lambda' with nu(s) = alpha(ss^-1) delta_{sigma(s)}.
  inline CorrespondenceReport roundtrip_lambda(TwistedSModule const& M) {
    CorrespondenceReport R;
    R.direction      = Direction::lambda_to_theta;
    auto        T    = theta_from_lambda(M);
    auto        L    = lambda_from_theta(T.theta);
    auto const& S    = M.S();
    auto const& S2   = L.module.S();
    auto const& A    = M.A();
    auto const& N    = L.module;
    for (elem s = 0; s < S.size(); ++s) {
      elem e = L.restricted.index[M.alpha_range(s)];
      R.nu.push_back(
          L.skeleton.index_of(e, T.image.sigma.class_of[s]));
    }
    bool defined = std::find(R.nu.begin(), R.nu.end(), kNone) == R.nu.end();
    R.check("nu-defined", defined);
    if (!defined) {
      return R;
    }
    R.check("nu-bijective",
            S.size() == S2.size() && is_injective(R.nu));
    auto hv = hom_violation(S.base(), S2.base(), R.nu);
    R.check("nu-hom", !hv, hv.value_or(std::vector<elem>{}));
    for (elem e : S.idempotents()) {
      R.check("alpha", M.alpha(e) == N.alpha(R.nu[e]), {e});
    }
    for (elem s = 0; s < S.size(); ++s) {
      for (elem a = 0; a < A.size(); ++a) {
        R.check("lambda", M.lambda(s, a) == N.lambda(R.nu[s], a), {s, a});
      }
      for (elem t = 0; t < S.size(); ++t) {
        R.check("f", M.f(s, t) == N.f(R.nu[s], R.nu[t]), {s, t});
      }
    }
    return R;
  }

  //! Theta -> Lambda -> Theta' with nu(x) = sigma(e delta_x).
  inline CorrespondenceReport roundtrip_theta(TwistedPartialAction const& P) {
    CorrespondenceReport R;
    R.direction      = Direction::theta_to_lambda;
    auto        L    = lambda_from_theta(P);
    auto        T    = theta_from_lambda(L.module);
    auto const& G    = P.G();
    auto const& H    = T.image.group;
    auto const& A    = P.A();
    auto const& Q    = T.theta;
    for (elem x = 0; x < G.size(); ++x) {
      elem e = kNone;
      for (elem a : P.domain(x).elements) {
        if (A.is_idempotent(a)) {
          e = L.restricted.index[a];
          break;
        }
      }
      R.nu.push_back(T.image.sigma.class_of[L.skeleton.index_of(e, x)]);
    }
    R.check("nu-bijective", G.size() == H.size() && is_injective(R.nu));
    auto hv = hom_violation(G.base(), H.base(), R.nu);
    R.check("nu-hom", !hv, hv.value_or(std::vector<elem>{}));
    if (!R.verdict) {
      return R;
    }
    for (elem x = 0; x < G.size(); ++x) {
      R.check("domain", P.domain(x) == Q.domain(R.nu[x]), {x});
      for (elem a = 0; a < A.size(); ++a) {
        R.check("theta", P.theta(x, a) == Q.theta(R.nu[x], a), {x, a});
      }
      for (elem y = 0; y < G.size(); ++y) {
        R.check("w", P.w(x, y) == Q.w(R.nu[x], R.nu[y]), {x, y});
      }
    }
    return R;
  }

  //! a delta_x -> a delta_s (s in x, alpha(ss^-1) = aa^-1) as an equivalence
  //! of extensions A *_Theta G(S) -> A *_Lambda S.
  inline CorrespondenceReport verify_phi_equivalence(TwistedSModule const& M) {
    CorrespondenceReport R;
    R.direction      = Direction::lambda_to_theta;
    auto        T    = theta_from_lambda(M);
    auto        C1   = crossed_product_action(T.theta);
    auto        C2   = crossed_product_module(M);
    auto const& A    = M.A();
    for (auto [a, x] : C1.pairs) {
      elem s = T.lift(x, A.idem(a), A.size());
      R.nu.push_back(C2.index_of(a, s));
    }
    bool defined = std::find(R.nu.begin(), R.nu.end(), kNone) == R.nu.end();
    R.check("phi-defined", defined);
    if (!defined) {
      return R;
    }
    R.check("phi-bijective",
            C1.U.size() == C2.U.size() && is_injective(R.nu));
    auto hv = hom_violation(C1.U.base(), C2.U.base(), R.nu);
    R.check("phi-hom", !hv, hv.value_or(std::vector<elem>{}));
    for (elem a = 0; a < A.size(); ++a) {
      R.check("phi-i", R.nu[C1.ext.i[a]] == C2.ext.i[a], {a});
    }
    for (elem p = 0; p < C1.U.size(); ++p) {
      elem x = C1.ext.j[p];
      R.check("phi-j", T.image.sigma.class_of[C2.ext.j[R.nu[p]]] == x, {p});
    }
    return R;
  }

  ////////////////////////////////////////////////////////////////////////
  // Admissible extensions
  ////////////////////////////////////////////////////////////////////////

  struct AdmissibleResult {
    TwistedPartialAction theta;
    CrossedProductG      crossed;
    std::vector<elem>    mu;  // U -> A *_Theta G
    TransversalTau       tau;
  };

  //! An admissible extension is equivalent to A *_Theta G for the action
  //! obtained from an order-preserving transversal.
  inline AdmissibleResult
  admissible_to_crossed_product(ExtensionByG const&                  ext,
                                std::optional<TransversalTau> const& tau
                                = std::nullopt,
                                std::size_t cap = 1'000'000) {
    RefinedExtension R;
    TransversalRho   rho;
    AdmissibleResult out;
    if (tau) {
      R   = refine_extension(ext);
      rho = rho_from_tau(R, *tau);
      if (auto w = order_violation(R.as_s, rho)) {
        detail::fail(ErrorKind::not_admissible, "tau-order", *w);
      }
      out.tau = *tau;
    } else {
      auto adm = is_admissible(ext, cap);
      if (!adm.admissible) {
        detail::fail(ErrorKind::not_admissible, "no-order-preserving-tau");
      }
      R       = std::move(adm.refined);
      rho     = *adm.rho;
      out.tau = *adm.tau;
    }
    auto M = module_from_extension(R.as_s, rho);
    detail::invariant(is_sieben(M).holds, "order-preserving-sieben");
    auto T = theta_from_lambda(M);
    // G(S) -> G, x -> kappa(s) for s in x
    std::vector<elem> nu;
    for (auto const& cls : T.image.sigma.classes) {
      nu.push_back(R.kappa[cls.front()]);
    }
    out.theta   = relabel_group(T.theta, ext.G, nu);
    out.crossed = crossed_product_action(out.theta);
    for (elem u = 0; u < ext.U.size(); ++u) {
      auto [a, s] = factorize(R.as_s, rho, u);
      out.mu.push_back(out.crossed.index_of(a, R.kappa[s]));
      detail::invariant(out.mu.back() != kNone, "mu-defined", {u});
    }
    auto const& V = out.crossed.U;
    if (auto w = hom_violation(ext.U.base(), V.base(), out.mu)) {
      detail::fail(ErrorKind::diagram_failure, "mu-hom", *w);
    }
    for (elem a = 0; a < ext.A.size(); ++a) {
      if (out.mu[ext.i[a]] != out.crossed.ext.i[a]) {
        detail::fail(ErrorKind::diagram_failure, "mu-i", {a});
      }
    }
    for (elem u = 0; u < ext.U.size(); ++u) {
      if (out.crossed.ext.j[out.mu[u]] != ext.j[u]) {
        detail::fail(ErrorKind::diagram_failure, "j-mu", {u});
      }
    }
    // surjectivity already forces injectivity here
    if (!is_surjective(out.mu, V.size())) {
      detail::fail(ErrorKind::diagram_failure, "mu-surjective");
    }
    detail::invariant(is_injective(out.mu) && V.size() == ext.U.size(),
                      "mu-injective");
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transfer of equivalences
  ////////////////////////////////////////////////////////////////////////

  //! eps_x a = g(s) a for s in x with alpha(ss^-1) = aa^-1.
  inline std::vector<Multiplier> eps_from_g(ThetaFromLambda const&   T,
                                            TwistedSModule const&    M,
                                            std::vector<elem> const& g) {
    auto const&             A = M.A();
    auto const&             P = T.theta;
    std::vector<Multiplier> eps;
    for (elem x = 0; x < P.G().size(); ++x) {
      Multiplier e{std::vector<elem>(A.size(), kNone),
                   std::vector<elem>(A.size(), kNone)};
      for (elem a : P.domain(x).elements) {
        elem s     = T.lift(x, A.idem(a), A.size());
        e.left[a]  = A.mul(g[s], a);
        e.right[a] = A.mul(a, g[s]);
      }
      eps.push_back(std::move(e));
    }
    return eps;
  }

  //! g(s) = alpha(ss^-1) eps_{kappa(s)}.
  inline std::vector<elem> g_from_eps(LambdaFromTheta const&         L,
                                      std::vector<Multiplier> const& eps) {
    auto const&       S = L.module.S();
    std::vector<elem> g;
    for (elem s = 0; s < S.size(); ++s) {
      g.push_back(eps[L.kappa(s)].right[L.module.alpha_range(s)]);
    }
    return g;
  }

  inline CorrespondenceReport
  equivalence_preserved(TwistedSModule const& M, TwistedSModule const& N,
                        std::vector<elem> const& g) {
    CorrespondenceReport R;
    R.direction = Direction::lambda_to_theta;
    auto given  = check_module_equivalence(M, N, g);
    R.check("modules-equivalent", given.equivalent, given.witness);
    auto TM  = theta_from_lambda(M);
    auto TN  = theta_from_lambda(N);
    auto eps = eps_from_g(TM, M, g);
    auto res = check_tpa_equivalence(TM.theta, TN.theta, eps);
    R.check("actions-equivalent", res.equivalent, res.witness);
    return R;
  }

  inline CorrespondenceReport
  equivalence_preserved(TwistedPartialAction const&    P,
                        TwistedPartialAction const&    Q,
                        std::vector<Multiplier> const& eps) {
    CorrespondenceReport R;
    R.direction = Direction::theta_to_lambda;
    auto given  = check_tpa_equivalence(P, Q, eps);
    R.check("actions-equivalent", given.equivalent, given.witness);
    auto LP = lambda_from_theta(P);
    auto LQ = lambda_from_theta(Q);
    R.check("same-skeleton",
            LP.module.S().base() == LQ.module.S().base()
                && LP.skeleton.pairs == LQ.skeleton.pairs);
    if (!R.verdict) {
      return R;
    }
    auto g   = g_from_eps(LP, eps);
    auto res = check_module_equivalence(LP.module, LQ.module, g);
    R.check("modules-equivalent", res.equivalent, res.witness);
    return R;
  }

}  // namespace tpact

#endif  // TPACT_CORRESPONDENCE_HPP_
