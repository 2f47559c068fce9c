#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "tpact/tpact.hpp"

using namespace tpact;

namespace {

  std::vector<std::string> const kModules
      = {"e2_z2.tsm",           "z2_on_z2.tsm",
         "z2_on_z2_twisted.tsm", "c3_z2.tsm",
         "chain2_klein_twisted.tsm", "chain3_klein_twisted.tsm",
         "diamond_z3_twisted.tsm",   "v_z2.tsm",
         "idempotent_e2.tsm",        "trivial_z2.tsm",
         "z2_twisted_z2.tsm",        "chain3_idempotent.tsm"};

  std::vector<std::string> const kRefined
      = {"e2_z2_refined.ext",          "c3_z2_refined.ext",
         "chain2_klein_twisted_refined.ext",
         "chain3_klein_twisted_refined.ext",
         "diamond_z3_twisted_refined.ext", "v_z2_refined.ext"};

  TwistedSModule corpus_module(std::string const& name) {
    return load_tsm(oracle::read_corpus(name));
  }

  ExtensionByS corpus_s_extension(std::string const& name) {
    auto E = load_ext(oracle::read_corpus(name));
    REQUIRE(std::holds_alternative<ExtensionByS>(E));
    return std::get<ExtensionByS>(E);
  }

  bool oracle_accepts(ModuleTables const& t) {
    auto A = oracle::table_of(t.A.base());
    return oracle::module_axioms(oracle::table_of(t.S.base()), A, t.alpha,
                                 t.lambda, t.f, oracle::homomorphisms(A, A));
  }

  bool library_accepts(ModuleTables const& t) {
    try {
      verify_module(t);
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::axiom_violation);
      return false;
    }
    return true;
  }

  //! A random g: S -> A with g(s) in the component of alpha(ss^-1) and
  //! g = alpha on E(S).
  std::vector<elem> random_g(TwistedSModule const& M, std::mt19937& rng) {
    std::vector<elem> g(M.S().size());
    for (elem s = 0; s < g.size(); ++s) {
      if (M.S().is_idempotent(s)) {
        g[s] = M.alpha(s);
        continue;
      }
      auto comp = M.A().component(M.alpha_range(s));
      g[s] = comp[std::uniform_int_distribution<std::size_t>(
          0, comp.size() - 1)(rng)];
    }
    return g;
  }

}  // namespace

TEST_CASE("corpus modules satisfy the axioms", "[module]") {
  for (auto const& name : kModules) {
    INFO(name);
    auto M = corpus_module(name);
    CHECK(oracle_accepts(M.tables()));
  }
}

TEST_CASE("single-entry mutants are judged like the oracle", "[module]") {
  std::size_t rejected = 0, accepted = 0;
  for (auto const& name : kModules) {
    INFO(name);
    auto const t  = corpus_module(name).tables();
    std::size_t nA = t.A.size();
    for (std::size_t k = 0; k < t.f.size(); ++k) {
      for (elem v = 0; v < nA; ++v) {
        if (v == t.f[k]) {
          continue;
        }
        auto m = t;
        m.f[k] = v;
        INFO("f entry " << k << " -> " << v);
        bool lib = library_accepts(m);
        CHECK(lib == oracle_accepts(m));
        (lib ? accepted : rejected) += 1;
      }
    }
    for (std::size_t k = 0; k < t.lambda.size(); ++k) {
      for (elem v = 0; v < nA; ++v) {
        if (v == t.lambda[k]) {
          continue;
        }
        auto m      = t;
        m.lambda[k] = v;
        INFO("lambda entry " << k << " -> " << v);
        bool lib = library_accepts(m);
        CHECK(lib == oracle_accepts(m));
        (lib ? accepted : rejected) += 1;
      }
    }
  }
  CHECK(rejected > 0);
}

TEST_CASE("module shape errors are input errors", "[module]") {
  auto t = corpus_module("c3_z2.tsm").tables();
  t.f.pop_back();
  try {
    verify_module(t);
    FAIL("accepted a short f table");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::malformed_input);
  }
  auto u      = corpus_module("c3_z2.tsm").tables();
  u.lambda[0] = 17;
  CHECK_THROWS_AS(verify_module(u), Error);
}

TEST_CASE("crossed product size and structure", "[crossed]") {
  for (auto const& name : kModules) {
    INFO(name);
    auto        M = corpus_module(name);
    auto        C = crossed_product_module(M);
    std::size_t expect = 0;
    for (elem s = 0; s < M.S().size(); ++s) {
      expect += M.A().component(M.alpha_range(s)).size();
    }
    CHECK(C.U.size() == expect);
    auto t = oracle::table_of(C.U.base());
    for (elem a = 0; a < t.size(); ++a) {
      CHECK(oracle::inverses(t, a).size() == 1);
    }
    // i(A) is the set of elements sent to idempotents
    for (elem x = 0; x < C.U.size(); ++x) {
      bool in_image = std::find(C.ext.i.begin(), C.ext.i.end(), x)
                      != C.ext.i.end();
      CHECK(in_image == M.S().is_idempotent(C.ext.j[x]));
    }
    CHECK(module_from_extension(C.ext, natural_transversal(M, C)).tables().f
          == M.tables().f);
  }
}

TEST_CASE("Sieben condition matches order-preserving transversals",
          "[transversal]") {
  std::size_t disagreements = 0, non_sieben = 0;
  for (auto const& name : kRefined) {
    INFO(name);
    auto ext = corpus_s_extension(name);
    auto all = all_transversals(ext, 200);
    CHECK(all.size() == transversal_count(ext, 200));
    auto op = order_preserving_transversals(ext, 200);
    for (auto const& rho : all) {
      auto M         = module_from_extension(ext, rho);
      bool sieben    = is_sieben(M).holds;
      bool preserves = is_order_preserving(ext, rho);
      disagreements += sieben != preserves ? 1 : 0;
      non_sieben += sieben ? 0 : 1;
      CHECK(preserves
            == (std::find(op.begin(), op.end(), rho) != op.end()));
      CHECK(oracle_accepts(M.tables()));
    }
  }
  CHECK(disagreements == 0);
  CHECK(non_sieben > 0);
}

TEST_CASE("transversal counts on the corpus", "[transversal]") {
  std::vector<std::size_t> all, op;
  for (auto const& name : kRefined) {
    auto ext = corpus_s_extension(name);
    all.push_back(all_transversals(ext).size());
    op.push_back(order_preserving_transversals(ext).size());
  }
  CHECK(all == std::vector<std::size_t>{1, 2, 8, 64, 16, 3});
  CHECK(op == std::vector<std::size_t>{1, 2, 8, 8, 4, 1});
  auto ext = corpus_s_extension("chain3_klein_twisted_refined.ext");
  CHECK_THROWS_AS(all_transversals(ext, 10), Error);
}

TEST_CASE("negative corpus module fails Sieben", "[transversal]") {
  auto M  = corpus_module("negative/non_sieben.tsm");
  auto sb = is_sieben(M);
  CHECK_FALSE(sb.holds);
  CHECK_FALSE(sb.witnesses.empty());
  CHECK(oracle_accepts(M.tables()));
}

TEST_CASE("transversals of one extension give equivalent modules",
          "[equivalence]") {
  for (auto const& name : kRefined) {
    INFO(name);
    auto ext = corpus_s_extension(name);
    auto all = all_transversals(ext, 200);
    auto M0  = module_from_extension(ext, all.front());
    for (auto const& rho : all) {
      auto M = module_from_extension(ext, rho);
      // g(s) = i^-1(rho(s) rho0(s)^-1)
      std::vector<elem> g(ext.S.size());
      for (elem s = 0; s < g.size(); ++s) {
        elem u = ext.U.mul(rho(s), ext.U.inv(all.front()(s)));
        g[s]   = ext.i_inv[u];
      }
      auto R = check_module_equivalence(M0, M, g);
      CHECK(R.equivalent);
      CHECK(modules_equivalent(M0, M).equivalent);
    }
  }
}

TEST_CASE("twisting by g gives an equivalent module", "[equivalence]") {
  std::mt19937 rng(99);
  for (auto const& name : kModules) {
    INFO(name);
    auto M = corpus_module(name);
    for (int rep = 0; rep < 4; ++rep) {
      auto g = random_g(M, rng);
      auto N = twist_module(M, g);
      CHECK(oracle_accepts(N.tables()));
      auto R = check_module_equivalence(M, N, g);
      CHECK(R.equivalent);
      auto S = modules_equivalent(N, M);
      CHECK(S.equivalent);
      REQUIRE(S.g.has_value());
      CHECK(check_module_equivalence(N, M, *S.g).equivalent);
    }
  }
}

TEST_CASE("inequivalent modules are told apart", "[equivalence]") {
  auto twisted   = corpus_module("z2_on_z2_twisted.tsm");
  auto untwisted = corpus_module("z2_on_z2.tsm");
  auto R         = modules_equivalent(untwisted, twisted);
  CHECK_FALSE(R.equivalent);
  CHECK_FALSE(R.failed_clause.empty());
  // the crossed products are not even isomorphic
  CHECK_FALSE(find_isomorphism(crossed_product_module(twisted).U.base(),
                               crossed_product_module(untwisted).U.base()));
}
