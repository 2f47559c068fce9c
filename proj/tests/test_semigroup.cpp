#include <random>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "tpact/tpact.hpp"

using namespace tpact;

namespace {

  std::vector<std::string> const kCorpusTables
      = {"e2.sgp", "z2.sgp", "z3.sgp", "i2.sgp", "b2.sgp", "chain3.sgp",
         "clifford3.sgp"};

  //! Corpus tables plus small crossed products from the suite.
  std::vector<std::pair<std::string, FiniteSemigroup>> small_inverse(
      std::size_t max_n) {
    std::vector<std::pair<std::string, FiniteSemigroup>> out;
    for (auto const& f : kCorpusTables) {
      out.emplace_back(f, load_table(oracle::read_corpus(f)));
    }
    for (auto const& inst : generate_suite()) {
      auto C = crossed_product_action(inst.action);
      if (C.U.size() <= max_n) {
        out.emplace_back(inst.name, C.U.base());
      }
    }
    return out;
  }

  FiniteSemigroup relabel(FiniteSemigroup const& S, std::vector<elem> const& p) {
    std::vector<elem> table(S.size() * S.size());
    for (elem a = 0; a < S.size(); ++a) {
      for (elem b = 0; b < S.size(); ++b) {
        table[p[a] * S.size() + p[b]] = p[S.mul(a, b)];
      }
    }
    return FiniteSemigroup::from_table(S.size(), std::move(table));
  }

  ErrorKind kind_of(std::function<void()> const& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::internal_invariant_violation;
  }

}  // namespace

TEST_CASE("sgp parsing and formatting", "[parse]") {
  auto Z2 = load_table("2\n0 1\n1 0\n");
  CHECK(Z2.size() == 2);
  CHECK(Z2.mul(1, 1) == 0);
  CHECK(load_table(to_sgp(Z2)) == Z2);
  CHECK(load_table("# comment\n2 0 1 # trailing\n 1 0") == Z2);

  CHECK(kind_of([] { load_table(""); }) == ErrorKind::malformed_input);
  CHECK(kind_of([] { load_table("2\n0 1\n1"); })
        == ErrorKind::malformed_input);
  CHECK(kind_of([] { load_table("2\n0 1\n1 2"); })
        == ErrorKind::malformed_input);
  CHECK(kind_of([] { load_table("2\n0 x\n1 0"); })
        == ErrorKind::malformed_input);
  CHECK(kind_of([] { load_table("2\n0 1\n1 0 0"); })
        == ErrorKind::malformed_input);
  CHECK(kind_of([] { load_table("2\n1 0\n0 0"); })
        == ErrorKind::not_associative);
}

TEST_CASE("inverse structure agrees with brute force", "[inverse]") {
  for (auto const& [name, S] : small_inverse(24)) {
    INFO(name);
    auto t = oracle::table_of(S);
    auto I = inverse_structure(S);
    CHECK(I.idempotents() == oracle::idempotents(t));
    for (elem s = 0; s < S.size(); ++s) {
      CHECK(oracle::inverses(t, s) == std::vector<elem>{I.inv(s)});
      for (elem u = 0; u < S.size(); ++u) {
        CHECK(I.leq(s, u) == oracle::natural_leq(t, s, u));
        CHECK(natural_leq(I, s, u) == I.leq(s, u));
      }
    }
  }
}

TEST_CASE("non-inverse semigroups are rejected", "[inverse]") {
  auto RZ = load_table(oracle::read_corpus("negative/right_zero.sgp"));
  CHECK(kind_of([&] { inverse_structure(RZ); }) == ErrorKind::not_inverse);
  // left zero semigroup with an adjoined identity: still not inverse
  auto LZ = load_table("3\n0 0 0\n1 1 1\n0 1 2\n");
  CHECK(kind_of([&] { inverse_structure(LZ); }) == ErrorKind::not_inverse);
  // the null semigroup {0, a} with a a = 0 is not regular
  auto N = load_table("2\n0 0\n0 0\n");
  CHECK(kind_of([&] { inverse_structure(N); }) == ErrorKind::not_regular);
}

TEST_CASE("sigma is the least group congruence", "[sigma]") {
  for (auto const& [name, S] : small_inverse(8)) {
    INFO(name);
    auto t     = oracle::table_of(S);
    auto I     = inverse_structure(S);
    auto sigma = sigma_congruence(I);
    CHECK(oracle::same_partition(sigma.class_of,
                                 oracle::least_group_congruence(t)));
    auto G = max_group_image(I);
    CHECK(G.group.size() == sigma.classes.size());
    CHECK(!hom_violation(S, G.group.base(), G.projection.map));
    for (elem s = 0; s < S.size(); ++s) {
      for (elem u = 0; u < S.size(); ++u) {
        CHECK(sigma_related(I, s, u)
              == (sigma.class_of[s] == sigma.class_of[u]));
      }
    }
  }
}

TEST_CASE("E-unitary and F-inverse agree with their definitions",
          "[sigma]") {
  for (auto const& [name, S] : small_inverse(8)) {
    INFO(name);
    auto t = oracle::table_of(S);
    auto I = inverse_structure(S);
    bool e_unitary = true;
    for (elem e : oracle::idempotents(t)) {
      for (elem s = 0; s < S.size(); ++s) {
        if (oracle::natural_leq(t, e, s) && !oracle::is_idempotent(t, s)) {
          e_unitary = false;
        }
      }
    }
    CHECK(is_e_unitary(I) == e_unitary);
    CHECK(e_unitary_witness(I).has_value() == !e_unitary);

    auto sigma = oracle::least_group_congruence(t);
    bool f_inverse = true;
    for (elem s = 0; s < S.size(); ++s) {
      bool has_max = false;
      for (elem m = 0; m < S.size() && !has_max; ++m) {
        if (sigma[m] != sigma[s]) {
          continue;
        }
        has_max = true;
        for (elem u = 0; u < S.size(); ++u) {
          if (sigma[u] == sigma[s] && !oracle::natural_leq(t, u, m)) {
            has_max = false;
          }
        }
      }
      f_inverse = f_inverse && has_max;
    }
    CHECK(is_f_inverse(I).has_value() == f_inverse);
  }
}

TEST_CASE("frozen values for small semigroups", "[frozen]") {
  auto E2 = inverse_structure(load_table(oracle::read_corpus("e2.sgp")));
  CHECK(E2.idempotents().size() == 2);
  CHECK(sigma_congruence(E2).classes.size() == 1);
  CHECK(is_e_unitary(E2));
  CHECK(is_f_inverse(E2).has_value());

  auto Z2 = inverse_structure(load_table(oracle::read_corpus("z2.sgp")));
  CHECK(Z2.idempotents().size() == 1);
  CHECK(sigma_congruence(Z2).classes.size() == 2);
  CHECK(max_group_image(Z2).group.size() == 2);

  auto I2 = inverse_structure(load_table(oracle::read_corpus("i2.sgp")));
  CHECK(I2.size() == 7);
  CHECK(I2.idempotents().size() == 4);
  CHECK(sigma_congruence(I2).classes.size() == 1);
  CHECK_FALSE(is_e_unitary(I2));
  CHECK(kind_of([&] { certify_clifford(I2); }) == ErrorKind::not_clifford);

  auto C = crossed_product_action(e2_z2_action());
  CHECK(C.U.size() == 3);
  CHECK(sigma_congruence(C.U).classes.size() == 2);
  CHECK(is_e_unitary(C.U));
}

TEST_CASE("isomorphism search", "[iso]") {
  std::mt19937 rng(12345);
  for (auto const& [name, S] : small_inverse(7)) {
    INFO(name);
    std::vector<elem> p(S.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    auto T   = relabel(S, p);
    auto iso = find_isomorphism(S, T);
    REQUIRE(iso.has_value());
    CHECK(!hom_violation(S, T, iso->map));
    CHECK(is_injective(iso->map));
    auto all = all_isomorphisms(S, T, 64);
    // as many isomorphisms as automorphisms, all of them valid
    CHECK(all.size() == all_isomorphisms(S, S, 64).size());
    CHECK(std::find(all.begin(), all.end(), p) != all.end());
  }
  auto tables = small_inverse(6);
  for (auto const& [n1, S] : tables) {
    for (auto const& [n2, T] : tables) {
      if (S.size() == T.size() && S.size() <= 6) {
        INFO(n1 << " vs " << n2);
        CHECK(find_isomorphism(S, T).has_value()
              == oracle::isomorphic(oracle::table_of(S), oracle::table_of(T)));
      }
    }
  }
  CHECK_FALSE(find_isomorphism(crossed_product_action(z2_on_z2(true)).U.base(),
                               klein_group().base()));
  CHECK(kind_of([&] {
          find_isomorphism(cyclic_group(5).base(), cyclic_group(5).base(), 4);
        })
        == ErrorKind::size_cap_exceeded);
}

TEST_CASE("homomorphism enumeration", "[iso]") {
  auto tables = small_inverse(4);
  for (auto const& [n1, S] : tables) {
    for (auto const& [n2, T] : tables) {
      if (S.size() <= 4 && T.size() <= 4) {
        INFO(n1 << " -> " << n2);
        auto mine = all_homomorphisms(S, T);
        auto ref  = oracle::homomorphisms(oracle::table_of(S),
                                          oracle::table_of(T));
        std::sort(mine.begin(), mine.end());
        std::sort(ref.begin(), ref.end());
        CHECK(mine == ref);
      }
    }
  }
}

TEST_CASE("kernel normal systems", "[kns]") {
  // Z2 above Z2 with the identity structure map
  auto A = build_clifford({2, chain_meet(2), {2, 2}, {{1, 1}, {0, 1}}});
  auto const& I = A.inverse();
  // components: the quotient is the semilattice of idempotents
  KernelNormalSystem comps, trivial;
  for (elem e : I.idempotents()) {
    comps[e]   = A.component(e);
    trivial[e] = {e};
  }
  auto Q = congruence_from_kns(I, comps);
  CHECK(Q.quotient.size() == I.idempotents().size());
  auto Et = restrict_table(A.base(), I.idempotents());
  CHECK(oracle::isomorphic(oracle::table_of(Q.quotient), oracle::table_of(Et)));
  auto T = congruence_from_kns(I, trivial);
  CHECK(T.quotient.size() == I.size());

  KernelNormalSystem missing = comps;
  missing.erase(missing.begin());
  CHECK(kind_of([&] { congruence_from_kns(I, missing); })
        == ErrorKind::invalid_kns);
  KernelNormalSystem no_identity = trivial;
  no_identity.begin()->second.clear();
  CHECK(kind_of([&] { congruence_from_kns(I, no_identity); })
        == ErrorKind::invalid_kns);
}

TEST_CASE("refinement kernels agree with the brute-force congruence",
          "[kns]") {
  // the congruence from {i(A)_e} is the least one identifying i(A)_e
  // elementwise with e, found here among all partitions
  for (auto const& inst : generate_suite()) {
    auto C = crossed_product_action(inst.action);
    if (C.U.size() > 8) {
      continue;
    }
    INFO(inst.name);
    auto R = refine_extension(C.ext);
    auto t = oracle::table_of(C.U.base());
    std::vector<elem> best;
    std::size_t       best_blocks = 0;
    oracle::for_each_partition(t.size(), [&](std::vector<elem> const& l) {
      if (!oracle::is_congruence(t, l)) {
        return;
      }
      for (elem a = 0; a < C.ext.A.size(); ++a) {
        elem u = C.ext.i[a];
        if (l[u] != l[C.U.range_idem(u)]) {
          return;
        }
      }
      for (elem e : C.U.idempotents()) {
        for (elem f : C.U.idempotents()) {
          if (e != f && l[e] == l[f]) {
            return;
          }
        }
      }
      std::size_t blocks = *std::max_element(l.begin(), l.end()) + 1;
      if (blocks > best_blocks) {
        best        = l;
        best_blocks = blocks;
      }
    });
    CHECK(oracle::same_partition(best, R.pi));
  }
}
