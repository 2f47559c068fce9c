#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "tpact/tpact.hpp"

using namespace tpact;

namespace {

  std::string const kE2Z2 = R"(GROUP
2
0 1
1 0
ALGEBRA
2
0 1
1 1
DOMAIN 0: 0 1
DOMAIN 1: 1
THETA 0: 0->0 1->1
THETA 1: 1->1
)";

  Error error_of(std::function<void()> const& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e;
    }
    FAIL("expected an error");
    return Error(ErrorKind::internal_invariant_violation, "", {}, "");
  }

  bool same_action(TwistedPartialAction const& P,
                   TwistedPartialAction const& Q) {
    return P.G().base() == Q.G().base() && P.A().base() == Q.A().base()
           && P.tables().theta == Q.tables().theta
           && P.tables().w == Q.tables().w;
  }

  bool same_module(TwistedSModule const& M, TwistedSModule const& N) {
    auto const& s = M.tables();
    auto const& t = N.tables();
    return s.S.base() == t.S.base() && s.A.base() == t.A.base()
           && s.alpha == t.alpha && s.lambda == t.lambda && s.f == t.f;
  }

}  // namespace

TEST_CASE("tpa files round trip", "[io]") {
  for (auto const& inst : generate_suite()) {
    INFO(inst.name);
    auto text = to_tpa(inst.action, inst.name);
    auto back = load_tpa(text);
    CHECK(same_action(inst.action, back));
    CHECK(to_tpa(back, inst.name) == text);
  }
}

TEST_CASE("omitted twists default to the identity", "[io]") {
  auto P = load_tpa(kE2Z2);
  CHECK(same_action(P, e2_z2_action()));
  // unicode arrows and comments are accepted
  std::string alt = kE2Z2;
  alt.replace(alt.find("0->0 1->1"), 9, "0 → 0 1→1  # identity");
  CHECK(same_action(load_tpa(alt), P));
}

TEST_CASE("tsm files round trip", "[io]") {
  for (auto const& inst : generate_suite()) {
    INFO(inst.name);
    auto M    = lambda_from_theta(inst.action).module;
    auto text = to_tsm(M);
    CHECK(same_module(M, load_tsm(text)));
  }
  auto M = load_tsm(oracle::read_corpus("chain3_idempotent.tsm"));
  CHECK(same_module(M, load_tsm(to_tsm(M, "again"))));
}

TEST_CASE("ext files round trip", "[io]") {
  for (auto const& name : {"c3_z2.ext", "v_z2_refined.ext"}) {
    INFO(name);
    auto E    = load_ext(oracle::read_corpus(name));
    auto text = std::visit([](auto const& e) { return to_ext(e); }, E);
    auto F    = load_ext(text);
    CHECK(E.index() == F.index());
    CHECK(std::visit([](auto const& e) { return to_ext(e); }, F) == text);
  }
  CHECK(std::holds_alternative<ExtensionByG>(
      load_ext(oracle::read_corpus("e2_z2.ext"))));
  CHECK(std::holds_alternative<ExtensionByS>(
      load_ext(oracle::read_corpus("e2_z2_refined.ext"))));
}

TEST_CASE("malformed bundles report the line", "[io]") {
  auto e = error_of([] { load_tpa("GROUP\n2\n0 1\n1 0\nDOMAIN 0: 0\n"); });
  CHECK(e.kind() == ErrorKind::malformed_input);
  CHECK_THAT(std::string(e.what()),
             Catch::Matchers::ContainsSubstring("line 5"));

  e = error_of([] { load_tpa(kE2Z2 + "BOGUS\n"); });
  CHECK(e.kind() == ErrorKind::malformed_input);
  CHECK_THAT(std::string(e.what()),
             Catch::Matchers::ContainsSubstring("line 13"));

  e = error_of([] { load_tpa(kE2Z2 + "THETA 7: 1->1\n"); });
  CHECK(e.kind() == ErrorKind::malformed_input);

  e = error_of([] { load_tsm("S\n1\n0\nA\n1\n0\nALPHA\n0->0\n"); });
  CHECK(e.kind() == ErrorKind::malformed_input);

  e = error_of([] { load_ext("A\n1\n0\nU\n1\n0\nQ\n1\n0\nI: 0\nJ: 3\n"); });
  CHECK(e.kind() == ErrorKind::malformed_input);
}

TEST_CASE("semantic errors keep their kind", "[io]") {
  auto e = error_of(
      [] { load_tpa(oracle::read_corpus("negative/corrupted_theta.tpa")); });
  CHECK(e.kind() == ErrorKind::axiom_violation);
  e = error_of(
      [] { load_table(oracle::read_corpus("negative/not_associative.sgp")); });
  CHECK(e.kind() == ErrorKind::not_associative);
}
