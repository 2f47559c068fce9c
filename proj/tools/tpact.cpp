// Command-line front end: inspect semigroups, build crossed products,
// convert between modules and actions, and run the property battery.
//
// Exit codes: 0 all checks pass, 1 property failure, 2 input or usage error.

#include <filesystem>  // for path
#include <fstream>     // for ifstream, ofstream
#include <iostream>    // for cout, cerr
#include <optional>    // for optional
#include <sstream>     // for ostringstream
#include <string>      // for string
#include <vector>      // for vector

#include "CLI11.hpp"
#include "tpact/tpact.hpp"

namespace {

  using namespace tpact;

  constexpr int kPass  = 0;
  constexpr int kFail  = 1;
  constexpr int kInput = 2;

  struct RunConfig {
    std::uint64_t            seed        = 0;
    std::size_t              max_iso     = 64;
    std::size_t              max_witness = 1'000'000;
    std::size_t              max_mult    = 10;
    bool                     quiet       = false;
    std::string              input;
    std::string              output;
    std::string              to_module;
    std::string              to_action;
    bool                     suite = false;
    std::vector<std::string> inputs;

    BatteryCaps caps() const {
      return {max_iso, max_witness, max_mult};
    }
  };

  //! Thrown for unreadable or unparsable input; maps to exit code 2.
  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  bool is_input_error(Error const& e) {
    return e.kind() == ErrorKind::malformed_input
           || e.kind() == ErrorKind::not_associative;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string extension_of(std::string const& path) {
    return std::filesystem::path(path).extension().string();
  }

  int emit(RunConfig const& cfg, std::string const& text) {
    if (cfg.output.empty()) {
      std::cout << text;
      return kPass;
    }
    std::ofstream out(cfg.output, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "error: cannot write " << cfg.output << '\n';
      return kInput;
    }
    return kPass;
  }

  std::string join(std::vector<elem> const& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      out += (k ? " " : "") + std::to_string(v[k]);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // inspect
  ////////////////////////////////////////////////////////////////////////

  int cmd_inspect(RunConfig const& cfg) {
    auto S = load_table(read_file(cfg.input));
    std::optional<InverseSemigroup> I;
    try {
      I = inverse_structure(S);
    } catch (Error const& e) {
      std::cout << "n=" << S.size() << " inverse=no\n";
      std::cout << "reason: " << e.what() << '\n';
      return kFail;
    }
    auto        image   = max_group_image(*I);
    bool        clifford = true;
    try {
      certify_clifford(*I);
    } catch (Error const&) {
      clifford = false;
    }
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "n=" << S.size() << " E=" << I->idempotents().size()
              << " sigma-classes=" << image.sigma.classes.size()
              << " max-group=" << image.group.size()
              << " e-unitary=" << yn(is_e_unitary(*I))
              << " clifford=" << yn(clifford)
              << " f-inverse=" << yn(is_f_inverse(*I).has_value()) << '\n';
    std::cout << "idempotents: " << join(I->idempotents()) << '\n';
    // covering pairs of the natural order
    std::cout << "hasse:";
    for (elem s = 0; s < S.size(); ++s) {
      for (elem t = 0; t < S.size(); ++t) {
        if (s == t || !I->leq(s, t)) {
          continue;
        }
        bool cover = true;
        for (elem u = 0; u < S.size() && cover; ++u) {
          cover = u == s || u == t || !I->leq(s, u) || !I->leq(u, t);
        }
        if (cover) {
          std::cout << ' ' << s << '<' << t;
        }
      }
    }
    std::cout << '\n';
    return kPass;
  }

  ////////////////////////////////////////////////////////////////////////
  // crossed
  ////////////////////////////////////////////////////////////////////////

  template <typename Crossed>
  std::string crossed_text(Crossed const& C, char const* index_name) {
    std::ostringstream out;
    out << "# crossed product, " << C.U.size() << " elements\n";
    for (elem k = 0; k < C.pairs.size(); ++k) {
      out << "# " << k << " = " << C.pairs[k].first << " delta " << index_name
          << C.pairs[k].second << '\n';
    }
    out << "# i: " << join(C.ext.i) << '\n';
    out << "# j: " << join(C.ext.j) << '\n';
    out << to_sgp(C.U.base());
    return out.str();
  }

  int cmd_crossed(RunConfig const& cfg) {
    auto text = read_file(cfg.input);
    auto ext  = extension_of(cfg.input);
    if (ext == ".tpa") {
      return emit(cfg, crossed_text(crossed_product_action(load_tpa(text)),
                                    "x="));
    }
    if (ext == ".tsm") {
      return emit(cfg, crossed_text(crossed_product_module(load_tsm(text)),
                                    "s="));
    }
    throw InputError("crossed expects a .tpa or .tsm file: " + cfg.input);
  }

  ////////////////////////////////////////////////////////////////////////
  // convert
  ////////////////////////////////////////////////////////////////////////

  int cmd_convert(RunConfig const& cfg) {
    if (cfg.to_module.empty() && cfg.to_action.empty()) {
      std::cerr << "error: convert needs --to-module or --to-action\n";
      return kInput;
    }
    if (!cfg.to_module.empty()) {
      auto P = load_tpa(read_file(cfg.to_module));
      auto L = lambda_from_theta(P);
      std::ostringstream out;
      out << "# module of " << std::filesystem::path(cfg.to_module).filename()
          .string() << '\n';
      for (elem s = 0; s < L.skeleton.pairs.size(); ++s) {
        auto [e, x] = L.skeleton.pairs[s];
        out << "# S element " << s << " = " << L.restricted.embed[e]
            << " delta x=" << x << '\n';
      }
      return emit(cfg, out.str() + to_tsm(L.module));
    }
    auto M = load_tsm(read_file(cfg.to_action));
    if (auto w = e_unitary_witness(M.S())) {
      std::cout << "not E-unitary at (e,s)=" << format_witness(*w) << '\n';
      return kFail;
    }
    auto sb = is_sieben(M);
    if (!sb.holds) {
      std::cout << "sieben condition fails at (s,e)="
                << format_witness(sb.witnesses.front()) << '\n';
      return kFail;
    }
    auto               T = theta_from_lambda(M);
    std::ostringstream out;
    out << "# action of " << std::filesystem::path(cfg.to_action).filename()
        .string() << '\n';
    for (elem x = 0; x < T.image.sigma.classes.size(); ++x) {
      out << "# G element " << x << " = sigma-class {"
          << join(T.image.sigma.classes[x]) << "}\n";
    }
    return emit(cfg, out.str() + to_tpa(T.theta));
  }

  ////////////////////////////////////////////////////////////////////////
  // verify
  ////////////////////////////////////////////////////////////////////////

  //! Runs the loader as a check so axiom violations become FAIL lines.
  template <typename Load>
  auto load_checked(Battery& B, std::string const& path, Load load)
      -> std::optional<decltype(load())> {
    std::optional<decltype(load())> out;
    try {
      out = load();
    } catch (Error const& e) {
      if (is_input_error(e)) {
        throw InputError(path + ": " + e.what());
      }
      B.run(path + "/load", [&]() -> std::optional<Failure> {
        throw e;
      });
      return std::nullopt;
    }
    B.run(path + "/load", [] { return std::optional<Failure>{}; });
    return out;
  }

  int cmd_verify(RunConfig const& cfg) {
    if (!cfg.suite && cfg.inputs.empty()) {
      std::cerr << "error: verify needs --suite or at least one input file\n";
      return kInput;
    }
    Battery B(cfg.caps());
    if (cfg.suite) {
      SuiteOptions opt;
      opt.seed     = cfg.seed;
      opt.mult_cap = cfg.max_mult;
      for (auto const& inst : generate_suite(opt)) {
        check_action(B, "suite/" + inst.name, inst.action);
      }
    }
    for (auto const& path : cfg.inputs) {
      auto ext = extension_of(path);
      if (ext != ".sgp" && ext != ".tpa" && ext != ".tsm" && ext != ".ext") {
        throw InputError("unknown file type: " + path);
      }
      auto text = read_file(path);
      if (ext == ".sgp") {
        if (auto S = load_checked(B, path, [&] { return load_table(text); })) {
          check_semigroup(B, path, *S);
        }
      } else if (ext == ".tpa") {
        if (auto P = load_checked(B, path, [&] { return load_tpa(text); })) {
          check_action(B, path, *P);
        }
      } else if (ext == ".tsm") {
        if (auto M = load_checked(B, path, [&] { return load_tsm(text); })) {
          check_module(B, path, *M);
        }
      } else if (ext == ".ext") {
        if (auto E = load_checked(B, path, [&] { return load_ext(text); })) {
          std::visit([&](auto const& e) { check_extension(B, path, e); }, *E);
        }
      } else {
        throw InputError("unknown file type: " + path);
      }
    }
    B.print(std::cout, cfg.quiet);
    std::cout << "SUMMARY checks=" << B.results().size()
              << " pass=" << B.results().size() - B.failures()
              << " fail=" << B.failures() << '\n';
    return B.all_pass() ? kPass : kFail;
  }

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App  app{"Twisted partial actions, twisted modules and their crossed "
               "products"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", cfg.seed, "Seed for the generated suite");
  app.add_option("--max-iso", cfg.max_iso,
                 "Largest semigroup size for isomorphism search")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-witness", cfg.max_witness,
                 "Cap on enumerated transversals and witness searches")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-mult", cfg.max_mult,
                 "Largest ideal size for multiplier enumeration")
      ->check(CLI::PositiveNumber);
  app.add_flag("--quiet", cfg.quiet, "Print only failures and the summary");

  auto* inspect = app.add_subcommand("inspect", "Summarize an .sgp semigroup");
  inspect->add_option("file", cfg.input, ".sgp file")->required();

  auto* crossed = app.add_subcommand(
      "crossed", "Write the crossed product of a .tpa or .tsm bundle");
  crossed->add_option("file", cfg.input, ".tpa or .tsm file")->required();
  crossed->add_option("-o,--output", cfg.output, "Output path");

  auto* convert = app.add_subcommand(
      "convert", "Convert an action to a module or a module to an action");
  auto* to_mod = convert->add_option("--to-module", cfg.to_module, ".tpa file");
  auto* to_act = convert->add_option("--to-action", cfg.to_action, ".tsm file");
  to_mod->excludes(to_act);
  convert->add_option("-o,--output", cfg.output, "Output path");

  auto* verify = app.add_subcommand(
      "verify", "Run the property battery on files or the generated suite");
  verify->add_flag("--suite", cfg.suite, "Include the generated suite");
  verify->add_option("files", cfg.inputs, ".sgp/.tpa/.tsm/.ext files");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*inspect) {
      return cmd_inspect(cfg);
    }
    if (*crossed) {
      return cmd_crossed(cfg);
    }
    if (*convert) {
      return cmd_convert(cfg);
    }
    return cmd_verify(cfg);
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (Error const& e) {
    if (is_input_error(e)) {
      std::cerr << "error: " << e.what() << '\n';
      return kInput;
    }
    std::cout << "FAIL " << e.what() << '\n';
    return kFail;
  }
}
