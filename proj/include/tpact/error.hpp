// Error type shared by every tpact component.

#ifndef TPACT_ERROR_HPP_
#define TPACT_ERROR_HPP_

#include <cstdint>      // for uint32_t
#include <limits>       // for numeric_limits
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <utility>      // for move
#include <vector>       // for vector

namespace tpact {

  //! Index of an element in a finite multiplication table.
  using elem = std::uint32_t;

  //! Marker for "undefined" entries in partial maps.
  inline constexpr elem kNone = std::numeric_limits<elem>::max();

  enum class ErrorKind {
    malformed_input,
    not_associative,
    not_regular,
    not_inverse,
    not_group,
    not_clifford,
    invalid_kns,
    size_cap_exceeded,
    axiom_violation,
    factorization_failure,
    diagram_failure,
    not_e_unitary,
    not_sieben,
    not_admissible,
    internal_invariant_violation
  };

  inline char const* to_string(ErrorKind k) {
    switch (k) {
      case ErrorKind::malformed_input: return "MalformedInput";
      case ErrorKind::not_associative: return "NotAssociative";
      case ErrorKind::not_regular: return "NotRegular";
      case ErrorKind::not_inverse: return "NotInverse";
      case ErrorKind::not_group: return "NotGroup";
      case ErrorKind::not_clifford: return "NotClifford";
      case ErrorKind::invalid_kns: return "InvalidKNS";
      case ErrorKind::size_cap_exceeded: return "SizeCapExceeded";
      case ErrorKind::axiom_violation: return "AxiomViolation";
      case ErrorKind::factorization_failure: return "FactorizationFailure";
      case ErrorKind::diagram_failure: return "DiagramFailure";
      case ErrorKind::not_e_unitary: return "NotEUnitary";
      case ErrorKind::not_sieben: return "NotSieben";
      case ErrorKind::not_admissible: return "NotAdmissible";
      case ErrorKind::internal_invariant_violation:
        return "InternalInvariantViolation";
    }
    return "Unknown";
  }

  //! Renders a witness tuple as "(a,b,c)".
  inline std::string format_witness(std::vector<elem> const& w) {
    std::string out = "(";
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k != 0) {
        out += ',';
      }
      out += w[k] == kNone ? std::string("-") : std::to_string(w[k]);
    }
    out += ')';
    return out;
  }

  //! Every failure carries a kind, the name of the violated law and a
  //! witness tuple of element indices.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string law, std::vector<elem> witness = {},
          std::string const& detail = "")
        : std::runtime_error(compose(kind, law, witness, detail)),
          _kind(kind),
          _law(std::move(law)),
          _witness(std::move(witness)) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }
    std::string const& law() const noexcept {
      return _law;
    }
    std::vector<elem> const& witness() const noexcept {
      return _witness;
    }

   private:
    static std::string compose(ErrorKind                kind,
                               std::string const&       law,
                               std::vector<elem> const& witness,
                               std::string const&       detail) {
      std::string msg = to_string(kind);
      if (!law.empty()) {
        msg += " [" + law + "]";
      }
      if (!witness.empty()) {
        msg += " witness=" + format_witness(witness);
      }
      if (!detail.empty()) {
        msg += ": " + detail;
      }
      return msg;
    }

    ErrorKind         _kind;
    std::string       _law;
    std::vector<elem> _witness;
  };

  namespace detail {
    [[noreturn]] inline void fail(ErrorKind         kind,
                                  std::string       law,
                                  std::vector<elem> witness = {},
                                  std::string const& detail = "") {
      throw Error(kind, std::move(law), std::move(witness), detail);
    }

    inline void invariant(bool               cond,
                          std::string        law,
                          std::vector<elem>  witness = {}) {
      if (!cond) {
        fail(ErrorKind::internal_invariant_violation, std::move(law),
             std::move(witness));
      }
    }
  }  // namespace detail

}  // namespace tpact

#endif  // TPACT_ERROR_HPP_
