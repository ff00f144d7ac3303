#ifndef WALKHG_ERRORS_HPP
#define WALKHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace walkhg {

// Invalid graph input: loops, multi-edges, asymmetry, disconnected, bad ids.
struct invalid_graph_error : std::runtime_error {
  explicit invalid_graph_error(const std::string& m) : std::runtime_error(m) {}
};

// A lazy neighbor oracle violated its contract (asymmetric relation,
// duplicate entries, loops, empty neighbor set).
struct malformed_oracle_error : std::runtime_error {
  explicit malformed_oracle_error(const std::string& m) : std::runtime_error(m) {}
};

// Operation asked for indices beyond what the table/ball certifies.
struct scope_error : std::runtime_error {
  explicit scope_error(const std::string& m) : std::runtime_error(m) {}
};

// Convolution refused: finite graph is not self-centered (exit code 2 at the CLI).
struct domain_refusal : std::runtime_error {
  explicit domain_refusal(const std::string& m) : std::runtime_error(m) {}
};

// Bad CLI arguments / family parameters (exit code 3 at the CLI).
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace walkhg

#endif
