#ifndef WALKHG_CLI_HPP
#define WALKHG_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "walkhg/exec.hpp"

namespace walkhg {

// Exit codes: 0 success, 1 internal error, 2 domain refusal
// (non-self-centered finite graph), 3 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitRefused = 2;
inline constexpr int kExitUsage = 3;

struct RunConfig {
  std::string graph_spec;
  std::string base;             // vertex id, vertex key, empty = family default
  int max_level = 4;            // truncation level for infinite graphs
  std::string format = "text";  // "text" | "json"
  long long samples = 100000;
  uint64_t seed = 7;
  int level_i = 1, level_j = 1;
  int order = 0, degree = 0;
  bool productive_only = false;
  bool all_basepoints = false;
  Exec exec = Exec::parallel;
};

int cmd_analyze(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_drg(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_mc(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace walkhg

#endif
