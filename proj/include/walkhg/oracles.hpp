#ifndef WALKHG_ORACLES_HPP
#define WALKHG_ORACLES_HPP

#include <string>
#include <vector>

#include "walkhg/convolution.hpp"
#include "walkhg/hypergroup.hpp"

namespace walkhg {

// Closed-form structure identities for every family whose table has a known
// formula; used as ground truth against the generic engine.
//
// Families:
//   "complete"        params {n}
//   "srg"             params {n, k, lambda, mu}
//   "tree"            params {n}
//   "linked-triangle" params {}
//   "prism"           params {n}
//   "bipartite"       params {m}   (m = size of the side containing v0)
//   "figure10"        params {}, cls "filled" | "blank"
//   "lineprism3"      params {}, cls "filled" | "blank"
//   "ladder"          params {}
struct OracleFamily {
  std::string family;
  std::vector<long long> params;
  std::string cls;
};

// Largest level index the family's formulas cover (-1 = unbounded).
int closed_form_max_level(const OracleFamily& f);

ConvolutionRow closed_form(const OracleFamily& f, int i, int j);

struct OracleVerdict {
  bool ok = true;
  std::string detail;
  int i = -1, j = -1;  // first mismatching row
};

// Exact row-by-row comparison over every row the table certifies and the
// formulas cover.
OracleVerdict oracle_vs_engine(const OracleFamily& f, const ConvolutionTable& t);

// For families keyed by base-point class: engine classes must match the
// oracle tables under a perfect matching.
OracleVerdict oracle_vs_engine_classes(const std::vector<OracleFamily>& oracles,
                                       const BasePointClassification& classes);

}  // namespace walkhg

#endif
