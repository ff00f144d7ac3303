#ifndef WALKHG_EXEC_HPP
#define WALKHG_EXEC_HPP

namespace walkhg {

// Execution policy for the data-parallel kernels. Results are bit-identical
// either way: rational arithmetic is exact, and reductions pick minima or sum
// integers, so the schedule cannot change any output.
enum class Exec { serial, parallel };

inline bool parallel_on(Exec e) { return e == Exec::parallel; }

}  // namespace walkhg

#endif
