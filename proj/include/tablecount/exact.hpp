#ifndef TABLECOUNT_EXACT_HPP
#define TABLECOUNT_EXACT_HPP

#include <gmpxx.h>

#include "tablecount/log_count.hpp"
#include "tablecount/margins.hpp"

namespace tablecount {

// Exact Omega(r, c) by dynamic programming over columns. States are
// residual row-sum multisets (sorted, zeros dropped), so the reach is set
// by the distinct-residual structure rather than raw m. Guarded by
// prod_i (r_i + 1) <= 1e7; throws TooLargeError beyond that.
mpz_class count_exact(const Margins& margins);

// Exact Omega_0(r, c): same DP restricted to 0-1 columns. Returns 0 for
// margins failing the Gale-Ryser condition.
mpz_class count_exact_01(const Margins& margins);

// Gale-Ryser feasibility: true iff some 0-1 matrix has these margins.
bool gale_ryser_feasible(const Margins& margins);

// Natural log of a big integer at full double precision; -inf for 0.
double ln_mpz(const mpz_class& value);

LogCount exact_log_count(const Margins& margins);
LogCount exact01_log_count(const Margins& margins);

}  // namespace tablecount

#endif
