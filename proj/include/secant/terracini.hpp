#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "secant/fp_matrix.hpp"
#include "secant/point_set.hpp"
#include "secant/prime_field.hpp"

namespace secant {

struct OracleConfig {
    int trials = 3;
    std::vector<std::uint64_t> primes;  ///< rotated per trial; default table
    std::uint64_t seed = 0;

    std::vector<std::uint64_t> effective_primes() const;
};

/// Status of one secant dimension h. Full rank mod p lifts to characteristic
/// zero, so proved_nondefective is proof; deficiency is evidence only.
enum class HStatus { proved_nondefective, defective_evidence, unknown };
const char* to_string(HStatus s);

struct DefectRow {
    int h;
    long long expected;
    long long computed;
    HStatus status;
};

struct DefectReport {
    std::string label;
    std::vector<DefectRow> rows;
    std::vector<std::uint64_t> primes;
    int trials = 0;
    std::uint64_t seed = 0;

    bool any_defective_evidence() const;
    bool all_proved_nondefective() const;
};

/// (n+1) x |s| tangent rows at the torus point u over F_p: the monomial
/// values chi^m(u) and the n derivative rows m_i * u^{m - e_i}. Requires
/// every coordinate of u nonzero mod p.
FpMatrix tangent_matrix_at(const PointSet& s, const std::vector<std::uint64_t>& u,
                           const PrimeField& f);

/// max over `trials` of rank(stack of h tangent matrices at random torus
/// points) - 1: a certified lower bound for dim Sec_h, equal to it with
/// high probability.
int secant_dim_mod_p(const PointSet& s, int h, const PrimeField& f, int trials,
                     std::uint64_t seed);

/// Per-h comparison of computed vs expected secant dimension over a range.
DefectReport defect_report(const PointSet& s, int h_lo, int h_hi,
                           const OracleConfig& cfg,
                           const std::string& label = "");

/// Exact integer join of the k blocks M_{v_j}(a), with each block's rows
/// rescaled so that every entry is coef * a^(<m, v_j> - min_j) with a
/// nonnegative exponent. Rank (n+1)k realizes the separation criterion for
/// certified data once a is big enough.
IntMatrix one_param_tangent_matrix(const PointSet& s,
                                   const std::vector<Functional>& vs,
                                   const mpz_class& a);

} // namespace secant
