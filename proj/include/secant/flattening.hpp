#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secant/fp_matrix.hpp"
#include "secant/prime_field.hpp"
#include "secant/sv_shape.hpp"

namespace secant {

/// Exponent data of one monomial of multidegree (d_1..d_r): one exponent
/// vector per factor, |gamma_i| = d_i.
using MultiExp = std::vector<std::vector<int>>;

/// Fixed monomial ordering (lex per factor, then tensor order) so matrices
/// are bit-reproducible given a seed.
class MonomialBasis {
public:
    MonomialBasis(const std::vector<int>& dims, const std::vector<int>& degs);

    std::size_t size() const { return exps_.size(); }
    const MultiExp& operator[](std::size_t i) const { return exps_[i]; }
    std::size_t index_of(const MultiExp& e) const;

private:
    std::vector<MultiExp> exps_;
};

/// Complementary split a_i + b_i = d_i of a shape's degrees.
struct FlatteningSplit {
    std::vector<int> a;
    std::vector<int> b;

    FlatteningSplit() = default;
    FlatteningSplit(const SvShape& shape, std::vector<int> a_side);

    mpz_class rows(const SvShape& shape) const;  ///< B-side basis size
    mpz_class cols(const SvShape& shape) const;  ///< A-side basis size
    std::string to_string() const;
};

/// One rank-one mixed tensor: a linear form per factor over F_p.
struct RankOnePoint {
    std::vector<std::vector<std::uint64_t>> factors;
};

RankOnePoint random_rank_one_point(const SvShape& shape, const PrimeField& f,
                                   std::uint64_t seed);

/// Coefficient vector of prod_i l_i^{d_i} over the full monomial basis:
/// t_gamma = prod_i multinomial(d_i; gamma_i) * x_i^gamma_i. Requires p
/// larger than every multinomial involved.
std::vector<std::uint64_t> rank_one_tensor(const SvShape& shape,
                                           const MonomialBasis& basis,
                                           const RankOnePoint& pt,
                                           const PrimeField& f);

/// Flattening of the tensor with coefficients t: rows indexed by B-side
/// monomials, columns by A-side monomials, entry c_{beta,alpha} t_{beta+alpha}
/// with c the falling-factorial derivative coefficient. Linear in t; a
/// rank-one summand contributes a rank-one matrix.
FpMatrix flattening_matrix(const SvShape& shape, const FlatteningSplit& split,
                           const std::vector<std::uint64_t>& t,
                           const PrimeField& f);

/// Convenience: flattening of a sum of rank-one tensors.
FpMatrix flattening_matrix(const SvShape& shape, const FlatteningSplit& split,
                           const std::vector<RankOnePoint>& points,
                           const PrimeField& f);

enum class FlatStatus { no_certificate, defective_evidence, defective_proved };
const char* to_string(FlatStatus s);

struct FlatteningCertificate {
    SvShape shape;
    FlatteningSplit split;
    int h = 0;
    long long rows = 0, cols = 0;
    long long expected_dim = 0;
    std::vector<std::uint64_t> primes;      ///< per trial
    std::vector<long long> secant_ranks;    ///< flattening rank at h-point sums
    std::vector<long long> ambient_ranks;   ///< rank at a random full tensor
    std::vector<long long> tangent_dims;    ///< dim of the rank-<=r locus at the sample
    FlatStatus status = FlatStatus::no_certificate;
    std::string family;  ///< nonempty when (shape, h) is a proved family case
    std::uint64_t seed = 0;
};

struct FlatteningConfig {
    int trials = 3;
    std::vector<std::uint64_t> primes;  ///< default: first two table primes
    std::uint64_t seed = 0;
    long long max_entries = 250'000;    ///< rows*cols guard
};

/// Rank-based defectiveness certificate. Sec_h lands in the locus where the
/// flattening has rank <= r (r = observed rank at random h-secant points);
/// the certificate fires when the tangent dimension of that locus at the
/// sample is below the expected secant dimension, in every trial, over at
/// least two primes. Observed full rank reports no_certificate.
FlatteningCertificate flattening_defect_certificate(const SvShape& shape,
                                                    const FlatteningSplit& split,
                                                    int h,
                                                    const FlatteningConfig& cfg);

/// Enumerates splits within the size cap and returns those whose
/// certificate fires.
std::vector<FlatteningCertificate> split_search(const SvShape& shape, int h,
                                                const FlatteningConfig& cfg);

/// Shapes whose h-defectiveness is a proved fact (square and near-square
/// flattening families on (1,1,n) plus the tabulated small cases); used to
/// upgrade observed certificates to proof status.
std::optional<std::string> proved_defective_family(const SvShape& shape, int h);

} // namespace secant
