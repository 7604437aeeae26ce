#include "secant/terracini.hpp"

#include <algorithm>
#include <stdexcept>

#include "secant/errors.hpp"
#include "secant/int_matrix.hpp"
#include "secant/rng.hpp"

namespace secant {

std::vector<std::uint64_t> OracleConfig::effective_primes() const {
    if (!primes.empty()) return primes;
    auto table = prime_table();
    return {table.begin(), table.end()};
}

const char* to_string(HStatus s) {
    switch (s) {
        case HStatus::proved_nondefective: return "proved_nondefective";
        case HStatus::defective_evidence: return "defective_evidence";
        case HStatus::unknown: return "unknown";
    }
    return "?";
}

bool DefectReport::any_defective_evidence() const {
    for (const DefectRow& r : rows)
        if (r.status == HStatus::defective_evidence) return true;
    return false;
}

bool DefectReport::all_proved_nondefective() const {
    for (const DefectRow& r : rows)
        if (r.status != HStatus::proved_nondefective) return false;
    return !rows.empty();
}

FpMatrix tangent_matrix_at(const PointSet& s, const std::vector<std::uint64_t>& u,
                           const PrimeField& f) {
    const int n = s.ambient_dim();
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("tangent_matrix_at: wrong torus point size");
    for (std::uint64_t c : u)
        if (c % f.p() == 0)
            throw std::invalid_argument(
                "tangent_matrix_at: torus point has a zero coordinate");

    FpMatrix m(static_cast<std::size_t>(n) + 1, s.size(), f);
    for (std::size_t col = 0; col < s.size(); ++col) {
        const Point& pt = s[col];
        std::uint64_t mono = 1;
        for (int d = 0; d < n; ++d)
            mono = f.mul(mono, f.pow(u[static_cast<std::size_t>(d)],
                                     pt[static_cast<std::size_t>(d)]));
        m.at(0, col) = mono;
        for (int d = 0; d < n; ++d) {
            const Coord e = pt[static_cast<std::size_t>(d)];
            if (e == 0) {
                m.at(static_cast<std::size_t>(d) + 1, col) = 0;
                continue;
            }
            // m_d * u^(m - e_d): divide the monomial value by u_d
            std::uint64_t val =
                f.mul(mono, f.inv(u[static_cast<std::size_t>(d)]));
            val = f.mul(val, f.reduce(e));
            m.at(static_cast<std::size_t>(d) + 1, col) = val;
        }
    }
    return m;
}

int secant_dim_mod_p(const PointSet& s, int h, const PrimeField& f, int trials,
                     std::uint64_t seed) {
    if (h < 1) throw std::invalid_argument("secant_dim_mod_p: h < 1");
    if (trials < 1) throw std::invalid_argument("secant_dim_mod_p: trials < 1");
    const int n = s.ambient_dim();

    int best = -1;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t), f.p()));
        FpMatrix stack(0, s.size(), f);
        for (int j = 0; j < h; ++j) {
            std::vector<std::uint64_t> u(static_cast<std::size_t>(n));
            for (int d = 0; d < n; ++d)
                u[static_cast<std::size_t>(d)] = 1 + rng.below(f.p() - 1);
            stack.append_rows(tangent_matrix_at(s, u, f));
        }
        best = std::max(best, static_cast<int>(stack.rank()) - 1);
    }
    return best;
}

DefectReport defect_report(const PointSet& s, int h_lo, int h_hi,
                           const OracleConfig& cfg, const std::string& label) {
    if (h_lo < 1 || h_hi < h_lo)
        throw std::invalid_argument("defect_report: bad h range");
    if (cfg.trials < 1) throw std::invalid_argument("defect_report: trials < 1");

    DefectReport rep;
    rep.label = label;
    rep.primes = cfg.effective_primes();
    rep.trials = cfg.trials;
    rep.seed = cfg.seed;

    const long long n = affine_dim(s);
    const long long N = static_cast<long long>(s.size()) - 1;

    for (int h = h_lo; h <= h_hi; ++h) {
        const long long expected =
            std::min(static_cast<long long>(h) * (n + 1) - 1, N);
        long long computed = -1;
        std::vector<long long> trial_dims;
        for (int t = 0; t < cfg.trials; ++t) {
            const PrimeField f(rep.primes[static_cast<std::size_t>(t) %
                                          rep.primes.size()]);
            const long long d = secant_dim_mod_p(
                s, h, f, 1,
                derive_seed(cfg.seed, static_cast<std::uint64_t>(h),
                            static_cast<std::uint64_t>(t)));
            trial_dims.push_back(d);
            computed = std::max(computed, d);
            if (computed == expected) break;  // full rank lifts: proof
        }
        HStatus status;
        if (computed == expected) {
            status = HStatus::proved_nondefective;
        } else if (std::all_of(trial_dims.begin(), trial_dims.end(),
                               [&](long long d) { return d == trial_dims[0]; })) {
            status = HStatus::defective_evidence;
        } else {
            status = HStatus::unknown;  // primes disagree below expected
        }
        rep.rows.push_back(DefectRow{h, expected, computed, status});
    }
    return rep;
}

IntMatrix one_param_tangent_matrix(const PointSet& s,
                                   const std::vector<Functional>& vs,
                                   const mpz_class& a) {
    if (a < 2)
        throw std::invalid_argument("one_param_tangent_matrix: need a >= 2");
    if (vs.empty())
        throw std::invalid_argument("one_param_tangent_matrix: no functionals");
    const int n = s.ambient_dim();
    const std::size_t cols = s.size();
    const std::size_t block = static_cast<std::size_t>(n) + 1;

    // exponent guard: total bit size of the largest entry
    const std::size_t abits = mpz_sizeinbase(a.get_mpz_t(), 2);
    for (const Functional& v : vs) {
        Coord lo = 0, hi = 0;
        std::vector<Coord> vals = v.values_on(s);
        lo = *std::min_element(vals.begin(), vals.end());
        hi = *std::max_element(vals.begin(), vals.end());
        const unsigned long spread = static_cast<unsigned long>(hi - lo);
        if (spread * abits > 4'000'000UL)
            throw ResourceLimitError(
                "one_param_tangent_matrix: exponents too large at desk scale");
    }

    IntMatrix m(block * vs.size(), cols);
    for (std::size_t b = 0; b < vs.size(); ++b) {
        const Functional& v = vs[b];
        std::vector<Coord> vals = v.values_on(s);
        const Coord lo = *std::min_element(vals.begin(), vals.end());
        for (std::size_t col = 0; col < cols; ++col) {
            mpz_class power;
            mpz_pow_ui(power.get_mpz_t(), a.get_mpz_t(),
                       static_cast<unsigned long>(vals[col] - lo));
            m.at(b * block, col) = power;
            for (int d = 0; d < n; ++d)
                m.at(b * block + static_cast<std::size_t>(d) + 1, col) =
                    s[col][static_cast<std::size_t>(d)] * power;
        }
    }
    return m;
}

} // namespace secant
