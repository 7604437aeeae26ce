#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secant/point_set.hpp"
#include "secant/polytope.hpp"

namespace secant {

/// Certificate for non-defectiveness: disjoint full simplices Delta_1..k
/// inside the source points, each separated by its functional v_i within
/// everything not yet removed.
struct SeparationCertificate {
    PointSet source;                          ///< the full set P cap M
    std::vector<std::vector<int>> simplices;  ///< index lists, extraction order
    std::vector<Functional> functionals;      ///< v_1..v_k
    std::vector<int> leftover;                ///< indices not in any simplex
    bool leftover_affinely_independent = false;
    std::uint64_t seed = 0;

    std::size_t k() const { return simplices.size(); }
    /// Complete certificates prove non-defectiveness for every h.
    bool complete() const {
        return leftover.empty() || leftover_affinely_independent;
    }
};

/// Does v separate the simplex delta within s? The affinely independent
/// (n+1)-subsets of s are the bases of a matroid; with the injective weights
/// phi_v the maximum-weight basis is unique and found greedily, so this works
/// without enumerating all simplices. Throws std::invalid_argument when
/// phi_v is not injective on s (caller should re-draw v) or delta is not a
/// full simplex inside s.
bool separates(const Functional& v, const PointSet& delta, const PointSet& s);

/// Reference implementation straight from the definition: enumerate every
/// simplex T in s and check phi_v(delta) is the strict maximum. |s| <= 12.
bool separates_brute_force(const Functional& v, const PointSet& delta,
                           const PointSet& s);

/// Greedy simplex chosen by an injective functional: take points in
/// decreasing phi_v order, keeping the collection affinely independent,
/// until a full simplex is formed. Returns indices into s.
std::vector<int> greedy_simplex(const Functional& v, const PointSet& s);

/// One pass of the extraction loop: repeatedly draw a random functional
/// injective on the remaining points, peel off the greedy simplex, stop when
/// the remainder is no longer full-dimensional.
SeparationCertificate greedy_extract(const PointSet& s, std::uint64_t seed);

/// Re-checks a certificate from scratch: structural invariants plus, for
/// each i, that v_i separates Delta_i in source minus Delta_1..Delta_{i-1}.
bool verify_certificate(const SeparationCertificate& c,
                        std::string* why = nullptr);

struct NonDefectivenessResult {
    std::size_t best_k = 0;
    bool complete = false;
    SeparationCertificate best;  ///< preferred: complete, then largest k
    int runs = 0;
};

/// Runs greedy_extract up to `runs` times with derived seeds. complete=true
/// (some run ended with empty or affinely independent leftover) certifies
/// non-defectiveness for all h; otherwise only non-h-defectiveness for
/// h <= best_k is certified.
NonDefectivenessResult certify_non_defective(const Polytope& p, int runs,
                                             std::uint64_t seed);

} // namespace secant
