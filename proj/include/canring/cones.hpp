#pragma once

#include <optional>
#include <string>
#include <vector>

#include "canring/rational.hpp"
#include "canring/variety.hpp"

namespace canring {

// The exponent lattice of a divisor: integer tuples (d, c_0..c_{n-1})
// recording u^d * prod f_i^{c_i}, constrained by d >= 0, c_i >= -d*alpha_i,
// and the degree-balance rows (one for projective space, two for a
// Hirzebruch surface) summing to zero.
struct ConeSpec {
    std::vector<Rational> alphas;
    std::vector<std::vector<long>> balance;

    size_t arity() const { return alphas.size() + 1; }
    bool contains(const std::vector<long>& point) const;
};

struct Ray {
    std::vector<long> point;  // (d, c_0..c_{n-1})
    std::string label;        // "e_i" or "e_{i,j}"
    long degree = 0;          // = point[0]
};

// sigma = lambda + sum zeta_m * ray_m with 0 <= zeta, deg(lambda) < sum of
// the ray degrees.
struct Decomposition {
    std::vector<long> lambda;
    std::vector<long> zeta;  // aligned with the ray list passed in
};

struct TPartition {
    std::vector<size_t> t_eq, t_plus, t_minus;
};

ConeSpec build_sigma(const QDivisor& D);

// Extremal rays e_i for projective space: degree l_i*a_i, slot j = -alpha_j
// * l_i * a_i for j != i, slot i completes the balance row.
std::vector<Ray> extremal_rays_proj(const QDivisor& D);

// Sign partition of the component indices by a_i*sum(alpha b) vs
// b_i*sum(alpha a).
TPartition t_partition(const QDivisor& D);

// First-stage ray of the Hirzebruch cone: (1, -alpha_1, ..., balancing slot
// i, ..., -alpha_n) as exact rationals.
std::vector<Rational> epsilon_ray(const QDivisor& D, size_t i);

// Extremal rays for a Hirzebruch surface: multiples of epsilon_i for the
// balanced indices plus pairwise intersection rays e_{i,j}. Each e_{i,j} is
// computed both from the closed form and directly as the lattice point of
// degree d_{i,j} on H intersected with the epsilon_i/epsilon_j edge; on
// disagreement the direct value wins and a warning is recorded.
std::vector<Ray> extremal_rays_hirz(const QDivisor& D,
                                    std::vector<std::string>* warnings = nullptr);

// Deterministic canonical form: triangulate by taking ray subsets in index
// order, pick the first independent subset whose simplicial cone contains
// sigma, floor the coordinates.
Decomposition canonical_decompose(const std::vector<long>& sigma, const std::vector<Ray>& rays);

// All lattice points sum s_m * ray_m with 0 <= s_m < 1 (the origin
// included), by bounded exhaustive search; throws when the search space
// exceeds cap.
std::vector<std::vector<long>> box_points(const std::vector<Ray>& rays,
                                          unsigned long long cap = 4000000ull);

// Exact feasibility of point in the nonnegative rational span of the rays.
bool in_ray_cone(const std::vector<long>& point, const std::vector<Ray>& rays);

// True when no ray lies in the cone spanned by the others.
bool rays_extremal(const std::vector<Ray>& rays);

}  // namespace canring
