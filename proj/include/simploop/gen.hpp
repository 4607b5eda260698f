#ifndef SIMPLOOP_GEN_HPP
#define SIMPLOOP_GEN_HPP

#include <cstdint>
#include <optional>
#include <random>

#include "simploop/facegroup.hpp"
#include "simploop/omega.hpp"

namespace simploop {

/// Seeded generator; one instance per test run keeps all sampling
/// reproducible from the seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi) { // inclusive bounds
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Random based loop of the exact length, via a closed-neighbor walk that
/// always keeps the return distance feasible.
EdgeLoop random_based_loop(const SimplicialComplex& x, int length, Rng& rng);

/// Uniform pick among all loops contiguous to l (same length, based);
/// nullopt when l is its only neighbor and distinct was requested.
std::optional<EdgeLoop> random_contiguous_loop(const EdgeLoop& l, Rng& rng, bool distinct);

/// Random edge {l, l'} with len(l) = len(l') + 1, built from a random
/// shorter loop and a sampled neighbor of its trivial extension.
std::optional<std::pair<EdgeLoop, EdgeLoop>> random_mixed_edge(const SimplicialComplex& x,
                                                               int longer_length, Rng& rng);

/// Random valid sphere with the given dimensions (basepoint boundary),
/// cellwise with backtracking.
FaceSphere random_face_sphere(const SimplicialComplex& x, int m, int n, Rng& rng);

/// Uniform pick among spheres contiguous to f.
std::optional<FaceSphere> random_contiguous_sphere(const FaceSphere& f, Rng& rng, bool distinct);

/// Random based simplicial self-map, by rejection; identity fallback.
SimplicialMap random_based_self_map(const SimplicialComplex& x, Rng& rng, int attempts = 200);

/// Random based edge loop in the loop-space skeleton (a path of vertex
/// ids from the basepoint vertex back to itself).
OmegaPath random_omega_loop(const OmegaSkeleton& s, int length, Rng& rng);

} // namespace simploop

#endif
