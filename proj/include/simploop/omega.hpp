#ifndef SIMPLOOP_OMEGA_HPP
#define SIMPLOOP_OMEGA_HPP

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "simploop/paths.hpp"

namespace simploop {

struct OmegaSimplexCheck {
    bool ok = true;
    int bad_col = -1;   // first i with col_i ∪ col_{i+1} not a simplex
    std::string reason; // set when lengths already disqualify the set
};

/// Simplex test for a set of based loops: lengths must lie in {m-1, m}
/// with at least one equal to m, and after same-sizing to m the union of
/// every adjacent column pair must be a simplex of X.  Repeats in `loops`
/// are collapsed first.
OmegaSimplexCheck omega_simplex_check(const SimplicialComplex& x, std::span<const EdgeLoop> loops);
bool omega_is_simplex(const SimplicialComplex& x, std::span<const EdgeLoop> loops);

/// Simplex guaranteed by extending every member of an equal-length simplex:
/// sigma together with the trivial extension of each member.
std::vector<EdgeLoop> sigma_union_extension(const SimplicialComplex& x, std::span<const EdgeLoop> sigma);

/// The four guaranteed small-simplex families.  Hypotheses are checked and
/// every emission is re-validated through omega_simplex_check.
std::vector<EdgeLoop> three_simplex_family_a(const EdgeLoop& l, const EdgeLoop& lp);
std::vector<EdgeLoop> three_simplex_family_b(const EdgeLoop& l, const EdgeLoop& lp);
std::vector<EdgeLoop> three_simplex_family_c(const EdgeLoop& l, const EdgeLoop& lp, int i);
std::vector<EdgeLoop> three_simplex_family_d(const EdgeLoop& l1, const EdgeLoop& l1p,
                                             const EdgeLoop& l2, const EdgeLoop& l2p);

struct OmegaCaps {
    long long max_vertices = 5'000'000;
    long long max_simplices = 50'000'000;
};

/// The d-skeleton of the loop-space truncation: interned loop vertices of
/// length <= k, edges, and simplices up to dimension d.  Vertices are
/// sorted by (length, sequence), so ids are reproducible; id 0 is the
/// length-0 constant loop, the basepoint.  Immutable once built.
class OmegaSkeleton {
public:
    static OmegaSkeleton build(const SimplicialComplex& x, int max_len, int max_dim,
                               OmegaCaps caps = {}, int workers = 1);

    const SimplicialComplex& base() const { return *x_; }
    int max_len() const { return max_len_; }
    int max_dim() const { return max_dim_; }

    int vertex_count() const { return static_cast<int>(loops_.size()); }
    const EdgeLoop& loop(int id) const { return loops_.at(static_cast<size_t>(id)); }
    int id_of(const EdgeLoop& l) const; // throws CapError when outside the skeleton
    std::optional<int> find(const EdgeLoop& l) const;
    int basepoint_vertex() const { return 0; }

    /// ids of vertices in the stratum of length exactly m.
    std::vector<int> stratum(int m) const;

    const std::vector<int>& closed_neighbors(int v) const { return closed_nbrs_.at(static_cast<size_t>(v)); }
    /// Direct check through the column condition; works for any id set,
    /// stored or not.  Repeated ids collapse.
    bool is_simplex(std::span<const int> ids) const;
    OmegaSimplexCheck simplex_check(std::span<const int> ids) const;

    /// Stored simplices of dimension d (1 <= d <= max_dim), each a sorted
    /// id set, list in lexicographic order.
    const std::vector<std::vector<int>>& simplices(int d) const;
    long long simplex_count() const;

    struct Components {
        std::vector<int> comp_of;        // vertex -> component id
        std::vector<long long> size;     // component -> member count
        std::vector<int> representative; // component -> smallest vertex id
        int count() const { return static_cast<int>(size.size()); }
    };
    Components components() const;

private:
    const SimplicialComplex* x_ = nullptr;
    int max_len_ = 0, max_dim_ = 0;
    std::vector<EdgeLoop> loops_;
    std::unordered_map<std::string, int> index_; // key: raw id sequence
    std::vector<int> stratum_begin_;             // loops_ offsets per length
    std::vector<std::vector<int>> closed_nbrs_;
    std::vector<std::vector<std::vector<int>>> simplices_; // [d], d >= 1

    static std::string key_of(const EdgeLoop& l);
};

/// Path in the loop space as a sequence of skeleton vertex ids.
using OmegaPath = std::vector<int>;

bool is_omega_path(const OmegaSkeleton& s, const OmegaPath& p);
void require_omega_path(const OmegaSkeleton& s, const OmegaPath& p, bool based);

/// Elementary edge-group moves on a path in the loop space.  `result` is
/// the full path after the step; Extend duplicates the vertex at `pos`,
/// Contract removes a duplicate at `pos`, Move is a same-length step with
/// every quadruple a simplex.
struct OmegaPathStep {
    enum class Kind { Extend, Contract, Move };
    Kind kind;
    int pos = -1;
    OmegaPath result;
};

struct OmegaPathCert {
    OmegaPath start;
    std::vector<OmegaPathStep> steps;
    const OmegaPath& final() const { return steps.empty() ? start : steps.back().result; }
};

/// Replays the certificate, checking every step; throws ValidationError
/// with the offending step on failure.
void validate_certificate(const OmegaSkeleton& s, const OmegaPathCert& cert);

/// Lift interior local minima of the length profile by trivial extension
/// until none remain; every lift is one appended move.
void lift_all_valleys(const OmegaSkeleton& s, OmegaPath& p, OmegaPathCert& log);
/// Remove adjacent repeats, leftmost first.
void contract_adjacent(const OmegaSkeleton& s, OmegaPath& p, OmegaPathCert& log);
/// Rewrite p into `target` by contracting and re-inserting repeats; the two
/// must agree after deleting adjacent repeats.
void align_by_repeats(const OmegaSkeleton& s, OmegaPath& p, const OmegaPath& target, OmegaPathCert& log);

struct NormalizedLoop {
    OmegaPath normal;    // ramp up, stratum-M middle, ramp down
    int peak_length = 0; // M
    OmegaPath middle;    // based loop inside the stratum, endpoints included
    OmegaPathCert log;
};

/// Normal form of a based loop in the loop space: lift local minima of the
/// length profile by trivial extension, then pump the constant-loop ramp
/// stage by stage until the whole middle sits in one stratum.  Every move
/// in the log re-validates.
NormalizedLoop normalize_loop_in_omega(const OmegaSkeleton& s, const OmegaPath& gamma);

/// Vertex maps on skeleta induced by translation.
struct TranslationMap {
    std::vector<int> image;       // source id -> target id
    long long checked_simplices = 0;
};

/// L_ell: l -> ell . l (concatenation on the left).  Every stored simplex
/// image is re-validated.  Throws CapError when the target skeleton is too
/// short to hold the translated loops.
TranslationMap left_translate(const OmegaSkeleton& src, const EdgeLoop& ell, const OmegaSkeleton& target);
/// R by the constant loop of length N: l -> l . x0^N (trivial extension by N+1).
TranslationMap right_translate_trivial(const OmegaSkeleton& src, int N, const OmegaSkeleton& target);

/// The interpolating vertex maps on a stratum: step i repeats position i,
/// so step 0 is left translation by x0 and step M is right translation.
/// Consecutive maps are contiguous; validated on all stored simplices of
/// the stratum (and its vertices).
struct StratumMapChain {
    int stratum = 0;
    std::vector<std::vector<int>> images; // [i][pos within stratum] -> target id
    std::vector<int> stratum_ids;
    long long checked = 0;
};
StratumMapChain alpha_star_chain(const OmegaSkeleton& src, int M, const OmegaSkeleton& target);

/// Loop-space functor on vertices: l -> f∘l.  Image simplices re-validated
/// in the target complex.
struct OmegaMapResult {
    std::vector<EdgeLoop> vertex_image;
    long long checked_simplices = 0;
};
OmegaMapResult omega_map(const SimplicialMap& f, const OmegaSkeleton& s);

} // namespace simploop

#endif
