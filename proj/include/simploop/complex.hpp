#ifndef SIMPLOOP_COMPLEX_HPP
#define SIMPLOOP_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "simploop/errors.hpp"

namespace simploop {

using VertexSet = std::vector<int>; // sorted, unique vertex ids

/// Finite abstract simplicial complex, stored by its maximal faces (facets).
///
/// Vertices carry dense ids 0..V-1 and unique display labels.  Facets are
/// bitmasks (V <= 64), and every vertex keeps the list of facets containing
/// it, so the subset test behind is_simplex touches only deg(v) facets.
/// Instances are immutable after construction; all queries are const.
class SimplicialComplex {
public:
    /// Parse the facet-list text format: '#' comment lines, one
    /// `basepoint <label>` line, one whitespace-separated facet per line.
    /// Facets need not be maximal; the loader maximalizes.
    static SimplicialComplex load(const std::string& text);

    /// Build from explicit facets given as label lists.
    static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets,
                                         const std::string& basepoint);

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int basepoint() const { return basepoint_; }
    const std::string& label(int v) const { return labels_.at(static_cast<size_t>(v)); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Id for a label; throws ValidationError if unknown.
    int vertex(const std::string& label) const;
    std::optional<int> find_vertex(const std::string& label) const;

    /// True iff S is contained in some facet.  S may contain repeats;
    /// members must be valid vertex ids.
    bool is_simplex(std::span<const int> vertices) const;
    bool is_simplex(std::initializer_list<int> vertices) const {
        return is_simplex(std::span<const int>(vertices.begin(), vertices.size()));
    }

    /// Mask-level membership test, no id validation.  Hot path for the
    /// contiguity checks; mask must only use valid vertex bits.
    bool simplex_mask(std::uint64_t mask) const;

    std::uint64_t mask_of(std::span<const int> vertices) const;

    /// Facets as sorted vertex-id sets, in deterministic order.
    std::vector<VertexSet> facets() const;

    /// Vertices w with {v, w} a simplex, including v itself; sorted.
    const std::vector<int>& closed_neighbors(int v) const;

    /// All 1-simplices {a, b}, a < b, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    /// All simplices of dimension <= max_dim, grouped by dimension
    /// (index d holds the d-simplices as sorted vertex sets).
    std::vector<std::vector<VertexSet>> simplices_up_to(int max_dim) const;

    /// Graph distance from every vertex to the basepoint (steps along
    /// edges; repeats allowed, so this is plain BFS distance).
    /// Unreachable vertices get -1.
    const std::vector<int>& basepoint_distance() const { return base_dist_; }

    /// Serialized facet-list text that reloads to an identical complex.
    std::string to_text() const;

    bool operator==(const SimplicialComplex& other) const {
        return labels_ == other.labels_ && facet_masks_ == other.facet_masks_ &&
               basepoint_ == other.basepoint_;
    }

private:
    SimplicialComplex() = default;
    void finalize();

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> label_index_;
    std::vector<std::uint64_t> facet_masks_; // maximal, sorted
    std::vector<std::vector<int>> facets_of_vertex_;
    std::vector<std::vector<int>> closed_nbrs_;
    std::vector<int> base_dist_;
    int basepoint_ = -1;
};

/// Vertex map between complexes.  `image[v]` is the target id of source
/// vertex v; the map is total on source vertices.
struct SimplicialMap {
    const SimplicialComplex* source = nullptr;
    const SimplicialComplex* target = nullptr;
    std::vector<int> image;

    int operator()(int v) const { return image.at(static_cast<size_t>(v)); }
    bool is_based() const {
        return source && target && image[static_cast<size_t>(source->basepoint())] == target->basepoint();
    }
};

struct SimplicialCheck {
    bool ok = true;
    VertexSet witness_facet; // source facet whose image is not a simplex
};

/// A vertex map is simplicial iff every facet image is a simplex
/// (subsets of simplices are simplices, so facets suffice).
SimplicialCheck check_simplicial(const SimplicialMap& f);

SimplicialMap identity_map(const SimplicialComplex& x);
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f); // g after f

} // namespace simploop

#endif
