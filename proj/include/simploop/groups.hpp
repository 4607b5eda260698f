#ifndef SIMPLOOP_GROUPS_HPP
#define SIMPLOOP_GROUPS_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "simploop/complex.hpp"
#include "simploop/search.hpp"
#include "simploop/snf.hpp"

namespace simploop {

/// Word in a presentation's generators: signed 1-based indices,
/// +i for g_i and -i for its inverse.
struct Word {
    std::vector<int> letters;
    bool empty() const { return letters.empty(); }
    bool operator==(const Word& o) const { return letters == o.letters; }
};

Word free_reduce(Word w);
Word inverse_word(const Word& w);
Word concat_words(const Word& a, const Word& b); // freely reduced
Word cyclic_reduce(Word w);

/// Finitely presented group: named generators and freely reduced relators.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
};

struct AbelianInvariants {
    int rank = 0;
    std::vector<Int> torsion; // d1 | d2 | ..., each > 1
    bool operator==(const AbelianInvariants& o) const = default;
    std::string to_string() const;
};

/// Class of a word in the abelianized group: residues against each torsion
/// factor plus free integer coordinates.  Zero iff the word dies in H1.
struct AbelianClass {
    std::vector<Int> torsion_part;
    std::vector<Int> free_part;
    bool operator==(const AbelianClass& o) const = default;
    bool is_zero() const;
};

/// Smith-normal-form data of the relator matrix, reused to classify many
/// words against one presentation.
class AbelianStructure {
public:
    explicit AbelianStructure(const Presentation& p);
    const AbelianInvariants& invariants() const { return inv_; }
    AbelianClass classify(const Word& w) const;

private:
    int gens_;
    std::vector<Int> diag_; // invariant factors of the relator matrix
    Mat u_;                 // row transform of SNF(R^T)
    AbelianInvariants inv_;
};

AbelianInvariants abelianization(const Presentation& p);

/// Spanning-tree presentation of the edge group of the basepoint
/// component: one generator per edge, relators kill the tree edges and
/// impose g_ab g_bc g_ca for each triangle.  Tree is BFS from the base
/// with lexicographic tie-breaking, so presentations are reproducible.
struct EdgeGroupData {
    Presentation presentation;
    int base = -1;
    std::vector<std::pair<int, int>> edge_of_gen;   // gen -> (a, b), a < b
    std::map<std::pair<int, int>, int> gen_of_edge; // (a, b) -> gen
    std::vector<char> tree_gen;                     // gen -> in spanning tree
    std::vector<int> tree_parent;                   // vertex -> parent (-1 at base / outside)
    std::vector<char> in_component;                 // vertex -> reachable from base

    /// Word of a closed or open walk: non-tree edge letters read off in
    /// order; repeats contribute nothing.  Freely reduced.
    Word read_word(std::span<const int> seq) const;
    /// Tree path base -> v as a vertex sequence.
    std::vector<int> tree_path_from_base(int v) const;
};

namespace detail {
EdgeGroupData edge_group_from_graph(int base, int vertex_count,
                                    const std::vector<std::pair<int, int>>& edges,
                                    const std::vector<std::array<int, 3>>& triangles,
                                    const std::vector<std::vector<int>>& closed_nbrs,
                                    bool allow_isolated);
}

/// Works for any ComplexLike carrier (the base complex or a built loop
/// space skeleton); edges and triangles are enumerated through the
/// simplex oracle.
template <ComplexLike C>
EdgeGroupData edge_group_data(const C& cx, int base, bool allow_isolated = false) {
    int n = cx.vertex_count();
    std::vector<std::vector<int>> nbrs(static_cast<size_t>(n));
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) nbrs[static_cast<size_t>(v)] = cx.closed_neighbors(v);
    for (int v = 0; v < n; ++v)
        for (int w : nbrs[static_cast<size_t>(v)])
            if (w > v) edges.emplace_back(v, w);
    std::vector<std::array<int, 3>> triangles;
    for (auto [a, b] : edges)
        for (int c : nbrs[static_cast<size_t>(b)]) {
            if (c <= b) continue;
            int ids[3] = {a, b, c};
            if (cx.is_simplex(std::span<const int>(ids, 3))) triangles.push_back({a, b, c});
        }
    return detail::edge_group_from_graph(base, n, edges, triangles, nbrs, allow_isolated);
}

inline EdgeGroupData edge_group_presentation(const SimplicialComplex& x) {
    return edge_group_data(x, x.basepoint());
}

/// Change of basepoint along an edge path eta from x0 to y0: words at y0
/// conjugate to words at x0 by the word of eta.
struct BasepointConjugation {
    Word eta_word;
    Word apply(const Word& w) const { return concat_words(concat_words(eta_word, w), inverse_word(eta_word)); }
};
BasepointConjugation change_of_basepoint(const EdgeGroupData& data, std::span<const int> eta);

/// Generator-wise images of an induced homomorphism f*: each source edge
/// generator becomes the word of its tree-conjugated image loop.
struct InducedHom {
    std::vector<Word> gen_images;
    Word apply(const Word& w) const;
};
InducedHom induced_hom(const SimplicialMap& f, const EdgeGroupData& px, const EdgeGroupData& py);

/// Deterministic generator elimination plus relator cleanup; the group is
/// unchanged up to isomorphism and abelian invariants are preserved
/// exactly.  `effort` caps the number of rewriting steps.
Presentation tietze_simplify(Presentation p, long long effort = 100000);

} // namespace simploop

#endif
