#ifndef SIMPLOOP_STONE_HPP
#define SIMPLOOP_STONE_HPP

#include <map>
#include <string>
#include <vector>

#include "simploop/omega.hpp"
#include "simploop/snf.hpp"

namespace simploop {

/// Chain of length k: simplices sigma_1..sigma_{k-1} with consecutive
/// unions simplices, the implicit ends being the basepoint vertex.
struct StoneChain {
    std::vector<VertexSet> parts;
    int dim() const {
        int d = 0;
        for (const auto& p : parts) d += static_cast<int>(p.size()) - 1;
        return d;
    }
    bool operator==(const StoneChain& o) const = default;
    bool operator<(const StoneChain& o) const { return parts < o.parts; }
};

struct StoneCaps {
    long long max_cells = 20'000'000;
};

/// All chains of length k with cell dimension <= max_cell_dim, in
/// deterministic (lexicographic) order.
std::vector<StoneChain> enumerate_chains(const SimplicialComplex& x, int k, int max_cell_dim,
                                         StoneCaps caps = {});

/// Betti numbers and torsion coefficients per dimension.
struct HomologyResult {
    std::vector<long long> betti;
    std::vector<std::vector<Int>> torsion;
    bool operator==(const HomologyResult& o) const = default;
    std::string to_string() const;
};

/// Graded cell structure with integer boundary, fed to the reduction
/// pipeline.  d-cells index into (d-1)-cells with signs; dd=0 is asserted
/// at build time for every complex assembled here.
class GradedComplex {
public:
    explicit GradedComplex(int top_dim) : bnd_(static_cast<size_t>(top_dim) + 1) {}
    int top_dim() const { return static_cast<int>(bnd_.size()) - 1; }
    long long cells(int d) const {
        return d >= 0 && d <= top_dim() ? static_cast<long long>(bnd_[static_cast<size_t>(d)].size()) : 0;
    }
    /// Append one d-cell; `faces` are (index into dim d-1, sign).
    int add_cell(int d, std::vector<std::pair<int, int>> faces);
    const std::vector<std::pair<int, int>>& faces(int d, int c) const {
        return bnd_[static_cast<size_t>(d)][static_cast<size_t>(c)];
    }

    void assert_dd_zero() const;

    /// Homology of dimensions 0..top, where top <= top_dim()-1 so the
    /// top-dimensional boundary is available.  Free-pair collapse runs
    /// first; +-1 pivots are then peeled sparsely before the dense SNF.
    HomologyResult homology(int top) const;

    /// Component count of the 1-skeleton plus component id per 0-cell.
    std::pair<int, std::vector<int>> components() const;

private:
    std::vector<std::vector<std::vector<std::pair<int, int>>>> bnd_;
};

/// Prodsimplicial cell complex on the chains: cell = chain, boundary by
/// the tensor rule with alternating signs over the leading components.
struct StoneComplex {
    std::vector<std::vector<StoneChain>> cells; // by dimension
    GradedComplex graded;
    std::map<StoneChain, std::pair<int, int>> index; // chain -> (dim, pos)
};
StoneComplex chain_complex_of_stone(const SimplicialComplex& x, int k, int max_cell_dim,
                                    StoneCaps caps = {});

HomologyResult simplicial_homology(const SimplicialComplex& x, int top_dim);
/// Needs the skeleton built to dimension top_dim+1.
HomologyResult simplicial_homology(const OmegaSkeleton& s, int top_dim);

/// Image of a loop-space vertex in the chain structure: the vertex chain
/// of the loop same-sized to length k.
StoneChain stone_vertex_image(const EdgeLoop& l, int k);

/// Homology classes of integer d-cycles of X, for the pairing oracles.
class CycleClassifier {
public:
    CycleClassifier(const SimplicialComplex& x, int dim);
    int dim() const { return dim_; }
    long long betti() const { return betti_; }

    struct Class {
        std::vector<Int> torsion_part;
        std::vector<Int> free_part;
        bool operator==(const Class& o) const = default;
        bool is_zero() const;
    };
    /// `chain` maps sorted d-simplices to coefficients; must be a cycle.
    Class classify(const std::map<VertexSet, Int>& chain) const;

private:
    const SimplicialComplex* x_;
    int dim_;
    long long betti_ = 0;
    std::map<VertexSet, int> cell_index_;
    Mat vinv_;               // column transform inverse of SNF(boundary_dim)
    int kernel_begin_ = 0;   // first kernel coordinate
    Mat uq_;                 // row transform of the quotient SNF
    std::vector<Int> qdiag_; // invariant factors of the quotient matrix
};

} // namespace simploop

#endif
