#ifndef SIMPLOOP_PATHS_HPP
#define SIMPLOOP_PATHS_HPP

#include <optional>
#include <span>
#include <vector>

#include "simploop/complex.hpp"

namespace simploop {

/// Edge path in X as an explicit vertex sequence (v0, ..., vm); adjacent
/// pairs are edges or repeated vertices.  Length is m, one less than the
/// number of entries.  Two paths are equal iff their sequences are equal:
/// a loop and its trivial extension are distinct values.
struct EdgeLoop {
    const SimplicialComplex* cx = nullptr;
    std::vector<int> seq;

    int length() const { return static_cast<int>(seq.size()) - 1; }
    int at(int i) const { return seq.at(static_cast<size_t>(i)); }
    bool is_based() const {
        return cx && !seq.empty() && seq.front() == cx->basepoint() && seq.back() == cx->basepoint();
    }
    bool operator==(const EdgeLoop& o) const { return cx == o.cx && seq == o.seq; }

    std::string to_literal() const; // e.g. [x0,v1,v2,x0]
};

/// Validate the adjacency condition; reports the first violating position.
/// With `based = true` additionally requires both endpoints at x0.
EdgeLoop validate_path(const SimplicialComplex& x, std::vector<int> seq, bool based);
inline EdgeLoop validate_loop(const SimplicialComplex& x, std::vector<int> seq) {
    return validate_path(x, std::move(seq), true);
}
EdgeLoop parse_loop(const SimplicialComplex& x, const std::string& literal, bool based = true);

/// Constant based loop of length m (m+1 repeats of the basepoint).
EdgeLoop constant_loop(const SimplicialComplex& x, int m);

struct ContiguityCheck {
    bool ok = true;
    int witness = -1; // first i with {v_i, v_{i+1}, v'_i, v'_{i+1}} not a simplex
};

/// Equal-length contiguity test; throws on length mismatch.
ContiguityCheck contiguity_check(const EdgeLoop& a, const EdgeLoop& b);
bool contiguous_paths(const EdgeLoop& a, const EdgeLoop& b);

/// Repeat-index list (i1, ..., ir) applied to loops of base length m:
/// step t repeats vertex i_t of the current loop, so 0 <= i_t <= m + t - 1.
/// Bounds are checked at construction.
struct ExtensionIndexList {
    ExtensionIndexList(int base_length, std::vector<int> indices);
    const std::vector<int>& indices() const { return idx_; }
    int base_length() const { return base_len_; }

private:
    int base_len_;
    std::vector<int> idx_;
};

/// l composed with the index list: fold of single-vertex repeats.
EdgeLoop extend(const EdgeLoop& l, const ExtensionIndexList& I);
EdgeLoop extend_once(const EdgeLoop& l, int i); // repeat vertex i
/// Repeat the final vertex r times.
EdgeLoop trivial_extend(const EdgeLoop& l, int r);
/// Same-size to length m >= len(l) by trivial extension.
EdgeLoop same_size(const EdgeLoop& l, int m);

EdgeLoop reverse(const EdgeLoop& l);
/// Product loop of length m+n+1; keeps both basepoint occurrences.
EdgeLoop concatenate(const EdgeLoop& l, const EdgeLoop& r);

/// The explicit chain of length-(2m+1) loops from the constant loop to
/// reverse(l)·l, every adjacent pair contiguous.  Step i is the palindrome
/// that follows the reversed loop's first i vertices, holds, and returns.
std::vector<EdgeLoop> reverse_inverse_chain(const EdgeLoop& l);

/// Chain l∘α_i ~ l∘α_{i+1} ~ ... ~ l∘α_j witnessing that repeating
/// different vertices yields contiguity equivalent extensions.
std::vector<EdgeLoop> alpha_shift_chain(const EdgeLoop& l, int i, int j);

} // namespace simploop

#endif
