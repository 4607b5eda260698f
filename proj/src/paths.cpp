#include "simploop/paths.hpp"

#include <algorithm>
#include <sstream>

namespace simploop {

std::string EdgeLoop::to_literal() const {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < seq.size(); ++i) out << (i ? "," : "") << cx->label(seq[i]);
    out << ']';
    return out.str();
}

EdgeLoop validate_path(const SimplicialComplex& x, std::vector<int> seq, bool based) {
    if (seq.empty()) throw ValidationError("empty vertex sequence");
    for (int v : seq)
        if (v < 0 || v >= x.vertex_count())
            throw ValidationError("vertex id " + std::to_string(v) + " not in complex");
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
        int a = seq[i], b = seq[i + 1];
        if (a != b && !x.simplex_mask((1ULL << a) | (1ULL << b)))
            throw ValidationError("adjacency violation at position " + std::to_string(i) + ": {" +
                                  x.label(a) + "," + x.label(b) + "} is not a simplex");
    }
    if (based && (seq.front() != x.basepoint() || seq.back() != x.basepoint()))
        throw ValidationError("endpoint not at basepoint " + x.label(x.basepoint()));
    return EdgeLoop{&x, std::move(seq)};
}

EdgeLoop parse_loop(const SimplicialComplex& x, const std::string& literal, bool based) {
    std::string body = literal;
    if (!body.empty() && body.front() == '[') body.erase(body.begin());
    if (!body.empty() && body.back() == ']') body.pop_back();
    std::vector<int> seq;
    std::string tok;
    std::istringstream in(body);
    while (std::getline(in, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw ValidationError("empty entry in loop literal");
        seq.push_back(x.vertex(tok.substr(a, b - a + 1)));
    }
    return validate_path(x, std::move(seq), based);
}

EdgeLoop constant_loop(const SimplicialComplex& x, int m) {
    if (m < 0) throw ValidationError("negative loop length");
    return EdgeLoop{&x, std::vector<int>(static_cast<size_t>(m) + 1, x.basepoint())};
}

ContiguityCheck contiguity_check(const EdgeLoop& a, const EdgeLoop& b) {
    if (a.cx != b.cx) throw ValidationError("contiguity across different complexes");
    if (a.length() != b.length())
        throw ValidationError("contiguity needs equal lengths (" + std::to_string(a.length()) +
                              " vs " + std::to_string(b.length()) + ")");
    const auto& x = *a.cx;
    for (int i = 0; i < a.length(); ++i) {
        std::uint64_t m = (1ULL << a.seq[static_cast<size_t>(i)]) |
                          (1ULL << a.seq[static_cast<size_t>(i) + 1]) |
                          (1ULL << b.seq[static_cast<size_t>(i)]) |
                          (1ULL << b.seq[static_cast<size_t>(i) + 1]);
        if (!x.simplex_mask(m)) return {false, i};
    }
    return {};
}

bool contiguous_paths(const EdgeLoop& a, const EdgeLoop& b) { return contiguity_check(a, b).ok; }

ExtensionIndexList::ExtensionIndexList(int base_length, std::vector<int> indices)
    : base_len_(base_length), idx_(std::move(indices)) {
    if (base_len_ < 0) throw ValidationError("negative base length");
    for (size_t t = 0; t < idx_.size(); ++t) {
        int bound = base_len_ + static_cast<int>(t);
        if (idx_[t] < 0 || idx_[t] > bound)
            throw ValidationError("extension index " + std::to_string(idx_[t]) + " at step " +
                                  std::to_string(t + 1) + " outside [0," + std::to_string(bound) + "]");
    }
}

EdgeLoop extend_once(const EdgeLoop& l, int i) {
    if (i < 0 || i > l.length())
        throw ValidationError("extension index " + std::to_string(i) + " out of range");
    EdgeLoop out = l;
    out.seq.insert(out.seq.begin() + i + 1, out.seq[static_cast<size_t>(i)]);
    return out;
}

EdgeLoop extend(const EdgeLoop& l, const ExtensionIndexList& I) {
    if (I.base_length() != l.length())
        throw ValidationError("index list built for length " + std::to_string(I.base_length()) +
                              ", loop has length " + std::to_string(l.length()));
    EdgeLoop cur = l;
    for (int i : I.indices()) cur = extend_once(cur, i);
    return cur;
}

EdgeLoop trivial_extend(const EdgeLoop& l, int r) {
    if (r < 0) throw ValidationError("negative extension count");
    EdgeLoop out = l;
    out.seq.insert(out.seq.end(), static_cast<size_t>(r), out.seq.back());
    return out;
}

EdgeLoop same_size(const EdgeLoop& l, int m) {
    if (m < l.length())
        throw ValidationError("cannot same-size length " + std::to_string(l.length()) + " down to " +
                              std::to_string(m));
    return trivial_extend(l, m - l.length());
}

EdgeLoop reverse(const EdgeLoop& l) {
    EdgeLoop out = l;
    std::reverse(out.seq.begin(), out.seq.end());
    return out;
}

EdgeLoop concatenate(const EdgeLoop& l, const EdgeLoop& r) {
    if (l.cx != r.cx) throw ValidationError("concatenation across different complexes");
    if (!l.is_based() || !r.is_based()) throw ValidationError("concatenation needs based loops");
    EdgeLoop out = l;
    out.seq.insert(out.seq.end(), r.seq.begin(), r.seq.end());
    return out;
}

std::vector<EdgeLoop> reverse_inverse_chain(const EdgeLoop& l) {
    if (!l.is_based() || l.length() < 1) throw ValidationError("need a based loop of length >= 1");
    const int m = l.length();
    const EdgeLoop rev = reverse(l);
    std::vector<EdgeLoop> chain;
    chain.push_back(constant_loop(*l.cx, 2 * m + 1));
    // Palindromes along the reversed loop: follow rev up to position i, hold
    // that vertex, then retrace.  Built from rev so the chain lands exactly
    // on reverse(l)·l with every adjacent pair contiguous.
    for (int i = 1; i <= m - 1; ++i) {
        std::vector<int> seq(static_cast<size_t>(2 * m + 2));
        for (int j = 0; j <= i; ++j) seq[static_cast<size_t>(j)] = rev.seq[static_cast<size_t>(j)];
        for (int j = 2 * m + 1 - i; j <= 2 * m + 1; ++j)
            seq[static_cast<size_t>(j)] = rev.seq[static_cast<size_t>(2 * m + 1 - j)];
        for (int j = i + 1; j <= 2 * m - i; ++j) seq[static_cast<size_t>(j)] = rev.seq[static_cast<size_t>(i)];
        chain.push_back(EdgeLoop{l.cx, std::move(seq)});
    }
    chain.push_back(concatenate(rev, l));
    return chain;
}

std::vector<EdgeLoop> alpha_shift_chain(const EdgeLoop& l, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 0 || j > l.length())
        throw ValidationError("repeat indices outside [0," + std::to_string(l.length()) + "]");
    std::vector<EdgeLoop> chain;
    for (int t = i; t <= j; ++t) chain.push_back(extend_once(l, t));
    return chain;
}

} // namespace simploop
