#include "simploop/gen.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "simploop/search.hpp"

namespace simploop {

EdgeLoop random_based_loop(const SimplicialComplex& x, int length, Rng& rng) {
    if (length < 0) throw ValidationError("negative length");
    const auto& dist = x.basepoint_distance();
    std::vector<int> seq{x.basepoint()};
    for (int i = 1; i < length; ++i) {
        std::vector<int> cand;
        for (int v : x.closed_neighbors(seq.back()))
            if (dist[static_cast<size_t>(v)] >= 0 && dist[static_cast<size_t>(v)] <= length - i)
                cand.push_back(v);
        seq.push_back(cand[static_cast<size_t>(rng.uniform(0, static_cast<int>(cand.size()) - 1))]);
    }
    if (length >= 1) seq.push_back(x.basepoint());
    return validate_loop(x, std::move(seq));
}

std::optional<EdgeLoop> random_contiguous_loop(const EdgeLoop& l, Rng& rng, bool distinct) {
    std::vector<Seq> all;
    detail::for_each_contiguous(*l.cx, l.seq, [&](const Seq& s) {
        if (!distinct || s != l.seq) all.push_back(s);
        return true;
    });
    if (all.empty()) return std::nullopt;
    return EdgeLoop{l.cx, all[static_cast<size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))]};
}

std::optional<std::pair<EdgeLoop, EdgeLoop>> random_mixed_edge(const SimplicialComplex& x,
                                                               int longer_length, Rng& rng) {
    if (longer_length < 1) throw ValidationError("need length >= 1");
    EdgeLoop shorter = random_based_loop(x, longer_length - 1, rng);
    EdgeLoop padded = trivial_extend(shorter, 1);
    auto longer = random_contiguous_loop(padded, rng, false);
    if (!longer) return std::nullopt;
    return std::make_pair(*longer, shorter);
}

FaceSphere random_face_sphere(const SimplicialComplex& x, int m, int n, Rng& rng) {
    FaceSphere f = constant_sphere(x, m, n);
    if (m <= 1 || n <= 1) return f;
    // Fill interior cells row-major; shuffle candidates, backtrack on
    // dead ends.  The all-basepoint choice always completes, so this
    // terminates.
    std::function<bool(int, int)> fill = [&](int i, int j) -> bool {
        if (j == n) return true;
        auto [ni, nj] = i == m - 1 ? std::pair<int, int>(1, j + 1) : std::pair<int, int>(i + 1, j);
        std::vector<int> cand = x.closed_neighbors(x.basepoint());
        std::shuffle(cand.begin(), cand.end(), rng.engine());
        auto square_ok = [&](int si, int sj) {
            std::uint64_t mask = (1ULL << f.at(si, sj)) | (1ULL << f.at(si + 1, sj)) |
                                 (1ULL << f.at(si, sj + 1)) | (1ULL << f.at(si + 1, sj + 1));
            return x.simplex_mask(mask);
        };
        for (int v : cand) {
            f.at(i, j) = v;
            bool ok = square_ok(i - 1, j - 1);
            if (ok && i == m - 1) ok = square_ok(i, j - 1);
            if (ok && j == n - 1) ok = square_ok(i - 1, j);
            if (ok && i == m - 1 && j == n - 1) ok = square_ok(i, j);
            if (ok && fill(ni, nj)) return true;
        }
        f.at(i, j) = x.basepoint();
        return false;
    };
    if (!fill(1, 1)) throw ValidationError("sphere sampling failed");
    auto chk = face_sphere_check(x, m, n, f.grid);
    if (!chk.ok) throw ValidationError("sampled sphere invalid: " + chk.reason);
    return f;
}

std::optional<FaceSphere> random_contiguous_sphere(const FaceSphere& f, Rng& rng, bool distinct) {
    // Collect neighbors through the equivalence search machinery's
    // enumerator by BFS over one step: reuse fs_equivalent's generator via
    // a single-sphere budget is awkward, so enumerate directly here.
    std::vector<FaceSphere> all;
    const auto& x = *f.cx;
    const int m = f.m, n = f.n;
    FaceSphere cur = constant_sphere(x, m, n);
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (j == n) {
            if (!distinct || !(cur == f)) all.push_back(cur);
            return;
        }
        auto [ni, nj] = i == m - 1 ? std::pair<int, int>(1, j + 1) : std::pair<int, int>(i + 1, j);
        auto union_ok = [&](int si, int sj) {
            std::uint64_t mask = (1ULL << f.at(si, sj)) | (1ULL << f.at(si + 1, sj)) |
                                 (1ULL << f.at(si, sj + 1)) | (1ULL << f.at(si + 1, sj + 1)) |
                                 (1ULL << cur.at(si, sj)) | (1ULL << cur.at(si + 1, sj)) |
                                 (1ULL << cur.at(si, sj + 1)) | (1ULL << cur.at(si + 1, sj + 1));
            return x.simplex_mask(mask);
        };
        for (int v : x.closed_neighbors(f.at(i, j))) {
            cur.at(i, j) = v;
            bool ok = union_ok(i - 1, j - 1);
            if (ok && i == m - 1) ok = union_ok(i, j - 1);
            if (ok && j == n - 1) ok = union_ok(i - 1, j);
            if (ok && i == m - 1 && j == n - 1) ok = union_ok(i, j);
            if (ok) rec(ni, nj);
        }
        cur.at(i, j) = x.basepoint();
    };
    if (m <= 1 || n <= 1) {
        if (distinct) return std::nullopt;
        return f;
    }
    rec(1, 1);
    if (all.empty()) return std::nullopt;
    return all[static_cast<size_t>(rng.uniform(0, static_cast<int>(all.size()) - 1))];
}

SimplicialMap random_based_self_map(const SimplicialComplex& x, Rng& rng, int attempts) {
    for (int a = 0; a < attempts; ++a) {
        SimplicialMap f{&x, &x, {}};
        f.image.resize(static_cast<size_t>(x.vertex_count()));
        for (int v = 0; v < x.vertex_count(); ++v)
            f.image[static_cast<size_t>(v)] = rng.uniform(0, x.vertex_count() - 1);
        f.image[static_cast<size_t>(x.basepoint())] = x.basepoint();
        if (check_simplicial(f).ok) return f;
    }
    return identity_map(x);
}

OmegaPath random_omega_loop(const OmegaSkeleton& s, int length, Rng& rng) {
    // Walk with BFS distances back to the basepoint vertex.
    const int base = s.basepoint_vertex();
    std::vector<int> dist(static_cast<size_t>(s.vertex_count()), -1);
    std::deque<int> queue{base};
    dist[static_cast<size_t>(base)] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : s.closed_neighbors(v))
            if (dist[static_cast<size_t>(w)] < 0) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    OmegaPath p{base};
    for (int i = 1; i < length; ++i) {
        std::vector<int> cand;
        for (int w : s.closed_neighbors(p.back()))
            if (dist[static_cast<size_t>(w)] >= 0 && dist[static_cast<size_t>(w)] <= length - i)
                cand.push_back(w);
        p.push_back(cand[static_cast<size_t>(rng.uniform(0, static_cast<int>(cand.size()) - 1))]);
    }
    if (length >= 1) p.push_back(base);
    require_omega_path(s, p, true);
    return p;
}

} // namespace simploop
