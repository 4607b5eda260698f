#include "simploop/omega.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>

namespace simploop {

namespace {

std::vector<EdgeLoop> dedupe_loops(std::span<const EdgeLoop> loops) {
    std::vector<EdgeLoop> out(loops.begin(), loops.end());
    std::sort(out.begin(), out.end(), [](const EdgeLoop& a, const EdgeLoop& b) { return a.seq < b.seq; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int vertex_at(const EdgeLoop& l, int i) {
    // value of the trivial extension at position i
    return i <= l.length() ? l.seq[static_cast<size_t>(i)] : l.seq.back();
}

} // namespace

OmegaSimplexCheck omega_simplex_check(const SimplicialComplex& x, std::span<const EdgeLoop> loops) {
    if (loops.empty()) throw ValidationError("empty loop set");
    for (const auto& l : loops) {
        if (l.cx != &x) throw ValidationError("loop belongs to a different complex");
        if (!l.is_based()) throw ValidationError("loop " + l.to_literal() + " is not based");
    }
    std::vector<EdgeLoop> set = dedupe_loops(loops);
    int m = 0;
    for (const auto& l : set) m = std::max(m, l.length());
    for (const auto& l : set)
        if (l.length() < m - 1)
            return {false, -1,
                    "lengths span more than one step: " + std::to_string(l.length()) + " vs " +
                        std::to_string(m)};
    if (m == 0) return {};
    std::vector<std::uint64_t> col(static_cast<size_t>(m) + 1, 0);
    for (const auto& l : set)
        for (int i = 0; i <= m; ++i) col[static_cast<size_t>(i)] |= 1ULL << vertex_at(l, i);
    for (int i = 0; i < m; ++i)
        if (!x.simplex_mask(col[static_cast<size_t>(i)] | col[static_cast<size_t>(i) + 1]))
            return {false, i, "column union at (" + std::to_string(i) + "," + std::to_string(i + 1) +
                                  ") is not a simplex"};
    return {};
}

bool omega_is_simplex(const SimplicialComplex& x, std::span<const EdgeLoop> loops) {
    return omega_simplex_check(x, loops).ok;
}

std::vector<EdgeLoop> sigma_union_extension(const SimplicialComplex& x, std::span<const EdgeLoop> sigma) {
    if (sigma.empty()) throw ValidationError("empty simplex");
    int m = sigma.front().length();
    for (const auto& l : sigma)
        if (l.length() != m) throw ValidationError("mixed lengths; all members must have equal length");
    if (!omega_is_simplex(x, sigma)) throw ValidationError("input set is not a simplex");
    std::vector<EdgeLoop> out(sigma.begin(), sigma.end());
    for (const auto& l : sigma) out.push_back(trivial_extend(l, 1));
    auto chk = omega_simplex_check(x, out);
    if (!chk.ok) throw ValidationError("extension failed the simplex condition: " + chk.reason);
    return out;
}

namespace {

std::vector<EdgeLoop> checked_family(const SimplicialComplex& x, std::vector<EdgeLoop> fam,
                                     const char* what) {
    fam = dedupe_loops(fam);
    auto chk = omega_simplex_check(x, fam);
    if (!chk.ok)
        throw ValidationError(std::string(what) + " produced a non-simplex (column " +
                              std::to_string(chk.bad_col) + ")");
    return fam;
}

} // namespace

std::vector<EdgeLoop> three_simplex_family_a(const EdgeLoop& l, const EdgeLoop& lp) {
    if (!contiguous_paths(l, lp)) throw ValidationError("loops are not contiguous");
    return checked_family(*l.cx, {l, lp, trivial_extend(l, 1), trivial_extend(lp, 1)}, "family (a)");
}

std::vector<EdgeLoop> three_simplex_family_b(const EdgeLoop& l, const EdgeLoop& lp) {
    if (l.length() != lp.length() + 1)
        throw ValidationError("need lengths m and m-1");
    const EdgeLoop loops[2] = {l, lp};
    if (!omega_is_simplex(*l.cx, loops)) throw ValidationError("pair is not an edge");
    return checked_family(*l.cx, {l, lp, trivial_extend(lp, 1)}, "family (b)");
}

std::vector<EdgeLoop> three_simplex_family_c(const EdgeLoop& l, const EdgeLoop& lp, int i) {
    if (!contiguous_paths(l, lp)) throw ValidationError("loops are not contiguous");
    if (i < 0 || i > l.length() - 1) throw ValidationError("repeat index out of range");
    return checked_family(
        *l.cx, {extend_once(l, i), extend_once(lp, i), extend_once(l, i + 1), extend_once(lp, i + 1)},
        "family (c)");
}

std::vector<EdgeLoop> three_simplex_family_d(const EdgeLoop& l1, const EdgeLoop& l1p,
                                             const EdgeLoop& l2, const EdgeLoop& l2p) {
    if (!contiguous_paths(l1, l1p)) throw ValidationError("first pair is not contiguous");
    const EdgeLoop pair2[2] = {l2, l2p};
    if (!omega_is_simplex(*l2.cx, pair2)) throw ValidationError("second pair is not an edge");
    return checked_family(*l1.cx,
                          {concatenate(l1, l2), concatenate(l1, l2p), concatenate(l1p, l2),
                           concatenate(l1p, l2p)},
                          "family (d)");
}

std::string OmegaSkeleton::key_of(const EdgeLoop& l) {
    return std::string(reinterpret_cast<const char*>(l.seq.data()), l.seq.size() * sizeof(int));
}

OmegaSkeleton OmegaSkeleton::build(const SimplicialComplex& x, int max_len, int max_dim,
                                   OmegaCaps caps, int workers) {
    if (max_len < 0 || max_dim < 1) throw ValidationError("need max_len >= 0 and max_dim >= 1");
    if (workers < 1) workers = 1;
    OmegaSkeleton s;
    s.x_ = &x;
    s.max_len_ = max_len;
    s.max_dim_ = max_dim;

    // Vertices: all based loops per length, DFS in lexicographic order with
    // distance-to-return pruning.
    const auto& dist = x.basepoint_distance();
    const int x0 = x.basepoint();
    s.stratum_begin_.push_back(0);
    for (int m = 0; m <= max_len; ++m) {
        if (m == 0) {
            s.loops_.push_back(EdgeLoop{&x, {x0}});
        } else if (m == 1) {
            s.loops_.push_back(EdgeLoop{&x, {x0, x0}});
        } else {
            std::vector<int> seq(static_cast<size_t>(m) + 1, x0);
            std::function<void(int)> rec = [&](int i) {
                if (i == m) {
                    if (static_cast<long long>(s.loops_.size()) >= caps.max_vertices)
                        throw CapError("loop-space vertex cap exceeded",
                                       static_cast<long long>(s.loops_.size()) + 1, caps.max_vertices);
                    s.loops_.push_back(EdgeLoop{&x, seq});
                    return;
                }
                for (int v : x.closed_neighbors(seq[static_cast<size_t>(i) - 1])) {
                    if (dist[static_cast<size_t>(v)] < 0 || dist[static_cast<size_t>(v)] > m - i) continue;
                    seq[static_cast<size_t>(i)] = v;
                    rec(i + 1);
                }
                seq[static_cast<size_t>(i)] = x0;
            };
            rec(1);
        }
        s.stratum_begin_.push_back(static_cast<int>(s.loops_.size()));
    }
    for (int id = 0; id < s.vertex_count(); ++id) s.index_.emplace(key_of(s.loops_[static_cast<size_t>(id)]), id);

    // 1-skeleton: candidate pairs live in one stratum or adjacent strata.
    const int nv = s.vertex_count();
    s.closed_nbrs_.assign(static_cast<size_t>(nv), {});
    auto stratum_range = [&s](int m) {
        return std::pair<int, int>(s.stratum_begin_[static_cast<size_t>(m)],
                                   s.stratum_begin_[static_cast<size_t>(m) + 1]);
    };
    auto pair_is_edge = [&x, &s](int a, int b) {
        const EdgeLoop& la = s.loops_[static_cast<size_t>(a)];
        const EdgeLoop& lb = s.loops_[static_cast<size_t>(b)];
        int m = std::max(la.length(), lb.length());
        for (int i = 0; i < m; ++i) {
            std::uint64_t u = (1ULL << vertex_at(la, i)) | (1ULL << vertex_at(la, i + 1)) |
                              (1ULL << vertex_at(lb, i)) | (1ULL << vertex_at(lb, i + 1));
            if (!x.simplex_mask(u)) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> edges_of(static_cast<size_t>(nv)); // a -> sorted b > a
    auto edge_job = [&](int a) {
        const EdgeLoop& la = s.loops_[static_cast<size_t>(a)];
        int m = la.length();
        auto [lo, hi] = stratum_range(m);
        for (int b = a + 1; b < hi; ++b)
            if (pair_is_edge(a, b)) edges_of[static_cast<size_t>(a)].push_back(b);
        if (m + 1 <= max_len) {
            auto [lo2, hi2] = stratum_range(m + 1);
            for (int b = lo2; b < hi2; ++b)
                if (pair_is_edge(a, b)) edges_of[static_cast<size_t>(a)].push_back(b);
        }
        (void)lo;
    };
    if (workers == 1) {
        for (int a = 0; a < nv; ++a) edge_job(a);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (int a = next.fetch_add(1); a < nv; a = next.fetch_add(1)) edge_job(a);
            });
        for (auto& th : pool) th.join();
    }

    long long total_simplices = 0;
    s.simplices_.assign(static_cast<size_t>(max_dim) + 1, {});
    for (int a = 0; a < nv; ++a) {
        s.closed_nbrs_[static_cast<size_t>(a)].push_back(a);
        for (int b : edges_of[static_cast<size_t>(a)]) {
            s.closed_nbrs_[static_cast<size_t>(a)].push_back(b);
            s.closed_nbrs_[static_cast<size_t>(b)].push_back(a);
            s.simplices_[1].push_back({a, b});
            ++total_simplices;
        }
    }
    for (auto& nb : s.closed_nbrs_) std::sort(nb.begin(), nb.end());
    std::sort(s.simplices_[1].begin(), s.simplices_[1].end());

    // Adjacency bitsets for candidate intersection.
    const int blocks = (nv + 63) / 64;
    std::vector<std::uint64_t> adj(static_cast<size_t>(nv) * blocks, 0);
    for (int a = 0; a < nv; ++a)
        for (int b : s.closed_nbrs_[static_cast<size_t>(a)])
            if (b != a) adj[static_cast<size_t>(a) * blocks + b / 64] |= 1ULL << (b % 64);

    // Higher simplices: extend each (d-1)-simplex by larger common
    // neighbors, re-testing the column condition on every candidate set.
    std::vector<EdgeLoop> scratch;
    for (int d = 2; d <= max_dim; ++d) {
        const auto& prev = s.simplices_[static_cast<size_t>(d) - 1];
        auto extend_job = [&](size_t idx, std::vector<std::vector<int>>& out) {
            const auto& base = prev[idx];
            std::vector<std::uint64_t> common(static_cast<size_t>(blocks), ~0ULL);
            for (int v : base)
                for (int blk = 0; blk < blocks; ++blk)
                    common[static_cast<size_t>(blk)] &= adj[static_cast<size_t>(v) * blocks + blk];
            std::vector<EdgeLoop> cand;
            cand.reserve(base.size() + 1);
            for (int v : base) cand.push_back(s.loops_[static_cast<size_t>(v)]);
            cand.emplace_back();
            for (int blk = (base.back() + 1) / 64; blk < blocks; ++blk) {
                std::uint64_t bits = common[static_cast<size_t>(blk)];
                if (blk == (base.back() + 1) / 64) bits &= ~0ULL << ((base.back() + 1) % 64);
                while (bits) {
                    int w = blk * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    cand.back() = s.loops_[static_cast<size_t>(w)];
                    if (omega_is_simplex(x, cand)) {
                        auto sx = base;
                        sx.push_back(w);
                        out.push_back(std::move(sx));
                    }
                }
            }
        };
        std::vector<std::vector<std::vector<int>>> parts;
        if (workers == 1) {
            parts.resize(1);
            for (size_t i = 0; i < prev.size(); ++i) extend_job(i, parts[0]);
        } else {
            parts.resize(static_cast<size_t>(workers));
            std::atomic<size_t> next{0};
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&, t] {
                    for (size_t i = next.fetch_add(1); i < prev.size(); i = next.fetch_add(1))
                        extend_job(i, parts[static_cast<size_t>(t)]);
                });
            for (auto& th : pool) th.join();
        }
        auto& dst = s.simplices_[static_cast<size_t>(d)];
        for (auto& p : parts)
            dst.insert(dst.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
        std::sort(dst.begin(), dst.end());
        total_simplices += static_cast<long long>(dst.size());
        if (total_simplices > caps.max_simplices)
            throw CapError("loop-space simplex cap exceeded", total_simplices, caps.max_simplices);
    }
    return s;
}

int OmegaSkeleton::id_of(const EdgeLoop& l) const {
    auto it = index_.find(key_of(l));
    if (it == index_.end())
        throw CapError("loop " + l.to_literal() + " outside skeleton (length " +
                           std::to_string(l.length()) + ")",
                       l.length(), max_len_);
    return it->second;
}

std::optional<int> OmegaSkeleton::find(const EdgeLoop& l) const {
    auto it = index_.find(key_of(l));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> OmegaSkeleton::stratum(int m) const {
    if (m < 0 || m > max_len_) return {};
    std::vector<int> out;
    for (int id = stratum_begin_[static_cast<size_t>(m)]; id < stratum_begin_[static_cast<size_t>(m) + 1]; ++id)
        out.push_back(id);
    return out;
}

OmegaSimplexCheck OmegaSkeleton::simplex_check(std::span<const int> ids) const {
    std::vector<EdgeLoop> loops;
    loops.reserve(ids.size());
    for (int id : ids) loops.push_back(loop(id));
    return omega_simplex_check(*x_, loops);
}

bool OmegaSkeleton::is_simplex(std::span<const int> ids) const { return simplex_check(ids).ok; }

const std::vector<std::vector<int>>& OmegaSkeleton::simplices(int d) const {
    if (d < 1 || d > max_dim_) throw ValidationError("dimension " + std::to_string(d) + " not stored");
    return simplices_[static_cast<size_t>(d)];
}

long long OmegaSkeleton::simplex_count() const {
    long long n = 0;
    for (const auto& lvl : simplices_) n += static_cast<long long>(lvl.size());
    return n;
}

OmegaSkeleton::Components OmegaSkeleton::components() const {
    int nv = vertex_count();
    std::vector<int> parent(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find_root = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    for (const auto& e : simplices_[1]) {
        int ra = find_root(e[0]), rb = find_root(e[1]);
        if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
    Components out;
    out.comp_of.assign(static_cast<size_t>(nv), -1);
    std::unordered_map<int, int> comp_of_root;
    for (int v = 0; v < nv; ++v) {
        int r = find_root(v);
        auto [it, fresh] = comp_of_root.emplace(r, static_cast<int>(out.size.size()));
        if (fresh) {
            out.size.push_back(0);
            out.representative.push_back(r);
        }
        out.comp_of[static_cast<size_t>(v)] = it->second;
        ++out.size[static_cast<size_t>(it->second)];
    }
    return out;
}

bool is_omega_path(const OmegaSkeleton& s, const OmegaPath& p) {
    if (p.empty()) return false;
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        if (p[i] == p[i + 1]) continue;
        int ids[2] = {p[i], p[i + 1]};
        if (!s.is_simplex(std::span<const int>(ids, 2))) return false;
    }
    return true;
}

void require_omega_path(const OmegaSkeleton& s, const OmegaPath& p, bool based) {
    if (p.empty()) throw ValidationError("empty path");
    for (int id : p)
        if (id < 0 || id >= s.vertex_count())
            throw ValidationError("path uses id outside skeleton");
    if (!is_omega_path(s, p)) throw ValidationError("sequence is not an edge path in the skeleton");
    if (based && (p.front() != s.basepoint_vertex() || p.back() != s.basepoint_vertex()))
        throw ValidationError("path is not based at the constant loop");
}

void validate_certificate(const OmegaSkeleton& s, const OmegaPathCert& cert) {
    require_omega_path(s, cert.start, false);
    const OmegaPath* prev = &cert.start;
    for (size_t si = 0; si < cert.steps.size(); ++si) {
        const auto& st = cert.steps[si];
        const OmegaPath& cur = st.result;
        auto fail = [&](const std::string& why) {
            throw ValidationError("certificate step " + std::to_string(si) + ": " + why);
        };
        switch (st.kind) {
        case OmegaPathStep::Kind::Extend: {
            if (st.pos < 0 || st.pos >= static_cast<int>(prev->size())) fail("extend position out of range");
            if (cur.size() != prev->size() + 1) fail("extend must lengthen by one");
            OmegaPath expect = *prev;
            expect.insert(expect.begin() + st.pos + 1, expect[static_cast<size_t>(st.pos)]);
            if (cur != expect) fail("extend result mismatch");
            break;
        }
        case OmegaPathStep::Kind::Contract: {
            if (st.pos < 0 || st.pos + 1 >= static_cast<int>(prev->size())) fail("contract position out of range");
            if ((*prev)[static_cast<size_t>(st.pos)] != (*prev)[static_cast<size_t>(st.pos) + 1])
                fail("contract needs a repeated vertex");
            OmegaPath expect = *prev;
            expect.erase(expect.begin() + st.pos + 1);
            if (cur != expect) fail("contract result mismatch");
            break;
        }
        case OmegaPathStep::Kind::Move: {
            if (cur.size() != prev->size()) fail("move must preserve length");
            if (cur.front() != prev->front() || cur.back() != prev->back()) fail("move must fix endpoints");
            for (size_t t = 0; t + 1 < cur.size(); ++t) {
                int ids[4] = {(*prev)[t], (*prev)[t + 1], cur[t], cur[t + 1]};
                if (!s.is_simplex(std::span<const int>(ids, 4)))
                    fail("move quadruple at position " + std::to_string(t) + " is not a simplex");
            }
            break;
        }
        }
        prev = &cur;
    }
}

namespace {

int lifted_id(const OmegaSkeleton& s, int id) {
    return s.id_of(trivial_extend(s.loop(id), 1));
}

// One pass of interior local-minimum lifting; returns false when none left.
bool lift_one_valley(const OmegaSkeleton& s, OmegaPath& p, OmegaPathCert& log) {
    const int n = static_cast<int>(p.size());
    auto len = [&](int t) { return s.loop(p[static_cast<size_t>(t)]).length(); };
    for (int i = 1; i + 1 < n; ++i) {
        if (len(i) >= len(i - 1)) continue;
        int j = i;
        while (j + 1 < n && len(j + 1) == len(i)) ++j;
        if (j + 1 >= n || len(j + 1) != len(i) + 1) continue;
        OmegaPath next = p;
        for (int t = i; t <= j; ++t) next[static_cast<size_t>(t)] = lifted_id(s, p[static_cast<size_t>(t)]);
        log.steps.push_back({OmegaPathStep::Kind::Move, -1, next});
        p = std::move(next);
        return true;
    }
    return false;
}

} // namespace

void lift_all_valleys(const OmegaSkeleton& s, OmegaPath& p, OmegaPathCert& log) {
    while (lift_one_valley(s, p, log)) {}
}

void contract_adjacent(const OmegaSkeleton& s, OmegaPath& p, OmegaPathCert& log) {
    (void)s;
    for (;;) {
        bool changed = false;
        for (size_t t = 0; t + 1 < p.size(); ++t)
            if (p[t] == p[t + 1]) {
                OmegaPath next = p;
                next.erase(next.begin() + static_cast<long>(t) + 1);
                log.steps.push_back({OmegaPathStep::Kind::Contract, static_cast<int>(t), next});
                p = std::move(next);
                changed = true;
                break;
            }
        if (!changed) break;
    }
}

void align_by_repeats(const OmegaSkeleton& s, OmegaPath& p, const OmegaPath& target, OmegaPathCert& log) {
    contract_adjacent(s, p, log);
    OmegaPath dedup_target;
    for (size_t t = 0; t < target.size(); ++t)
        if (t == 0 || target[t] != target[t - 1]) dedup_target.push_back(target[t]);
    if (p != dedup_target)
        throw ValidationError("paths do not agree up to adjacent repeats");
    for (size_t t = 1; t < target.size(); ++t)
        if (target[t] == target[t - 1]) {
            OmegaPath next = p;
            next.insert(next.begin() + static_cast<long>(t), next[t - 1]);
            log.steps.push_back({OmegaPathStep::Kind::Extend, static_cast<int>(t) - 1, next});
            p = std::move(next);
        }
}

namespace {

bool is_normal_form(const OmegaSkeleton& s, const OmegaPath& p) {
    const int n = static_cast<int>(p.size());
    auto len = [&](int t) { return s.loop(p[static_cast<size_t>(t)]).length(); };
    int M = 0;
    for (int t = 0; t < n; ++t) M = std::max(M, len(t));
    if (n != 1)
        for (int t = 0; t + 1 < n; ++t)
            if (p[static_cast<size_t>(t)] == p[static_cast<size_t>(t) + 1]) return false;
    if (n < 2 * M + 1) return false;
    // constant-loop ramp up 0..M, middle inside the stratum, ramp down M..0
    for (int t = 0; t <= M; ++t) {
        int cid = s.id_of(constant_loop(s.base(), t));
        if (p[static_cast<size_t>(t)] != cid || p[static_cast<size_t>(n - 1 - t)] != cid) return false;
    }
    for (int q = M; q <= n - 1 - M; ++q)
        if (len(q) != M) return false;
    return true;
}

} // namespace

NormalizedLoop normalize_loop_in_omega(const OmegaSkeleton& s, const OmegaPath& gamma) {
    require_omega_path(s, gamma, true);
    NormalizedLoop out;
    out.log.start = gamma;
    OmegaPath p = gamma;
    auto len = [&](int id) { return s.loop(id).length(); };

    int M = 0;
    for (int id : p) M = std::max(M, len(id));
    if (M > s.max_len())
        throw CapError("normalization needs stratum beyond the skeleton cap", M, s.max_len());
    out.peak_length = M;

    if (is_normal_form(s, p)) {
        out.normal = p;
        int n = static_cast<int>(p.size());
        out.middle.assign(p.begin() + M, p.begin() + (n - M));
        return out;
    }

    // Phase 1: lift interior local minima of the length profile.
    lift_all_valleys(s, p, out.log);

    if (M == 0) {
        contract_adjacent(s, p, out.log);
        out.normal = p;
        out.middle = p;
        validate_certificate(s, out.log);
        return out;
    }

    // Phase 2: pump the constant-loop ramp stage by stage.  At stage s0 the
    // path is ramp(0..s0) + middle + ramp(s0..0); duplicating both copies of
    // the ramp top and lifting the middle by one is a single validated move.
    for (int s0 = 0; s0 < M; ++s0) {
        int n = static_cast<int>(p.size());
        int left = s0, right = n - 1 - s0;
        OmegaPath e1 = p;
        e1.insert(e1.begin() + right + 1, e1[static_cast<size_t>(right)]);
        out.log.steps.push_back({OmegaPathStep::Kind::Extend, right, e1});
        OmegaPath e2 = e1;
        e2.insert(e2.begin() + left + 1, e2[static_cast<size_t>(left)]);
        out.log.steps.push_back({OmegaPathStep::Kind::Extend, left, e2});
        OmegaPath next = e2;
        for (int t = left + 1; t <= right + 1; ++t) {
            int id = next[static_cast<size_t>(t)];
            if (len(id) <= s0) next[static_cast<size_t>(t)] = lifted_id(s, id);
        }
        out.log.steps.push_back({OmegaPathStep::Kind::Move, -1, next});
        p = std::move(next);
    }

    contract_adjacent(s, p, out.log);
    out.normal = p;
    int n = static_cast<int>(p.size());
    out.middle.assign(p.begin() + M, p.begin() + (n - M));
    validate_certificate(s, out.log);
    if (!is_normal_form(s, p)) throw ValidationError("normalization failed to reach normal form");
    return out;
}

namespace {

TranslationMap translate_with(const OmegaSkeleton& src, const OmegaSkeleton& target,
                              const std::function<EdgeLoop(const EdgeLoop&)>& f, int needed_len) {
    if (&src.base() != &target.base())
        throw ValidationError("translation needs skeleta over the same complex");
    if (target.max_len() < needed_len)
        throw CapError("target skeleton too small for translated loops", needed_len, target.max_len());
    TranslationMap out;
    out.image.reserve(static_cast<size_t>(src.vertex_count()));
    for (int v = 0; v < src.vertex_count(); ++v) out.image.push_back(target.id_of(f(src.loop(v))));
    const SimplicialComplex& x = src.base();
    for (int d = 1; d <= src.max_dim(); ++d)
        for (const auto& sx : src.simplices(d)) {
            std::vector<EdgeLoop> img;
            img.reserve(sx.size());
            for (int v : sx) img.push_back(target.loop(out.image[static_cast<size_t>(v)]));
            auto chk = omega_simplex_check(x, img);
            if (!chk.ok) throw ValidationError("translation image of a stored simplex failed: " + chk.reason);
            ++out.checked_simplices;
        }
    return out;
}

} // namespace

TranslationMap left_translate(const OmegaSkeleton& src, const EdgeLoop& ell, const OmegaSkeleton& target) {
    if (ell.cx != &src.base()) throw ValidationError("translating loop lives in a different complex");
    if (!ell.is_based()) throw ValidationError("translating loop must be based");
    return translate_with(src, target,
                          [&ell](const EdgeLoop& l) { return concatenate(ell, l); },
                          src.max_len() + ell.length() + 1);
}

TranslationMap right_translate_trivial(const OmegaSkeleton& src, int N, const OmegaSkeleton& target) {
    if (N < 0) throw ValidationError("negative translation length");
    return translate_with(src, target,
                          [N](const EdgeLoop& l) { return trivial_extend(l, N + 1); },
                          src.max_len() + N + 1);
}

StratumMapChain alpha_star_chain(const OmegaSkeleton& src, int M, const OmegaSkeleton& target) {
    if (M < 0 || M > src.max_len()) throw ValidationError("stratum outside skeleton");
    if (target.max_len() < M + 1)
        throw CapError("target skeleton too small for the extended stratum", M + 1, target.max_len());
    StratumMapChain out;
    out.stratum = M;
    out.stratum_ids = src.stratum(M);
    std::vector<int> pos_of(static_cast<size_t>(src.vertex_count()), -1);
    for (size_t i = 0; i < out.stratum_ids.size(); ++i)
        pos_of[static_cast<size_t>(out.stratum_ids[i])] = static_cast<int>(i);

    for (int i = 0; i <= M; ++i) {
        std::vector<int> img;
        img.reserve(out.stratum_ids.size());
        for (int id : out.stratum_ids) img.push_back(target.id_of(extend_once(src.loop(id), i)));
        out.images.push_back(std::move(img));
    }

    const SimplicialComplex& x = src.base();
    auto check_set = [&](const std::vector<int>& members, int i) {
        std::vector<EdgeLoop> fam;
        for (int id : members) {
            int p = pos_of[static_cast<size_t>(id)];
            fam.push_back(target.loop(out.images[static_cast<size_t>(i)][static_cast<size_t>(p)]));
            fam.push_back(target.loop(out.images[static_cast<size_t>(i) + 1][static_cast<size_t>(p)]));
        }
        auto chk = omega_simplex_check(x, fam);
        if (!chk.ok)
            throw ValidationError("interpolating maps " + std::to_string(i) + "," + std::to_string(i + 1) +
                                  " not contiguous: " + chk.reason);
        ++out.checked;
    };
    for (int i = 0; i < M; ++i) {
        for (int id : out.stratum_ids) check_set({id}, i);
        for (int d = 1; d <= src.max_dim(); ++d)
            for (const auto& sx : src.simplices(d)) {
                bool inside = true;
                for (int v : sx)
                    if (pos_of[static_cast<size_t>(v)] < 0) { inside = false; break; }
                if (inside) check_set(sx, i);
            }
    }
    return out;
}

OmegaMapResult omega_map(const SimplicialMap& f, const OmegaSkeleton& s) {
    if (!f.is_based()) throw ValidationError("loop-space functor needs a based map");
    if (f.source != &s.base()) throw ValidationError("map source differs from skeleton base");
    auto chk = check_simplicial(f);
    if (!chk.ok) throw ValidationError("map is not simplicial");
    OmegaMapResult out;
    out.vertex_image.reserve(static_cast<size_t>(s.vertex_count()));
    for (int v = 0; v < s.vertex_count(); ++v) {
        const EdgeLoop& l = s.loop(v);
        std::vector<int> seq;
        seq.reserve(l.seq.size());
        for (int w : l.seq) seq.push_back(f(w));
        out.vertex_image.push_back(EdgeLoop{f.target, std::move(seq)});
    }
    for (int d = 1; d <= s.max_dim(); ++d)
        for (const auto& sx : s.simplices(d)) {
            std::vector<EdgeLoop> img;
            img.reserve(sx.size());
            for (int v : sx) img.push_back(out.vertex_image[static_cast<size_t>(v)]);
            auto c = omega_simplex_check(*f.target, img);
            if (!c.ok) throw ValidationError("functor image of a stored simplex failed: " + c.reason);
            ++out.checked_simplices;
        }
    return out;
}

} // namespace simploop
