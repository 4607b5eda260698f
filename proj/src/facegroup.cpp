#include "simploop/facegroup.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "simploop/search.hpp"

namespace simploop {

SphereCheck face_sphere_check(const SimplicialComplex& x, int m, int n, std::span<const int> grid) {
    if (m < 0 || n < 0) return {false, -1, -1, "negative dimensions"};
    if (grid.size() != static_cast<size_t>(m + 1) * (n + 1))
        return {false, -1, -1, "grid size does not match dimensions"};
    const int x0 = x.basepoint();
    auto at = [&](int i, int j) { return grid[static_cast<size_t>(j) * (m + 1) + i]; };
    for (int v : grid)
        if (v < 0 || v >= x.vertex_count()) return {false, -1, -1, "entry is not a vertex"};
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= m; ++i)
            if ((i == 0 || i == m || j == 0 || j == n) && at(i, j) != x0)
                return {false, i, j, "boundary entry is not the basepoint"};
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < m; ++i) {
            std::uint64_t mask = (1ULL << at(i, j)) | (1ULL << at(i + 1, j)) | (1ULL << at(i, j + 1)) |
                                 (1ULL << at(i + 1, j + 1));
            if (!x.simplex_mask(mask))
                return {false, i, j, "unit square is not a simplex"};
        }
    return {};
}

FaceSphere validate_face_sphere(const SimplicialComplex& x, int m, int n, std::vector<int> grid) {
    auto chk = face_sphere_check(x, m, n, grid);
    if (!chk.ok)
        throw ValidationError("invalid face sphere at (" + std::to_string(chk.bad_i) + "," +
                              std::to_string(chk.bad_j) + "): " + chk.reason);
    return FaceSphere{&x, m, n, std::move(grid)};
}

FaceSphere sphere_from_rows(const SimplicialComplex& x,
                            const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty() || rows.front().empty()) throw ValidationError("empty grid");
    int n = static_cast<int>(rows.size()) - 1;
    int m = static_cast<int>(rows.front().size()) - 1;
    std::vector<int> grid;
    grid.reserve(static_cast<size_t>(m + 1) * (n + 1));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != m + 1) throw ValidationError("ragged grid rows");
        for (const auto& lab : row) grid.push_back(x.vertex(lab));
    }
    return validate_face_sphere(x, m, n, std::move(grid));
}

FaceSphere constant_sphere(const SimplicialComplex& x, int m, int n) {
    return FaceSphere{&x, m, n,
                      std::vector<int>(static_cast<size_t>(m + 1) * (n + 1), x.basepoint())};
}

FaceSphere transpose_sphere(const FaceSphere& f) {
    FaceSphere out{f.cx, f.n, f.m, std::vector<int>(f.grid.size())};
    for (int j = 0; j <= f.n; ++j)
        for (int i = 0; i <= f.m; ++i) out.at(j, i) = f.at(i, j);
    return out;
}

SphereContiguity fs_contiguity_check(const FaceSphere& f, const FaceSphere& g) {
    if (f.cx != g.cx) throw ValidationError("spheres over different complexes");
    if (f.m != g.m || f.n != g.n) throw ValidationError("sphere contiguity needs equal dimensions");
    const auto& x = *f.cx;
    for (int j = 0; j < f.n; ++j)
        for (int i = 0; i < f.m; ++i) {
            std::uint64_t mask = (1ULL << f.at(i, j)) | (1ULL << f.at(i + 1, j)) |
                                 (1ULL << f.at(i, j + 1)) | (1ULL << f.at(i + 1, j + 1)) |
                                 (1ULL << g.at(i, j)) | (1ULL << g.at(i + 1, j)) |
                                 (1ULL << g.at(i, j + 1)) | (1ULL << g.at(i + 1, j + 1));
            if (!x.simplex_mask(mask)) return {false, i, j};
        }
    return {};
}

bool fs_contiguous(const FaceSphere& f, const FaceSphere& g) { return fs_contiguity_check(f, g).ok; }

FaceSphere fs_repeat_col(const FaceSphere& f, int i) {
    if (i < 0 || i > f.m) throw ValidationError("column index out of range");
    FaceSphere out{f.cx, f.m + 1, f.n, {}};
    out.grid.reserve(static_cast<size_t>(f.m + 2) * (f.n + 1));
    for (int j = 0; j <= f.n; ++j)
        for (int c = 0; c <= f.m + 1; ++c) out.grid.push_back(f.at(c <= i ? c : c - 1, j));
    return out;
}

FaceSphere fs_repeat_row(const FaceSphere& f, int j) {
    if (j < 0 || j > f.n) throw ValidationError("row index out of range");
    FaceSphere out{f.cx, f.m, f.n + 1, {}};
    out.grid.reserve(static_cast<size_t>(f.m + 1) * (f.n + 2));
    for (int r = 0; r <= f.n + 1; ++r)
        for (int i = 0; i <= f.m; ++i) out.grid.push_back(f.at(i, r <= j ? r : r - 1));
    return out;
}

FaceSphere fs_repeat(const FaceSphere& f, const std::vector<int>& cols, const std::vector<int>& rows) {
    ExtensionIndexList ci(f.m, cols), ri(f.n, rows); // bounds checked here
    FaceSphere cur = f;
    for (int i : ci.indices()) cur = fs_repeat_col(cur, i);
    for (int j : ri.indices()) cur = fs_repeat_row(cur, j);
    return cur;
}

FaceSphere fs_trivial_extend(const FaceSphere& f, int r, int s) {
    FaceSphere cur = f;
    for (int t = 0; t < r; ++t) cur = fs_repeat_col(cur, cur.m);
    for (int t = 0; t < s; ++t) cur = fs_repeat_row(cur, cur.n);
    return cur;
}

FaceSphere fs_product(const FaceSphere& f, const FaceSphere& g) {
    if (f.cx != g.cx) throw ValidationError("spheres over different complexes");
    const int m = f.m, n = f.n, r = g.m, s = g.n;
    FaceSphere out = constant_sphere(*f.cx, m + r + 1, n + s + 1);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= m; ++i) out.at(i, j) = f.at(i, j);
    for (int j = 0; j <= s; ++j)
        for (int i = 0; i <= r; ++i) out.at(m + 1 + i, n + 1 + j) = g.at(i, j);
    auto chk = face_sphere_check(*f.cx, out.m, out.n, out.grid);
    if (!chk.ok) throw ValidationError("product sphere failed validation: " + chk.reason);
    return out;
}

std::vector<EdgeLoop> sphere_rows(const FaceSphere& f) {
    std::vector<EdgeLoop> rows;
    rows.reserve(static_cast<size_t>(f.n) + 1);
    for (int j = 0; j <= f.n; ++j) {
        std::vector<int> seq(static_cast<size_t>(f.m) + 1);
        for (int i = 0; i <= f.m; ++i) seq[static_cast<size_t>(i)] = f.at(i, j);
        rows.push_back(EdgeLoop{f.cx, std::move(seq)});
    }
    return rows;
}

OmegaPath fs_to_omega_loop(const FaceSphere& f, const OmegaSkeleton& s) {
    OmegaPath out;
    for (const auto& row : sphere_rows(f)) out.push_back(s.id_of(row));
    require_omega_path(s, out, false);
    return out;
}

FaceSphere omega_loop_to_fs(std::span<const EdgeLoop> gamma) {
    if (gamma.empty()) throw ValidationError("empty loop");
    const SimplicialComplex* x = gamma.front().cx;
    int m = gamma.front().length();
    for (const auto& l : gamma)
        if (l.length() != m)
            throw ValidationError("loop mixes strata: expected all vertices of length " +
                                  std::to_string(m));
    const EdgeLoop cst = constant_loop(*x, m);
    if (!(gamma.front() == cst) || !(gamma.back() == cst))
        throw ValidationError("loop must start and end at the constant loop of its stratum");
    std::vector<int> grid;
    grid.reserve(static_cast<size_t>(m + 1) * gamma.size());
    for (const auto& l : gamma) grid.insert(grid.end(), l.seq.begin(), l.seq.end());
    return validate_face_sphere(*x, m, static_cast<int>(gamma.size()) - 1, std::move(grid));
}

FaceSphere omega_loop_to_fs(const OmegaSkeleton& s, const OmegaPath& gamma) {
    std::vector<EdgeLoop> loops;
    loops.reserve(gamma.size());
    for (int id : gamma) loops.push_back(s.loop(id));
    return omega_loop_to_fs(loops);
}

std::vector<EdgeLoop> phi_loops(const FaceSphere& f) {
    std::vector<EdgeLoop> out;
    const auto rows = sphere_rows(f);
    for (int t = 0; t <= f.m; ++t) out.push_back(constant_loop(*f.cx, t));
    for (int j = 1; j <= f.n - 1; ++j) out.push_back(rows[static_cast<size_t>(j)]);
    for (int t = f.n >= 1 ? f.m : f.m - 1; t >= 0; --t) out.push_back(constant_loop(*f.cx, t));
    return out;
}

OmegaPath phi_path(const FaceSphere& f, const OmegaSkeleton& s) {
    OmegaPath out;
    for (const auto& l : phi_loops(f)) out.push_back(s.id_of(l));
    require_omega_path(s, out, true);
    return out;
}

CycleClassifier::Class sphere_class(const CycleClassifier& h2, const FaceSphere& f) {
    if (h2.dim() != 2) throw ValidationError("sphere pairing needs a dimension-2 classifier");
    std::map<VertexSet, Int> chain;
    auto add_triangle = [&](int a, int b, int c) {
        if (a == b || a == c || b == c) return; // degenerate image
        int v[3] = {a, b, c};
        int sign = 1;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2 - i; ++j)
                if (v[j] > v[j + 1]) {
                    std::swap(v[j], v[j + 1]);
                    sign = -sign;
                }
        chain[{v[0], v[1], v[2]}] += sign;
    };
    for (int j = 0; j < f.n; ++j)
        for (int i = 0; i < f.m; ++i) {
            add_triangle(f.at(i, j), f.at(i + 1, j), f.at(i + 1, j + 1));
            add_triangle(f.at(i, j), f.at(i + 1, j + 1), f.at(i, j + 1));
        }
    std::erase_if(chain, [](const auto& kv) { return kv.second == 0; });
    return h2.classify(chain);
}

namespace {

struct GridKeyHash {
    size_t operator()(const std::vector<int>& g) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (int v : g) {
            h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return static_cast<size_t>(h);
    }
};

// Streams all spheres contiguous to `base` (same dims, boundary pinned),
// lexicographic over interior cells in row-major order.  The completed
// unit squares around each chosen cell prune the suffix.
void for_each_contiguous_sphere(const FaceSphere& base, const std::function<bool(const FaceSphere&)>& emit) {
    const auto& x = *base.cx;
    const int m = base.m, n = base.n;
    FaceSphere cur = constant_sphere(x, m, n);
    bool stop = false;

    auto union_square_ok = [&](int i, int j) {
        std::uint64_t mask = (1ULL << base.at(i, j)) | (1ULL << base.at(i + 1, j)) |
                             (1ULL << base.at(i, j + 1)) | (1ULL << base.at(i + 1, j + 1)) |
                             (1ULL << cur.at(i, j)) | (1ULL << cur.at(i + 1, j)) |
                             (1ULL << cur.at(i, j + 1)) | (1ULL << cur.at(i + 1, j + 1));
        return x.simplex_mask(mask);
    };

    if (m <= 1 || n <= 1) {
        // no interior cells; the constant sphere is the only candidate
        bool ok = true;
        for (int j = 0; j < n && ok; ++j)
            for (int i = 0; i < m && ok; ++i) ok = union_square_ok(i, j);
        if (ok) emit(cur);
        return;
    }

    std::function<void(int, int)> rec = [&](int i, int j) {
        if (stop) return;
        if (j == n) {
            if (!emit(cur)) stop = true;
            return;
        }
        auto [ni, nj] = i == m - 1 ? std::pair<int, int>(1, j + 1) : std::pair<int, int>(i + 1, j);
        for (int v : x.closed_neighbors(base.at(i, j))) {
            cur.at(i, j) = v;
            bool ok = union_square_ok(i - 1, j - 1);
            if (ok && i == m - 1) ok = union_square_ok(i, j - 1);
            if (ok && j == n - 1) ok = union_square_ok(i - 1, j);
            if (ok && i == m - 1 && j == n - 1) ok = union_square_ok(i, j);
            if (ok) rec(ni, nj);
            if (stop) return;
        }
        cur.at(i, j) = x.basepoint();
    };
    rec(1, 1);
}

} // namespace

SphereEquivResult fs_equivalent(const FaceSphere& f, const FaceSphere& g, SphereSearchCaps caps,
                                const CycleClassifier* h2) {
    if (f.cx != g.cx) throw ValidationError("spheres over different complexes");
    if (caps.max_m < 0) caps.max_m = std::max(f.m, g.m) + 2;
    if (caps.max_n < 0) caps.max_n = std::max(f.n, g.n) + 2;
    if (caps.max_m < std::max(f.m, g.m) || caps.max_n < std::max(f.n, g.n))
        throw ValidationError("caps smaller than the sphere dimensions");

    SphereEquivResult res;
    if (h2 && !(sphere_class(*h2, f) == sphere_class(*h2, g))) {
        res.status = SphereEquivStatus::DistinctClass;
        return res;
    }

    bool all_exhausted = true;
    const int base_m = std::max(f.m, g.m), base_n = std::max(f.n, g.n);
    for (int pad = 0; pad <= (caps.max_m - base_m) + (caps.max_n - base_n); ++pad) {
        for (int dm = 0; dm <= pad; ++dm) {
            int dn = pad - dm;
            int mm = base_m + dm, nn = base_n + dn;
            if (mm > caps.max_m || nn > caps.max_n) continue;
            FaceSphere a = fs_trivial_extend(f, mm - f.m, nn - f.n);
            FaceSphere b = fs_trivial_extend(g, mm - g.m, nn - g.n);

            std::unordered_map<std::vector<int>, int, GridKeyHash> id_of;
            std::vector<FaceSphere> seen;
            std::vector<int> parent;
            auto intern = [&](const FaceSphere& sph, int par) {
                auto [it, fresh] = id_of.emplace(sph.grid, static_cast<int>(seen.size()));
                if (fresh) {
                    seen.push_back(sph);
                    parent.push_back(par);
                }
                return std::pair<int, bool>(it->second, fresh);
            };
            std::deque<int> queue;
            intern(a, -1);
            queue.push_back(0);
            int goal = a == b ? 0 : -1;
            long long dequeued = 0, emissions = 0;
            const long long emission_cap = caps.budget * 64;
            bool truncated = false;
            while (!queue.empty() && goal < 0 && !truncated && dequeued < caps.budget) {
                int curid = queue.front();
                queue.pop_front();
                ++dequeued;
                FaceSphere cur = seen[static_cast<size_t>(curid)];
                for_each_contiguous_sphere(cur, [&](const FaceSphere& nb) {
                    if (++emissions > emission_cap) {
                        truncated = true;
                        return false;
                    }
                    auto [id, fresh] = intern(nb, curid);
                    if (fresh) {
                        if (nb == b) {
                            goal = id;
                            return false;
                        }
                        queue.push_back(id);
                    }
                    return true;
                });
            }
            res.dequeued += dequeued;
            if (truncated) all_exhausted = false;
            if (goal >= 0) {
                res.status = SphereEquivStatus::Found;
                res.common_m = mm;
                res.common_n = nn;
                for (int v = goal; v >= 0; v = parent[static_cast<size_t>(v)])
                    res.chain.push_back(seen[static_cast<size_t>(v)]);
                std::reverse(res.chain.begin(), res.chain.end());
                return res;
            }
            if (!queue.empty()) all_exhausted = false;
        }
    }
    res.status = all_exhausted ? SphereEquivStatus::ExhaustedNotFound : SphereEquivStatus::BudgetNotFound;
    return res;
}

namespace {

struct CertBuilder {
    const OmegaSkeleton& s;
    OmegaPathCert cert;
    OmegaPath cur;

    CertBuilder(const OmegaSkeleton& sk, OmegaPath start) : s(sk), cur(std::move(start)) {
        cert.start = cur;
    }
    void extend(int pos) {
        OmegaPath next = cur;
        next.insert(next.begin() + pos + 1, next[static_cast<size_t>(pos)]);
        cert.steps.push_back({OmegaPathStep::Kind::Extend, pos, next});
        cur = std::move(next);
    }
    void move(OmegaPath next) {
        cert.steps.push_back({OmegaPathStep::Kind::Move, -1, next});
        cur = std::move(next);
    }
};

// Appends the steps taking phi(ft) (a window of cur starting at `offset`)
// to phi of the single-column extension of ft; returns the extended sphere.
FaceSphere append_column_extension(CertBuilder& b, const FaceSphere& ft, int offset) {
    const int m = ft.m, n = ft.n;
    int second_peak = n >= 1 ? m + n : m;
    b.extend(offset + second_peak);
    b.extend(offset + m);
    FaceSphere ft2 = fs_repeat_col(ft, m);
    OmegaPath window = phi_path(ft2, b.s);
    OmegaPath next = b.cur;
    std::copy(window.begin(), window.end(), next.begin() + offset);
    b.move(std::move(next));
    return ft2;
}

} // namespace

OmegaPathCert phi_column_extension_cert(const FaceSphere& f, const OmegaSkeleton& s) {
    CertBuilder b(s, phi_path(f, s));
    FaceSphere ext = append_column_extension(b, f, 0);
    if (b.cur != phi_path(ext, s)) throw ValidationError("column extension certificate mismatch");
    validate_certificate(s, b.cert);
    return b.cert;
}

OmegaPathCert phi_product_certificate(const FaceSphere& f, const FaceSphere& g, const OmegaSkeleton& s) {
    if (f.cx != g.cx || f.cx != &s.base()) throw ValidationError("mismatched complexes");
    const int m = f.m, n = f.n, r = g.m, sg = g.n;
    const int M = m + r + 1;

    OmegaPath start = phi_path(f, s);
    {
        OmegaPath tail = phi_path(g, s);
        start.insert(start.end(), tail.begin(), tail.end());
    }
    CertBuilder b(s, std::move(start));

    // Same-size both factors to the product width by column extensions.
    FaceSphere F = f;
    for (int t = 0; t < r + 1; ++t) F = append_column_extension(b, F, 0);
    FaceSphere G = g;
    int offset = 2 * M + n + 1; // length of phi(F) path
    for (int t = 0; t < m + 1; ++t) G = append_column_extension(b, G, offset);

    // Collapse the central return-to-base valley and line the path up with
    // phi of the merged sphere.
    lift_all_valleys(s, b.cur, b.cert);

    FaceSphere fstar = constant_sphere(*f.cx, M, n + sg + 1);
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= M; ++i) fstar.at(i, j) = F.at(i, j);
    for (int j = 0; j <= sg; ++j)
        for (int i = 0; i <= M; ++i) fstar.at(i, n + 1 + j) = G.at(i, j);
    {
        auto chk = face_sphere_check(*f.cx, fstar.m, fstar.n, fstar.grid);
        if (!chk.ok) throw ValidationError("merged sphere failed validation: " + chk.reason);
    }
    align_by_repeats(s, b.cur, phi_path(fstar, s), b.cert);

    // Slide the g block from left alignment back to its product position,
    // one single-index step of the repeated-column map at a time.
    std::vector<int> idx(static_cast<size_t>(m) + 1, r);
    auto alpha_of = [&](int v) {
        for (int t = m; t >= 0; --t) v = v <= idx[static_cast<size_t>(t)] ? v : v - 1;
        return v;
    };
    auto sphere_at = [&]() {
        FaceSphere h = fstar;
        for (int j = 0; j <= sg; ++j)
            for (int i = 0; i <= M; ++i) h.at(i, n + 1 + j) = g.at(alpha_of(i), j);
        auto chk = face_sphere_check(*f.cx, h.m, h.n, h.grid);
        if (!chk.ok) throw ValidationError("slide sphere failed validation: " + chk.reason);
        return h;
    };
    for (int c = 0; c <= m; ++c)
        for (int v = r; v >= 1; --v) {
            idx[static_cast<size_t>(c)] = v - 1;
            b.move(phi_path(sphere_at(), s));
        }

    if (b.cur != phi_path(fs_product(f, g), s))
        throw ValidationError("product certificate did not land on the product loop");
    validate_certificate(s, b.cert);
    return b.cert;
}

} // namespace simploop
