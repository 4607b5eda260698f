#include "simploop/stone.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace simploop {

std::string HomologyResult::to_string() const {
    std::ostringstream out;
    for (size_t d = 0; d < betti.size(); ++d) {
        out << (d ? " " : "") << "b" << d << "=" << betti[d];
        if (d < torsion.size() && !torsion[d].empty()) {
            out << " t" << d << "=[";
            for (size_t i = 0; i < torsion[d].size(); ++i) out << (i ? "," : "") << torsion[d][i];
            out << "]";
        }
    }
    return out.str();
}

std::vector<StoneChain> enumerate_chains(const SimplicialComplex& x, int k, int max_cell_dim,
                                         StoneCaps caps) {
    if (k < 1) throw ValidationError("chain length must be >= 1");
    if (max_cell_dim < 0) throw ValidationError("negative dimension cap");

    // Candidate parts: every simplex of X, as masks, lexicographic by
    // vertex set.  Chains are walks in the union-compatibility graph.
    auto by_dim = x.simplices_up_to(std::min(max_cell_dim, x.vertex_count() - 1));
    std::vector<VertexSet> parts;
    for (const auto& lvl : by_dim)
        for (const auto& s : lvl) parts.push_back(s);
    std::sort(parts.begin(), parts.end());
    std::vector<std::uint64_t> part_mask;
    part_mask.reserve(parts.size());
    for (const auto& p : parts) part_mask.push_back(x.mask_of(p));
    const std::uint64_t base_mask = 1ULL << x.basepoint();

    std::vector<StoneChain> out;
    StoneChain cur;
    cur.parts.resize(static_cast<size_t>(k) - 1);
    std::function<void(int, std::uint64_t, int)> rec = [&](int i, std::uint64_t prev, int dim_left) {
        if (i == k - 1) {
            if (static_cast<long long>(out.size()) >= caps.max_cells)
                throw CapError("chain cap exceeded", static_cast<long long>(out.size()) + 1,
                               caps.max_cells);
            out.push_back(cur);
            return;
        }
        for (size_t t = 0; t < parts.size(); ++t) {
            int d = static_cast<int>(parts[t].size()) - 1;
            if (d > dim_left) continue;
            if (!x.simplex_mask(prev | part_mask[t])) continue;
            if (i == k - 2 && !x.simplex_mask(part_mask[t] | base_mask)) continue;
            cur.parts[static_cast<size_t>(i)] = parts[t];
            rec(i + 1, part_mask[t], dim_left - d);
        }
    };
    rec(0, base_mask, max_cell_dim);
    return out;
}

int GradedComplex::add_cell(int d, std::vector<std::pair<int, int>> faces) {
    auto& lvl = bnd_.at(static_cast<size_t>(d));
    lvl.push_back(std::move(faces));
    return static_cast<int>(lvl.size()) - 1;
}

void GradedComplex::assert_dd_zero() const {
    for (int d = 2; d <= top_dim(); ++d)
        for (const auto& cell : bnd_[static_cast<size_t>(d)]) {
            std::map<int, long long> acc;
            for (auto [f, s] : cell)
                for (auto [g, s2] : bnd_[static_cast<size_t>(d) - 1][static_cast<size_t>(f)])
                    acc[g] += static_cast<long long>(s) * s2;
            for (auto [g, v] : acc)
                if (v != 0) throw ValidationError("boundary of boundary is nonzero");
        }
}

namespace {

// Free-pair collapse: a (d-1)-cell with exactly one living coface is
// removed together with that coface; homotopy type (hence homology) of
// the truncation is unchanged.
std::vector<std::vector<char>> collapse_free_pairs(const GradedComplex& g) {
    int top = g.top_dim();
    std::vector<std::vector<char>> alive(static_cast<size_t>(top) + 1);
    std::vector<std::vector<int>> coface_count(static_cast<size_t>(top) + 1);
    std::vector<std::vector<std::vector<int>>> cofaces(static_cast<size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        alive[static_cast<size_t>(d)].assign(static_cast<size_t>(g.cells(d)), 1);
        coface_count[static_cast<size_t>(d)].assign(static_cast<size_t>(g.cells(d)), 0);
        cofaces[static_cast<size_t>(d)].assign(static_cast<size_t>(g.cells(d)), {});
    }
    for (int d = 1; d <= top; ++d)
        for (long long c = 0; c < g.cells(d); ++c)
            for (auto [f, s] : g.faces(d, static_cast<int>(c))) {
                ++coface_count[static_cast<size_t>(d) - 1][static_cast<size_t>(f)];
                cofaces[static_cast<size_t>(d) - 1][static_cast<size_t>(f)].push_back(static_cast<int>(c));
            }

    std::deque<std::pair<int, int>> work; // (dim, cell) candidates for free faces
    for (int d = 0; d < top; ++d)
        for (long long c = 0; c < g.cells(d); ++c)
            if (coface_count[static_cast<size_t>(d)][static_cast<size_t>(c)] == 1) work.push_back({d, static_cast<int>(c)});

    while (!work.empty()) {
        auto [d, f] = work.front();
        work.pop_front();
        if (!alive[static_cast<size_t>(d)][static_cast<size_t>(f)]) continue;
        if (coface_count[static_cast<size_t>(d)][static_cast<size_t>(f)] != 1) continue;
        int c = -1;
        for (int cand : cofaces[static_cast<size_t>(d)][static_cast<size_t>(f)])
            if (alive[static_cast<size_t>(d) + 1][static_cast<size_t>(cand)]) { c = cand; break; }
        if (c < 0) continue;
        alive[static_cast<size_t>(d)][static_cast<size_t>(f)] = 0;
        alive[static_cast<size_t>(d) + 1][static_cast<size_t>(c)] = 0;
        for (auto [f2, s] : g.faces(d + 1, c)) {
            if (!alive[static_cast<size_t>(d)][static_cast<size_t>(f2)]) continue;
            if (--coface_count[static_cast<size_t>(d)][static_cast<size_t>(f2)] == 1) work.push_back({d, f2});
        }
        if (d >= 1)
            for (auto [f3, s] : g.faces(d, f)) {
                if (!alive[static_cast<size_t>(d) - 1][static_cast<size_t>(f3)]) continue;
                if (--coface_count[static_cast<size_t>(d) - 1][static_cast<size_t>(f3)] == 1)
                    work.push_back({d - 1, f3});
            }
    }
    return alive;
}

} // namespace

HomologyResult GradedComplex::homology(int top) const {
    if (top + 1 > top_dim())
        throw ValidationError("complex built to dimension " + std::to_string(top_dim()) +
                              ", need " + std::to_string(top + 1));
    assert_dd_zero();
    auto alive = collapse_free_pairs(*this);

    std::vector<long long> alive_count(static_cast<size_t>(top_dim()) + 1, 0);
    std::vector<std::vector<int>> newid(static_cast<size_t>(top_dim()) + 1);
    for (int d = 0; d <= top_dim(); ++d) {
        newid[static_cast<size_t>(d)].assign(static_cast<size_t>(cells(d)), -1);
        for (long long c = 0; c < cells(d); ++c)
            if (alive[static_cast<size_t>(d)][static_cast<size_t>(c)])
                newid[static_cast<size_t>(d)][static_cast<size_t>(c)] =
                    static_cast<int>(alive_count[static_cast<size_t>(d)]++);
    }

    std::vector<long long> rank(static_cast<size_t>(top) + 2, 0);
    std::vector<std::vector<Int>> tors(static_cast<size_t>(top) + 2);
    for (int d = 1; d <= top + 1; ++d) {
        SparseMat m(static_cast<int>(alive_count[static_cast<size_t>(d) - 1]),
                    static_cast<int>(alive_count[static_cast<size_t>(d)]));
        for (long long c = 0; c < cells(d); ++c) {
            int cc = newid[static_cast<size_t>(d)][static_cast<size_t>(c)];
            if (cc < 0) continue;
            for (auto [f, s] : faces(d, static_cast<int>(c))) {
                int ff = newid[static_cast<size_t>(d) - 1][static_cast<size_t>(f)];
                if (ff >= 0) m.add(ff, cc, s);
            }
        }
        auto rt = std::move(m).rank_and_torsion();
        rank[static_cast<size_t>(d)] = rt.rank;
        tors[static_cast<size_t>(d)] = std::move(rt.torsion);
    }

    HomologyResult out;
    for (int d = 0; d <= top; ++d) {
        out.betti.push_back(alive_count[static_cast<size_t>(d)] - rank[static_cast<size_t>(d)] -
                            rank[static_cast<size_t>(d) + 1]);
        out.torsion.push_back(tors[static_cast<size_t>(d) + 1]);
    }
    return out;
}

std::pair<int, std::vector<int>> GradedComplex::components() const {
    long long n0 = cells(0);
    std::vector<int> parent(static_cast<size_t>(n0));
    for (long long i = 0; i < n0; ++i) parent[static_cast<size_t>(i)] = static_cast<int>(i);
    std::function<int(int)> find_root = [&](int v) {
        while (parent[static_cast<size_t>(v)] != v) {
            parent[static_cast<size_t>(v)] = parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
            v = parent[static_cast<size_t>(v)];
        }
        return v;
    };
    if (top_dim() >= 1)
        for (long long c = 0; c < cells(1); ++c) {
            const auto& fs = faces(1, static_cast<int>(c));
            for (size_t i = 1; i < fs.size(); ++i) {
                int ra = find_root(fs[0].first), rb = find_root(fs[i].first);
                if (ra != rb) parent[static_cast<size_t>(std::max(ra, rb))] = std::min(ra, rb);
            }
        }
    std::vector<int> comp(static_cast<size_t>(n0));
    std::unordered_map<int, int> ids;
    for (long long v = 0; v < n0; ++v) {
        int r = find_root(static_cast<int>(v));
        auto [it, fresh] = ids.emplace(r, static_cast<int>(ids.size()));
        comp[static_cast<size_t>(v)] = it->second;
    }
    return {static_cast<int>(ids.size()), comp};
}

StoneComplex chain_complex_of_stone(const SimplicialComplex& x, int k, int max_cell_dim,
                                    StoneCaps caps) {
    auto chains = enumerate_chains(x, k, max_cell_dim, caps);
    StoneComplex sc{std::vector<std::vector<StoneChain>>(static_cast<size_t>(max_cell_dim) + 1),
                    GradedComplex(max_cell_dim), {}};
    for (const auto& ch : chains) {
        int d = ch.dim();
        sc.index[ch] = {d, static_cast<int>(sc.cells[static_cast<size_t>(d)].size())};
        sc.cells[static_cast<size_t>(d)].push_back(ch);
    }
    // Faces: drop one vertex of one component; Koszul sign over the
    // dimensions of the components to the left.
    for (int d = 1; d <= max_cell_dim; ++d)
        for (const auto& ch : sc.cells[static_cast<size_t>(d)]) {
            std::vector<std::pair<int, int>> faces;
            int pre = 0;
            for (size_t j = 0; j < ch.parts.size(); ++j) {
                const auto& part = ch.parts[j];
                int pd = static_cast<int>(part.size()) - 1;
                if (pd >= 1) {
                    for (int t = 0; t <= pd; ++t) {
                        StoneChain face = ch;
                        face.parts[j].erase(face.parts[j].begin() + t);
                        auto it = sc.index.find(face);
                        if (it == sc.index.end())
                            throw ValidationError("chain set not closed under componentwise faces");
                        int sign = ((pre + t) % 2 == 0) ? 1 : -1;
                        faces.emplace_back(it->second.second, sign);
                    }
                }
                pre += pd;
            }
            // merge duplicate faces (possible when two deletions coincide)
            std::map<int, int> acc;
            for (auto [f, s] : faces) acc[f] += s;
            faces.clear();
            for (auto [f, s] : acc)
                if (s != 0) faces.emplace_back(f, s);
            sc.graded.add_cell(d, std::move(faces));
        }
    for (size_t i = 0; i < sc.cells[0].size(); ++i) sc.graded.add_cell(0, {});
    sc.graded.assert_dd_zero();
    return sc;
}

namespace {

GradedComplex graded_from_simplices(const std::vector<std::vector<VertexSet>>& by_dim) {
    int top = static_cast<int>(by_dim.size()) - 1;
    GradedComplex g(top);
    std::vector<std::map<VertexSet, int>> index(static_cast<size_t>(top) + 1);
    for (int d = 0; d <= top; ++d)
        for (const auto& s : by_dim[static_cast<size_t>(d)])
            index[static_cast<size_t>(d)].emplace(s, static_cast<int>(index[static_cast<size_t>(d)].size()));
    for (int d = 0; d <= top; ++d)
        for (const auto& s : by_dim[static_cast<size_t>(d)]) {
            std::vector<std::pair<int, int>> faces;
            if (d >= 1)
                for (int t = 0; t <= d; ++t) {
                    VertexSet f = s;
                    f.erase(f.begin() + t);
                    faces.emplace_back(index[static_cast<size_t>(d) - 1].at(f), t % 2 == 0 ? 1 : -1);
                }
            g.add_cell(d, std::move(faces));
        }
    return g;
}

} // namespace

HomologyResult simplicial_homology(const SimplicialComplex& x, int top_dim) {
    auto by_dim = x.simplices_up_to(top_dim + 1);
    return graded_from_simplices(by_dim).homology(top_dim);
}

HomologyResult simplicial_homology(const OmegaSkeleton& s, int top_dim) {
    if (s.max_dim() < top_dim + 1)
        throw ValidationError("skeleton built to dimension " + std::to_string(s.max_dim()) +
                              ", need " + std::to_string(top_dim + 1));
    std::vector<std::vector<VertexSet>> by_dim(static_cast<size_t>(top_dim) + 2);
    for (int v = 0; v < s.vertex_count(); ++v) by_dim[0].push_back({v});
    for (int d = 1; d <= top_dim + 1; ++d) by_dim[static_cast<size_t>(d)] = s.simplices(d);
    return graded_from_simplices(by_dim).homology(top_dim);
}

StoneChain stone_vertex_image(const EdgeLoop& l, int k) {
    if (!l.is_based()) throw ValidationError("need a based loop");
    if (l.length() > k)
        throw ValidationError("loop length " + std::to_string(l.length()) + " exceeds k = " +
                              std::to_string(k));
    StoneChain out;
    EdgeLoop padded = same_size(l, k);
    for (int i = 1; i <= k - 1; ++i) out.parts.push_back({padded.seq[static_cast<size_t>(i)]});
    return out;
}

bool CycleClassifier::Class::is_zero() const {
    for (const Int& v : torsion_part)
        if (v != 0) return false;
    for (const Int& v : free_part)
        if (v != 0) return false;
    return true;
}

CycleClassifier::CycleClassifier(const SimplicialComplex& x, int dim) : x_(&x), dim_(dim) {
    if (dim < 1) throw ValidationError("classifier needs dimension >= 1");
    auto by_dim = x.simplices_up_to(dim + 1);
    const auto& cells_d = by_dim[static_cast<size_t>(dim)];
    const auto& cells_dm1 = by_dim[static_cast<size_t>(dim) - 1];
    const auto& cells_dp1 = by_dim[static_cast<size_t>(dim) + 1];
    for (const auto& s : cells_d) cell_index_.emplace(s, static_cast<int>(cell_index_.size()));
    std::map<VertexSet, int> low_index;
    for (const auto& s : cells_dm1) low_index.emplace(s, static_cast<int>(low_index.size()));

    auto boundary_matrix = [](const std::vector<VertexSet>& cells, std::map<VertexSet, int>& faces) {
        Mat m(static_cast<int>(faces.size()), static_cast<int>(cells.size()));
        for (size_t c = 0; c < cells.size(); ++c)
            for (size_t t = 0; t < cells[c].size(); ++t) {
                VertexSet f = cells[c];
                f.erase(f.begin() + static_cast<long>(t));
                m.at(faces.at(f), static_cast<int>(c)) += (t % 2 == 0) ? 1 : -1;
            }
        return m;
    };
    Mat a = boundary_matrix(cells_d, low_index);
    Mat b = boundary_matrix(cells_dp1, cell_index_);

    SmithForm sa = smith_normal_form(a, true);
    vinv_ = std::move(sa.Vinv);
    kernel_begin_ = sa.rank;
    int kernel_dim = static_cast<int>(cells_d.size()) - sa.rank;

    // Image of the higher boundary in kernel coordinates.
    Mat vb = vinv_ * b;
    for (int r = 0; r < kernel_begin_; ++r)
        for (int c = 0; c < vb.cols(); ++c)
            if (vb.at(r, c) != 0) throw ValidationError("higher boundary has non-cycle columns");
    Mat q(kernel_dim, vb.cols());
    for (int r = 0; r < kernel_dim; ++r)
        for (int c = 0; c < vb.cols(); ++c) q.at(r, c) = vb.at(kernel_begin_ + r, c);
    SmithForm sq = smith_normal_form(q, true);
    uq_ = std::move(sq.U);
    qdiag_ = sq.diag;
    betti_ = kernel_dim - sq.rank;
}

CycleClassifier::Class CycleClassifier::classify(const std::map<VertexSet, Int>& chain) const {
    std::vector<Int> c(cell_index_.size());
    for (const auto& [cell, coef] : chain) {
        auto it = cell_index_.find(cell);
        if (it == cell_index_.end()) throw ValidationError("chain uses an unknown simplex");
        c[static_cast<size_t>(it->second)] = coef;
    }
    std::vector<Int> vc(cell_index_.size());
    for (int r = 0; r < vinv_.rows(); ++r)
        for (int j = 0; j < vinv_.cols(); ++j)
            if (vinv_.at(r, j) != 0 && c[static_cast<size_t>(j)] != 0)
                vc[static_cast<size_t>(r)] += vinv_.at(r, j) * c[static_cast<size_t>(j)];
    for (int r = 0; r < kernel_begin_; ++r)
        if (vc[static_cast<size_t>(r)] != 0) throw ValidationError("chain is not a cycle");
    std::vector<Int> y(vc.begin() + kernel_begin_, vc.end());
    std::vector<Int> w(y.size());
    for (int r = 0; r < uq_.rows(); ++r)
        for (int j = 0; j < uq_.cols(); ++j)
            if (uq_.at(r, j) != 0 && y[static_cast<size_t>(j)] != 0)
                w[static_cast<size_t>(r)] += uq_.at(r, j) * y[static_cast<size_t>(j)];
    Class out;
    int rank = static_cast<int>(qdiag_.size());
    for (int i = 0; i < rank; ++i)
        if (qdiag_[static_cast<size_t>(i)] > 1) {
            Int r = w[static_cast<size_t>(i)] % qdiag_[static_cast<size_t>(i)];
            if (r < 0) r += qdiag_[static_cast<size_t>(i)];
            out.torsion_part.push_back(r);
        }
    for (size_t i = static_cast<size_t>(rank); i < w.size(); ++i) out.free_part.push_back(w[i]);
    return out;
}

} // namespace simploop
