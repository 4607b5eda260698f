#include "simploop/snf.hpp"

#include <algorithm>
#include <set>

#include "simploop/errors.hpp"

namespace simploop {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix product shape mismatch");
    Mat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Int& w = o.at(k, j);
                if (w != 0) out.at(i, j) += v * w;
            }
        }
    return out;
}

namespace {

// Row/column operations mirrored onto the transform matrices.  An
// operation applied to A on the left (rows) updates U the same way and
// Uinv by the inverse operation on columns; symmetrically for V.
struct Worker {
    Mat& a;
    bool track;
    Mat U, Uinv, V, Vinv;

    Worker(Mat& m, bool t) : a(m), track(t) {
        if (track) {
            U = Mat::identity(m.rows());
            Uinv = Mat::identity(m.rows());
            V = Mat::identity(m.cols());
            Vinv = Mat::identity(m.cols());
        }
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
        if (!track) return;
        for (int c = 0; c < U.cols(); ++c) std::swap(U.at(i, c), U.at(j, c));
        for (int r = 0; r < Uinv.rows(); ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
        if (!track) return;
        for (int r = 0; r < V.rows(); ++r) std::swap(V.at(r, i), V.at(r, j));
        for (int c = 0; c < Vinv.cols(); ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }
    void negate_row(int i) {
        for (int c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
        if (!track) return;
        for (int c = 0; c < U.cols(); ++c) U.at(i, c) = -U.at(i, c);
        for (int r = 0; r < Uinv.rows(); ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }
    void add_row(int dst, int src, const Int& q) { // row[dst] += q * row[src]
        if (q == 0) return;
        for (int c = 0; c < a.cols(); ++c) a.at(dst, c) += q * a.at(src, c);
        if (!track) return;
        for (int c = 0; c < U.cols(); ++c) U.at(dst, c) += q * U.at(src, c);
        for (int r = 0; r < Uinv.rows(); ++r) Uinv.at(r, src) -= q * Uinv.at(r, dst);
    }
    void add_col(int dst, int src, const Int& q) { // col[dst] += q * col[src]
        if (q == 0) return;
        for (int r = 0; r < a.rows(); ++r) a.at(r, dst) += q * a.at(r, src);
        if (!track) return;
        for (int r = 0; r < V.rows(); ++r) V.at(r, dst) += q * V.at(r, src);
        for (int c = 0; c < Vinv.cols(); ++c) Vinv.at(src, c) -= q * Vinv.at(dst, c);
    }
};

Int floordiv(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

} // namespace

SmithForm smith_normal_form(Mat a, bool with_transforms) {
    Worker w(a, with_transforms);
    const int n = std::min(a.rows(), a.cols());
    int t = 0;
    for (; t < n; ++t) {
        // Pivot: minimal |value| in the trailing submatrix, ties by position.
        int pr = -1, pc = -1;
        for (int r = t; r < a.rows(); ++r)
            for (int c = t; c < a.cols(); ++c) {
                const Int& v = a.at(r, c);
                if (v == 0) continue;
                if (pr < 0 || abs(v) < abs(a.at(pr, pc))) { pr = r; pc = c; }
            }
        if (pr < 0) break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);

        for (;;) {
            if (a.at(t, t) < 0) w.negate_row(t);
            bool again = false;
            for (int r = t + 1; r < a.rows(); ++r) {
                if (a.at(r, t) == 0) continue;
                Int q = floordiv(a.at(r, t), a.at(t, t));
                w.add_row(r, t, -q);
                if (a.at(r, t) != 0) { w.swap_rows(t, r); again = true; break; }
            }
            if (again) continue;
            for (int c = t + 1; c < a.cols(); ++c) {
                if (a.at(t, c) == 0) continue;
                Int q = floordiv(a.at(t, c), a.at(t, t));
                w.add_col(c, t, -q);
                if (a.at(t, c) != 0) { w.swap_cols(t, c); again = true; break; }
            }
            if (again) continue;
            // Pivot must divide the rest of the submatrix for the chain.
            bool fixed = false;
            for (int r = t + 1; r < a.rows() && !fixed; ++r)
                for (int c = t + 1; c < a.cols() && !fixed; ++c)
                    if (a.at(r, c) % a.at(t, t) != 0) {
                        w.add_row(t, r, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
    }

    SmithForm out;
    out.rank = t;
    for (int i = 0; i < t; ++i) out.diag.push_back(a.at(i, i));
    if (with_transforms) {
        out.U = std::move(w.U);
        out.Uinv = std::move(w.Uinv);
        out.V = std::move(w.V);
        out.Vinv = std::move(w.Vinv);
    }
    return out;
}

void SparseMat::add(int r, int c, Int v) {
    if (v == 0) return;
    auto& row = row_[static_cast<size_t>(r)];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, std::move(v));
    } else {
        it->second += v;
        if (it->second == 0) row.erase(it);
    }
}

long long SparseMat::nnz() const {
    long long n = 0;
    for (const auto& r : row_) n += static_cast<long long>(r.size());
    return n;
}

SparseMat::Reduced SparseMat::unit_reduce() && {
    std::vector<std::map<int, Int>>& rows = row_;
    // Column index: col -> set of rows with a nonzero there.
    std::vector<std::set<int>> col_rows(static_cast<size_t>(cols_));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : rows[static_cast<size_t>(r)]) col_rows[static_cast<size_t>(c)].insert(r);

    std::set<std::pair<size_t, int>> by_size; // (row nnz, row)
    for (int r = 0; r < rows_; ++r)
        if (!rows[static_cast<size_t>(r)].empty()) by_size.insert({rows[static_cast<size_t>(r)].size(), r});

    std::vector<char> row_dead(static_cast<size_t>(rows_), 0), col_dead(static_cast<size_t>(cols_), 0);
    long long units = 0;

    for (;;) {
        // Shortest row that has a +-1 entry; within it the +-1 column with
        // the fewest rows (least fill).
        int pr = -1, pc = -1;
        for (auto it = by_size.begin(); it != by_size.end(); ++it) {
            int r = it->second;
            if (row_dead[static_cast<size_t>(r)]) continue;
            size_t best_col_sz = 0;
            for (const auto& [c, v] : rows[static_cast<size_t>(r)]) {
                if (v != 1 && v != -1) continue;
                size_t sz = col_rows[static_cast<size_t>(c)].size();
                if (pc < 0 || sz < best_col_sz) { pr = r; pc = c; best_col_sz = sz; }
            }
            if (pr >= 0) break;
        }
        if (pr < 0) break;

        Int s = rows[static_cast<size_t>(pr)].at(pc); // +-1
        auto pivot_row = rows[static_cast<size_t>(pr)];   // copy: we mutate others
        std::vector<int> victims(col_rows[static_cast<size_t>(pc)].begin(), col_rows[static_cast<size_t>(pc)].end());
        for (int r : victims) {
            if (r == pr) continue;
            Int factor = rows[static_cast<size_t>(r)].at(pc) * s; // a / s == a * s for s = +-1
            by_size.erase({rows[static_cast<size_t>(r)].size(), r});
            for (const auto& [c, v] : pivot_row) {
                auto& row = rows[static_cast<size_t>(r)];
                auto it = row.find(c);
                if (it == row.end()) {
                    row.emplace(c, -factor * v);
                    col_rows[static_cast<size_t>(c)].insert(r);
                } else {
                    it->second -= factor * v;
                    if (it->second == 0) {
                        row.erase(it);
                        col_rows[static_cast<size_t>(c)].erase(r);
                    }
                }
            }
            if (!rows[static_cast<size_t>(r)].empty()) by_size.insert({rows[static_cast<size_t>(r)].size(), r});
        }
        // Pivot column is now zero elsewhere; clearing the pivot row with
        // column operations touches nothing else, so just drop both.
        by_size.erase({rows[static_cast<size_t>(pr)].size(), pr});
        for (const auto& [c, v] : rows[static_cast<size_t>(pr)]) col_rows[static_cast<size_t>(c)].erase(pr);
        rows[static_cast<size_t>(pr)].clear();
        row_dead[static_cast<size_t>(pr)] = 1;
        col_dead[static_cast<size_t>(pc)] = 1;
        ++units;
    }

    // Densify the remainder.
    std::vector<int> live_rows, live_cols;
    std::vector<int> col_map(static_cast<size_t>(cols_), -1);
    for (int r = 0; r < rows_; ++r)
        if (!row_dead[static_cast<size_t>(r)] && !rows[static_cast<size_t>(r)].empty()) live_rows.push_back(r);
    for (int c = 0; c < cols_; ++c)
        if (!col_dead[static_cast<size_t>(c)] && !col_rows[static_cast<size_t>(c)].empty()) {
            col_map[static_cast<size_t>(c)] = static_cast<int>(live_cols.size());
            live_cols.push_back(c);
        }
    Mat rest(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (size_t i = 0; i < live_rows.size(); ++i)
        for (const auto& [c, v] : rows[static_cast<size_t>(live_rows[i])])
            rest.at(static_cast<int>(i), col_map[static_cast<size_t>(c)]) = v;
    return {units, std::move(rest)};
}

SparseMat::RankTorsion SparseMat::rank_and_torsion() && {
    Reduced red = std::move(*this).unit_reduce();
    SmithForm snf = smith_normal_form(std::move(red.rest));
    RankTorsion out;
    out.rank = red.unit_pivots + snf.rank;
    out.torsion = snf.torsion();
    return out;
}

} // namespace simploop
