#include <doctest.h>

#include <random>

#include "simploop/snf.hpp"

using namespace simploop;

namespace {

Mat from_rows(const std::vector<std::vector<int>>& rows) {
    Mat m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
    return m;
}

Mat diag_mat(int rows, int cols, const std::vector<Int>& d) {
    Mat m(rows, cols);
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

} // namespace

TEST_CASE("smith normal form on known matrices") {
    auto s1 = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(s1.rank == 2);
    CHECK(s1.diag == std::vector<Int>{2, 4});

    auto s2 = smith_normal_form(from_rows({{1, 0}, {0, 1}}));
    CHECK(s2.diag == std::vector<Int>{1, 1});

    auto s3 = smith_normal_form(Mat(3, 2));
    CHECK(s3.rank == 0);

    // cyclic group of order 2 from a surface-style relator matrix
    auto s4 = smith_normal_form(from_rows({{2}}));
    CHECK(s4.torsion() == std::vector<Int>{2});
}

TEST_CASE("smith transforms are unimodular and reconstruct the form") {
    std::mt19937 eng(99);
    std::uniform_int_distribution<int> dim(1, 5), val(-4, 4);
    for (int t = 0; t < 40; ++t) {
        int r = dim(eng), c = dim(eng);
        Mat a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a.at(i, j) = val(eng);
        Mat original = a;
        auto s = smith_normal_form(a, true);
        CHECK(s.U * original * s.V == diag_mat(r, c, s.diag));
        CHECK(s.U * s.Uinv == Mat::identity(r));
        CHECK(s.V * s.Vinv == Mat::identity(c));
        for (size_t i = 0; i + 1 < s.diag.size(); ++i) CHECK(s.diag[i + 1] % s.diag[i] == 0);
        for (const Int& d : s.diag) CHECK(d > 0);
    }
}

TEST_CASE("sparse unit reduction agrees with the dense form") {
    std::mt19937 eng(7);
    std::uniform_int_distribution<int> dim(1, 7), val(-3, 3), fill(0, 3);
    for (int t = 0; t < 40; ++t) {
        int r = dim(eng), c = dim(eng);
        Mat dense(r, c);
        SparseMat sparse(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                if (fill(eng) != 0) continue; // keep it sparse
                int v = val(eng);
                dense.at(i, j) = v;
                sparse.add(i, j, v);
            }
        auto want = smith_normal_form(dense);
        auto got = std::move(sparse).rank_and_torsion();
        CHECK(got.rank == want.rank);
        CHECK(got.torsion == want.torsion());
    }
}
