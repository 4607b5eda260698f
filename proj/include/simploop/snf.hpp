#ifndef SIMPLOOP_SNF_HPP
#define SIMPLOOP_SNF_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace simploop {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    static Mat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    Mat operator*(const Mat& o) const;
    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// U * A * V = D with U, V unimodular and D diagonal with the divisibility
/// chain d1 | d2 | ... (all positive).  Transforms and their inverses are
/// tracked only when requested.
struct SmithForm {
    std::vector<Int> diag; // nonzero invariant factors, d1 | d2 | ...
    int rank = 0;
    Mat U, Uinv, V, Vinv;  // empty unless with_transforms

    /// Invariant factors > 1, i.e. the torsion coefficients.
    std::vector<Int> torsion() const {
        std::vector<Int> t;
        for (const Int& d : diag)
            if (d > 1) t.push_back(d);
        return t;
    }
};

SmithForm smith_normal_form(Mat a, bool with_transforms = false);

/// Sparse integer matrix for the unit-pivot pre-reduction.  Boundary
/// matrices are assembled here; rank and torsion computations peel off
/// +-1 pivots sparsely and hand the small remainder to the dense SNF.
class SparseMat {
public:
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), row_(static_cast<size_t>(rows)) {}
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    void add(int r, int c, Int v); // accumulate, drop zeros
    long long nnz() const;

    struct Reduced {
        long long unit_pivots = 0;
        Mat rest; // remainder with no +-1 entries
    };
    /// Eliminate +-1 pivots with row operations (unimodular), dropping the
    /// pivot row and column each time.
    Reduced unit_reduce() &&;

    /// rank and invariant factors of the whole matrix.
    struct RankTorsion {
        long long rank = 0;
        std::vector<Int> torsion;
    };
    RankTorsion rank_and_torsion() &&;

private:
    int rows_, cols_;
    std::vector<std::map<int, Int>> row_;
};

} // namespace simploop

#endif
