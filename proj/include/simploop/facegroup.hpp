#ifndef SIMPLOOP_FACEGROUP_HPP
#define SIMPLOOP_FACEGROUP_HPP

#include <functional>
#include <optional>

#include "simploop/omega.hpp"
#include "simploop/stone.hpp"

namespace simploop {

/// Grid map from a rectangle to X, constant at the basepoint on the
/// boundary, with every unit square a simplex.  Stored row-major: value
/// at column i (position along the loop) and row j (time) is
/// grid[j*(m+1)+i].  The categorical-product simplices are generated by
/// the unit squares, so the square condition is the whole simpliciality
/// requirement.
struct FaceSphere {
    const SimplicialComplex* cx = nullptr;
    int m = 0, n = 0;
    std::vector<int> grid;

    int at(int i, int j) const { return grid.at(static_cast<size_t>(j) * (m + 1) + i); }
    int& at(int i, int j) { return grid.at(static_cast<size_t>(j) * (m + 1) + i); }
    bool operator==(const FaceSphere& o) const {
        return cx == o.cx && m == o.m && n == o.n && grid == o.grid;
    }
};

struct SphereCheck {
    bool ok = true;
    int bad_i = -1, bad_j = -1;
    std::string reason;
};

SphereCheck face_sphere_check(const SimplicialComplex& x, int m, int n, std::span<const int> grid);
FaceSphere validate_face_sphere(const SimplicialComplex& x, int m, int n, std::vector<int> grid);
/// Rows given as label lists, outermost = rows (time).
FaceSphere sphere_from_rows(const SimplicialComplex& x,
                            const std::vector<std::vector<std::string>>& rows);
FaceSphere constant_sphere(const SimplicialComplex& x, int m, int n);
FaceSphere transpose_sphere(const FaceSphere& f);

struct SphereContiguity {
    bool ok = true;
    int bad_i = -1, bad_j = -1; // unit square whose union is not a simplex
};
/// Checked on maximal cells (unit squares): the union of the two images
/// of each square must be a simplex.
SphereContiguity fs_contiguity_check(const FaceSphere& f, const FaceSphere& g);
bool fs_contiguous(const FaceSphere& f, const FaceSphere& g);

FaceSphere fs_repeat_col(const FaceSphere& f, int i); // single repeat of column i
FaceSphere fs_repeat_row(const FaceSphere& f, int j);
/// f composed with (alpha_I x alpha_J): folds of single repeats, column
/// indices first.  Bounds as for loop extensions, per factor.
FaceSphere fs_repeat(const FaceSphere& f, const std::vector<int>& cols, const std::vector<int>& rows);
FaceSphere fs_trivial_extend(const FaceSphere& f, int r, int s);

/// Block-diagonal product of sizes (m+r+1) x (n+s+1).
FaceSphere fs_product(const FaceSphere& f, const FaceSphere& g);

/// Rows of the sphere as based loops in X (length m each, n+1 of them).
std::vector<EdgeLoop> sphere_rows(const FaceSphere& f);
/// The loop through the rows, as skeleton ids (stratum m, based at the
/// constant loop of length m).
OmegaPath fs_to_omega_loop(const FaceSphere& f, const OmegaSkeleton& s);
/// Inverse direction: rows from the loop's vertices; all must sit in one
/// stratum and the ends must be the constant loop.
FaceSphere omega_loop_to_fs(std::span<const EdgeLoop> gamma);
FaceSphere omega_loop_to_fs(const OmegaSkeleton& s, const OmegaPath& gamma);

/// The based loop in the loop space assigned to a sphere: constant-loop
/// ramp up, the rows, ramp back down; length 2m+n.
std::vector<EdgeLoop> phi_loops(const FaceSphere& f);
OmegaPath phi_path(const FaceSphere& f, const OmegaSkeleton& s);

/// Pushforward of the sphere's fundamental class along the grid map,
/// evaluated in the homology classifier (dimension 2).  Constant on
/// contiguity classes and trivial extensions; a nonzero class certifies
/// the sphere is not equivalent to a constant.
CycleClassifier::Class sphere_class(const CycleClassifier& h2, const FaceSphere& f);

enum class SphereEquivStatus { Found, ExhaustedNotFound, BudgetNotFound, DistinctClass };

struct SphereSearchCaps {
    int max_m = -1, max_n = -1;   // defaults: dims + 2
    long long budget = 100000;
};

struct SphereEquivResult {
    SphereEquivStatus status = SphereEquivStatus::BudgetNotFound;
    int common_m = 0, common_n = 0;
    std::vector<FaceSphere> chain; // contiguity chain at the common size
    long long dequeued = 0;
};

/// Semi-decision of extension-contiguity equivalence of spheres: same-size
/// both within the caps and search the contiguity graph rel boundary.
/// With a classifier, distinct homology classes give a definite negative.
SphereEquivResult fs_equivalent(const FaceSphere& f, const FaceSphere& g, SphereSearchCaps caps = {},
                                const CycleClassifier* h2 = nullptr);

/// Certificate from phi(f) to phi of the single-column trivial extension
/// of f (two repeats of the stratum peak plus one validated move).
OmegaPathCert phi_column_extension_cert(const FaceSphere& f, const OmegaSkeleton& s);

/// Constructive certificate that phi is multiplicative: a validated move
/// sequence from the concatenation phi(f).phi(g) to phi(f.g).
OmegaPathCert phi_product_certificate(const FaceSphere& f, const FaceSphere& g, const OmegaSkeleton& s);

} // namespace simploop

#endif
