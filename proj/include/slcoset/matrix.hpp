#pragma once

#include <utility>
#include <vector>

#include "slcoset/rational.hpp"

namespace slcoset {

// Permutation of {0, ..., n-1}; img[i] is the image of i.
struct Perm {
    std::vector<int> img;

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }
};

Perm perm_identity(int n);
Perm perm_inverse(const Perm& p);
// (a * b)(i) = a(b(i)); matches matrix multiplication of the lifts.
Perm perm_compose(const Perm& a, const Perm& b);
int perm_sign(const Perm& p);
bool perm_is_identity(const Perm& p);
bool operator==(const Perm& a, const Perm& b);

// n x n matrix over Q(i) with determinant exactly 1.
class SLMatrix {
public:
    SLMatrix(int n, std::vector<GaussianRational> entries); // throws NotUnimodular
    static SLMatrix identity(int n);

    int size() const { return n_; }
    const GaussianRational& at(int i, int j) const { return entries_[i * n_ + j]; }
    const std::vector<GaussianRational>& entries() const { return entries_; }

    bool is_upper_unitriangular() const;
    bool is_lower_unitriangular() const;
    bool is_diagonal() const;

    // Trusted constructor for matrices that are SL_n by construction
    // (products, unitriangular builders, signed permutations).
    struct unchecked_t {};
    SLMatrix(int n, std::vector<GaussianRational> entries, unchecked_t)
        : n_(n), entries_(std::move(entries)) {}

private:
    int n_;
    std::vector<GaussianRational> entries_;
};

SLMatrix operator*(const SLMatrix& a, const SLMatrix& b);
bool operator==(const SLMatrix& a, const SLMatrix& b);
bool operator!=(const SLMatrix& a, const SLMatrix& b);
SLMatrix inverse(const SLMatrix& g);
GaussianRational trace(const SLMatrix& g);

GaussianRational determinant(int n, const std::vector<GaussianRational>& entries);

// diag(t_1, ..., t_n), all nonzero, product 1.
struct TorusElement {
    std::vector<GaussianRational> diag;

    int size() const { return static_cast<int>(diag.size()); }
};

TorusElement make_torus(std::vector<GaussianRational> diag); // throws NotATorus
TorusElement torus_identity(int n);
TorusElement torus_mul(const TorusElement& a, const TorusElement& b);
TorusElement torus_inverse(const TorusElement& t);
SLMatrix torus_matrix(const TorusElement& t);
bool operator==(const TorusElement& a, const TorusElement& b);
bool operator!=(const TorusElement& a, const TorusElement& b);

// Signed permutation matrix in N together with the underlying permutation.
struct WeylLift {
    Perm perm;
    SLMatrix mat;
};

// The fixed lift convention used by every module: entry (perm(i), i) = 1 for
// i > 0 and entry (perm(0), 0) = sign(perm), giving determinant 1.
WeylLift weyl_lift(const Perm& p);
WeylLift lift_inverse(const WeylLift& w);
WeylLift lift_mul(const WeylLift& a, const WeylLift& b);

bool is_monomial(const SLMatrix& g);
// For monomial g, the permutation with g[perm(j)][j] != 0.
Perm monomial_perm(const SLMatrix& g);

// g = v t u with v lower unitriangular, u upper unitriangular.
struct GaussFactors {
    SLMatrix v;
    TorusElement t;
    SLMatrix u;
};

// g = u1 * w.mat * t * u2 with u1 in U_w and u2 upper unitriangular.
struct BruhatFactors {
    SLMatrix u1;
    WeylLift w;
    TorusElement t;
    SLMatrix u2;
};

// Coordinates of a point of the slice U^- U: the strict-lower entries of v
// and strict-upper entries of u, both in row-major order.
struct CellPoint {
    int n = 0;
    std::vector<GaussianRational> lower;
    std::vector<GaussianRational> upper;
};

bool operator==(const CellPoint& a, const CellPoint& b);
bool operator!=(const CellPoint& a, const CellPoint& b);
CellPoint cell_origin(int n);

// Leading principal minors delta_1, ..., delta_{n-1}.
std::vector<GaussianRational> principal_minors(const SLMatrix& g);
// All leading minors nonzero: g lies in the big Gauss cell U^- T U.
bool in_big_cell(const SLMatrix& g);
// All leading minors equal 1: g lies in the slice U^- U.
bool in_cell_u(const SLMatrix& g);

GaussFactors gauss_decompose(const SLMatrix& g); // throws NotInBigCell

// Monomial section of the minor map: kappa(delta(t)) = t. For SL_n this is
// (a_1, a_2/a_1, ..., a_{n-1}/a_{n-2}, 1/a_{n-1}).
TorusElement kappa(const std::vector<GaussianRational>& a); // throws ZeroArgument
// Exponent matrix z (n rows, n-1 columns) of the kappa monomials; every
// column sums to zero.
std::vector<std::vector<long>> kappa_exponents(int n);

// kappa after the minors; equals the torus factor of the Gauss decomposition.
TorusElement delta_star(const SLMatrix& g); // throws NotInBigCell

BruhatFactors bruhat_decompose(const SLMatrix& g);

// One-sided N-factorization g = n1 * u with u in U^- U; the right N-factor
// is normalized away.
std::pair<SLMatrix, CellPoint> n_cell_factor(const SLMatrix& g);

SLMatrix point_to_matrix(const CellPoint& p);
CellPoint matrix_to_point(const SLMatrix& g); // throws NotInCellU

} // namespace slcoset
