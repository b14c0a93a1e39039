#include "slcoset/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace slcoset {

Perm perm_identity(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Perm perm_inverse(const Perm& p) {
    Perm q;
    q.img.resize(p.size());
    for (int i = 0; i < p.size(); ++i) q.img[p.img[i]] = i;
    return q;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c;
    c.img.resize(a.size());
    for (int i = 0; i < a.size(); ++i) c.img[i] = a.img[b.img[i]];
    return c;
}

int perm_sign(const Perm& p) {
    int sign = 1;
    std::vector<bool> seen(p.size(), false);
    for (int i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p.img[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

bool perm_is_identity(const Perm& p) {
    for (int i = 0; i < p.size(); ++i)
        if (p.img[i] != i) return false;
    return true;
}

bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }

GaussianRational determinant(int n, const std::vector<GaussianRational>& entries) {
    std::vector<GaussianRational> a = entries;
    auto at = [&](int i, int j) -> GaussianRational& { return a[i * n + j]; };
    GaussianRational det(1);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (!at(i, k).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return GaussianRational(0);
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            det = -det;
        }
        det *= at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (at(i, k).is_zero()) continue;
            const GaussianRational f = at(i, k) / at(k, k);
            for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
        }
    }
    return det;
}

SLMatrix::SLMatrix(int n, std::vector<GaussianRational> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ < 1 || entries_.size() != static_cast<size_t>(n_) * n_) {
        throw OpError("ParseError", "matrix entry count does not match dimension");
    }
    if (determinant(n_, entries_) != GaussianRational(1)) {
        throw OpError("NotUnimodular", "matrix determinant is not 1");
    }
}

SLMatrix SLMatrix::identity(int n) {
    std::vector<GaussianRational> e(static_cast<size_t>(n) * n, GaussianRational(0));
    for (int i = 0; i < n; ++i) e[i * n + i] = GaussianRational(1);
    return SLMatrix(n, std::move(e), unchecked_t{});
}

bool SLMatrix::is_upper_unitriangular() const {
    for (int i = 0; i < n_; ++i) {
        if (at(i, i) != GaussianRational(1)) return false;
        for (int j = 0; j < i; ++j)
            if (!at(i, j).is_zero()) return false;
    }
    return true;
}

bool SLMatrix::is_lower_unitriangular() const {
    for (int i = 0; i < n_; ++i) {
        if (at(i, i) != GaussianRational(1)) return false;
        for (int j = i + 1; j < n_; ++j)
            if (!at(i, j).is_zero()) return false;
    }
    return true;
}

bool SLMatrix::is_diagonal() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

SLMatrix operator*(const SLMatrix& a, const SLMatrix& b) {
    const int n = a.size();
    std::vector<GaussianRational> c(static_cast<size_t>(n) * n, GaussianRational(0));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const GaussianRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b.at(k, j).is_zero()) continue;
                c[i * n + j] += aik * b.at(k, j);
            }
        }
    }
    return SLMatrix(n, std::move(c), SLMatrix::unchecked_t{});
}

bool operator==(const SLMatrix& a, const SLMatrix& b) {
    return a.size() == b.size() && a.entries() == b.entries();
}

bool operator!=(const SLMatrix& a, const SLMatrix& b) { return !(a == b); }

SLMatrix inverse(const SLMatrix& g) {
    const int n = g.size();
    std::vector<GaussianRational> a = g.entries();
    std::vector<GaussianRational> inv(static_cast<size_t>(n) * n, GaussianRational(0));
    for (int i = 0; i < n; ++i) inv[i * n + i] = GaussianRational(1);
    auto A = [&](int i, int j) -> GaussianRational& { return a[i * n + j]; };
    auto B = [&](int i, int j) -> GaussianRational& { return inv[i * n + j]; };
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i) {
            if (!A(i, k).is_zero()) {
                pivot = i;
                break;
            }
        }
        // determinant 1 guarantees a pivot
        if (pivot != k) {
            for (int j = 0; j < n; ++j) {
                std::swap(A(k, j), A(pivot, j));
                std::swap(B(k, j), B(pivot, j));
            }
        }
        const GaussianRational d = A(k, k).inverse();
        for (int j = 0; j < n; ++j) {
            A(k, j) *= d;
            B(k, j) *= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || A(i, k).is_zero()) continue;
            const GaussianRational f = A(i, k);
            for (int j = 0; j < n; ++j) {
                A(i, j) -= f * A(k, j);
                B(i, j) -= f * B(k, j);
            }
        }
    }
    return SLMatrix(n, std::move(inv), SLMatrix::unchecked_t{});
}

GaussianRational trace(const SLMatrix& g) {
    GaussianRational t(0);
    for (int i = 0; i < g.size(); ++i) t += g.at(i, i);
    return t;
}

TorusElement make_torus(std::vector<GaussianRational> diag) {
    GaussianRational prod(1);
    for (const auto& d : diag) {
        if (d.is_zero()) throw OpError("NotATorus", "torus entry is zero");
        prod *= d;
    }
    if (prod != GaussianRational(1)) throw OpError("NotATorus", "torus entries do not multiply to 1");
    return TorusElement{std::move(diag)};
}

TorusElement torus_identity(int n) {
    return TorusElement{std::vector<GaussianRational>(n, GaussianRational(1))};
}

TorusElement torus_mul(const TorusElement& a, const TorusElement& b) {
    TorusElement c = a;
    for (int i = 0; i < c.size(); ++i) c.diag[i] *= b.diag[i];
    return c;
}

TorusElement torus_inverse(const TorusElement& t) {
    TorusElement c = t;
    for (auto& d : c.diag) d = d.inverse();
    return c;
}

SLMatrix torus_matrix(const TorusElement& t) {
    const int n = t.size();
    std::vector<GaussianRational> e(static_cast<size_t>(n) * n, GaussianRational(0));
    for (int i = 0; i < n; ++i) e[i * n + i] = t.diag[i];
    return SLMatrix(n, std::move(e), SLMatrix::unchecked_t{});
}

bool operator==(const TorusElement& a, const TorusElement& b) { return a.diag == b.diag; }
bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

WeylLift weyl_lift(const Perm& p) {
    const int n = p.size();
    std::vector<GaussianRational> e(static_cast<size_t>(n) * n, GaussianRational(0));
    for (int i = 1; i < n; ++i) e[p.img[i] * n + i] = GaussianRational(1);
    e[p.img[0] * n + 0] = GaussianRational(perm_sign(p));
    return WeylLift{p, SLMatrix(n, std::move(e), SLMatrix::unchecked_t{})};
}

WeylLift lift_inverse(const WeylLift& w) {
    return WeylLift{perm_inverse(w.perm), inverse(w.mat)};
}

WeylLift lift_mul(const WeylLift& a, const WeylLift& b) {
    return WeylLift{perm_compose(a.perm, b.perm), a.mat * b.mat};
}

bool is_monomial(const SLMatrix& g) {
    const int n = g.size();
    for (int j = 0; j < n; ++j) {
        int nonzero = 0;
        for (int i = 0; i < n; ++i)
            if (!g.at(i, j).is_zero()) ++nonzero;
        if (nonzero != 1) return false;
    }
    for (int i = 0; i < n; ++i) {
        int nonzero = 0;
        for (int j = 0; j < n; ++j)
            if (!g.at(i, j).is_zero()) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

Perm monomial_perm(const SLMatrix& g) {
    if (!is_monomial(g)) throw OpError("NotMonomial", "matrix is not monomial");
    const int n = g.size();
    Perm p;
    p.img.resize(n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (!g.at(i, j).is_zero()) {
                p.img[j] = i;
                break;
            }
        }
    }
    return p;
}

std::vector<GaussianRational> principal_minors(const SLMatrix& g) {
    const int n = g.size();
    std::vector<GaussianRational> minors;
    minors.reserve(n - 1);
    for (int k = 1; k < n; ++k) {
        std::vector<GaussianRational> sub;
        sub.reserve(static_cast<size_t>(k) * k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.push_back(g.at(i, j));
        minors.push_back(determinant(k, sub));
    }
    return minors;
}

namespace {

// Plain LDU elimination; succeeds exactly on the big cell.
bool try_gauss(const SLMatrix& g, GaussFactors* out) {
    const int n = g.size();
    std::vector<GaussianRational> a = g.entries();
    std::vector<GaussianRational> v(static_cast<size_t>(n) * n, GaussianRational(0));
    for (int i = 0; i < n; ++i) v[i * n + i] = GaussianRational(1);
    auto A = [&](int i, int j) -> GaussianRational& { return a[i * n + j]; };
    for (int k = 0; k < n; ++k) {
        if (A(k, k).is_zero()) return false;
        for (int i = k + 1; i < n; ++i) {
            if (A(i, k).is_zero()) continue;
            const GaussianRational f = A(i, k) / A(k, k);
            for (int j = k; j < n; ++j) A(i, j) -= f * A(k, j);
            v[i * n + k] = f;
        }
    }
    if (out == nullptr) return true;
    std::vector<GaussianRational> diag(n);
    std::vector<GaussianRational> u(static_cast<size_t>(n) * n, GaussianRational(0));
    for (int i = 0; i < n; ++i) {
        diag[i] = A(i, i);
        u[i * n + i] = GaussianRational(1);
        for (int j = i + 1; j < n; ++j) u[i * n + j] = A(i, j) / diag[i];
    }
    *out = GaussFactors{SLMatrix(n, std::move(v), SLMatrix::unchecked_t{}),
                        TorusElement{std::move(diag)},
                        SLMatrix(n, std::move(u), SLMatrix::unchecked_t{})};
    return true;
}

} // namespace

bool in_big_cell(const SLMatrix& g) { return try_gauss(g, nullptr); }

bool in_cell_u(const SLMatrix& g) {
    GaussFactors f{SLMatrix::identity(1), torus_identity(1), SLMatrix::identity(1)};
    if (!try_gauss(g, &f)) return false;
    for (const auto& d : f.t.diag)
        if (d != GaussianRational(1)) return false;
    return true;
}

GaussFactors gauss_decompose(const SLMatrix& g) {
    GaussFactors f{SLMatrix::identity(1), torus_identity(1), SLMatrix::identity(1)};
    if (!try_gauss(g, &f)) {
        throw OpError("NotInBigCell", "a leading principal minor vanishes");
    }
    return f;
}

TorusElement kappa(const std::vector<GaussianRational>& a) {
    const int r = static_cast<int>(a.size());
    for (const auto& x : a) {
        if (x.is_zero()) throw OpError("ZeroArgument", "kappa is not regular where a coordinate vanishes");
    }
    std::vector<GaussianRational> diag(r + 1);
    diag[0] = a[0];
    for (int i = 1; i < r; ++i) diag[i] = a[i] / a[i - 1];
    diag[r] = a[r - 1].inverse();
    return TorusElement{std::move(diag)};
}

std::vector<std::vector<long>> kappa_exponents(int n) {
    std::vector<std::vector<long>> z(n, std::vector<long>(n - 1, 0));
    z[0][0] = 1;
    for (int j = 1; j < n - 1; ++j) {
        z[j][j - 1] = -1;
        z[j][j] = 1;
    }
    z[n - 1][n - 2] = -1;
    return z;
}

TorusElement delta_star(const SLMatrix& g) {
    const auto minors = principal_minors(g);
    for (const auto& m : minors) {
        if (m.is_zero()) throw OpError("NotInBigCell", "a leading principal minor vanishes");
    }
    return kappa(minors);
}

BruhatFactors bruhat_decompose(const SLMatrix& g) {
    const int n = g.size();
    std::vector<GaussianRational> a = g.entries();
    std::vector<GaussianRational> u1(static_cast<size_t>(n) * n, GaussianRational(0));
    std::vector<GaussianRational> u2(static_cast<size_t>(n) * n, GaussianRational(0));
    for (int i = 0; i < n; ++i) {
        u1[i * n + i] = GaussianRational(1);
        u2[i * n + i] = GaussianRational(1);
    }
    auto A = [&](int i, int j) -> GaussianRational& { return a[i * n + j]; };
    std::vector<bool> used(n, false);
    Perm perm;
    perm.img.resize(n);
    for (int j = 0; j < n; ++j) {
        int p = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (!used[i] && !A(i, j).is_zero()) {
                p = i;
                break;
            }
        }
        // invertibility guarantees a pivot in every column
        for (int i = 0; i < p; ++i) {
            if (used[i] || A(i, j).is_zero()) continue;
            const GaussianRational f = A(i, j) / A(p, j);
            for (int jj = j; jj < n; ++jj) A(i, jj) -= f * A(p, jj);
            // u1 <- u1 * (I + f E_{i,p})
            for (int r = 0; r < n; ++r) u1[r * n + p] += f * u1[r * n + i];
        }
        for (int jj = j + 1; jj < n; ++jj) {
            if (A(p, jj).is_zero()) continue;
            const GaussianRational f = A(p, jj) / A(p, j);
            for (int i = 0; i < n; ++i) A(i, jj) -= f * A(i, j);
            // u2 <- (I + f E_{j,jj}) * u2
            for (int c = 0; c < n; ++c) u2[j * n + c] += f * u2[jj * n + c];
        }
        used[p] = true;
        perm.img[j] = p;
    }
    WeylLift w = weyl_lift(perm);
    SLMatrix monomial(n, std::move(a), SLMatrix::unchecked_t{});
    const SLMatrix tmat = inverse(w.mat) * monomial;
    std::vector<GaussianRational> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = tmat.at(i, i);
    return BruhatFactors{SLMatrix(n, std::move(u1), SLMatrix::unchecked_t{}), std::move(w),
                         TorusElement{std::move(diag)},
                         SLMatrix(n, std::move(u2), SLMatrix::unchecked_t{})};
}

namespace {

// t m t^{-1}, entrywise.
SLMatrix conj_by_torus(const TorusElement& t, const SLMatrix& m) {
    const int n = m.size();
    std::vector<GaussianRational> e(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[i * n + j] = t.diag[i] * m.at(i, j) / t.diag[j];
    return SLMatrix(n, std::move(e), SLMatrix::unchecked_t{});
}

} // namespace

std::pair<SLMatrix, CellPoint> n_cell_factor(const SLMatrix& g) {
    GaussFactors f{SLMatrix::identity(1), torus_identity(1), SLMatrix::identity(1)};
    if (try_gauss(g, &f)) {
        // g = v t u = t (t^{-1} v t) u
        const SLMatrix m = conj_by_torus(torus_inverse(f.t), f.v) * f.u;
        return {torus_matrix(f.t), matrix_to_point(m)};
    }
    const BruhatFactors b = bruhat_decompose(g);
    // g = u1 w t u2 = (w t) (t^{-1} (w^{-1} u1 w) t) u2
    const SLMatrix v = inverse(b.w.mat) * b.u1 * b.w.mat;
    const SLMatrix m = conj_by_torus(torus_inverse(b.t), v) * b.u2;
    return {b.w.mat * torus_matrix(b.t), matrix_to_point(m)};
}

bool operator==(const CellPoint& a, const CellPoint& b) {
    return a.n == b.n && a.lower == b.lower && a.upper == b.upper;
}

bool operator!=(const CellPoint& a, const CellPoint& b) { return !(a == b); }

CellPoint cell_origin(int n) {
    const size_t m = static_cast<size_t>(n) * (n - 1) / 2;
    return CellPoint{n, std::vector<GaussianRational>(m, GaussianRational(0)),
                     std::vector<GaussianRational>(m, GaussianRational(0))};
}

SLMatrix point_to_matrix(const CellPoint& p) {
    const int n = p.n;
    std::vector<GaussianRational> v(static_cast<size_t>(n) * n, GaussianRational(0));
    std::vector<GaussianRational> u(static_cast<size_t>(n) * n, GaussianRational(0));
    size_t lo = 0;
    size_t up = 0;
    for (int i = 0; i < n; ++i) {
        v[i * n + i] = GaussianRational(1);
        u[i * n + i] = GaussianRational(1);
    }
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) v[i * n + j] = p.lower[lo++];
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j) u[i * n + j] = p.upper[up++];
    return SLMatrix(n, std::move(v), SLMatrix::unchecked_t{}) *
           SLMatrix(n, std::move(u), SLMatrix::unchecked_t{});
}

CellPoint matrix_to_point(const SLMatrix& g) {
    GaussFactors f{SLMatrix::identity(1), torus_identity(1), SLMatrix::identity(1)};
    if (!try_gauss(g, &f)) throw OpError("NotInCellU", "a leading principal minor vanishes");
    for (const auto& d : f.t.diag) {
        if (d != GaussianRational(1)) throw OpError("NotInCellU", "a leading principal minor is not 1");
    }
    const int n = g.size();
    CellPoint p;
    p.n = n;
    p.lower.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    p.upper.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) p.lower.push_back(f.v.at(i, j));
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j) p.upper.push_back(f.u.at(i, j));
    return p;
}

} // namespace slcoset
