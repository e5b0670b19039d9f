#include "gdes/spectral.hpp"

#include "gdes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gdes {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagTarget = 1e-12; // relative to ||A||_F

double frobenius_norm(const Matrix& a) {
    double acc = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * a(i, j);
    return std::sqrt(acc);
}

double offdiag_norm(const Matrix& a) {
    double acc = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) acc += a(i, j) * a(i, j);
    return std::sqrt(acc);
}

// Rotation zeroing A(p,q); the smaller-angle root keeps the transform stable.
void schur2(double app, double aqq, double apq, double& c, double& s) {
    if (apq == 0.0) {
        c = 1.0;
        s = 0.0;
        return;
    }
    const double tau = (aqq - app) / (2.0 * apq);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    c = 1.0 / std::sqrt(1.0 + t * t);
    s = t * c;
}

} // namespace

NormalizedAdjacency normalized_adjacency(const Graph& g) {
    auto d = regular_degree(g);
    if (!d) throw invalid_input("normalized adjacency: graph is not regular");
    if (*d == 0) throw invalid_input("normalized adjacency: degree 0 (edgeless graph)");
    if (!is_connected(g)) throw disconnected_error("normalized adjacency: graph is not connected");
    NormalizedAdjacency a;
    a.n = g.vertex_count();
    a.degree = *d;
    a.entries = Matrix(a.n, a.n);
    const double w = 1.0 / *d;
    for (auto [u, v] : g.edges()) {
        a.entries(u, v) = w;
        a.entries(v, u) = w;
    }
    return a;
}

double rayleigh(const NormalizedAdjacency& a, const std::vector<double>& f, const std::vector<double>& g) {
    if (static_cast<int>(f.size()) != a.n || static_cast<int>(g.size()) != a.n)
        throw invalid_input("rayleigh: dimension mismatch");
    return dot(a.apply(f), g);
}

EigenSystem jacobi_cyclic(Matrix a) {
    const int n = a.rows();
    Matrix v = Matrix::identity(n);
    const double target = kOffDiagTarget * frobenius_norm(a);
    int sweep = 0;
    while (offdiag_norm(a) > target) {
        if (++sweep > kMaxSweeps) throw spectral_error("jacobi (cyclic): sweep cap exceeded");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double c, s;
                schur2(a(p, p), a(q, q), a(p, q), c, s);
                if (s == 0.0) continue;
                const double app = a(p, p), aqq = a(q, q), apq = a(p, q);
                a(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                a(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                a(p, q) = a(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = a(p, k) = c * akp - s * akq;
                    a(k, q) = a(q, k) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    EigenSystem out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a(i, i);
    out.vectors = std::move(v);
    return out;
}

EigenSystem jacobi_round_robin(Matrix a, Exec exec) {
    const int n = a.rows();
    Matrix v = Matrix::identity(n);
    const double target = kOffDiagTarget * frobenius_norm(a);

    // Tournament schedule over m players (phantom index n when n is odd):
    // m-1 rounds of m/2 disjoint pairs cover every index pair exactly once.
    // The schedule is data-independent, so it is computed up front, together
    // with each vertex's partner per round (for pivot zeroing inside the
    // column pass).
    const int m = (n % 2 == 0) ? n : n + 1;
    const int rounds = m - 1;
    std::vector<std::vector<std::pair<int, int>>> schedule(rounds);
    std::vector<std::vector<int>> pair_of(rounds, std::vector<int>(n, -1));
    for (int r = 0; r < rounds; ++r) {
        auto add = [&](int p, int q) {
            if (p < n && q < n) {
                pair_of[r][p] = pair_of[r][q] = static_cast<int>(schedule[r].size());
                schedule[r].emplace_back(std::min(p, q), std::max(p, q));
            }
        };
        add(m - 1, r);
        for (int i = 1; i < m / 2; ++i) add((r + i) % (m - 1), (r - i + (m - 1)) % (m - 1));
    }
    std::vector<double> cs(m / 2), ss(m / 2);

#ifdef _OPENMP
    const bool par = (exec == Exec::Parallel) && n >= 64;
#else
    (void)exec;
    const bool par = false;
#endif

    int sweep = 0;
    while (offdiag_norm(a) > target) {
        if (++sweep > kMaxSweeps) throw spectral_error("jacobi (round robin): sweep cap exceeded");
        // One parallel region per sweep, two omp for barriers per round.
        // Every iteration writes only rows or entries it owns, so the result
        // is bit-identical for any thread count.
#ifdef _OPENMP
#pragma omp parallel if (par)
#endif
        for (int r = 0; r < rounds; ++r) {
            const auto& pairs = schedule[r];
            const int live = static_cast<int>(pairs.size());

            // A <- J^T A. The angle of pair i depends only on rows p_i, q_i,
            // which no other pair touches, so it is computed in place.
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (int i = 0; i < live; ++i) {
                const int p = pairs[i].first, q = pairs[i].second;
                schur2(a(p, p), a(q, q), a(p, q), cs[i], ss[i]);
                if (ss[i] == 0.0) continue;
                double* rp = a.row(p);
                double* rq = a.row(q);
                const double c = cs[i], s = ss[i];
                for (int j = 0; j < n; ++j) {
                    const double x = rp[j], y = rq[j];
                    rp[j] = c * x - s * y;
                    rq[j] = s * x + c * y;
                }
            }
            // A <- A J and V <- V J, split over matrix rows: each row is
            // visited once and every pair's column mix is applied inside it.
            // The 2x2 transform zeroes the pivot of the pair owning row k.
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (int k = 0; k < 2 * n; ++k) {
                double* row = k < n ? a.row(k) : v.row(k - n);
                for (int i = 0; i < live; ++i) {
                    if (ss[i] == 0.0) continue;
                    const double c = cs[i], s = ss[i];
                    const double x = row[pairs[i].first], y = row[pairs[i].second];
                    row[pairs[i].first] = c * x - s * y;
                    row[pairs[i].second] = s * x + c * y;
                }
                if (k < n) {
                    const int i = pair_of[r][k];
                    if (i >= 0 && ss[i] != 0.0) row[pairs[i].first == k ? pairs[i].second : pairs[i].first] = 0.0;
                }
            }
        }
    }
    EigenSystem out;
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a(i, i);
    out.vectors = std::move(v);
    return out;
}

SpectralDecomposition group_eigensystem(int n, const std::vector<double>& values, const Matrix& vectors, double tau) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (values[i] != values[j]) return values[i] > values[j];
        return i < j;
    });

    SpectralDecomposition dec;
    dec.n_ = n;
    dec.tau_ = tau;
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && values[order[end - 1]] - values[order[end]] <= tau) ++end;

        Eigenspace space;
        const int mult = end - start;
        space.basis = Matrix(n, mult);
        double sum = 0.0;
        for (int c = 0; c < mult; ++c) {
            const int col = order[start + c];
            sum += values[col];
            for (int r = 0; r < n; ++r) space.basis(r, c) = vectors(r, col);
        }
        space.eigenvalue = sum / mult;
        space.spread = values[order[start]] - values[order[end - 1]];
        if (space.spread > tau / 10.0)
            dec.warnings_.push_back("eigenvalue group near " + std::to_string(space.eigenvalue) +
                                    " has internal spread " + std::to_string(space.spread) +
                                    " > tau/10; distinct eigenvalues may have been merged");

        // Re-orthonormalize within the group (modified Gram-Schmidt); Jacobi
        // vectors are already orthonormal, this removes residual drift.
        for (int c = 0; c < mult; ++c) {
            for (int prev = 0; prev < c; ++prev) {
                double proj = 0.0;
                for (int r = 0; r < n; ++r) proj += space.basis(r, c) * space.basis(r, prev);
                for (int r = 0; r < n; ++r) space.basis(r, c) -= proj * space.basis(r, prev);
            }
            double nrm = 0.0;
            for (int r = 0; r < n; ++r) nrm += space.basis(r, c) * space.basis(r, c);
            nrm = std::sqrt(nrm);
            if (nrm < 1e-8) throw spectral_error("eigenspace basis degenerated during re-orthonormalization");
            for (int r = 0; r < n; ++r) space.basis(r, c) /= nrm;
        }
        dec.spaces_.push_back(std::move(space));
        start = end;
    }
    return dec;
}

Projection SpectralDecomposition::project(const std::vector<double>& f, int space_index) const {
    if (space_index < 0 || space_index >= space_count())
        throw invalid_input("project: eigenspace index out of range");
    if (static_cast<int>(f.size()) != n_) throw invalid_input("project: dimension mismatch");
    const Eigenspace& space = spaces_[space_index];
    Projection out;
    out.eigenvalue = space.eigenvalue;
    out.component.assign(n_, 0.0);
    for (int c = 0; c < space.multiplicity(); ++c) {
        double coeff = 0.0;
        for (int r = 0; r < n_; ++r) coeff += space.basis(r, c) * f[r];
        out.squared_norm += coeff * coeff;
        for (int r = 0; r < n_; ++r) out.component[r] += coeff * space.basis(r, c);
    }
    return out;
}

std::vector<double> SpectralDecomposition::projection_norms(const std::vector<double>& f) const {
    if (static_cast<int>(f.size()) != n_) throw invalid_input("projection_norms: dimension mismatch");
    std::vector<double> out(spaces_.size(), 0.0);
    for (size_t i = 0; i < spaces_.size(); ++i) {
        const Eigenspace& space = spaces_[i];
        for (int c = 0; c < space.multiplicity(); ++c) {
            double coeff = 0.0;
            for (int r = 0; r < n_; ++r) coeff += space.basis(r, c) * f[r];
            out[i] += coeff * coeff;
        }
    }
    return out;
}

SpectralDecomposition eigendecompose(const Matrix& a, const SpectralOptions& opts) {
    if (a.rows() != a.cols()) throw invalid_input("eigendecompose: matrix is not square");
    for (int i = 0; i < a.rows(); ++i)
        for (int j = i + 1; j < a.cols(); ++j)
            if (std::abs(a(i, j) - a(j, i)) > 1e-12) throw invalid_input("eigendecompose: matrix is not symmetric");
    EigenSystem sys = jacobi_round_robin(a, opts.exec);
    return group_eigensystem(a.rows(), sys.values, sys.vectors, opts.tau);
}

SpectralDecomposition eigendecompose(const NormalizedAdjacency& a, const SpectralOptions& opts) {
    return eigendecompose(a.entries, opts);
}

SpectralDecomposition decompose_graph(const Graph& g, const SpectralOptions& opts) {
    return eigendecompose(normalized_adjacency(g), opts);
}

} // namespace gdes
