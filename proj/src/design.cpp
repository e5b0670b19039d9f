#include "gdes/design.hpp"

#include "gdes/bounds.hpp"
#include "gdes/errors.hpp"

#include <algorithm>
#include <cmath>

namespace gdes {

namespace {

void check_subset(const Graph& g, const VertexSet& w) {
    if (w.host_n() != g.vertex_count()) throw invalid_input("design: subset indexes a different graph");
    if (!w.is_proper_nonempty())
        throw invalid_input("design: subset must be a proper nonempty subset of the vertices");
}

void check_decomposition(const Graph& g, const SpectralDecomposition& dec) {
    if (dec.n() != g.vertex_count()) throw invalid_input("design: decomposition size mismatch");
    const Eigenspace& top = dec.spaces().front();
    if (std::abs(top.eigenvalue - 1.0) > 1e-6 || top.multiplicity() != 1)
        throw spectral_error("design: top eigenspace is not the simple constant eigenspace "
                             "(graph disconnected or decomposition invalid)");
}

} // namespace

double boundary_ratio(const Graph& g, const VertexSet& s) {
    auto d = regular_degree(g);
    if (!d || *d == 0) throw invalid_input("boundary ratio: graph must be regular with positive degree");
    if (!s.is_proper_nonempty()) throw invalid_input("boundary ratio: subset must be proper and nonempty");
    const long long n = g.vertex_count();
    const long long size = s.size();
    const long long cut = edge_boundary(g, s);
    return static_cast<double>(n * cut) / static_cast<double>(*d * size * (n - size));
}

DesignReport design_order(const Graph& g, const SpectralDecomposition& dec, const VertexSet& w, double eps) {
    check_subset(g, w);
    check_decomposition(g, dec);
    auto norms = dec.projection_norms(w.indicator());
    DesignReport report;
    report.subset = w;
    report.activity_threshold = eps;
    for (size_t i = 1; i < norms.size(); ++i)
        if (norms[i] > eps * w.size())
            report.active_eigenvalues.emplace_back(dec.spaces()[i].eigenvalue, norms[i]);
    report.order = static_cast<int>(report.active_eigenvalues.size());
    report.satisfied_count = g.vertex_count() - report.order;
    return report;
}

DesignReport design_order(const Graph& g, const VertexSet& w, double eps) {
    return design_order(g, decompose_graph(g), w, eps);
}

bool is_extremal(const Graph& g, const SpectralDecomposition& dec, const VertexSet& w, double eps) {
    return design_order(g, dec, w, eps).order == 1;
}

bool is_extremal(const Graph& g, const VertexSet& w, double eps) {
    return design_order(g, w, eps).order == 1;
}

std::vector<DesignReport> design_orders(const Graph& g, const SpectralDecomposition& dec,
                                        const std::vector<VertexSet>& subsets, double eps, Exec exec) {
    check_decomposition(g, dec);
    std::vector<DesignReport> out(subsets.size());
#ifdef _OPENMP
    const bool par = exec == Exec::Parallel && subsets.size() > 1;
#pragma omp parallel for if (par) schedule(dynamic)
#else
    (void)exec;
#endif
    for (long long i = 0; i < static_cast<long long>(subsets.size()); ++i)
        out[i] = design_order(g, dec, subsets[i], eps);
    return out;
}

WitnessBasis witness_basis(const Graph& g, const SpectralDecomposition& dec, const VertexSet& w, double eps) {
    DesignReport report = design_order(g, dec, w, eps);
    const int n = g.vertex_count();
    const auto ind = w.indicator();

    WitnessBasis out;
    out.order = report.order;
    out.basis = Matrix(n, n);
    out.eigenvalues.resize(n);
    int col = 0;

    auto set_column = [&](const std::vector<double>& v, double lambda) {
        for (int r = 0; r < n; ++r) out.basis(r, col) = v[r];
        out.eigenvalues[col] = lambda;
        ++col;
    };

    // Constant first, oriented positively.
    {
        std::vector<double> c = dec.spaces().front().basis.column(0);
        if (c[0] < 0.0)
            for (double& x : c) x = -x;
        set_column(c, dec.spaces().front().eigenvalue);
    }

    std::vector<bool> active(dec.space_count(), false);
    auto norms = dec.projection_norms(ind);
    for (int i = 1; i < dec.space_count(); ++i) active[i] = norms[i] > eps * w.size();

    // Normalized active projections, in group order.
    std::vector<std::vector<double>> unit_projections(dec.space_count());
    for (int i = 1; i < dec.space_count(); ++i) {
        if (!active[i]) continue;
        Projection p = dec.project(ind, i);
        const double nrm = std::sqrt(p.squared_norm);
        for (double& x : p.component) x /= nrm;
        unit_projections[i] = p.component;
        set_column(unit_projections[i], dec.spaces()[i].eigenvalue);
    }

    // Complete each eigenspace. Active spaces contribute mult-1 vectors
    // orthogonal to the projection, chosen by largest-residual pivoting.
    for (int i = 1; i < dec.space_count(); ++i) {
        const Eigenspace& space = dec.spaces()[i];
        const int mult = space.multiplicity();
        if (!active[i]) {
            for (int c = 0; c < mult; ++c) set_column(space.basis.column(c), space.eigenvalue);
            continue;
        }
        std::vector<std::vector<double>> pool(mult);
        for (int c = 0; c < mult; ++c) pool[c] = space.basis.column(c);
        std::vector<std::vector<double>> kept{unit_projections[i]};
        for (int take = 0; take < mult - 1; ++take) {
            // Orthogonalize the pool against everything kept so far, then
            // keep the candidate with the largest residual.
            int best = -1;
            double best_norm = -1.0;
            for (size_t c = 0; c < pool.size(); ++c) {
                std::vector<double> r = pool[c];
                for (const auto& k : kept) {
                    const double proj = dot(r, k);
                    for (int t = 0; t < n; ++t) r[t] -= proj * k[t];
                }
                const double nrm = std::sqrt(dot(r, r));
                if (nrm > best_norm) {
                    best_norm = nrm;
                    best = static_cast<int>(c);
                    pool[c] = std::move(r);
                } else {
                    pool[c] = std::move(r);
                }
            }
            if (best_norm < 1e-8) throw spectral_error("witness basis: eigenspace completion degenerated");
            std::vector<double> chosen = pool[best];
            for (double& x : chosen) x /= best_norm;
            set_column(chosen, space.eigenvalue);
            kept.push_back(std::move(chosen));
            pool.erase(pool.begin() + best);
        }
    }

    // Per-column gap between the global mean and the subset mean.
    out.mean_gaps.resize(n);
    for (int c = 0; c < n; ++c) {
        double mean_v = 0.0, mean_w = 0.0;
        for (int r = 0; r < n; ++r) mean_v += out.basis(r, c);
        mean_v /= n;
        for (int r : w.members()) mean_w += out.basis(r, c);
        mean_w /= w.size();
        out.mean_gaps[c] = std::abs(mean_v - mean_w);
    }
    return out;
}

WitnessBasis witness_basis(const Graph& g, const VertexSet& w, double eps) {
    return witness_basis(g, decompose_graph(g), w, eps);
}

ExtremalCertificate extremal_from_hoffman(const Graph& g, const SpectralDecomposition& dec, const VertexSet& s,
                                          double eps, double tol) {
    check_subset(g, s);
    check_decomposition(g, dec);
    if (!is_independent(g, s)) throw invalid_input("hoffman certificate: set is not independent");
    const double bound = hoffman_bound(dec);
    const double ratio = static_cast<double>(s.size()) / g.vertex_count();
    if (std::abs(ratio - bound) > tol)
        throw invalid_input("hoffman certificate: |S|/|V| does not meet the Hoffman bound (gap " +
                            std::to_string(ratio - bound) + ")");

    ExtremalCertificate cert;
    cert.kind = "hoffman";
    cert.report = design_order(g, dec, s, eps);
    cert.reference_eigenvalue = dec.min_eigenvalue();
    cert.sharpness_gap = std::abs(ratio - bound);
    if (cert.report.order != 1)
        throw certification_error("hoffman certificate: sharp independent set has order " +
                                  std::to_string(cert.report.order) + ", expected 1");
    cert.active_eigenvalue = cert.report.active_eigenvalues.front().first;
    if (std::abs(cert.active_eigenvalue - cert.reference_eigenvalue) > dec.grouping_tolerance())
        throw certification_error("hoffman certificate: active eigenvalue is not the minimum eigenvalue");
    return cert;
}

ExtremalCertificate extremal_from_hoffman(const Graph& g, const VertexSet& s, double eps, double tol) {
    return extremal_from_hoffman(g, decompose_graph(g), s, eps, tol);
}

ExtremalCertificate extremal_from_cheeger(const Graph& g, const SpectralDecomposition& dec, const VertexSet& s,
                                          double eps, double tol) {
    check_subset(g, s);
    check_decomposition(g, dec);
    const double ratio = boundary_ratio(g, s);
    const double target = 1.0 - dec.second_eigenvalue();
    if (std::abs(ratio - target) > tol)
        throw invalid_input("cheeger certificate: partition does not achieve 1 - lambda_2 (ratio " +
                            std::to_string(ratio) + " vs " + std::to_string(target) + ")");

    ExtremalCertificate cert;
    cert.kind = "cheeger";
    cert.report = design_order(g, dec, s, eps);
    cert.reference_eigenvalue = dec.second_eigenvalue();
    cert.sharpness_gap = std::abs(ratio - target);
    if (cert.report.order != 1)
        throw certification_error("cheeger certificate: sharp partition has order " +
                                  std::to_string(cert.report.order) + ", expected 1");
    cert.active_eigenvalue = cert.report.active_eigenvalues.front().first;
    if (std::abs(cert.active_eigenvalue - cert.reference_eigenvalue) > dec.grouping_tolerance())
        throw certification_error("cheeger certificate: active eigenvalue is not lambda_2");
    return cert;
}

ExtremalCertificate extremal_from_cheeger(const Graph& g, const VertexSet& s, double eps, double tol) {
    return extremal_from_cheeger(g, decompose_graph(g), s, eps, tol);
}

} // namespace gdes
