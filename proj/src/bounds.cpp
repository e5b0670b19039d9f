#include "gdes/bounds.hpp"

#include "gdes/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gdes {

double hoffman_bound(const SpectralDecomposition& dec) {
    const double lam = dec.min_eigenvalue();
    if (1.0 - lam < 1e-12) throw spectral_error("hoffman bound: lambda_min == 1 (single eigenvalue spectrum)");
    return -lam / (1.0 - lam);
}

bool mask_lex_less(unsigned long long a, unsigned long long b) {
    if (a == b) return false;
    const int low = std::countr_zero(a ^ b);
    if ((a >> low) & 1ull) return (b >> low) != 0; // b has a later element -> a smaller
    return (a >> low) == 0;                        // a is a proper prefix -> a smaller
}

namespace {

using mask_t = unsigned long long;

std::vector<mask_t> adjacency_masks(const Graph& g) {
    std::vector<mask_t> adj(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        adj[u] |= mask_t{1} << v;
        adj[v] |= mask_t{1} << u;
    }
    return adj;
}

// Greedy clique cover of the subgraph induced on cand: an independent set
// takes at most one vertex per clique.
int clique_cover_bound(const std::vector<mask_t>& adj, mask_t cand) {
    int cliques = 0;
    mask_t left = cand;
    while (left) {
        ++cliques;
        mask_t q = left;
        while (q) {
            const int v = std::countr_zero(q);
            left &= ~(mask_t{1} << v);
            q &= adj[v] & left;
        }
    }
    return cliques;
}

struct MisSolver {
    const std::vector<mask_t>& adj;
    int best = 0;

    void expand(mask_t cand, int cur) {
        if (cur > best) best = cur;
        if (!cand) return;
        if (cur + clique_cover_bound(adj, cand) <= best) return;
        // max-degree-within-cand pivot, smallest index on ties
        int pivot = -1, pivot_deg = -1;
        for (mask_t m = cand; m;) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            const int deg = std::popcount(adj[v] & cand);
            if (deg > pivot_deg) {
                pivot_deg = deg;
                pivot = v;
            }
        }
        expand(cand & ~(adj[pivot] | (mask_t{1} << pivot)), cur + 1); // take pivot
        expand(cand & ~(mask_t{1} << pivot), cur);                    // skip pivot
    }
};

int max_independent_size(const std::vector<mask_t>& adj, mask_t cand) {
    MisSolver solver{adj};
    solver.expand(cand, 0);
    return solver.best;
}

} // namespace

IndependenceResult independence_ratio_exact(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        throw cap_exceeded("independence oracle: " + std::to_string(n) + " vertices exceeds cap " +
                           std::to_string(cap));
    if (n > 64) throw cap_exceeded("independence oracle: bitset width limited to 64 vertices");
    const auto adj = adjacency_masks(g);
    const mask_t all = (n == 64) ? ~mask_t{0} : ((mask_t{1} << n) - 1);
    const int alpha = max_independent_size(adj, all);

    // Lexicographically smallest witness: keep a vertex iff forcing it still
    // permits a maximum independent set.
    std::vector<int> members;
    mask_t cand = all;
    int cur = 0;
    for (int v = 0; v < n && cur < alpha; ++v) {
        if (!((cand >> v) & 1)) continue;
        const mask_t rest = cand & ~(adj[v] | (mask_t{1} << v));
        if (cur + 1 + max_independent_size(adj, rest) == alpha) {
            members.push_back(v);
            cand = rest;
            ++cur;
        } else {
            cand &= ~(mask_t{1} << v);
        }
    }

    IndependenceResult out;
    out.size = alpha;
    out.witness = VertexSet::of(std::move(members), n);
    out.ratio = static_cast<double>(alpha) / n;
    return out;
}

namespace {

// Exact fraction num/den (positive den) with lex witness tie-break.
struct BestCut {
    long long num = -1, den = 1;
    mask_t witness = 0;

    void offer(long long n2, long long d2, mask_t w) {
        if (num < 0 || n2 * den < num * d2 || (n2 * den == num * d2 && mask_lex_less(w, witness))) {
            num = n2;
            den = d2;
            witness = w;
        }
    }
    void merge(const BestCut& o) {
        if (o.num >= 0) offer(o.num, o.den, o.witness);
    }
};

struct CutScanResult {
    BestCut ratio;   // n |E(S,V\S)| / (d |S| |V\S|)
    BestCut classic; // |E(S,V\S)| / min(|S|,|V\S|)
};

// Scans subsets S = {0} ∪ base ∪ X where X ranges over subsets of the
// vertices [first,last) in Gray-code order, flipping one vertex per step and
// updating the boundary count incrementally. base may only use bits >= last.
CutScanResult scan_cuts(const Graph& g, const std::vector<mask_t>& adj, mask_t base, int first, int last) {
    const int n = g.vertex_count();
    const long long d = g.degree(0);
    CutScanResult best;

    mask_t in = mask_t{1} | base;
    long long size = std::popcount(in);
    long long cut = 0;
    for (int v = 0; v < n; ++v)
        if ((in >> v) & 1) cut += g.degree(v) - std::popcount(adj[v] & in);

    auto offer = [&](mask_t s, long long sz, long long c) {
        if (sz == n) return; // proper subsets only
        best.ratio.offer(n * c, d * sz * (n - sz), s);
        best.classic.offer(c, std::min(sz, n - sz), s);
    };
    offer(in, size, cut);

    const int gray_bits = last - first;
    const mask_t steps = gray_bits > 0 ? (mask_t{1} << gray_bits) : 1;
    for (mask_t i = 1; i < steps; ++i) {
        const int v = first + std::countr_zero(i);
        const mask_t bit = mask_t{1} << v;
        if (in & bit) {
            in ^= bit;
            --size;
            cut += 2 * std::popcount(adj[v] & in) - g.degree(v);
        } else {
            cut += g.degree(v) - 2 * std::popcount(adj[v] & in);
            in ^= bit;
            ++size;
        }
        offer(in, size, cut);
    }
    return best;
}

} // namespace

CheegerResult cheeger_constant_exact(const Graph& g, int cap, Exec exec) {
    const int n = g.vertex_count();
    if (n > cap)
        throw cap_exceeded("cheeger oracle: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
    if (n > 48) throw cap_exceeded("cheeger oracle: subset enumeration limited to 48 vertices");
    auto d = regular_degree(g);
    if (!d || *d == 0) throw invalid_input("cheeger oracle: graph must be regular with positive degree");
    const auto adj = adjacency_masks(g);

    CutScanResult best;
    if (exec == Exec::Serial || n - 1 <= 4) {
        // Reference path: one Gray sweep over all free vertices.
        best = scan_cuts(g, adj, 0, 1, n);
    } else {
        // Fixed split on the top 4 free vertices; the block count does not
        // depend on the thread count, so neither does the result.
        const int block_bits = 4;
        const int blocks = 1 << block_bits;
        const int high_first = n - block_bits;
        std::vector<CutScanResult> partial(blocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int b = 0; b < blocks; ++b) {
            mask_t base = 0;
            for (int i = 0; i < block_bits; ++i)
                if ((b >> i) & 1) base |= mask_t{1} << (high_first + i);
            partial[b] = scan_cuts(g, adj, base, 1, high_first);
        }
        for (const auto& p : partial) {
            best.ratio.merge(p.ratio);
            best.classic.merge(p.classic);
        }
    }

    CheegerResult out;
    out.h = static_cast<double>(best.ratio.num) / static_cast<double>(best.ratio.den);
    out.h_classic = static_cast<double>(best.classic.num) / static_cast<double>(best.classic.den);
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
        if ((best.ratio.witness >> v) & 1) members.push_back(v);
    out.witness = VertexSet::of(std::move(members), n);
    return out;
}

SharpnessResult hoffman_sharpness(const Graph& g, const SpectralDecomposition& dec, int cap, double tol) {
    auto alpha = independence_ratio_exact(g, cap);
    SharpnessResult out;
    out.bound = hoffman_bound(dec);
    out.exact = alpha.ratio;
    out.witness = alpha.witness;
    out.sharp = std::abs(out.exact - out.bound) <= tol;
    return out;
}

SharpnessResult hoffman_sharpness_from_witness(const Graph& g, const SpectralDecomposition& dec,
                                               const VertexSet& witness, double tol) {
    if (!is_independent(g, witness)) throw invalid_input("hoffman sharpness: supplied witness is not independent");
    SharpnessResult out;
    out.bound = hoffman_bound(dec);
    out.exact = static_cast<double>(witness.size()) / g.vertex_count();
    out.witness = witness;
    out.witness_only = true;
    out.sharp = std::abs(out.exact - out.bound) <= tol;
    return out;
}

SharpnessResult cheeger_sharpness(const Graph& g, const SpectralDecomposition& dec, int cap, double tol, Exec exec) {
    auto h = cheeger_constant_exact(g, cap, exec);
    SharpnessResult out;
    out.bound = 1.0 - dec.second_eigenvalue();
    out.exact = h.h;
    out.witness = h.witness;
    out.sharp = std::abs(out.exact - out.bound) <= tol;
    return out;
}

std::vector<ChainStep> hoffman_inequality_chain(const Graph& g, const SpectralDecomposition& dec,
                                                const VertexSet& s) {
    if (s.empty()) throw invalid_input("hoffman chain: set is empty");
    if (!is_independent(g, s)) throw invalid_input("hoffman chain: set is not independent");
    const auto a = normalized_adjacency(g);
    const auto ind = s.indicator();
    const double n = g.vertex_count();
    const double size = s.size();
    const double lam_min = dec.min_eigenvalue();

    const auto norms = dec.projection_norms(ind);
    const double c1_sq = norms[0];
    double v1 = 0.0, tail_weighted = 0.0;
    for (size_t i = 0; i < norms.size(); ++i) {
        v1 += dec.spaces()[i].eigenvalue * norms[i];
        if (i > 0) tail_weighted += dec.spaces()[i].eigenvalue * norms[i];
    }

    const double v0 = rayleigh(a, ind, ind);
    const double v2 = c1_sq + tail_weighted;
    const double v3 = c1_sq + lam_min * (size - c1_sq);
    const double v4 = (1.0 - lam_min) * size * size / n + lam_min * size;

    return {
        {"<A 1_S, 1_S>", v0, "", 0.0},
        {"sum_i lambda_i c_i^2", v1, "=", std::abs(v1 - v0)},
        {"c_1^2 + sum_{i>=2} lambda_i c_i^2", v2, "=", std::abs(v2 - v1)},
        {"c_1^2 + lambda_n (|S| - c_1^2)", v3, ">=", v2 - v3},
        {"(1 - lambda_n) |S|^2/n + lambda_n |S|", v4, "=", std::abs(v4 - v3)},
    };
}

std::vector<ChainStep> cheeger_equality_chain(const Graph& g, const SpectralDecomposition& dec, const VertexSet& s) {
    if (!s.is_proper_nonempty()) throw invalid_input("cheeger chain: set must be proper and nonempty");
    const auto a = normalized_adjacency(g);
    const auto ind = s.indicator();
    const auto ind_t = s.complement().indicator();
    const double n = g.vertex_count();
    const double size = s.size();
    const double lam2 = dec.second_eigenvalue();

    const auto norms = dec.projection_norms(ind);
    const double c1_sq = norms[0];
    const double c1 = std::sqrt(c1_sq);
    const double root_n = std::sqrt(n);
    double tail_weighted = 0.0;
    for (size_t i = 1; i < norms.size(); ++i) tail_weighted += dec.spaces()[i].eigenvalue * norms[i];

    const double v0 = static_cast<double>(edge_boundary(g, s)) / a.degree;
    const double v1 = rayleigh(a, ind, ind_t);
    const double v2 = c1 * (root_n - c1) - tail_weighted;
    const double v3 = c1 * (root_n - c1) - lam2 * (size - c1_sq);
    const double v4 = size * (n - size) / n * (1.0 - lam2);

    return {
        {"(1/d) |E(S,T)|", v0, "", 0.0},
        {"<A 1_S, 1_T>", v1, "=", std::abs(v1 - v0)},
        {"c_1 (sqrt(n) - c_1) - sum_{i>=2} lambda_i c_i^2", v2, "=", std::abs(v2 - v1)},
        {"c_1 (sqrt(n) - c_1) - lambda_2 (|S| - c_1^2)", v3, ">=", v2 - v3},
        {"|S|(n-|S|)/n (1 - lambda_2)", v4, "=", std::abs(v4 - v3)},
    };
}

BoundsReport compute_bounds(const Graph& g, const SpectralDecomposition& dec, const BoundsOptions& opts) {
    BoundsReport report;
    report.hoffman = hoffman_bound(dec);
    report.cheeger_lower = 1.0 - dec.second_eigenvalue();

    if (opts.alpha_witness) {
        auto s = hoffman_sharpness_from_witness(g, dec, *opts.alpha_witness, opts.tol);
        report.independence_ratio = s.exact;
        report.alpha_witness = s.witness;
        report.hoffman_sharp = s.sharp;
        report.hoffman_witness_only = true;
    } else if (opts.exact_alpha) {
        auto s = hoffman_sharpness(g, dec, opts.alpha_cap, opts.tol);
        report.independence_ratio = s.exact;
        report.alpha_witness = s.witness;
        report.hoffman_sharp = s.sharp;
    }

    if (opts.exact_cheeger) {
        auto h = cheeger_constant_exact(g, opts.cheeger_cap, opts.exec);
        report.cheeger_constant = h.h;
        report.cheeger_witness = h.witness;
        report.classic_cheeger = h.h_classic;
        report.cheeger_sharp = std::abs(h.h - report.cheeger_lower) <= opts.tol;
    }
    return report;
}

} // namespace gdes
