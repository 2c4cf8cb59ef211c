// Independent floating-point verifier: dense symmetric eigensolve,
// H(t) = exp(-itD) entries, fidelity queries, and brute-force PST scans.
// Shares no code path with the exact engine beyond the adjacency matrix.

#pragma once

#include "pstkit/bicayley.hpp"
#include "pstkit/pst.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace pstkit {

class Oracle {
public:
    explicit Oracle(const std::vector<std::vector<int>>& adjacency) {
        const auto n = static_cast<Eigen::Index>(adjacency.size());
        d_.resize(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (static_cast<Eigen::Index>(adjacency[static_cast<std::size_t>(i)]
                                              .size()) != n)
                throw std::invalid_argument("oracle: matrix must be square");
            for (Eigen::Index j = 0; j < n; ++j)
                d_(i, j) = adjacency[static_cast<std::size_t>(i)]
                                    [static_cast<std::size_t>(j)];
        }
        if (!d_.isApprox(d_.transpose()))
            throw std::invalid_argument("oracle: matrix must be symmetric");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(d_);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("oracle: eigensolve failed");
        values_ = solver.eigenvalues();
        vectors_ = solver.eigenvectors();
        double recon = (vectors_ * values_.asDiagonal() * vectors_.transpose() - d_)
                           .cwiseAbs()
                           .maxCoeff();
        double ortho = (vectors_.transpose() * vectors_ -
                        Eigen::MatrixXd::Identity(n, n))
                           .cwiseAbs()
                           .maxCoeff();
        if (recon > 1e-9 || ortho > 1e-9)
            throw std::runtime_error("oracle: eigendecomposition check failed");
    }

    explicit Oracle(const BiCayleySpec& spec) : Oracle(spec.adjacency()) {}

    long size() const { return static_cast<long>(d_.rows()); }
    const Eigen::VectorXd& eigenvalues() const { return values_; }

    std::complex<double> transfer_entry(long u, long v, double t) const {
        check_index(u);
        check_index(v);
        std::complex<double> acc{0, 0};
        for (Eigen::Index s = 0; s < values_.size(); ++s)
            acc += vectors_(u, s) * vectors_(v, s) *
                   std::exp(std::complex<double>(0, -t * values_(s)));
        return acc;
    }

    double fidelity(long u, long v, double t) const {
        return std::abs(transfer_entry(u, v, t));
    }

    struct Peak {
        long u = 0, v = 0;
        double time = 0;
        double fidelity = 0;
    };

    /**
     * Grid scan over (0, t_max] followed by ternary-search refinement of
     * every above-threshold local maximum (time resolution 1e-10).
     * Returns one peak per unordered pair: its best refined maximum.
     */
    std::vector<Peak> scan_pst(double t_max, long steps, double threshold) const {
        if (steps < 2) throw std::invalid_argument("oracle: steps must be >= 2");
        std::vector<Peak> out;
        const long n = size();
        const double h = t_max / static_cast<double>(steps);
        for (long u = 0; u < n; ++u)
            for (long v = u + 1; v < n; ++v) {
                Peak best{u, v, 0, 0};
                for (long s = 1; s <= steps; ++s) {
                    double t = h * static_cast<double>(s);
                    double f = fidelity(u, v, t);
                    if (f > best.fidelity) best = {u, v, t, f};
                }
                if (best.fidelity >= threshold) {
                    auto [t, f] = refine(u, v, std::max(0.0, best.time - h),
                                         best.time + h);
                    out.push_back({u, v, t, f});
                }
            }
        return out;
    }

    /// Maximum off-diagonal-pair fidelity over the grid, each grid peak
    /// refined locally — the rejection-side cross-check.
    double max_pair_fidelity(long u, long v, double t_max, long steps) const {
        const double h = t_max / static_cast<double>(steps);
        double best_t = h, best_f = 0;
        for (long s = 1; s <= steps; ++s) {
            double t = h * static_cast<double>(s);
            double f = fidelity(u, v, t);
            if (f > best_f) {
                best_f = f;
                best_t = t;
            }
        }
        return refine(u, v, std::max(0.0, best_t - h), best_t + h).second;
    }

    /**
     * Maximum fidelity over all off-diagonal pairs on a uniform grid over
     * (0, t_max], with each pair's grid argmax refined locally. One dense
     * complex product per grid point keeps exhaustive sweeps cheap.
     */
    // Largest fidelity seen over any off-diagonal pair within (0, t_max].
    // When skip_offset > 0, pairs (u, u + skip_offset) are ignored; for a
    // bi-Cayley adjacency in canonical vertex order, skip_offset = n/2 drops
    // the two copies of each group element.
    double max_offdiagonal_fidelity(double t_max, long steps,
                                    long skip_offset = -1) const {
        if (steps < 2) throw std::invalid_argument("oracle: steps must be >= 2");
        const long n = size();
        const double h = t_max / static_cast<double>(steps);
        Eigen::MatrixXd best_f = Eigen::MatrixXd::Zero(n, n);
        Eigen::MatrixXd best_t = Eigen::MatrixXd::Zero(n, n);
        Eigen::VectorXcd phase(n);
        for (long s = 1; s <= steps; ++s) {
            double t = h * static_cast<double>(s);
            for (Eigen::Index i = 0; i < n; ++i)
                phase(i) = std::exp(std::complex<double>(0, -t * values_(i)));
            Eigen::MatrixXcd m =
                vectors_ * phase.asDiagonal() * vectors_.transpose();
            for (Eigen::Index u = 0; u < n; ++u)
                for (Eigen::Index v = u + 1; v < n; ++v) {
                    if (v - u == skip_offset) continue;
                    double f = std::abs(m(u, v));
                    if (f > best_f(u, v)) {
                        best_f(u, v) = f;
                        best_t(u, v) = t;
                    }
                }
        }
        double out = 0;
        for (Eigen::Index u = 0; u < n; ++u)
            for (Eigen::Index v = u + 1; v < n; ++v) {
                if (v - u == skip_offset) continue;
                out = std::max(out, refine(u, v,
                                           std::max(0.0, best_t(u, v) - h),
                                           best_t(u, v) + h)
                                        .second);
            }
        return out;
    }

private:
    void check_index(long u) const {
        if (u < 0 || u >= size())
            throw std::out_of_range("oracle: vertex index out of range");
    }

    std::pair<double, double> refine(long u, long v, double a, double b) const {
        while (b - a > 1e-10) {
            double m1 = a + (b - a) / 3, m2 = b - (b - a) / 3;
            if (fidelity(u, v, m1) < fidelity(u, v, m2))
                a = m1;
            else
                b = m2;
        }
        double t = (a + b) / 2;
        return {t, fidelity(u, v, t)};
    }

    Eigen::MatrixXd d_;
    Eigen::VectorXd values_;
    Eigen::MatrixXd vectors_;
};

struct VerifyReport {
    bool ok = true;
    long affirmed_checked = 0;
    long rejected_checked = 0;
    std::vector<std::string> mismatches;
};

/// A few sample members of an exact time set, as doubles.
inline std::vector<double> sample_times(const TimeSet& ts, int count = 3) {
    const double pi = 3.14159265358979323846;
    std::vector<double> out;
    double d = static_cast<double>(ts.divisor);
    for (int z = 0; z < count; ++z) {
        if (ts.divisor == 0)
            out.push_back(pi * (z + 1));  // degenerate all-times set
        else if (ts.kind == TimeSet::Kind::ODD_MULTIPLES)
            out.push_back(pi * (1 + 2 * z) / d);
        else
            out.push_back(2 * pi * (z + 1) / d);
    }
    return out;
}

/**
 * Cross-validate the engine against the numeric oracle: every affirmed
 * pair must reach fidelity >= 1 - 1e-6 at sampled member times, and a
 * sample of rejected candidate pairs must stay below 1 - 1e-4 across a
 * refined sweep of (0, 4 pi]. Decided-pair mismatches flip ok to false;
 * undecided pairs are skipped (the engine makes no claim about them).
 */
inline VerifyReport verify(const DecisionEngine& engine, long max_rejected = 16) {
    const double pi = 3.14159265358979323846;
    VerifyReport rep;
    Oracle oracle(engine.spec());
    auto idx = [&](const Vertex& v) { return engine.spec().vertex_index(v); };

    auto survey = engine.pst_pairs();
    for (const auto& p : survey.pairs) {
        ++rep.affirmed_checked;
        for (double t : sample_times(p.times)) {
            double f = oracle.fidelity(idx(p.u), idx(p.v), t);
            if (f < 1 - 1e-6) {
                rep.ok = false;
                rep.mismatches.push_back(
                    "affirmed pair fails at t=" + std::to_string(t) +
                    " fidelity=" + std::to_string(f));
            }
        }
    }

    // Rejected candidates: one representative pair per rejected difference.
    const GroupSpec& g = engine.spec().group();
    std::vector<std::pair<Vertex, Vertex>> rejected;
    for (int part = 0; part <= 1; ++part)
        for (const auto& d : g.enumerate_elements()) {
            if (d == g.identity() || g.element_order(d) != 2) continue;
            PstVerdict ver = engine.decide_same(part, d, g.identity());
            if (!ver.exists && !ver.undecided)
                rejected.push_back({Vertex{d, part}, Vertex{g.identity(), part}});
        }
    for (const auto& d : g.enumerate_elements()) {
        PstVerdict ver = engine.decide_cross(d, g.identity());
        if (!ver.exists && !ver.undecided)
            rejected.push_back({Vertex{d, 0}, Vertex{g.identity(), 1}});
    }
    if (static_cast<long>(rejected.size()) > max_rejected)
        rejected.resize(static_cast<std::size_t>(max_rejected));
    for (const auto& [u, v] : rejected) {
        ++rep.rejected_checked;
        double f = oracle.max_pair_fidelity(idx(u), idx(v), 4 * pi, 1600);
        if (f >= 1 - 1e-4) {
            rep.ok = false;
            rep.mismatches.push_back("rejected pair reaches fidelity " +
                                     std::to_string(f));
        }
    }
    return rep;
}

}  // namespace pstkit
