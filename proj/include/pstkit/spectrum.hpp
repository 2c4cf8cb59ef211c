// Character sums, eigenvalues, eigenvector coefficients, and transfer
// matrix entries of an abelian bi-Cayley graph. One row per character
// chi_k; exact data (cyclotomic integers, integer eigenvalues when they
// exist) sits next to the floating-point view used for cross-checks.

#pragma once

#include "pstkit/bicayley.hpp"
#include "pstkit/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

namespace pstkit {

/**
 * Everything attached to one character chi_k.
 *
 * Eigenvalue convention: each chi_k contributes the pair
 *   lo = (s - sqrt(delta)) / 2,   hi = (s + sqrt(delta)) / 2,
 * with s = chi_k(R) + chi_k(L) and delta = (chi_k(R)-chi_k(L))^2 + 4|chi_k(T)|^2.
 * The exact fields are populated only when the pair is rational (hence
 * integral); the numeric fields are always populated.
 */
struct CharacterRow {
    long index = 0;
    GroupElement label;

    CycInt chi_r, chi_l, chi_t, delta;
    bool chi_t_zero = false;

    std::optional<BigInt> chi_r_int, chi_l_int;  // when the sum lies in Z
    std::optional<BigInt> lo, hi;                // exact eigenvalue pair
    std::optional<BigInt> gap_sqrt;              // sqrt(delta) = hi - lo

    double lo_num = 0, hi_num = 0;

    // Normalized eigenvector coefficients: (xh1,xh2) belongs to lo,
    // (xh3,xh4) to hi; first component lives on part 0, second on part 1.
    std::complex<double> xh1, xh2, xh3, xh4;

    CharacterRow() : chi_r(1), chi_l(1), chi_t(1), delta(1) {}
};

/// Floor of the integer square root, or nullopt when v is not a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& v) {
    if (v < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(v);
    if (r * r != v) return std::nullopt;
    return r;
}

class SpectrumTable {
public:
    explicit SpectrumTable(const BiCayleySpec& spec)
        : group_(spec.group()), elements_(group_.enumerate_elements()) {
        const long N = group_.exponent();
        rows_.reserve(static_cast<std::size_t>(group_.size()));
        for (long k = 0; k < group_.size(); ++k) {
            CharacterRow row;
            row.index = k;
            row.label = elements_[static_cast<std::size_t>(k)];
            row.chi_r = character_sum(row.label, spec.right());
            row.chi_l = character_sum(row.label, spec.left());
            row.chi_t = character_sum(row.label, spec.spokes());
            row.chi_t_zero = row.chi_t.is_zero();

            CycInt diff = row.chi_r - row.chi_l;
            row.delta = diff * diff + (row.chi_t * row.chi_t.conj()) * BigInt(4);

            row.chi_r_int = row.chi_r.as_integer();
            row.chi_l_int = row.chi_l.as_integer();

            // Exact pair: s and delta must be integers, delta a perfect
            // square whose root matches the parity of s.
            auto s_int = (row.chi_r + row.chi_l).as_integer();
            auto d_int = row.delta.as_integer();
            if (s_int && d_int) {
                auto q = exact_sqrt(*d_int);
                if (q && (*s_int - *q) % 2 == 0) {
                    row.gap_sqrt = *q;
                    row.lo = (*s_int - *q) / 2;
                    row.hi = (*s_int + *q) / 2;
                }
            }

            if (row.lo) {
                row.lo_num = static_cast<double>(*row.lo);
                row.hi_num = static_cast<double>(*row.hi);
            } else {
                double s = row.chi_r.numeric_eval().real() +
                           row.chi_l.numeric_eval().real();
                double root = std::sqrt(std::max(0.0, row.delta.numeric_eval().real()));
                row.lo_num = (s - root) / 2;
                row.hi_num = (s + root) / 2;
            }

            fill_coefficients(row);
            rows_.push_back(std::move(row));
        }
    }

    const GroupSpec& group() const { return group_; }
    const std::vector<CharacterRow>& rows() const { return rows_; }
    const CharacterRow& row(long k) const {
        return rows_[static_cast<std::size_t>(k)];
    }

    /// Principal pair (identity character): lo = min eigenvalue candidate
    /// source, hi = the global maximum eigenvalue.
    const CharacterRow& principal() const { return rows_[0]; }

    bool is_integral() const {
        for (const auto& r : rows_)
            if (!r.lo) return false;
        return true;
    }

    /// All 2n eigenvalues, numerically, in (lo_k, hi_k) row order.
    std::vector<double> eigenvalues_numeric() const {
        std::vector<double> ev;
        ev.reserve(rows_.size() * 2);
        for (const auto& r : rows_) {
            ev.push_back(r.lo_num);
            ev.push_back(r.hi_num);
        }
        return ev;
    }

    /// {chi_k(R) | chi_k(T)=0} and {chi_k(L) | chi_k(T)=0} agree as multisets.
    bool is_weakly_inner_cospectral() const {
        std::vector<std::vector<BigInt>> a, b;
        for (const auto& r : rows_) {
            if (!r.chi_t_zero) continue;
            a.push_back(r.chi_r.canonical());
            b.push_back(r.chi_l.canonical());
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    /// chi_k(d) as a unit complex number.
    std::complex<double> character_value(long k, const GroupElement& d) const {
        long e = group_.character_exponent(
            elements_[static_cast<std::size_t>(k)], d);
        double ang = 2.0 * pi() * static_cast<double>(e) /
                     static_cast<double>(group_.exponent());
        return {std::cos(ang), std::sin(ang)};
    }

    /**
     * Entry H_{u,v}(t) of the transfer matrix exp(-itD), assembled from
     * the character decomposition. |H_{u,v}(t)| = 1 is perfect transfer.
     */
    std::complex<double> transfer_entry(const Vertex& u, const Vertex& v,
                                        double t) const {
        group_.check(u.element);
        group_.check(v.element);
        GroupElement d = group_.op(u.element, group_.inverse(v.element));
        std::complex<double> acc{0, 0};
        const std::complex<double> mi{0, -1};
        for (const auto& r : rows_) {
            std::complex<double> chi = character_value(r.index, d);
            std::complex<double> elo = std::exp(mi * (t * r.lo_num));
            std::complex<double> ehi = std::exp(mi * (t * r.hi_num));
            std::complex<double> wlo, whi;
            if (u.part == 0 && v.part == 0) {
                wlo = std::norm(r.xh1);
                whi = std::norm(r.xh3);
            } else if (u.part == 1 && v.part == 1) {
                wlo = std::norm(r.xh2);
                whi = std::norm(r.xh4);
            } else if (u.part == 0 && v.part == 1) {
                wlo = r.xh1 * std::conj(r.xh2);
                whi = r.xh3 * std::conj(r.xh4);
            } else {
                wlo = r.xh2 * std::conj(r.xh1);
                whi = r.xh4 * std::conj(r.xh3);
            }
            acc += chi * (wlo * elo + whi * ehi);
        }
        return acc / static_cast<double>(group_.size());
    }

    double fidelity(const Vertex& u, const Vertex& v, double t) const {
        return std::abs(transfer_entry(u, v, t));
    }

private:
    static double pi() { return 3.14159265358979323846; }

    CycInt character_sum(const GroupElement& k,
                         const std::vector<GroupElement>& conn) const {
        CycInt s(group_.exponent());
        for (const auto& g : conn)
            s.coeff(group_.character_exponent(k, g)) += 1;
        return s;
    }

    void fill_coefficients(CharacterRow& row) const {
        if (row.chi_t_zero) {
            // chi_r and chi_l are real; decide chi_r > chi_l exactly when
            // they coincide, numerically otherwise.
            bool r_greater = false;
            if (!(row.chi_r - row.chi_l).is_zero())
                r_greater = row.chi_r.numeric_eval().real() >
                            row.chi_l.numeric_eval().real();
            if (r_greater) {
                row.xh1 = 0;
                row.xh2 = 1;
                row.xh3 = 1;
                row.xh4 = 0;
            } else {
                row.xh1 = 1;
                row.xh2 = 0;
                row.xh3 = 0;
                row.xh4 = 1;
            }
            return;
        }
        std::complex<double> ct = row.chi_t.numeric_eval();
        double cr = row.chi_r.numeric_eval().real();
        double cl = row.chi_l.numeric_eval().real();
        std::complex<double> xi1 = ct / (row.lo_num - cr);
        std::complex<double> xi2{1, 0};
        std::complex<double> xi3{1, 0};
        std::complex<double> xi4 = std::conj(ct) / (row.hi_num - cl);
        double nlo = std::sqrt(std::norm(xi1) + std::norm(xi2));
        double nhi = std::sqrt(std::norm(xi3) + std::norm(xi4));
        row.xh1 = xi1 / nlo;
        row.xh2 = xi2 / nlo;
        row.xh3 = xi3 / nhi;
        row.xh4 = xi4 / nhi;
    }

    GroupSpec group_;
    std::vector<GroupElement> elements_;
    std::vector<CharacterRow> rows_;
};

}  // namespace pstkit
