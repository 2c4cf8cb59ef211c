// Exact arithmetic in Z[zeta_N]. Equality is decided by polynomial
// remainder modulo the N-th cyclotomic polynomial, never by floating
// comparison; floating values are only emitted through numeric_eval.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pstkit {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of Phi_N, lowest degree first. Monic, degree phi(N),
/// divides x^N - 1 exactly.
using CycPoly = std::vector<BigInt>;

namespace detail {

// Exact quotient of a by monic-leading b (remainder known to be zero).
inline CycPoly poly_divexact(CycPoly a, const CycPoly& b) {
    CycPoly q(a.size() - b.size() + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        BigInt c = a[i + b.size() - 1] / b.back();
        q[i] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[i + j] -= c * b[j];
    }
    return q;
}

}  // namespace detail

/// Phi_N by recursive exact division: Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d.
/// Results are memoized; the cache is observationally pure.
inline const CycPoly& cyclotomic_poly(long N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_poly: N must be >= 1");
    static std::map<long, CycPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // Compute Phi_d for all divisors bottom-up without recursing under the lock.
    for (long d = 1; d <= N; ++d) {
        if (N % d != 0 || cache.count(d)) continue;
        CycPoly num(static_cast<std::size_t>(d) + 1);
        num[0] = -1;
        num.back() = 1;  // x^d - 1
        for (long e = 1; e < d; ++e)
            if (d % e == 0) num = detail::poly_divexact(std::move(num), cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(N);
}

/**
 * An element of Z[zeta_N], stored as sum c_e zeta_N^e with an unreduced
 * length-N coefficient vector. Any representative is allowed; equality
 * goes through is_zero of the difference.
 */
class CycInt {
public:
    explicit CycInt(long modulus)
        : modulus_(modulus), coeffs_(static_cast<std::size_t>(modulus)) {
        if (modulus < 1)
            throw std::invalid_argument("CycInt: modulus must be >= 1");
    }

    static CycInt root_power(long N, long e) {
        CycInt a(N);
        e %= N;
        if (e < 0) e += N;
        a.coeffs_[static_cast<std::size_t>(e)] = 1;
        return a;
    }

    static CycInt integer(long N, const BigInt& v) {
        CycInt a(N);
        a.coeffs_[0] = v;
        return a;
    }

    long modulus() const { return modulus_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt& coeff(long e) { return coeffs_[static_cast<std::size_t>(e)]; }

    CycInt operator+(const CycInt& o) const {
        check_same(o);
        CycInt r(modulus_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
        return r;
    }

    CycInt operator-(const CycInt& o) const {
        check_same(o);
        CycInt r(modulus_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
        return r;
    }

    /// Convolution with zeta^N = 1.
    CycInt operator*(const CycInt& o) const {
        check_same(o);
        CycInt r(modulus_);
        const auto n = static_cast<std::size_t>(modulus_);
        for (std::size_t i = 0; i < n; ++i) {
            if (coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (o.coeffs_[j] == 0) continue;
                std::size_t e = i + j;
                if (e >= n) e -= n;
                r.coeffs_[e] += coeffs_[i] * o.coeffs_[j];
            }
        }
        return r;
    }

    CycInt operator*(const BigInt& s) const {
        CycInt r(modulus_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] * s;
        return r;
    }

    /// Complex conjugation: zeta^e -> zeta^{N-e}.
    CycInt conj() const {
        CycInt r(modulus_);
        r.coeffs_[0] = coeffs_[0];
        for (long e = 1; e < modulus_; ++e)
            r.coeffs_[static_cast<std::size_t>(modulus_ - e)] =
                coeffs_[static_cast<std::size_t>(e)];
        return r;
    }

    /// Multiplication by zeta^e (cyclic shift of exponents).
    CycInt shifted(long e) const {
        e %= modulus_;
        if (e < 0) e += modulus_;
        CycInt r(modulus_);
        for (long i = 0; i < modulus_; ++i)
            r.coeffs_[static_cast<std::size_t>((i + e) % modulus_)] =
                coeffs_[static_cast<std::size_t>(i)];
        return r;
    }

    /// Canonical coefficients on the basis 1, zeta, ..., zeta^{phi(N)-1}.
    std::vector<BigInt> canonical() const {
        const CycPoly& phi = cyclotomic_poly(modulus_);
        std::vector<BigInt> rem = coeffs_;
        const std::size_t deg = phi.size() - 1;
        for (std::size_t i = rem.size(); i-- > deg;) {
            if (rem[i] == 0) continue;
            BigInt c = rem[i];  // phi is monic
            for (std::size_t j = 0; j < phi.size(); ++j)
                rem[i - deg + j] -= c * phi[j];
        }
        rem.resize(deg == 0 ? 1 : deg);
        if (deg == 0) {
            // N = 1: zeta = 1, the ring is Z itself.
            BigInt total = 0;
            for (const auto& c : coeffs_) total += c;
            rem[0] = total;
        }
        return rem;
    }

    bool is_zero() const {
        for (const auto& c : canonical())
            if (c != 0) return false;
        return true;
    }

    bool operator==(const CycInt& o) const { return (*this - o).is_zero(); }

    /// The integer this value reduces to, if it lies in Z.
    std::optional<BigInt> as_integer() const {
        auto can = canonical();
        for (std::size_t i = 1; i < can.size(); ++i)
            if (can[i] != 0) return std::nullopt;
        return can[0];
    }

    bool is_real() const { return (*this - conj()).is_zero(); }

    std::complex<double> numeric_eval() const {
        long double re = 0, im = 0;
        const long double tau = 6.283185307179586476925286766559L;
        for (long e = 0; e < modulus_; ++e) {
            const BigInt& c = coeffs_[static_cast<std::size_t>(e)];
            if (c == 0) continue;
            long double cd = static_cast<long double>(c);
            long double ang = tau * static_cast<long double>(e) /
                              static_cast<long double>(modulus_);
            re += cd * std::cos(ang);
            im += cd * std::sin(ang);
        }
        return {static_cast<double>(re), static_cast<double>(im)};
    }

private:
    void check_same(const CycInt& o) const {
        if (modulus_ != o.modulus_)
            throw std::invalid_argument("CycInt: modulus mismatch");
    }

    long modulus_;
    std::vector<BigInt> coeffs_;
};

}  // namespace pstkit
