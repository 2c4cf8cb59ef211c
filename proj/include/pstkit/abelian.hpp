// Finite abelian groups as products of cyclic factors, their elements,
// and the character pairing used throughout the spectral machinery.

#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace pstkit {

struct invalid_spec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_element : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Residue tuple (g_1,...,g_r) with 0 <= g_i < n_i.
using GroupElement = std::vector<long>;

/**
 * G = Z_{n_1} x ... x Z_{n_r}. The exponent N = lcm(n_i) fixes the root
 * of unity zeta_N in which all character values live.
 */
class GroupSpec {
public:
    explicit GroupSpec(std::vector<long> orders) : orders_(std::move(orders)) {
        if (orders_.empty())
            throw invalid_spec("group: factor list must be nonempty");
        size_ = 1;
        exponent_ = 1;
        for (long ni : orders_) {
            if (ni < 1)
                throw invalid_spec("group: factor order must be >= 1, got " +
                                   std::to_string(ni));
            size_ *= ni;
            exponent_ = std::lcm(exponent_, ni);
        }
    }

    const std::vector<long>& orders() const { return orders_; }
    std::size_t arity() const { return orders_.size(); }
    long size() const { return size_; }
    long exponent() const { return exponent_; }

    bool operator==(const GroupSpec& o) const { return orders_ == o.orders_; }

    void check(const GroupElement& a) const {
        if (a.size() != orders_.size())
            throw invalid_element("element arity " + std::to_string(a.size()) +
                                  " does not match group arity " +
                                  std::to_string(orders_.size()));
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] < 0 || a[i] >= orders_[i])
                throw invalid_element("residue " + std::to_string(a[i]) +
                                      " out of range for factor Z_" +
                                      std::to_string(orders_[i]));
    }

    GroupElement identity() const {
        return GroupElement(orders_.size(), 0);
    }

    GroupElement op(const GroupElement& a, const GroupElement& b) const {
        check(a);
        check(b);
        GroupElement c(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i)
            c[i] = (a[i] + b[i]) % orders_[i];
        return c;
    }

    GroupElement inverse(const GroupElement& a) const {
        check(a);
        GroupElement c(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i)
            c[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
        return c;
    }

    GroupElement reduce(const std::vector<long>& raw) const {
        if (raw.size() != orders_.size())
            throw invalid_element("element arity mismatch");
        GroupElement c(orders_.size());
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            long r = raw[i] % orders_[i];
            c[i] = r < 0 ? r + orders_[i] : r;
        }
        return c;
    }

    long element_order(const GroupElement& a) const {
        check(a);
        long m = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            long ord = a[i] == 0 ? 1 : orders_[i] / std::gcd(a[i], orders_[i]);
            m = std::lcm(m, ord);
        }
        return m;
    }

    /// chi_k(h) = zeta_N^e with e = sum_i (N/n_i) k_i h_i (mod N).
    /// The pairing is bilinear and symmetric, so chi_g(h) = chi_h(g).
    long character_exponent(const GroupElement& k, const GroupElement& h) const {
        check(k);
        check(h);
        long e = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            long w = exponent_ / orders_[i];
            e = (e + w % exponent_ * (k[i] % exponent_) % exponent_ *
                         (h[i] % exponent_)) %
                exponent_;
        }
        return e;
    }

    /// All n elements in lexicographic order on residue tuples; identity first.
    std::vector<GroupElement> enumerate_elements() const {
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(size_));
        GroupElement cur(orders_.size(), 0);
        while (true) {
            out.push_back(cur);
            std::size_t i = orders_.size();
            while (i > 0) {
                --i;
                if (++cur[i] < orders_[i]) break;
                cur[i] = 0;
                if (i == 0) return out;
            }
        }
    }

    /// Index of an element in enumeration order.
    long element_index(const GroupElement& a) const {
        check(a);
        long idx = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            idx = idx * orders_[i] + a[i];
        return idx;
    }

    GroupElement element_at(long idx) const {
        if (idx < 0 || idx >= size_)
            throw invalid_element("element index out of range");
        GroupElement a(orders_.size());
        for (std::size_t i = orders_.size(); i-- > 0;) {
            a[i] = idx % orders_[i];
            idx /= orders_[i];
        }
        return a;
    }

private:
    std::vector<long> orders_;
    long size_ = 1;
    long exponent_ = 1;
};

inline GroupSpec make_group(std::vector<long> orders) {
    return GroupSpec(std::move(orders));
}

}  // namespace pstkit
