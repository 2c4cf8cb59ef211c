// The exact decision engine: 2-adic valuations, gcd invariants, the
// if-and-only-if decision procedures for perfect state transfer between
// cross-part and same-part vertex pairs, the fixed-time condition
// checker, periodicity, and the exhaustive pair survey.
//
// Every verdict is computed over exact integer data from the spectrum
// table; floating point never enters a decision.

#pragma once

#include "pstkit/spectrum.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pstkit {

using BigRat = boost::multiprecision::cpp_rational;

/// 2-adic valuation value: an integer or +infinity (the valuation of 0).
struct Valuation {
    bool finite = true;
    long value = 0;

    static Valuation infinity() { return {false, 0}; }
    static Valuation of(long v) { return {true, v}; }

    bool operator==(const Valuation& o) const {
        return finite == o.finite && (!finite || value == o.value);
    }
    /// *this >= bound for a finite bound (infinity dominates).
    bool at_least(long bound) const { return !finite || value >= bound; }
};

inline Valuation v2(const BigInt& x) {
    if (x == 0) return Valuation::infinity();
    return Valuation::of(static_cast<long>(
        boost::multiprecision::lsb(boost::multiprecision::abs(x))));
}

inline Valuation v2(const BigRat& q) {
    if (q == 0) return Valuation::infinity();
    Valuation n = v2(BigInt(boost::multiprecision::numerator(q)));
    Valuation d = v2(BigInt(boost::multiprecision::denominator(q)));
    return Valuation::of(n.value - d.value);
}

/**
 * Exact arithmetic progression of times, as multiples of pi:
 *   ODD_MULTIPLES:  t = (1+2z) pi / divisor
 *   EVEN_MULTIPLES: t = 2 pi z / divisor  (z = 0 excluded unless zero_allowed)
 * divisor = 0 is the degenerate "every time" set produced by an empty
 * gcd family (edgeless graphs); it only ever occurs with EVEN kind.
 */
struct TimeSet {
    enum class Kind { ODD_MULTIPLES, EVEN_MULTIPLES };

    Kind kind = Kind::ODD_MULTIPLES;
    BigInt divisor = 1;
    bool zero_allowed = false;

    /// Membership of t = (num/den) pi, den > 0.
    bool contains(const BigInt& num, const BigInt& den) const {
        if (den <= 0) throw std::invalid_argument("TimeSet: denominator must be positive");
        if (divisor == 0) return zero_allowed || num != 0;
        BigInt q = num * divisor;
        if (kind == Kind::ODD_MULTIPLES) {
            // num/den = (1+2z)/divisor  <=>  den | q and q/den odd
            return q % den == 0 && (q / den) % 2 != 0;
        }
        // num/den = 2z/divisor  <=>  2*den | q, with the z=0 exclusion
        if (!zero_allowed && num == 0) return false;
        return q % (2 * den) == 0;
    }

    /// Smallest positive member, as a rational multiple of pi.
    BigRat smallest_positive_over_pi() const {
        if (divisor == 0) return BigRat(0);  // degenerate: any t > 0 works
        if (kind == Kind::ODD_MULTIPLES) return BigRat(1, divisor);
        return BigRat(2, divisor);
    }

    bool operator==(const TimeSet& o) const {
        return kind == o.kind && divisor == o.divisor &&
               zero_allowed == o.zero_allowed;
    }
};

enum class FailureTag {
    NONE,
    NOT_INTEGRAL,
    R_NEQ_L,
    CHI_T_ZERO,
    V2_MISMATCH,
    V2_M_TOO_SMALL,
    SIGN_MISMATCH,
    ORDER_NOT_TWO,
    MU_INCONSISTENT,
    UNDECIDED_NONINTEGRAL,
};

inline const char* to_string(FailureTag tag) {
    switch (tag) {
        case FailureTag::NONE: return "NONE";
        case FailureTag::NOT_INTEGRAL: return "NOT_INTEGRAL";
        case FailureTag::R_NEQ_L: return "R_NEQ_L";
        case FailureTag::CHI_T_ZERO: return "CHI_T_ZERO";
        case FailureTag::V2_MISMATCH: return "V2_MISMATCH";
        case FailureTag::V2_M_TOO_SMALL: return "V2_M_TOO_SMALL";
        case FailureTag::SIGN_MISMATCH: return "SIGN_MISMATCH";
        case FailureTag::ORDER_NOT_TWO: return "ORDER_NOT_TWO";
        case FailureTag::MU_INCONSISTENT: return "MU_INCONSISTENT";
        case FailureTag::UNDECIDED_NONINTEGRAL: return "UNDECIDED_NONINTEGRAL";
    }
    return "?";
}

struct PstVerdict {
    bool exists = false;
    std::optional<TimeSet> times;
    FailureTag failure = FailureTag::NONE;
    long witness_k = -1;           // character index of the first violation
    std::optional<long> mu;       // common 2-adic valuation of the spoke sums
    bool undecided = false;        // true only for UNDECIDED_NONINTEGRAL
    std::string detail;

    static PstVerdict yes(TimeSet ts, std::optional<long> mu_val = std::nullopt) {
        PstVerdict v;
        v.exists = true;
        v.times = std::move(ts);
        v.mu = mu_val;
        return v;
    }
    static PstVerdict no(FailureTag tag, long k = -1, std::string why = {}) {
        PstVerdict v;
        v.failure = tag;
        v.witness_k = k;
        v.detail = std::move(why);
        v.undecided = tag == FailureTag::UNDECIDED_NONINTEGRAL;
        return v;
    }
};

/// gcd with the conventions gcd(x,0) = x, gcd over the empty family = 0.
inline BigInt gcd_acc(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

/// All gcd invariants the decision procedure needs for one vertex pair.
struct GcdInvariants {
    std::vector<long> H;          // {k : chi_k(T) = 0}
    std::vector<int> omega;       // per k: +1, -1, or 0 when chi_k(d) is not +-1
    bool omega_ok = false;        // every chi_k(d) = +-1
    BigInt M_T = 0;               // gcd |chi_k(T)|        (cross route)
    BigInt M = 0;                 // gcd lam2 - lam_{2k}   (cross route)
    BigInt M0 = 0;                // gcd lam_{2k}-lam_{2k-1}, k not in H
    BigInt M1 = 0;                // gcd lam2 - lam_{2k-1},  k not in H
    BigInt M_X = 0;               // gcd lam2 - chi_k(X),    k in H
    BigInt M_empty_X = 0;         // gcd |X| - chi_k(X),     all k  (T = empty)
};

class DecisionEngine {
public:
    explicit DecisionEngine(const BiCayleySpec& spec)
        : spec_(spec), table_(spec) {}

    const BiCayleySpec& spec() const { return spec_; }
    const SpectrumTable& table() const { return table_; }

    /// chi_k(d) when it is +-1: +1 for exponent 0, -1 for exponent N/2.
    int character_sign(long k, const GroupElement& d) const {
        const GroupSpec& g = table_.group();
        long e = g.character_exponent(table_.row(k).label, d);
        if (e == 0) return 1;
        if (2 * e == g.exponent()) return -1;
        return 0;
    }

    GcdInvariants compute_invariants(const Vertex& u, const Vertex& v) const {
        require_integral("compute_invariants");
        const GroupSpec& g = table_.group();
        GroupElement d = g.op(u.element, g.inverse(v.element));
        GcdInvariants inv;
        inv.omega_ok = true;
        const bool x_is_right = u.part == 0;
        const bool r_eq_l = sets_equal(spec_.right(), spec_.left());
        const bool t_empty = spec_.spokes().empty();
        for (const auto& r : table_.rows()) {
            int sign = character_sign(r.index, d);
            inv.omega.push_back(sign);
            if (sign == 0) inv.omega_ok = false;
            if (r.chi_t_zero) {
                inv.H.push_back(r.index);
                inv.M_X = gcd_acc(inv.M_X, lam2() - chi_x_int(r, x_is_right));
            } else {
                inv.M0 = gcd_acc(inv.M0, *r.hi - *r.lo);
                inv.M1 = gcd_acc(inv.M1, lam2() - *r.lo);
            }
            inv.M = gcd_acc(inv.M, lam2() - *r.hi);
            // |chi_k(T)| = gap_sqrt/2 only under R = L; M_{empty,X} only
            // makes sense (and only has integer inputs) when T is empty.
            if (r_eq_l && !r.chi_t_zero)
                inv.M_T = gcd_acc(inv.M_T, *r.gap_sqrt / 2);
            if (t_empty)
                inv.M_empty_X = gcd_acc(
                    inv.M_empty_X,
                    BigInt(x_size(x_is_right)) - chi_x_int(r, x_is_right));
        }
        return inv;
    }

    /**
     * PST between (gp, part 0) and (gq, part 1). Conditions checked in
     * the order: integrality, R = L, chi_k(T) != 0 for all k, the
     * valuation match v2(|chi_k(T)|) = v2(|T|), the gcd valuation bound
     * on M, and finally the per-character sign condition at the minimal
     * candidate time.
     */
    PstVerdict decide_cross(const GroupElement& gp, const GroupElement& gq) const {
        if (!table_.is_integral())
            return PstVerdict::no(FailureTag::NOT_INTEGRAL);
        if (!sets_equal(spec_.right(), spec_.left()))
            return PstVerdict::no(FailureTag::R_NEQ_L);

        for (const auto& r : table_.rows())
            if (r.chi_t_zero)
                return PstVerdict::no(FailureTag::CHI_T_ZERO, r.index);

        // R = L gives lam_{2k} - lam_{2k-1} = 2|chi_k(T)|, so |chi_k(T)|
        // = gap_sqrt/2 with v2 = v2(gap_sqrt) - 1.
        const Valuation vT = v2(BigInt(spec_.spokes().size()));
        for (const auto& r : table_.rows()) {
            Valuation va = v2(*r.gap_sqrt);  // finite: chi_k(T) != 0
            if (!(Valuation::of(va.value - 1) == vT))
                return PstVerdict::no(FailureTag::V2_MISMATCH, r.index);
        }

        BigInt M = 0, M_T = 0;
        for (const auto& r : table_.rows()) {
            M = gcd_acc(M, lam2() - *r.hi);
            M_T = gcd_acc(M_T, *r.gap_sqrt / 2);
        }
        if (M > 0) {
            Valuation vM = v2(M);
            if (!(vM.finite && vM.value > vT.value))
                return PstVerdict::no(FailureTag::V2_M_TOO_SMALL);
        }

        // Sign condition at t* = pi / gcd(2 M_T, M): the parity of
        // (lam2 - lam_{2k}) / gcd fixes exp(i t* (lam2 - lam_{2k})) = +-1,
        // and it is the same for every odd multiple of t*.
        const GroupSpec& g = table_.group();
        GroupElement d = g.op(gp, g.inverse(gq));
        BigInt div = gcd_acc(2 * M_T, M);
        for (const auto& r : table_.rows()) {
            BigInt ratio = M == 0 ? BigInt(0) : (lam2() - *r.hi) / div;
            int sigma = ratio % 2 == 0 ? 1 : -1;
            // chi_k(d) = sigma |chi_k(T)| / chi_k(T), exactly:
            // 2 chi_k(d) chi_k(T) - sigma gap_sqrt = 0 in Z[zeta_N].
            long e = g.character_exponent(r.label, d);
            CycInt lhs = r.chi_t.shifted(e) * BigInt(2) -
                         CycInt::integer(g.exponent(), sigma * *r.gap_sqrt);
            if (!lhs.is_zero())
                return PstVerdict::no(FailureTag::SIGN_MISMATCH, r.index);
        }

        TimeSet ts;
        ts.kind = TimeSet::Kind::ODD_MULTIPLES;
        ts.divisor = div;
        ts.zero_allowed = false;
        return PstVerdict::yes(ts);
    }

    /**
     * PST between (gp, part) and (gq, part). gp = gq routes to per-vertex
     * periodicity. For non-integral graphs the verdict is a definitive
     * rejection only when the graph is weakly inner-cospectral; otherwise
     * it is UNDECIDED_NONINTEGRAL (integrality is not known to be
     * necessary in that regime).
     */
    PstVerdict decide_same(int part, const GroupElement& gp,
                           const GroupElement& gq) const {
        const GroupSpec& g = table_.group();
        GroupElement d = g.op(gp, g.inverse(gq));
        if (d == g.identity())
            return periodicity(Vertex{gp, part});

        if (!table_.is_integral()) {
            if (table_.is_weakly_inner_cospectral())
                return PstVerdict::no(FailureTag::NOT_INTEGRAL);
            return PstVerdict::no(FailureTag::UNDECIDED_NONINTEGRAL);
        }

        if (g.element_order(d) != 2)
            return PstVerdict::no(FailureTag::ORDER_NOT_TWO);

        const bool x_is_right = part == 0;
        const bool t_empty = spec_.spokes().empty();

        // The valuation ladder: every Omega_- quantity must share one
        // finite valuation mu; every Omega_+/pair quantity must then sit
        // at valuation >= mu + 1.
        std::optional<long> mu;
        for (const auto& r : table_.rows()) {
            if (character_sign(r.index, d) != -1) continue;
            Valuation val = t_empty
                ? v2(BigInt(x_size(x_is_right)) - chi_x_int(r, x_is_right))
                : (r.chi_t_zero ? v2(lam2() - chi_x_int(r, x_is_right))
                                : v2(BigInt(lam2() - *r.lo)));
            if (!val.finite)
                return PstVerdict::no(FailureTag::MU_INCONSISTENT, r.index,
                                      "vanishing gap on a sign -1 character");
            if (mu && *mu != val.value)
                return PstVerdict::no(FailureTag::MU_INCONSISTENT, r.index,
                                      "sign -1 valuations disagree");
            mu = val.value;
        }
        // d has order 2, so some character takes the value -1 on it.
        if (!mu)
            throw std::logic_error("order-2 difference with empty Omega_-");

        for (const auto& r : table_.rows()) {
            int sign = character_sign(r.index, d);
            if (t_empty) {
                if (sign == 1 &&
                    !v2(BigInt(x_size(x_is_right)) - chi_x_int(r, x_is_right))
                         .at_least(*mu + 1))
                    return PstVerdict::no(FailureTag::MU_INCONSISTENT, r.index,
                                          "sign +1 valuation below mu+1");
                continue;
            }
            if (!r.chi_t_zero && !v2(BigInt(*r.hi - *r.lo)).at_least(*mu + 1))
                return PstVerdict::no(FailureTag::MU_INCONSISTENT, r.index,
                                      "intra-pair gap valuation below mu+1");
            if (sign != 1) continue;
            Valuation val = r.chi_t_zero ? v2(lam2() - chi_x_int(r, x_is_right))
                                         : v2(BigInt(lam2() - *r.lo));
            if (!val.at_least(*mu + 1))
                return PstVerdict::no(FailureTag::MU_INCONSISTENT, r.index,
                                      "sign +1 valuation below mu+1");
        }

        TimeSet ts;
        ts.zero_allowed = false;
        if (t_empty) {
            BigInt M_empty_X = 0;
            bool minus_all_full = true;
            for (const auto& r : table_.rows()) {
                BigInt gap = BigInt(x_size(x_is_right)) -
                             chi_x_int(r, x_is_right);
                M_empty_X = gcd_acc(M_empty_X, gap);
                if (character_sign(r.index, d) == -1 && gap != 0)
                    minus_all_full = false;
            }
            ts.kind = minus_all_full ? TimeSet::Kind::EVEN_MULTIPLES
                                     : TimeSet::Kind::ODD_MULTIPLES;
            ts.divisor = M_empty_X;
        } else {
            BigInt M0 = 0, M1 = 0, M_X = 0;
            for (const auto& r : table_.rows()) {
                if (r.chi_t_zero) {
                    M_X = gcd_acc(M_X, lam2() - chi_x_int(r, x_is_right));
                } else {
                    M0 = gcd_acc(M0, *r.hi - *r.lo);
                    M1 = gcd_acc(M1, lam2() - *r.lo);
                }
            }
            ts.kind = TimeSet::Kind::ODD_MULTIPLES;  // Omega_- is nonempty
            ts.divisor = gcd_acc(gcd_acc(M0, M1), M_X);
        }
        return PstVerdict::yes(ts, mu);
    }

    PstVerdict decide_pair(const Vertex& u, const Vertex& v) const {
        if (u.part == v.part) return decide_same(u.part, u.element, v.element);
        return u.part == 0 ? decide_cross(u.element, v.element)
                           : decide_cross(v.element, u.element);
    }

    /**
     * Graph-level (no vertex) or per-vertex periodicity. A bi-Cayley
     * graph over an abelian group is periodic iff it is integral; the
     * time set always excludes zero.
     */
    PstVerdict periodicity(std::optional<Vertex> vertex = std::nullopt) const {
        if (!table_.is_integral())
            return PstVerdict::no(FailureTag::NOT_INTEGRAL);
        TimeSet ts;
        ts.kind = TimeSet::Kind::EVEN_MULTIPLES;
        ts.zero_allowed = false;
        if (spec_.spokes().empty()) {
            BigInt d = 0;
            for (const auto& r : table_.rows()) {
                if (!vertex || vertex->part == 0)
                    d = gcd_acc(d, BigInt(spec_.right().size()) -
                                       chi_x_int(r, true));
                if (!vertex || vertex->part == 1)
                    d = gcd_acc(d, BigInt(spec_.left().size()) -
                                       chi_x_int(r, false));
            }
            ts.divisor = d;  // 0 for the edgeless graph: periodic at all t != 0
        } else {
            BigInt M0 = 0, M1 = 0, d = 0;
            for (const auto& r : table_.rows()) {
                if (r.chi_t_zero) {
                    if (!vertex || vertex->part == 0)
                        d = gcd_acc(d, lam2() - chi_x_int(r, true));
                    if (!vertex || vertex->part == 1)
                        d = gcd_acc(d, lam2() - chi_x_int(r, false));
                } else {
                    M0 = gcd_acc(M0, *r.hi - *r.lo);
                    M1 = gcd_acc(M1, lam2() - *r.lo);
                }
            }
            ts.divisor = gcd_acc(gcd_acc(M0, M1), d);
        }
        return PstVerdict::yes(ts);
    }

    /**
     * Direct evaluation of the fixed-time PST conditions at t =
     * (num/den) pi — an independent route that never consults the
     * TimeSets produced by decide_*.
     */
    bool check_conditions_at_time(const Vertex& u, const Vertex& v,
                                  const BigInt& num, const BigInt& den) const {
        if (den <= 0)
            throw std::invalid_argument("time denominator must be positive");
        if (u == v && num == 0) return true;
        require_integral("check_conditions_at_time");
        const GroupSpec& g = table_.group();

        if (u.part != v.part) {
            // Orient the difference as (part-0 element) - (part-1 element),
            // matching the sign condition's convention.
            const Vertex& p0 = u.part == 0 ? u : v;
            const Vertex& p1 = u.part == 0 ? v : u;
            GroupElement d = g.op(p0.element, g.inverse(p1.element));
            if (!sets_equal(spec_.right(), spec_.left())) return false;
            for (const auto& r : table_.rows()) {
                if (r.chi_t_zero) return false;
                // t (lam_{2k} - lam_{2k-1}) must be an odd multiple of pi
                if (!odd_multiple(num * *r.gap_sqrt, den)) return false;
                // t (lam2 - lam_{2k}) must be an integer multiple of pi
                BigInt q = num * (lam2() - *r.hi);
                if (q % den != 0) return false;
                int sigma = (q / den) % 2 == 0 ? 1 : -1;
                long e = g.character_exponent(r.label, d);
                CycInt lhs = r.chi_t.shifted(e) * BigInt(2) -
                             CycInt::integer(g.exponent(), sigma * *r.gap_sqrt);
                if (!lhs.is_zero()) return false;
            }
            return true;
        }

        GroupElement d = g.op(u.element, g.inverse(v.element));
        const bool x_is_right = u.part == 0;
        const bool t_empty = spec_.spokes().empty();
        for (const auto& r : table_.rows()) {
            int sign = character_sign(r.index, d);
            if (sign == 0) return false;
            // membership target: even multiple of pi for sign +1, odd for -1
            if (t_empty) {
                BigInt gap = BigInt(x_size(x_is_right)) -
                             chi_x_int(r, x_is_right);
                if (!parity_multiple(num * gap, den, sign == -1)) return false;
                continue;
            }
            if (!r.chi_t_zero) {
                if (!parity_multiple(num * (*r.hi - *r.lo), den, false))
                    return false;
                if (!parity_multiple(num * (lam2() - *r.lo), den, sign == -1))
                    return false;
            } else {
                BigInt gap = lam2() - chi_x_int(r, x_is_right);
                if (!parity_multiple(num * gap, den, sign == -1)) return false;
            }
        }
        return true;
    }

    struct PstPair {
        Vertex u, v;
        TimeSet times;
    };
    struct Survey {
        std::vector<PstPair> pairs;
        std::vector<std::pair<Vertex, Vertex>> undecided;
    };

    /**
     * Every unordered pair of distinct vertices with PST. Right
     * translation is a graph automorphism, so verdicts depend only on
     * (parts, difference): each difference is decided once and expanded.
     */
    Survey pst_pairs() const {
        Survey out;
        const GroupSpec& g = table_.group();
        const auto elems = g.enumerate_elements();

        for (int part = 0; part <= 1; ++part) {
            for (const auto& diff : elems) {
                if (g.element_order(diff) != 2) continue;  // Cor-level pruning
                PstVerdict ver = decide_same(part, diff, g.identity());
                if (!ver.exists && !ver.undecided) continue;
                for (const auto& e : elems) {
                    GroupElement other = g.op(diff, e);
                    if (g.element_index(e) >= g.element_index(other)) continue;
                    Vertex a{e, part}, b{other, part};
                    if (ver.exists)
                        out.pairs.push_back({a, b, *ver.times});
                    else
                        out.undecided.emplace_back(a, b);
                }
            }
        }

        if (sets_equal(spec_.right(), spec_.left())) {
            for (const auto& diff : elems) {
                PstVerdict ver = decide_cross(diff, g.identity());
                if (!ver.exists) continue;
                for (const auto& e : elems)
                    out.pairs.push_back(
                        {Vertex{g.op(diff, e), 0}, Vertex{e, 1}, *ver.times});
            }
        }

        auto key = [&](const PstPair& p) {
            return std::make_pair(spec_.vertex_index(p.u), spec_.vertex_index(p.v));
        };
        std::sort(out.pairs.begin(), out.pairs.end(),
                  [&](const PstPair& a, const PstPair& b) { return key(a) < key(b); });
        return out;
    }

private:
    void require_integral(const char* who) const {
        if (!table_.is_integral())
            throw std::domain_error(std::string(who) +
                                    ": spectrum is not integral");
    }

    const BigInt& lam2() const { return *table_.principal().hi; }

    long x_size(bool x_is_right) const {
        return static_cast<long>(x_is_right ? spec_.right().size()
                                            : spec_.left().size());
    }

    /// chi_k(X) as an exact integer; valid for k in H on integral graphs
    /// (there the eigenvalue pair is exactly {chi_k(R), chi_k(L)}).
    BigInt chi_x_int(const CharacterRow& r, bool x_is_right) const {
        const auto& o = x_is_right ? r.chi_r_int : r.chi_l_int;
        if (!o)
            throw std::logic_error("chi_k(X) expected to be integral");
        return *o;
    }

    static bool sets_equal(std::vector<GroupElement> a,
                           std::vector<GroupElement> b) {
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

    /// q/den an integer of the requested parity (odd when want_odd).
    static bool parity_multiple(const BigInt& q, const BigInt& den, bool want_odd) {
        if (want_odd) return q % den == 0 && (q / den) % 2 != 0;
        return q % (2 * den) == 0;
    }
    static bool odd_multiple(const BigInt& q, const BigInt& den) {
        return parity_multiple(q, den, true);
    }

    BiCayleySpec spec_;
    SpectrumTable table_;
};

}  // namespace pstkit
