// Z_2-type extensions of abelian groups (dihedral, generalized dihedral,
// semi-dihedral, generalized quaternion) and the translation between
// Cayley graphs over such extensions and bi-Cayley graphs over the
// abelian base: Cay(G~, S~) ~ BiCay(G; S~ cap G, phi(S~ cap G), b S~ cap G)
// under the vertex map g -> g_0, bg -> g_1.

#pragma once

#include "pstkit/bicayley.hpp"
#include "pstkit/pst.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace pstkit {

/**
 * G~ = <G, b> with [G~ : G] = 2, described by the involution
 * phi(g) = b g b^{-1} (as images of the canonical generators e_i of the
 * product-of-cyclic base) and by b^2, an element of G fixed by phi.
 */
class ExtensionSpec {
public:
    ExtensionSpec(GroupSpec base, std::vector<GroupElement> phi_images,
                  GroupElement b_squared)
        : base_(std::move(base)),
          phi_images_(std::move(phi_images)),
          b_squared_(base_.reduce(b_squared)) {
        if (phi_images_.size() != base_.arity())
            throw invalid_spec("extension: one phi image per cyclic factor required");
        for (auto& img : phi_images_) img = base_.reduce(img);
        for (std::size_t i = 0; i < base_.arity(); ++i) {
            GroupElement e(base_.arity(), 0);
            e[i] = base_.orders()[i] == 1 ? 0 : 1;
            if (phi(phi(e)) != e)
                throw invalid_spec("extension: phi must be an involution");
        }
        if (phi(b_squared_) != b_squared_)
            throw invalid_spec("extension: phi must fix b^2");
    }

    /// Dihedral-style extension: phi = inversion, with a chosen b^2.
    static ExtensionSpec inversion(GroupSpec base, GroupElement b_squared) {
        std::vector<GroupElement> imgs;
        for (std::size_t i = 0; i < base.arity(); ++i) {
            GroupElement e(base.arity(), 0);
            e[i] = base.orders()[i] == 1 ? 0 : base.orders()[i] - 1;
            imgs.push_back(e);
        }
        return ExtensionSpec(std::move(base), std::move(imgs), std::move(b_squared));
    }

    const GroupSpec& base() const { return base_; }
    const GroupElement& b_squared() const { return b_squared_; }

    GroupElement phi(const GroupElement& g) const {
        base_.check(g);
        GroupElement out = base_.identity();
        for (std::size_t i = 0; i < base_.arity(); ++i) {
            std::vector<long> scaled(base_.arity());
            for (std::size_t j = 0; j < base_.arity(); ++j)
                scaled[j] = phi_images_[i][j] * g[i];
            out = base_.op(out, base_.reduce(scaled));
        }
        return out;
    }

    /// b^eps g for eps in {0,1}.
    struct Element {
        int eps = 0;
        GroupElement g;
        bool operator==(const Element& o) const {
            return eps == o.eps && g == o.g;
        }
        bool operator<(const Element& o) const {
            return std::tie(eps, g) < std::tie(o.eps, o.g);
        }
    };

    long size() const { return 2 * base_.size(); }

    /// (b^e1 g1)(b^e2 g2) = b^{e1+e2} phi^{e2}(g1) g2, folding b^2 into G.
    Element mul(const Element& x, const Element& y) const {
        Element out;
        GroupElement moved = y.eps == 1 ? phi(x.g) : x.g;
        out.g = base_.op(moved, y.g);
        if (x.eps + y.eps == 2) {
            out.eps = 0;
            out.g = base_.op(b_squared_, out.g);
        } else {
            out.eps = x.eps + y.eps;
        }
        return out;
    }

    Element inverse(const Element& x) const {
        if (x.eps == 0) return {0, base_.inverse(x.g)};
        // (bg)^{-1} = b (b^2)^{-1} phi(g^{-1})
        return {1, base_.op(base_.inverse(b_squared_), phi(base_.inverse(x.g)))};
    }

    /// Canonical vertex order: G in enumeration order, then bG.
    std::vector<Element> enumerate() const {
        std::vector<Element> out;
        for (int eps = 0; eps <= 1; ++eps)
            for (const auto& g : base_.enumerate_elements())
                out.push_back({eps, g});
        return out;
    }

    long index(const Element& x) const {
        return base_.element_index(x.g) + (x.eps == 0 ? 0 : base_.size());
    }

private:
    GroupSpec base_;
    std::vector<GroupElement> phi_images_;
    GroupElement b_squared_;
};

/**
 * A connection set S~ split into its G part and its bG part:
 * inG = S~ cap G, inBG = {g : bg in S~}.
 */
struct CayleySet {
    std::vector<GroupElement> in_g;
    std::vector<GroupElement> in_bg;
};

struct invalid_cayley_set : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 1 not in S~ and S~ = S~^{-1}, expressed on the two halves: inG is
/// identity-free and inverse-closed; g in inBG forces phi(g^{-1})(b^2)^{-1}
/// in inBG (the closure of (bg)^{-1}).
inline void validate_cayley_set(const ExtensionSpec& ext, const CayleySet& s) {
    const GroupSpec& g = ext.base();
    auto contains = [](const std::vector<GroupElement>& set, const GroupElement& x) {
        return std::find(set.begin(), set.end(), x) != set.end();
    };
    for (const auto& a : s.in_g) {
        if (a == g.identity())
            throw invalid_cayley_set("connection set contains the identity");
        if (!contains(s.in_g, g.inverse(a)))
            throw invalid_cayley_set("G half not inverse-closed at " +
                                     detail::element_str(a));
    }
    for (const auto& a : s.in_bg) {
        GroupElement need = g.op(ext.phi(g.inverse(a)), g.inverse(ext.b_squared()));
        if (!contains(s.in_bg, need))
            throw invalid_cayley_set("bG half not inverse-closed at b*" +
                                     detail::element_str(a));
    }
}

inline BiCayleySpec cayley_to_bicayley(const ExtensionSpec& ext, const CayleySet& s) {
    validate_cayley_set(ext, s);
    std::vector<GroupElement> left;
    left.reserve(s.in_g.size());
    for (const auto& a : s.in_g) left.push_back(ext.phi(a));
    return BiCayleySpec(ext.base(), s.in_g, std::move(left), s.in_bg);
}

/// Inverse direction for R = L: the generalized dihedral extension
/// (phi = inversion, b^2 = 1) with S~ = R u bT.
inline std::pair<ExtensionSpec, CayleySet> bicayley_to_gendihedral_cayley(
    const BiCayleySpec& spec) {
    std::vector<GroupElement> r = spec.right(), l = spec.left();
    std::sort(r.begin(), r.end());
    std::sort(l.begin(), l.end());
    if (r != l)
        throw invalid_spec("gendihedral conversion requires R = L");
    ExtensionSpec ext =
        ExtensionSpec::inversion(spec.group(), spec.group().identity());
    CayleySet s{spec.right(), spec.spokes()};
    validate_cayley_set(ext, s);
    return {std::move(ext), std::move(s)};
}

/// Adjacency of Cay(G~, S~) in the canonical order (G then bG) — built
/// purely from the extension multiplication, for round-trip checks.
inline std::vector<std::vector<int>> cayley_adjacency(const ExtensionSpec& ext,
                                                      const CayleySet& s) {
    validate_cayley_set(ext, s);
    auto verts = ext.enumerate();
    const std::size_t n = verts.size();
    auto in_s = [&](const ExtensionSpec::Element& x) {
        const auto& half = x.eps == 0 ? s.in_g : s.in_bg;
        return std::find(half.begin(), half.end(), x.g) != half.end();
    };
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (in_s(ext.mul(verts[j], ext.inverse(verts[i])))) a[i][j] = 1;
    return a;
}

/// S~ closed under conjugation by every element of the extension.
inline bool is_normal_connection_set(const ExtensionSpec& ext, const CayleySet& s) {
    validate_cayley_set(ext, s);
    auto in_s = [&](const ExtensionSpec::Element& x) {
        const auto& half = x.eps == 0 ? s.in_g : s.in_bg;
        return std::find(half.begin(), half.end(), x.g) != half.end();
    };
    std::vector<ExtensionSpec::Element> sset;
    for (const auto& g : s.in_g) sset.push_back({0, g});
    for (const auto& g : s.in_bg) sset.push_back({1, g});
    for (const auto& x : ext.enumerate())
        for (const auto& sv : sset)
            if (!in_s(ext.mul(ext.mul(x, sv), ext.inverse(x)))) return false;
    return true;
}

/// Machine-checkable expectations attached to a generated family member.
struct ExampleFixture {
    std::string family;
    long m = 0;
    // Differences gp - gq of the expected PST pairs; same-part diffs apply
    // to both parts, cross diffs to (part 0, part 1) pairs.
    std::vector<GroupElement> same_part_diffs;
    std::vector<GroupElement> cross_diffs;
    TimeSet pst_times;
    TimeSet periodic_times;
};

struct ExampleGraph {
    ExtensionSpec extension;
    CayleySet connection;
    ExampleFixture expected;
};

/**
 * The three worked families:
 *   dihedral(m):    D_{16m}-type over Z_{8m}, S~ = odd powers u {b a^{2m}, b a^{6m}};
 *                   PST {a^i, a^{i+4m}} in each part at (1+2z)pi/2.
 *   gendihedral(m): over Z_{8m} x Z_2, S~ = odd powers u {a^{4m} h, b};
 *                   cross PST at difference (4m, 1) at (1+2z)pi/2.
 *   quaternion(m):  Q_{8m}-type (b^2 = a^m) over Z_{2m}, m even,
 *                   S~ = {a^{m/2}, a^{3m/2}} u b<a>; PST {u, u a^m} at (1+2z)pi/2.
 * All three are periodic exactly on pi Z \ {0}.
 */
inline ExampleGraph example_family(const std::string& family, long m) {
    if (m < 1) throw invalid_spec("example family: m must be >= 1");
    TimeSet half_pi_odd{TimeSet::Kind::ODD_MULTIPLES, 2, false};
    TimeSet pi_even{TimeSet::Kind::EVEN_MULTIPLES, 2, false};

    if (family == "dihedral") {
        GroupSpec g = make_group({8 * m});
        ExtensionSpec ext = ExtensionSpec::inversion(g, g.identity());
        CayleySet s;
        for (long j = 1; j < 8 * m; j += 2) s.in_g.push_back({j});
        s.in_bg = {{2 * m}, {6 * m}};
        ExampleFixture fx{"dihedral", m, {{4 * m}}, {}, half_pi_odd, pi_even};
        return {std::move(ext), std::move(s), std::move(fx)};
    }
    if (family == "gendihedral") {
        GroupSpec g = make_group({8 * m, 2});
        ExtensionSpec ext = ExtensionSpec::inversion(g, g.identity());
        CayleySet s;
        for (long j = 1; j < 8 * m; j += 2) s.in_g.push_back({j, 0});
        s.in_g.push_back({4 * m, 1});
        s.in_bg = {g.identity()};
        ExampleFixture fx{"gendihedral", m, {}, {{4 * m, 1}}, half_pi_odd, pi_even};
        return {std::move(ext), std::move(s), std::move(fx)};
    }
    if (family == "quaternion") {
        if (m % 2 != 0)
            throw invalid_spec("quaternion family requires even m");
        GroupSpec g = make_group({2 * m});
        ExtensionSpec ext = ExtensionSpec::inversion(g, {m});
        CayleySet s;
        s.in_g = {{m / 2}, {3 * m / 2}};
        for (long j = 0; j < 2 * m; ++j) s.in_bg.push_back({j});
        ExampleFixture fx{"quaternion", m, {{m}}, {}, half_pi_odd, pi_even};
        return {std::move(ext), std::move(s), std::move(fx)};
    }
    throw invalid_spec("unknown example family: " + family);
}

}  // namespace pstkit
