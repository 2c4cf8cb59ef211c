// Bi-Cayley graphs over finite abelian groups: two copies of the group
// (part 0 and part 1), intra-part edges from inverse-closed connection
// sets R and L, and spokes from an arbitrary subset T.

#pragma once

#include "pstkit/abelian.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

namespace pstkit {

struct Vertex {
    GroupElement element;
    int part = 0;  // 0 or 1

    bool operator==(const Vertex& o) const {
        return part == o.part && element == o.element;
    }
};

namespace detail {

inline std::string element_str(const GroupElement& g) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) os << ',';
        os << g[i];
    }
    os << ')';
    return os.str();
}

}  // namespace detail

/**
 * BiCay(G; R, L, T). Vertices are G x {0,1}; (g,0)~(h,0) iff hg^{-1} in R,
 * (g,1)~(h,1) iff hg^{-1} in L, (g,0)~(h,1) iff hg^{-1} in T.
 */
class BiCayleySpec {
public:
    BiCayleySpec(GroupSpec group, std::vector<GroupElement> right,
                 std::vector<GroupElement> left, std::vector<GroupElement> spokes)
        : group_(std::move(group)),
          right_(std::move(right)),
          left_(std::move(left)),
          spokes_(std::move(spokes)) {
        validate_set(right_, "R", /*require_symmetric=*/true);
        validate_set(left_, "L", /*require_symmetric=*/true);
        validate_set(spokes_, "T", /*require_symmetric=*/false);
    }

    const GroupSpec& group() const { return group_; }
    const std::vector<GroupElement>& right() const { return right_; }
    const std::vector<GroupElement>& left() const { return left_; }
    const std::vector<GroupElement>& spokes() const { return spokes_; }

    long vertex_count() const { return 2 * group_.size(); }

    /// Canonical vertex order: all of part 0 in enumeration order, then part 1.
    std::vector<Vertex> vertices() const {
        std::vector<Vertex> vs;
        vs.reserve(static_cast<std::size_t>(vertex_count()));
        for (int part = 0; part <= 1; ++part)
            for (const auto& g : group_.enumerate_elements())
                vs.push_back(Vertex{g, part});
        return vs;
    }

    long vertex_index(const Vertex& v) const {
        return group_.element_index(v.element) +
               (v.part == 0 ? 0 : group_.size());
    }

    /// Dense 0/1 adjacency matrix in canonical vertex order.
    std::vector<std::vector<int>> adjacency() const {
        const long n = group_.size();
        const auto elems = group_.enumerate_elements();
        std::vector<std::vector<int>> a(
            static_cast<std::size_t>(2 * n),
            std::vector<int>(static_cast<std::size_t>(2 * n), 0));
        auto stamp = [&](const std::vector<GroupElement>& conn, long row_off,
                         long col_off) {
            for (long i = 0; i < n; ++i)
                for (const auto& d : conn) {
                    long j = group_.element_index(group_.op(d, elems[static_cast<std::size_t>(i)]));
                    a[static_cast<std::size_t>(row_off + i)]
                     [static_cast<std::size_t>(col_off + j)] = 1;
                }
        };
        stamp(right_, 0, 0);
        stamp(left_, n, n);
        // Spokes: (g,0)~(tg,1); stamp both orientations.
        for (long i = 0; i < n; ++i)
            for (const auto& t : spokes_) {
                long j = group_.element_index(group_.op(t, elems[static_cast<std::size_t>(i)]));
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)] = 1;
                a[static_cast<std::size_t>(n + j)][static_cast<std::size_t>(i)] = 1;
            }
        return a;
    }

    bool is_connected() const {
        const auto a = adjacency();
        const std::size_t n = a.size();
        if (n == 0) return true;
        std::vector<char> seen(n, 0);
        std::queue<std::size_t> q;
        q.push(0);
        seen[0] = 1;
        std::size_t reached = 1;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (a[u][v] && !seen[v]) {
                    seen[v] = 1;
                    ++reached;
                    q.push(v);
                }
        }
        return reached == n;
    }

private:
    void validate_set(std::vector<GroupElement>& s, const char* name,
                      bool require_symmetric) {
        for (auto& g : s) g = group_.reduce(g);
        std::vector<GroupElement> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end())
            throw invalid_spec(std::string("connection set ") + name +
                               " has duplicate element " +
                               detail::element_str(*dup));
        if (require_symmetric) {
            const auto id = group_.identity();
            for (const auto& g : s) {
                if (g == id)
                    throw invalid_spec(std::string("connection set ") + name +
                                       " contains the identity");
                if (!std::binary_search(sorted.begin(), sorted.end(),
                                        group_.inverse(g)))
                    throw invalid_spec(std::string("connection set ") + name +
                                       " is not inverse-closed: missing inverse of " +
                                       detail::element_str(g));
            }
        }
    }

    GroupSpec group_;
    std::vector<GroupElement> right_;
    std::vector<GroupElement> left_;
    std::vector<GroupElement> spokes_;
};

}  // namespace pstkit
