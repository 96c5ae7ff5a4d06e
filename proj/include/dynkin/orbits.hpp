#pragma once

// Closure order on nilpotent orbits of classical algebras, indexed by
// partitions, and the strict decrease of the sl2 index toward the boundary.

#include "dynkin/rational.hpp"
#include "dynkin/sl2index.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dynkin {

/// All partitions of n in reverse-lexicographic order, starting with (n).
inline std::vector<Partition> partitions_of(int n) {
    if (n < 1) throw std::invalid_argument("partitions need n >= 1");
    std::vector<Partition> out;
    std::vector<int> cur{n};
    while (true) {
        out.emplace_back(cur);
        // Next in reverse-lex: find the last part > 1, decrement it, and
        // redistribute the remainder greedily.
        int rem = 0;
        while (!cur.empty() && cur.back() == 1) {
            ++rem;
            cur.pop_back();
        }
        if (cur.empty()) break;
        const int k = --cur.back();
        ++rem;
        while (rem > 0) {
            cur.push_back(std::min(k, rem));
            rem -= cur.back();
        }
    }
    return out;
}

/// Partitions labelling nilpotent orbits of sl_n, sp_n or so_n.
inline std::vector<Partition> enumerate_orbits(ClassicalKind kind, int n) {
    if (kind == ClassicalKind::SP && n % 2 != 0) {
        throw std::invalid_argument("sp_n needs even n, got " + std::to_string(n));
    }
    std::vector<Partition> out;
    for (auto& p : partitions_of(n)) {
        if (validate_partition(kind, p)) out.push_back(std::move(p));
    }
    return out;
}

/// Dominance order: every partial sum of upper is at least that of lower.
inline bool dominates(const Partition& upper, const Partition& lower) {
    if (upper.size() != lower.size()) return false;
    int su = 0;
    int sl = 0;
    for (std::size_t i = 0; i < std::max(upper.length(), lower.length()); ++i) {
        su += i < upper.length() ? upper[i] : 0;
        sl += i < lower.length() ? lower[i] : 0;
        if (su < sl) return false;
    }
    return true;
}

/// Partitions reached from p by one elementary degeneration: either move a
/// box from row i to row i+1 when lambda_i >= lambda_{i+1} + 2, or collapse a
/// fragment (a+1, a^k, a-1) to (a^{k+2}).  p is padded with zeros.
inline std::vector<Partition> degeneration_moves(const Partition& p) {
    std::vector<int> padded = p.parts();
    padded.push_back(0);
    std::set<Partition> out;
    auto emit = [&](std::vector<int> v) {
        std::erase(v, 0);
        out.insert(Partition(std::move(v)));
    };
    for (std::size_t i = 0; i + 1 < padded.size(); ++i) {
        if (padded[i] >= padded[i + 1] + 2) {
            auto v = padded;
            --v[i];
            ++v[i + 1];
            emit(std::move(v));
        }
        const int a = padded[i] - 1;
        if (a < 1) continue;
        std::size_t j = i + 1;
        while (j < padded.size() && padded[j] == a) ++j;
        if (j < padded.size() && padded[j] == a - 1) {
            auto v = padded;
            v[i] = a;
            v[j] = a;
            emit(std::move(v));
        }
    }
    return {out.rbegin(), out.rend()};
}

struct OrbitPoset {
    ClassicalKind kind;
    int n = 0;
    std::vector<Partition> nodes;                     // reverse-lex order
    std::vector<std::pair<std::size_t, std::size_t>> covers;  // (upper, lower) node indices

    std::optional<std::size_t> find(const Partition& p) const {
        const auto it = std::find(nodes.begin(), nodes.end(), p);
        if (it == nodes.end()) return std::nullopt;
        return static_cast<std::size_t>(it - nodes.begin());
    }

    /// Index of the sl2 attached to each node; nullopt for the zero orbit.
    std::optional<Rational> index(std::size_t node) const {
        if (nodes[node].is_zero()) return std::nullopt;
        return sl2_index_classical(kind, nodes[node]);
    }
};

/// Covering relations of a dominance-ordered set of partitions.
inline std::vector<std::pair<std::size_t, std::size_t>> dominance_covers(
    const std::vector<Partition>& nodes) {
    const std::size_t m = nodes.size();
    std::vector<std::vector<bool>> above(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) above[i][j] = i != j && dominates(nodes[i], nodes[j]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!above[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < m && direct; ++k) direct = !(above[i][k] && above[k][j]);
            if (direct) covers.emplace_back(i, j);
        }
    }
    return covers;
}

/// Covers obtained from the elementary moves on all partitions of n.
inline std::vector<std::pair<std::size_t, std::size_t>> move_covers(
    const std::vector<Partition>& nodes) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (const auto& q : degeneration_moves(nodes[i])) {
            const auto it = std::find(nodes.begin(), nodes.end(), q);
            if (it != nodes.end()) out.emplace_back(i, static_cast<std::size_t>(it - nodes.begin()));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Orbit closure poset: dominance order restricted to admissible partitions.
/// For sl the covers are also checked against the elementary moves.
inline OrbitPoset build_poset(ClassicalKind kind, int n) {
    OrbitPoset poset{kind, n, enumerate_orbits(kind, n), {}};
    poset.covers = dominance_covers(poset.nodes);
    std::sort(poset.covers.begin(), poset.covers.end());
    if (kind == ClassicalKind::SL && poset.covers != move_covers(poset.nodes)) {
        throw std::logic_error("dominance covers of partitions of " + std::to_string(n) +
                               " differ from the elementary moves");
    }
    return poset;
}

/// Strict decrease of the index along every cover with a nonzero lower end.
inline bool monotonicity_check(ClassicalKind kind, int n) {
    const OrbitPoset poset = build_poset(kind, n);
    for (const auto& [u, l] : poset.covers) {
        const auto lower = poset.index(l);
        if (!lower) continue;
        if (!(*lower < *poset.index(u))) return false;
    }
    return true;
}

/// Strict decrease for every comparable pair of nonzero orbits, not only covers.
inline bool comparability_check(ClassicalKind kind, int n) {
    const auto nodes = enumerate_orbits(kind, n);
    for (const auto& u : nodes) {
        for (const auto& l : nodes) {
            if (u == l || l.is_zero() || !dominates(u, l)) continue;
            if (!(sl2_index_classical(kind, l) < sl2_index_classical(kind, u))) return false;
        }
    }
    return true;
}

/// Graphviz rendering of the Hasse diagram, one node per orbit labelled by
/// its partition and index.
inline std::string to_dot(const OrbitPoset& poset) {
    std::ostringstream os;
    os << "digraph \"" << kind_name(poset.kind) << poset.n << "\" {\n";
    os << "  rankdir=TB;\n  node [shape=box];\n";
    for (std::size_t i = 0; i < poset.nodes.size(); ++i) {
        const auto idx = poset.index(i);
        os << "  n" << i << " [label=\"(" << poset.nodes[i].str() << ")\\nindex "
           << (idx ? idx->str() : std::string("0")) << "\"];\n";
    }
    for (const auto& [u, l] : poset.covers) os << "  n" << u << " -> n" << l << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace dynkin
