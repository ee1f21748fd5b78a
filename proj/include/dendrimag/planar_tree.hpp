#pragma once

// The free dendriform algebra on one generator. Basis: planar binary trees
// with at least one internal node; the bare leaf "o" stands for the adjoined
// unit. Half-products follow Loday's recursion
//   s < t = s_l v (s_r * t),      s > t = (s * t_l) v t_r,
// with the leaf acting as the unit of *.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dendrimag/errors.hpp"
#include "dendrimag/lincomb.hpp"

namespace dendrimag {

using TreeId = std::uint32_t;
using PlanarComb = LinComb<TreeId>;

/// Free dendriform algebra on one generator.
///
/// Trees are hash-consed into integer ids owned by the instance, and basis
/// products are memoized. Copies share the same tables; an instance must not
/// be used from two threads at once (create one per thread instead).
class FreeDendriform {
public:
    using value_type = PlanarComb;
    static constexpr TreeId leaf_id = 0;

    FreeDendriform() : st_(std::make_shared<State>())
    {
        st_->nodes.push_back({leaf_id, leaf_id, 0});
    }

    [[nodiscard]] TreeId leaf() const { return leaf_id; }
    [[nodiscard]] TreeId generator_tree() const { return node(leaf_id, leaf_id); }
    [[nodiscard]] PlanarComb generator() const { return PlanarComb(generator_tree()); }
    [[nodiscard]] PlanarComb basis(TreeId t) const { return PlanarComb(t); }

    [[nodiscard]] TreeId node(TreeId l, TreeId r) const
    {
        const std::uint64_t key = pack(l, r);
        if (auto it = st_->intern.find(key); it != st_->intern.end()) return it->second;
        const auto id = static_cast<TreeId>(st_->nodes.size());
        st_->nodes.push_back({l, r, degree(l) + degree(r) + 1});
        st_->intern.emplace(key, id);
        return id;
    }

    [[nodiscard]] bool is_leaf(TreeId t) const { return t == leaf_id; }
    [[nodiscard]] TreeId left(TreeId t) const { return st_->nodes.at(t).left; }
    [[nodiscard]] TreeId right(TreeId t) const { return st_->nodes.at(t).right; }
    [[nodiscard]] std::size_t degree(TreeId t) const { return st_->nodes.at(t).degree; }

    /// "o" for the leaf, "(L^R)" for a node.
    [[nodiscard]] std::string to_string(TreeId t) const
    {
        if (is_leaf(t)) return "o";
        return "(" + to_string(left(t)) + "^" + to_string(right(t)) + ")";
    }

    [[nodiscard]] TreeId parse(std::string_view s) const
    {
        std::size_t pos = 0;
        const TreeId t = parse_at(s, pos);
        if (pos != s.size()) throw ParseError("trailing characters in planar tree '" + std::string(s) + "'");
        return t;
    }

    /// All trees with exactly n internal nodes (Catalan(n) of them), in a
    /// fixed order: by left-subtree degree, then recursively.
    [[nodiscard]] std::vector<TreeId> enumerate(std::size_t n) const
    {
        if (n == 0) return {leaf_id};
        std::vector<TreeId> out;
        for (std::size_t k = 0; k < n; ++k)
            for (TreeId l : enumerate(k))
                for (TreeId r : enumerate(n - 1 - k)) out.push_back(node(l, r));
        return out;
    }

    // coefficient-space contract
    [[nodiscard]] PlanarComb zero() const { return {}; }
    [[nodiscard]] bool is_zero(const PlanarComb& x) const { return x.is_zero(); }
    [[nodiscard]] std::size_t support_size(const PlanarComb& x) const { return x.size(); }

    [[nodiscard]] PlanarComb prec(const PlanarComb& x, const PlanarComb& y) const
    {
        return bilinear<TreeId, std::less<TreeId>, TreeId, std::less<TreeId>, PlanarComb>(
            x, y, [this](TreeId s, TreeId t) -> const PlanarComb& { return basis_prec(s, t); });
    }
    [[nodiscard]] PlanarComb succ(const PlanarComb& x, const PlanarComb& y) const
    {
        return bilinear<TreeId, std::less<TreeId>, TreeId, std::less<TreeId>, PlanarComb>(
            x, y, [this](TreeId s, TreeId t) -> const PlanarComb& { return basis_succ(s, t); });
    }

    /// s < t on basis trees of positive degree.
    [[nodiscard]] const PlanarComb& basis_prec(TreeId s, TreeId t) const
    {
        require_positive(s, t);
        const std::uint64_t key = pack(s, t);
        if (auto it = st_->prec_memo.find(key); it != st_->prec_memo.end()) return it->second;
        PlanarComb out;
        const TreeId sl = left(s);
        for (const auto& [u, c] : unit_star(right(s), t)) out.add_term(node(sl, u), c);
        return st_->prec_memo.emplace(key, std::move(out)).first->second;
    }

    /// s > t on basis trees of positive degree.
    [[nodiscard]] const PlanarComb& basis_succ(TreeId s, TreeId t) const
    {
        require_positive(s, t);
        const std::uint64_t key = pack(s, t);
        if (auto it = st_->succ_memo.find(key); it != st_->succ_memo.end()) return it->second;
        PlanarComb out;
        const TreeId tr = right(t);
        for (const auto& [u, c] : unit_star(s, left(t))) out.add_term(node(u, tr), c);
        return st_->succ_memo.emplace(key, std::move(out)).first->second;
    }

private:
    struct Node {
        TreeId left;
        TreeId right;
        std::size_t degree;
    };
    struct State {
        std::vector<Node> nodes;
        std::unordered_map<std::uint64_t, TreeId> intern;
        std::unordered_map<std::uint64_t, PlanarComb> prec_memo;
        std::unordered_map<std::uint64_t, PlanarComb> succ_memo;
    };

    static std::uint64_t pack(TreeId a, TreeId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }

    void require_positive(TreeId s, TreeId t) const
    {
        if (is_leaf(s) && is_leaf(t)) throw UndefinedUnitProduct("half-product of two unit trees");
        if (is_leaf(s) || is_leaf(t)) throw Error("half-products with the unit tree go through UnitalDendriform");
    }

    // s * t where either side may be the leaf (unit), never both.
    [[nodiscard]] PlanarComb unit_star(TreeId s, TreeId t) const
    {
        if (is_leaf(s)) return PlanarComb(t);
        if (is_leaf(t)) return PlanarComb(s);
        return basis_prec(s, t) + basis_succ(s, t);
    }

    TreeId parse_at(std::string_view s, std::size_t& pos) const
    {
        if (pos >= s.size()) throw ParseError("unexpected end of planar tree");
        if (s[pos] == 'o') {
            ++pos;
            return leaf_id;
        }
        if (s[pos] != '(') throw ParseError("unexpected character in planar tree '" + std::string(s) + "'");
        ++pos;
        const TreeId l = parse_at(s, pos);
        if (pos >= s.size() || s[pos] != '^') throw ParseError("expected '^' in planar tree");
        ++pos;
        const TreeId r = parse_at(s, pos);
        if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')' in planar tree");
        ++pos;
        return node(l, r);
    }

    std::shared_ptr<State> st_;
};

/// Catalan number C_n, used as an enumeration self-check.
inline std::uint64_t catalan(std::size_t n)
{
    std::uint64_t c = 1;
    for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
    return c;
}

/// Indented drawing of a planar binary tree ("^" = internal node, "o" = leaf).
inline std::string render_ascii(const FreeDendriform& fd, TreeId t)
{
    std::string out;
    auto rec = [&](auto&& self, TreeId u, const std::string& prefix, const std::string& branch) -> void {
        out += prefix + branch + (fd.is_leaf(u) ? "o" : "^") + "\n";
        if (fd.is_leaf(u)) return;
        const std::string child_prefix = prefix + (branch.empty() ? "" : (branch == "+-" ? "| " : "  "));
        self(self, fd.left(u), child_prefix, "+-");
        self(self, fd.right(u), child_prefix, "`-");
    };
    rec(rec, t, "", "");
    return out;
}

} // namespace dendrimag
