#pragma once

// Free left pre-Lie algebra on one generator: non-planar rooted trees with
// the grafting product  s |> t = sum over vertices v of t of (t with s
// attached as a new child of v).

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dendrimag/errors.hpp"
#include "dendrimag/lincomb.hpp"

namespace dendrimag {

/// Rooted tree in canonical form: children sorted by their encodings.
/// Encoding: "a" for a single vertex, "a[c1,c2,...]" otherwise.
class RootedTree {
public:
    RootedTree() : code_("a"), degree_(1) {}

    explicit RootedTree(std::vector<RootedTree> children) : children_(std::move(children))
    {
        std::sort(children_.begin(), children_.end());
        degree_ = 1;
        code_ = "a";
        if (!children_.empty()) {
            code_ += "[";
            for (std::size_t i = 0; i < children_.size(); ++i) {
                if (i) code_ += ",";
                code_ += children_[i].code_;
                degree_ += children_[i].degree_;
            }
            code_ += "]";
        }
    }

    static RootedTree parse(std::string_view s)
    {
        std::size_t pos = 0;
        RootedTree t = parse_at(s, pos);
        if (pos != s.size()) throw ParseError("trailing characters in rooted tree '" + std::string(s) + "'");
        return t;
    }

    /// Chain of n vertices.
    static RootedTree ladder(std::size_t n)
    {
        RootedTree t;
        for (std::size_t k = 1; k < n; ++k) t = RootedTree(std::vector<RootedTree>{t});
        return t;
    }

    [[nodiscard]] const std::string& encoding() const { return code_; }
    [[nodiscard]] std::size_t degree() const { return degree_; }
    [[nodiscard]] const std::vector<RootedTree>& children() const { return children_; }

    friend bool operator<(const RootedTree& a, const RootedTree& b) { return a.code_ < b.code_; }
    friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.code_ == b.code_; }

private:
    static RootedTree parse_at(std::string_view s, std::size_t& pos)
    {
        if (pos >= s.size() || s[pos] != 'a') throw ParseError("expected 'a' in rooted tree '" + std::string(s) + "'");
        ++pos;
        std::vector<RootedTree> kids;
        if (pos < s.size() && s[pos] == '[') {
            ++pos;
            while (true) {
                kids.push_back(parse_at(s, pos));
                if (pos >= s.size()) throw ParseError("unterminated rooted tree '" + std::string(s) + "'");
                if (s[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (s[pos] == ']') {
                    ++pos;
                    break;
                }
                throw ParseError("unexpected character in rooted tree '" + std::string(s) + "'");
            }
        }
        return RootedTree(std::move(kids));
    }

    std::vector<RootedTree> children_;
    std::string code_;
    std::size_t degree_ = 1;
};

using RootedComb = LinComb<RootedTree>;

/// Every way of attaching s as a new child of a vertex of t (with repetition).
inline std::vector<RootedTree> graft_positions(const RootedTree& s, const RootedTree& t)
{
    std::vector<RootedTree> out;
    {
        auto kids = t.children();
        kids.push_back(s);
        out.emplace_back(std::move(kids));
    }
    for (std::size_t i = 0; i < t.children().size(); ++i) {
        for (auto& grafted : graft_positions(s, t.children()[i])) {
            auto kids = t.children();
            kids[i] = std::move(grafted);
            out.emplace_back(std::move(kids));
        }
    }
    return out;
}

inline RootedComb graft_basis(const RootedTree& s, const RootedTree& t)
{
    RootedComb out;
    for (const auto& g : graft_positions(s, t)) out.add_term(g, Rational(1));
    return out;
}

/// Bilinear grafting product s |> t.
inline RootedComb rt_graft(const RootedComb& s, const RootedComb& t)
{
    return bilinear<RootedTree, std::less<RootedTree>, RootedTree, std::less<RootedTree>, RootedComb>(
        s, t, [](const RootedTree& x, const RootedTree& y) { return graft_basis(x, y); });
}

/// All rooted trees with n vertices, sorted by encoding.
inline std::vector<RootedTree> enumerate_rooted(std::size_t n)
{
    if (n == 0) return {};
    std::set<RootedTree> level{RootedTree{}};
    for (std::size_t k = 1; k < n; ++k) {
        std::set<RootedTree> next;
        for (const auto& t : level)
            for (auto& g : graft_positions(RootedTree{}, t)) next.insert(std::move(g));
        level = std::move(next);
    }
    return {level.begin(), level.end()};
}

/// The free pre-Lie algebra on one generator as a coefficient space.
class FreePreLie {
public:
    using value_type = RootedComb;
    [[nodiscard]] RootedComb generator() const { return RootedComb(RootedTree{}); }
    [[nodiscard]] RootedComb zero() const { return {}; }
    [[nodiscard]] bool is_zero(const RootedComb& x) const { return x.is_zero(); }
    [[nodiscard]] std::size_t support_size(const RootedComb& x) const { return x.size(); }
    [[nodiscard]] RootedComb rhd(const RootedComb& a, const RootedComb& b) const { return rt_graft(a, b); }
};

} // namespace dendrimag
