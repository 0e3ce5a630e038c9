#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "words.hpp"

namespace hopfcomb {

namespace detail {

/// Canonical code of the rooted tree hanging at `node`: "(" + sorted child
/// codes + ")".  Isomorphic rooted trees get equal codes.
inline std::string rooted_tree_code(int node, const std::vector<std::vector<int>>& tree_children) {
    std::vector<std::string> kids;
    for (int c : tree_children[static_cast<std::size_t>(node)])
        kids.push_back(rooted_tree_code(c, tree_children));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
}

}  // namespace detail

/// Canonical isomorphism-class code of the functional graph of an
/// endofunction: each connected component is a cycle of rooted trees, encoded
/// as the lexicographically minimal rotation of its tree-code sequence; the
/// graph code sorts and joins the component codes.
inline std::string functional_graph_code(const Word& f) {
    int n = f.size();
    // cyclic nodes: those with f^k(i) = i for some k <= n
    std::vector<bool> cyclic(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= n; ++i) {
        int j = i;
        for (int k = 0; k < n; ++k) j = f.letter(j);
        // after n steps we are on a cycle; mark that whole cycle
        int s = j;
        do {
            cyclic[static_cast<std::size_t>(j)] = true;
            j = f.letter(j);
        } while (j != s);
    }
    std::vector<std::vector<int>> tree_children(static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i)
        if (!cyclic[static_cast<std::size_t>(i)]) tree_children[static_cast<std::size_t>(f.letter(i))].push_back(i);

    std::vector<std::string> components;
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (!cyclic[static_cast<std::size_t>(i)] || seen[static_cast<std::size_t>(i)]) continue;
        std::vector<std::string> codes;
        int j = i;
        do {
            seen[static_cast<std::size_t>(j)] = true;
            codes.push_back(detail::rooted_tree_code(j, tree_children));
            j = f.letter(j);
        } while (j != i);
        // minimal rotation of the sequence of tree codes
        std::vector<std::string> best = codes, cur = codes;
        for (std::size_t r = 1; r < codes.size(); ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
        std::string comp = "[";
        for (const auto& c : best) comp += c;
        components.push_back(comp + "]");
    }
    std::sort(components.begin(), components.end());
    std::string g;
    for (const auto& c : components) g += c;
    return g;
}

/// A functional graph up to isomorphism, as (degree, canonical code).
struct GraphKey {
    int n = 0;
    std::string code;

    std::strong_ordering operator<=>(const GraphKey& o) const {
        if (n != o.n) return n <=> o.n;
        return code.compare(o.code) <=> 0;
    }
    bool operator==(const GraphKey& o) const = default;

    std::string str() const { return code.empty() ? "[]" : code; }
};

inline GraphKey graph_key_of(const Word& f) { return GraphKey{f.size(), functional_graph_code(f)}; }

/// Does the code describe a forest of rooted trees, i.e. all cycles are
/// loops?  (Each component is then "[T]" for a single tree code T.)
inline bool is_forest_code(const std::string& code) {
    // a non-loop cycle produces "[(...)(...)" with two or more top-level
    // tree codes inside some bracket pair
    int depth = 0, trees_in_component = 0;
    for (char ch : code) {
        if (ch == '[') {
            trees_in_component = 0;
        } else if (ch == ']') {
            if (trees_in_component != 1) return false;
        } else if (ch == '(') {
            if (depth == 0) ++trees_in_component;
            ++depth;
        } else if (ch == ')') {
            --depth;
        }
    }
    return true;
}

}  // namespace hopfcomb
