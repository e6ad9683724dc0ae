/*
   Copyright 2026 The mqg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MQG_QUIVER_HPP
#define MQG_QUIVER_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mqg/cyclotomic.hpp"
#include "mqg/error.hpp"

namespace mqg {

// ---------------------------------------------------------------------------
// Finite groups and Hopf quivers
// ---------------------------------------------------------------------------

/// A finite group given by its Cayley table; element 0 is the unit.
class FiniteGroup {
   public:
    explicit FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
        int n = order();
        if (n == 0) throw ParameterError("empty group");
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n) throw ParameterError("Cayley table is not square");
            for (int x : row)
                if (x < 0 || x >= n) throw ParameterError("Cayley table entry out of range");
        }
        for (int a = 0; a < n; ++a)
            if (table_[0][a] != a || table_[a][0] != a) throw ParameterError("element 0 is not a two-sided unit");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw ParameterError("Cayley table is not associative");
        inverse_.assign(n, -1);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                if (table_[a][b] == 0 && table_[b][a] == 0) inverse_[a] = b;
            if (inverse_[a] < 0) throw ParameterError("element without inverse");
        }
    }

    static FiniteGroup cyclic(int n) {
        if (n < 1) throw ParameterError("cyclic group order must be positive");
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        return FiniteGroup(std::move(t));
    }

    /// S_k acting on {0..k-1}; permutations in lexicographic order, identity first.
    static FiniteGroup symmetric(int k) {
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        std::vector<std::vector<int>> perms;
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[i]] = i;
        int n = static_cast<int>(perms.size());
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                std::vector<int> c(k);
                for (int x = 0; x < k; ++x) c[x] = perms[a][perms[b][x]];  // a after b
                t[a][b] = index.at(c);
            }
        return FiniteGroup(std::move(t));
    }

    int order() const { return static_cast<int>(table_.size()); }
    int unit() const { return 0; }
    int mul(int a, int b) const { return table_.at(a).at(b); }
    int inv(int a) const { return inverse_.at(a); }

    /// Conjugacy classes by orbit enumeration, each sorted, ordered by least element.
    std::vector<std::vector<int>> conjugacy_classes() const {
        int n = order();
        std::vector<int> seen(n, 0);
        std::vector<std::vector<int>> classes;
        for (int x = 0; x < n; ++x) {
            if (seen[x]) continue;
            std::set<int> orbit;
            for (int g = 0; g < n; ++g) orbit.insert(mul(mul(g, x), inv(g)));
            for (int y : orbit) seen[y] = 1;
            classes.emplace_back(orbit.begin(), orbit.end());
        }
        return classes;
    }

    /// Subgroup generated by the given elements.
    std::set<int> generated_subgroup(const std::vector<int>& gens) const {
        std::set<int> sub{unit()};
        std::vector<int> frontier{unit()};
        while (!frontier.empty()) {
            int x = frontier.back();
            frontier.pop_back();
            for (int g : gens) {
                int y = mul(g, x);
                if (sub.insert(y).second) frontier.push_back(y);
            }
        }
        return sub;
    }

   private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
};

/// Formal sum of conjugacy classes with non-negative coefficients.
class RamificationDatum {
   public:
    /// coefficients[k] belongs to group.conjugacy_classes()[k].
    RamificationDatum(const FiniteGroup& group, std::vector<int> coefficients)
        : classes_(group.conjugacy_classes()), coefficients_(std::move(coefficients)), group_order_(group.order()) {
        if (coefficients_.size() != classes_.size())
            throw ParameterError("ramification datum needs one coefficient per conjugacy class");
        for (int c : coefficients_)
            if (c < 0) throw ParameterError("ramification coefficients must be non-negative");
    }

    /// Coefficient 1 on the class containing `element`, 0 elsewhere.
    static RamificationDatum single_class(const FiniteGroup& group, int element) {
        auto classes = group.conjugacy_classes();
        std::vector<int> coeffs(classes.size(), 0);
        for (size_t k = 0; k < classes.size(); ++k)
            if (std::find(classes[k].begin(), classes[k].end(), element) != classes[k].end()) coeffs[k] = 1;
        return RamificationDatum(group, std::move(coeffs));
    }

    const std::vector<std::vector<int>>& classes() const { return classes_; }
    const std::vector<int>& coefficients() const { return coefficients_; }
    int group_order() const { return group_order_; }

   private:
    std::vector<std::vector<int>> classes_;
    std::vector<int> coefficients_;
    int group_order_;
};

struct Arrow {
    int source;
    int target;
    int multiplicity_index;  // distinguishes parallel arrows; 0..R_C-1
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
    int vertex_count = 0;
    std::vector<Arrow> arrows;
};

/// Q(G, R): for every x in G, every class C and every c in C there are R_C arrows x -> cx.
inline Quiver hopf_quiver(const FiniteGroup& group, const RamificationDatum& datum) {
    if (datum.group_order() != group.order() || datum.classes() != group.conjugacy_classes())
        throw ParameterError("ramification datum belongs to a different group");
    Quiver q;
    q.vertex_count = group.order();
    for (int x = 0; x < group.order(); ++x)
        for (size_t k = 0; k < datum.classes().size(); ++k)
            for (int c : datum.classes()[k])
                for (int r = 0; r < datum.coefficients()[k]; ++r) q.arrows.push_back({x, group.mul(c, x), r});
    return q;
}

/// Connectivity of the underlying undirected graph.
inline bool is_connected(const Quiver& q) {
    if (q.vertex_count <= 1) return true;
    std::vector<int> parent(q.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : q.arrows) parent[find(a.source)] = find(a.target);
    int root = find(0);
    for (int v = 1; v < q.vertex_count; ++v)
        if (find(v) != root) return false;
    return true;
}

/// The generation criterion: elements of classes with R_C != 0 generate G.
inline bool ramification_generates(const FiniteGroup& group, const RamificationDatum& datum) {
    std::vector<int> gens;
    for (size_t k = 0; k < datum.classes().size(); ++k)
        if (datum.coefficients()[k] != 0) gens.insert(gens.end(), datum.classes()[k].begin(), datum.classes()[k].end());
    return static_cast<int>(group.generated_subgroup(gens).size()) == group.order();
}

// ---------------------------------------------------------------------------
// Paths on the basic cycle Z^n
// ---------------------------------------------------------------------------

/// The path p_i^l of Z^n: source vertex g^i, length l; target g^(i+l).
struct Path {
    int cycle_size = 1;
    int source = 0;
    int length = 0;

    Path() = default;
    Path(int n, long long i, int l) : cycle_size(n), source(static_cast<int>(floor_mod(i, n))), length(l) {
        if (n < 1) throw ParameterError("cycle size must be positive");
        if (l < 0) throw ParameterError("path length must be non-negative");
    }

    static Path vertex(int n, long long i) { return Path(n, i, 0); }
    /// X_i, the arrow g^(i-1) -> g^i.
    static Path arrow(int n, long long i) { return Path(n, i - 1, 1); }

    int target() const { return (source + length) % cycle_size; }
    bool is_vertex() const { return length == 0; }

    std::string to_string() const { return "p(" + std::to_string(source) + "," + std::to_string(length) + ")"; }

    friend auto operator<=>(const Path&, const Path&) = default;
};

/// Parses "p(i,l)", "g^i" or "X_i" (indices may be negative; reduced mod n).
inline Path parse_path(const std::string& text, int n) {
    static const std::regex path_re(R"(\s*p\(\s*(-?\d+)\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex vertex_re(R"(\s*g\^(-?\d+)\s*)");
    static const std::regex arrow_re(R"(\s*X_(-?\d+)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, path_re)) return Path(n, std::stoll(m[1]), std::stoi(m[2]));
    if (std::regex_match(text, m, vertex_re)) return Path::vertex(n, std::stoll(m[1]));
    if (std::regex_match(text, m, arrow_re)) return Path::arrow(n, std::stoll(m[1]));
    throw FormatError("cannot parse path literal '" + text + "'");
}

/// Finitely supported linear combination of paths; zero coefficients are never stored.
class PathVector {
   public:
    PathVector() = default;
    PathVector(const Path& p, CycloNum c = CycloNum(1)) { add(p, c); }

    void add(const Path& p, const CycloNum& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(p);
        if (it == terms_.end()) {
            terms_.emplace(p, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    const std::map<Path, CycloNum>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CycloNum coefficient(const Path& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? CycloNum(0) : it->second;
    }

    PathVector& operator+=(const PathVector& o) {
        for (const auto& [p, c] : o.terms_) add(p, c);
        return *this;
    }

    PathVector scaled(const CycloNum& c) const {
        PathVector out;
        for (const auto& [p, v] : terms_) out.add(p, v * c);
        return out;
    }

    friend PathVector operator+(PathVector a, const PathVector& b) { return a += b; }

    friend bool operator==(const PathVector& a, const PathVector& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (const auto& [p, c] : a.terms_) {
            auto it = b.terms_.find(p);
            if (it == b.terms_.end() || !(it->second == c)) return false;
        }
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [p, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ")*" + p.to_string();
        }
        return out;
    }

   private:
    std::map<Path, CycloNum> terms_;
};

/// Deconcatenation: p_i^l -> sum_k p_{i+k}^{l-k} (x) p_i^k, all coefficients 1.
inline std::vector<std::pair<Path, Path>> comultiply(const Path& p) {
    std::vector<std::pair<Path, Path>> out;
    out.reserve(p.length + 1);
    for (int k = 0; k <= p.length; ++k)
        out.emplace_back(Path(p.cycle_size, p.source + k, p.length - k), Path(p.cycle_size, p.source, k));
    return out;
}

inline int counit(const Path& p) { return p.is_vertex() ? 1 : 0; }

/// Iterated deconcatenation into `legs` consecutive pieces, leftmost piece = highest part of the path.
inline std::vector<std::vector<Path>> split_into(const Path& p, int legs) {
    std::vector<std::vector<Path>> out;
    // 0 = cut[0] <= cut[1] <= ... <= cut[legs] = length; piece t spans [cut[t], cut[t+1]).
    std::vector<int> cut(legs + 1, 0);
    cut[legs] = p.length;
    auto rec = [&](auto&& self, int k) -> void {
        if (k == legs) {
            std::vector<Path> pieces(legs);
            for (int t = 0; t < legs; ++t)
                pieces[legs - 1 - t] = Path(p.cycle_size, p.source + cut[t], cut[t + 1] - cut[t]);
            out.push_back(std::move(pieces));
            return;
        }
        for (int c = cut[k - 1]; c <= p.length; ++c) {
            cut[k] = c;
            self(self, k + 1);
        }
    };
    rec(rec, 1);
    return out;
}

/// One n-thin split: a 0/1 sequence d and the matching vertex/arrow pieces (position 1 first).
struct ThinSplit {
    std::vector<int> pattern;
    std::vector<Path> pieces;
};

/// All `parts`-thin splits of p; there are C(parts, length) of them.
inline std::vector<ThinSplit> thin_splits(const Path& p, int parts) {
    if (parts < p.length)
        throw ParameterError("a path of length " + std::to_string(p.length) + " has no " + std::to_string(parts) +
                             "-thin split");
    std::vector<ThinSplit> out;
    std::vector<int> pattern(parts, 0);
    auto emit = [&] {
        ThinSplit s;
        s.pattern = pattern;
        int consumed = 0;
        for (int t = 0; t < parts; ++t) {
            if (pattern[t]) {
                s.pieces.push_back(Path(p.cycle_size, p.source + consumed, 1));
                ++consumed;
            } else {
                s.pieces.push_back(Path::vertex(p.cycle_size, p.source + consumed));
            }
        }
        out.push_back(std::move(s));
    };
    auto rec = [&](auto&& self, int pos, int ones_left) -> void {
        if (pos == parts) {
            if (ones_left == 0) emit();
            return;
        }
        if (parts - pos > ones_left) {
            pattern[pos] = 0;
            self(self, pos + 1, ones_left);
        }
        if (ones_left > 0) {
            pattern[pos] = 1;
            self(self, pos + 1, ones_left - 1);
            pattern[pos] = 0;
        }
    };
    rec(rec, 0, p.length);
    return out;
}

}  // namespace mqg

#endif  // MQG_QUIVER_HPP
