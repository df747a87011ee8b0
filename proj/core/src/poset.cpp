#include "nek/poset.hpp"

#include <algorithm>
#include <set>

namespace nek {

InvolutivePoset InvolutivePoset::validate(std::vector<std::string> names,
                                          const std::vector<std::pair<int, int>>& leq_generators,
                                          const std::vector<std::pair<int, int>>& prime_pairs) {
    const int n = static_cast<int>(names.size());
    if (n == 0) throw ValidationError("poset has no elements");
    {
        std::set<std::string> seen;
        for (const auto& nm : names)
            if (!seen.insert(nm).second)
                throw ValidationError("duplicate element name '" + nm + "'");
    }

    InvolutivePoset p;
    p.names_ = std::move(names);
    p.leq_.assign(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) p.leq_[i][i] = true;
    for (auto [a, b] : leq_generators) p.leq_[a][b] = true;

    // Warshall closure, then antisymmetry.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (p.leq_[i][k])
                for (int j = 0; j < n; ++j)
                    if (p.leq_[k][j]) p.leq_[i][j] = true;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p.leq_[a][b] && p.leq_[b][a])
                throw ValidationError("order cycle between '" + p.names_[a] + "' and '" +
                                      p.names_[b] + "'");

    for (int e = 0; e < n; ++e) {
        bool is_bot = true, is_top = true;
        for (int x = 0; x < n; ++x) {
            is_bot = is_bot && p.leq_[e][x];
            is_top = is_top && p.leq_[x][e];
        }
        if (is_bot) p.bottom_ = e;
        if (is_top) p.top_ = e;
    }
    if (p.bottom_ < 0) throw ValidationError("poset has no minimum element");
    if (p.top_ < 0) throw ValidationError("poset has no maximum element");

    p.prime_.assign(n, -1);
    auto set_prime = [&p](int a, int b) {
        if (p.prime_[a] != -1 && p.prime_[a] != b)
            throw ValidationError("conflicting prime for '" + p.names_[a] + "'");
        p.prime_[a] = b;
    };
    for (auto [a, b] : prime_pairs) {
        set_prime(a, b);
        set_prime(b, a);
    }
    for (int e = 0; e < n; ++e)
        if (p.prime_[e] == -1)
            throw ValidationError("no prime given for '" + p.names_[e] + "'");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.leq_[a][b] && !p.leq_[p.prime_[b]][p.prime_[a]])
                throw ValidationError("prime is not antitone on '" + p.names_[a] + "' <= '" +
                                      p.names_[b] + "'");
    if (p.prime_[p.bottom_] != p.top_)
        throw ValidationError("prime of the minimum is not the maximum");
    return p;
}

std::optional<int> InvolutivePoset::meet(int p, int q) const {
    const int n = size();
    std::vector<int> lower;
    for (int x = 0; x < n; ++x)
        if (leq_[x][p] && leq_[x][q]) lower.push_back(x);
    for (int g : lower) {
        bool greatest = true;
        for (int x : lower)
            if (!leq_[x][g]) { greatest = false; break; }
        if (greatest) return g;
    }
    return std::nullopt;
}

std::optional<int> InvolutivePoset::join(int p, int q) const {
    const int n = size();
    std::vector<int> upper;
    for (int x = 0; x < n; ++x)
        if (leq_[p][x] && leq_[q][x]) upper.push_back(x);
    for (int l : upper) {
        bool least = true;
        for (int x : upper)
            if (!leq_[l][x]) { least = false; break; }
        if (least) return l;
    }
    return std::nullopt;
}

bool InvolutivePoset::is_atom(int e) const {
    if (e == bottom_) return false;
    for (int x = 0; x < size(); ++x)
        if (lt(x, e) && x != bottom_) return false;
    return true;
}

std::vector<int> InvolutivePoset::atoms() const {
    std::vector<int> out;
    for (int e = 0; e < size(); ++e)
        if (is_atom(e)) out.push_back(e);
    return out;
}

std::vector<std::pair<int, int>> InvolutivePoset::covers() const {
    std::vector<std::pair<int, int>> out;
    const int n = size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!lt(a, b)) continue;
            bool covering = true;
            for (int c = 0; c < n; ++c)
                if (lt(a, c) && lt(c, b)) { covering = false; break; }
            if (covering) out.emplace_back(a, b);
        }
    return out;
}

int InvolutivePoset::height(int e) const {
    // Longest chain DP; n is tiny so recompute on demand.
    const int n = size();
    std::vector<int> h(n, -1);
    h[bottom_] = 0;
    // Elements sorted by number of strict predecessors is a topological order.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<int> preds(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (lt(a, b)) ++preds[b];
    std::stable_sort(order.begin(), order.end(),
                     [&preds](int a, int b) { return preds[a] < preds[b]; });
    for (int b : order)
        for (int a = 0; a < n; ++a)
            if (lt(a, b) && h[a] >= 0) h[b] = std::max(h[b], h[a] + 1);
    return h[e];
}

PosetCheck is_lattice(const InvolutivePoset& p) {
    const int n = p.size();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            if (!p.meet(i, j)) return {false, Witness{"no-meet", {i, j}}};
            if (!p.join(i, j)) return {false, Witness{"no-join", {i, j}}};
        }
    return {};
}

PosetCheck is_orthoposet(const InvolutivePoset& p) {
    for (int e = 0; e < p.size(); ++e) {
        auto m = p.meet(e, p.prime(e));
        if (!m || *m != p.bottom()) return {false, Witness{"complement-meet", {e}}};
        auto j = p.join(e, p.prime(e));
        if (!j || *j != p.top()) return {false, Witness{"complement-join", {e}}};
    }
    return {};
}

PosetCheck is_orthomodular(const InvolutivePoset& p) {
    if (auto ortho = is_orthoposet(p); !ortho.ok)
        throw PreconditionError("orthomodular law requires an orthoposet");
    const int n = p.size();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!p.leq(a, b)) continue;
            auto m = p.meet(b, p.prime(a));
            if (!m) return {false, Witness{"orthomodular-no-meet", {a, b}}};
            auto j = p.join(a, *m);
            if (!j || *j != b) return {false, Witness{"orthomodular", {a, b}}};
        }
    return {};
}

PosetCheck is_distributive(const InvolutivePoset& p) {
    if (auto lat = is_lattice(p); !lat.ok)
        throw PreconditionError("distributivity requires a lattice");
    const int n = p.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = *p.meet(x, *p.join(y, z));
                int rhs = *p.join(*p.meet(x, y), *p.meet(x, z));
                if (lhs != rhs) return {false, Witness{"distributive", {x, y, z}}};
            }
    return {};
}

}  // namespace nek
