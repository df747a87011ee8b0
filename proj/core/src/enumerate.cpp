#include "nek/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace nek {

namespace {

// Iterated refinement coloring. Colors are exact (re-indexed per round via
// ordered keys), so no hash collisions can merge distinct classes.
std::vector<int> refine_colors(const InvolutivePoset& p) {
    const int n = p.size();
    std::vector<int> color(n, 0);
    int classes = 1;
    for (int round = 0; round < n; ++round) {
        std::map<std::vector<int>, std::vector<int>> groups;
        for (int i = 0; i < n; ++i) {
            std::vector<int> key;
            key.push_back(color[i]);
            key.push_back(color[p.prime(i)]);
            std::vector<int> rel;
            for (int j = 0; j < n; ++j)
                rel.push_back(color[j] * 4 + (p.leq(i, j) ? 2 : 0) + (p.leq(j, i) ? 1 : 0));
            std::sort(rel.begin(), rel.end());
            key.insert(key.end(), rel.begin(), rel.end());
            groups[std::move(key)].push_back(i);
        }
        int next = 0;
        for (const auto& [key, elems] : groups) {
            for (int e : elems) color[e] = next;
            ++next;
        }
        if (next == classes) break;
        classes = next;
    }
    return color;
}

std::string encode_under(const InvolutivePoset& p, const std::vector<int>& perm) {
    // perm[i] = original element at canonical position i.
    const int n = p.size();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[perm[i]] = i;
    std::string s;
    s.reserve(n * n + n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s.push_back(p.leq(perm[i], perm[j]) ? '1' : '0');
    s.push_back('|');
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + pos[p.prime(perm[i])]));
    return s;
}

}  // namespace

std::string canonical_encoding(const InvolutivePoset& p) {
    const int n = p.size();
    const std::vector<int> color = refine_colors(p);

    // Group elements by color; bounds first so canonical representatives can
    // be rebuilt with the conventional element order.
    std::map<std::tuple<int, int>, std::vector<int>> classes;
    for (int e = 0; e < n; ++e) {
        int rank = e == p.bottom() ? 0 : (e == p.top() ? 1 : 2);
        classes[{rank, color[e]}].push_back(e);
    }

    std::string best;
    std::vector<std::vector<int>> parts;
    for (auto& [key, elems] : classes) parts.push_back(elems);

    std::vector<int> perm;
    auto rec = [&](auto&& self, std::size_t ci) -> void {
        if (ci == parts.size()) {
            std::string enc = encode_under(p, perm);
            if (best.empty() || enc < best) best = std::move(enc);
            return;
        }
        std::vector<int>& part = parts[ci];
        std::sort(part.begin(), part.end());
        do {
            perm.insert(perm.end(), part.begin(), part.end());
            self(self, ci + 1);
            perm.resize(perm.size() - part.size());
        } while (std::next_permutation(part.begin(), part.end()));
    };
    rec(rec, 0);
    return std::to_string(n) + ":" + best;
}

bool isomorphic(const InvolutivePoset& a, const InvolutivePoset& b) {
    // Canonical encodings would also answer this, but their permutation
    // minimum degenerates on highly symmetric posets (one big color class).
    // A color-guided backtracking search stays cheap there.
    const int n = a.size();
    if (n != b.size()) return false;
    const std::vector<int> ca = refine_colors(a);
    const std::vector<int> cb = refine_colors(b);
    // Refinement keys are structural, so corresponding classes end up with
    // the same ids in both posets; mismatched class sizes kill it early.
    std::map<int, int> sa, sb;
    for (int e = 0; e < n; ++e) {
        ++sa[ca[e]];
        ++sb[cb[e]];
    }
    if (sa != sb) return false;
    if (ca[a.bottom()] != cb[b.bottom()] || ca[a.top()] != cb[b.top()]) return false;

    std::vector<int> map(n, -1), used(n, 0);
    auto dfs = [&](auto&& self, int i) -> bool {
        if (i == n) return true;
        for (int j = 0; j < n; ++j) {
            if (used[j] || cb[j] != ca[i]) continue;
            bool ok = a.prime(i) == i ? b.prime(j) == j : true;
            if (map[a.prime(i)] != -1 && map[a.prime(i)] != b.prime(j)) ok = false;
            for (int k = 0; k < i && ok; ++k)
                ok = a.leq(i, k) == b.leq(j, map[k]) && a.leq(k, i) == b.leq(map[k], j);
            if (!ok) continue;
            map[i] = j;
            used[j] = 1;
            if (self(self, i + 1)) return true;
            map[i] = -1;
            used[j] = 0;
        }
        return false;
    };
    return dfs(dfs, 0);
}

namespace {

// All labeled strict orders on m points, each as a vector of below-masks.
// Points are added one at a time; for the new point every consistent pair
// (down-set, up-set) over the existing points is tried, which produces each
// labeled order exactly once.
std::vector<std::vector<std::uint32_t>> labeled_orders(int m) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> below;
    auto rec = [&](auto&& self) -> void {
        const int k = static_cast<int>(below.size());
        if (k == m) {
            out.push_back(below);
            return;
        }
        std::vector<std::uint32_t> above(k, 0);
        for (int y = 0; y < k; ++y)
            for (int x = 0; x < k; ++x)
                if (below[y] >> x & 1) above[x] |= 1u << y;
        const std::uint32_t full = (1u << k) - 1;
        for (std::uint32_t d = 0;; ++d) {
            bool down_closed = true;
            for (int x = 0; x < k && down_closed; ++x)
                if (d >> x & 1) down_closed = (below[x] & ~d) == 0;
            if (down_closed) {
                const std::uint32_t rest = full & ~d;
                std::uint32_t u = rest;
                for (;;) {
                    bool good = true;
                    for (int x = 0; x < k && good; ++x)
                        if (u >> x & 1) good = (above[x] & ~u) == 0;
                    for (int x = 0; x < k && good; ++x)
                        if (d >> x & 1)
                            for (int y = 0; y < k && good; ++y)
                                if (u >> y & 1) good = (below[y] >> x & 1) != 0;
                    if (good) {
                        below.push_back(d);
                        for (int y = 0; y < k; ++y)
                            if (u >> y & 1) below[y] |= 1u << k;
                        self(self);
                        for (int y = 0; y < k; ++y)
                            if (u >> y & 1) below[y] &= ~(1u << k);
                        below.pop_back();
                    }
                    if (u == 0) break;
                    u = (u - 1) & rest;
                }
            }
            if (d == full) break;
        }
    };
    rec(rec);
    return out;
}

std::vector<std::string> conventional_names(int n) {
    std::vector<std::string> names = {"0", "1"};
    for (int i = 0; i < n - 2; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return names;
}

InvolutivePoset assemble(int n, const std::vector<std::uint32_t>& below,
                         const std::vector<int>& sigma) {
    const int m = n - 2;
    std::vector<std::pair<int, int>> gens;
    for (int e = 1; e < n; ++e) gens.emplace_back(0, e);
    for (int e = 0; e < n; ++e)
        if (e != 1) gens.emplace_back(e, 1);
    for (int i = 0; i < m; ++i)
        for (int x = 0; x < m; ++x)
            if (below[i] >> x & 1) gens.emplace_back(2 + x, 2 + i);
    std::vector<std::pair<int, int>> primes = {{0, 1}};
    for (int i = 0; i < m; ++i)
        if (i <= sigma[i]) primes.emplace_back(2 + i, 2 + sigma[i]);
    return InvolutivePoset::validate(conventional_names(n), gens, primes);
}

}  // namespace

std::vector<InvolutivePoset> enumerate_involutive_posets(int n, int n_cap) {
    if (n < 2) throw ValidationError("enumeration needs at least the two bounds");
    if (n > n_cap)
        throw ValidationError("enumeration cap exceeded (" + std::to_string(n) + " > " +
                              std::to_string(n_cap) + ")");
    const int m = n - 2;

    std::map<std::string, InvolutivePoset> by_encoding;
    for (const auto& below : labeled_orders(m)) {
        // All involutions of the middle elements, then the antitone filter.
        std::vector<int> sigma(m, -1);
        auto assign = [&](auto&& self, int i) -> void {
            if (i == m) {
                for (int a = 0; a < m; ++a)
                    for (int b = 0; b < m; ++b)
                        if (below[b] >> a & 1)  // a < b, so sigma(b) < sigma(a) must hold
                            if (!(below[sigma[a]] >> sigma[b] & 1)) return;
                InvolutivePoset p = assemble(n, below, sigma);
                by_encoding.emplace(canonical_encoding(p), std::move(p));
                return;
            }
            if (sigma[i] != -1) {
                self(self, i + 1);
                return;
            }
            sigma[i] = i;
            self(self, i + 1);
            sigma[i] = -1;
            for (int j = i + 1; j < m; ++j) {
                if (sigma[j] != -1) continue;
                sigma[i] = j;
                sigma[j] = i;
                self(self, i + 1);
                sigma[i] = -1;
                sigma[j] = -1;
            }
        };
        assign(assign, 0);
    }

    std::vector<InvolutivePoset> out;
    out.reserve(by_encoding.size());
    for (auto& [enc, p] : by_encoding) out.push_back(std::move(p));
    return out;
}

namespace {

bool brute_iso(const InvolutivePoset& a, const InvolutivePoset& b) {
    const int n = a.size();
    if (n != b.size()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            ok = perm[a.prime(i)] == b.prime(perm[i]);
            for (int j = 0; j < n && ok; ++j) ok = a.leq(i, j) == b.leq(perm[i], perm[j]);
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::vector<InvolutivePoset> enumerate_by_filter(int n) {
    if (n < 2 || n > 5)
        throw ValidationError("filter enumeration is only meant for 2..5 elements");
    const int bits = n * (n - 1);
    std::vector<std::pair<int, int>> offdiag;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) offdiag.emplace_back(i, j);

    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));

    std::vector<InvolutivePoset> reps;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) leq[i][j] = i == j;
        for (int t = 0; t < bits; ++t)
            if (mask >> t & 1) leq[offdiag[t].first][offdiag[t].second] = true;

        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) ok = !(leq[i][j] && leq[j][i]);
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (!leq[i][j]) continue;
                for (int k = 0; k < n && ok; ++k)
                    if (leq[j][k]) ok = leq[i][k];
            }
        if (!ok) continue;
        int bottom = -1, top = -1;
        for (int e = 0; e < n; ++e) {
            bool bot = true, tp = true;
            for (int x = 0; x < n; ++x) {
                bot = bot && leq[e][x];
                tp = tp && leq[x][e];
            }
            if (bot) bottom = e;
            if (tp) top = e;
        }
        if (bottom < 0 || top < 0) continue;

        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            bool good = true;
            for (int i = 0; i < n && good; ++i) good = sigma[sigma[i]] == i;
            for (int i = 0; i < n && good; ++i)
                for (int j = 0; j < n && good; ++j)
                    if (leq[i][j]) good = leq[sigma[j]][sigma[i]];
            if (!good) continue;

            std::vector<std::pair<int, int>> gens, primes;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j && leq[i][j]) gens.emplace_back(i, j);
            for (int i = 0; i < n; ++i)
                if (i <= sigma[i]) primes.emplace_back(i, sigma[i]);
            InvolutivePoset cand = InvolutivePoset::validate(names, gens, primes);
            bool fresh = true;
            for (const auto& r : reps)
                if (brute_iso(cand, r)) { fresh = false; break; }
            if (fresh) reps.push_back(std::move(cand));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return reps;
}

namespace {

// Exact solve of (rows)x = rhs for a unique solution; nullopt when the
// system is inconsistent or underdetermined.
std::optional<std::vector<Rat>> solve_unique(std::vector<std::vector<Rat>> a,
                                             std::vector<Rat> b, int n) {
    const int m = static_cast<int>(a.size());
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && rank < m; ++col) {
        int sel = -1;
        for (int r = rank; r < m; ++r)
            if (a[r][col] != 0) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(a[sel], a[rank]);
        std::swap(b[sel], b[rank]);
        const Rat piv = a[rank][col];
        for (int j = 0; j < n; ++j) a[rank][j] /= piv;
        b[rank] /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == rank || a[r][col] == 0) continue;
            const Rat f = a[r][col];
            for (int j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
            b[r] -= f * b[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < m; ++r)
        if (b[r] != 0) return std::nullopt;  // inconsistent
    if (rank < n) return std::nullopt;       // underdetermined
    std::vector<Rat> x(n);
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = b[r];
    return x;
}

}  // namespace

VertexSearch vertex_search_full_proper(const InvolutivePoset& p) {
    const int n = p.size();

    // Equalities: m(bottom) = 0 and m(a) + m(a') = 1 per prime pair.
    std::vector<std::vector<Rat>> eq;
    std::vector<Rat> eq_rhs;
    {
        std::vector<Rat> row(n, Rat(0));
        row[p.bottom()] = 1;
        eq.push_back(row);
        eq_rhs.push_back(Rat(0));
    }
    for (int e = 0; e < n; ++e) {
        if (e > p.prime(e)) continue;
        std::vector<Rat> row(n, Rat(0));
        row[e] += 1;
        row[p.prime(e)] += 1;
        eq.push_back(std::move(row));
        eq_rhs.push_back(Rat(1));
    }

    // Inequalities as rows r.x <= c: the full comparability relation (not
    // just covers, on purpose; this route should not share shortcuts with
    // the LP builder) plus the unit box.
    std::vector<std::vector<Rat>> ineq;
    std::vector<Rat> ineq_rhs;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b || !p.leq(a, b)) continue;
            std::vector<Rat> row(n, Rat(0));
            row[a] = 1;
            row[b] = -1;
            ineq.push_back(std::move(row));
            ineq_rhs.push_back(Rat(0));
        }
    for (int e = 0; e < n; ++e) {
        std::vector<Rat> lo(n, Rat(0)), hi(n, Rat(0));
        lo[e] = -1;
        hi[e] = 1;
        ineq.push_back(std::move(lo));
        ineq_rhs.push_back(Rat(0));
        ineq.push_back(std::move(hi));
        ineq_rhs.push_back(Rat(1));
    }

    // Dimension left after the equalities.
    int eq_rank = 0;
    {
        auto a = eq;
        auto b = eq_rhs;
        const int m = static_cast<int>(a.size());
        int rank = 0;
        for (int col = 0; col < n && rank < m; ++col) {
            int sel = -1;
            for (int r = rank; r < m; ++r)
                if (a[r][col] != 0) { sel = r; break; }
            if (sel < 0) continue;
            std::swap(a[sel], a[rank]);
            const Rat piv = a[rank][col];
            for (int j = 0; j < n; ++j) a[rank][j] /= piv;
            for (int r = 0; r < m; ++r) {
                if (r == rank || a[r][col] == 0) continue;
                const Rat f = a[r][col];
                for (int j = 0; j < n; ++j) a[r][j] -= f * a[rank][j];
            }
            ++rank;
        }
        eq_rank = rank;
    }
    const int d = n - eq_rank;

    VertexSearch out;
    std::set<std::vector<Rat>> seen;
    const int q = static_cast<int>(ineq.size());
    std::vector<int> pick;
    auto try_subset = [&]() {
        std::vector<std::vector<Rat>> sys = eq;
        std::vector<Rat> rhs = eq_rhs;
        for (int idx : pick) {
            sys.push_back(ineq[idx]);
            rhs.push_back(ineq_rhs[idx]);
        }
        auto x = solve_unique(std::move(sys), std::move(rhs), n);
        if (!x) return;
        for (int i = 0; i < q; ++i) {
            Rat lhs = 0;
            for (int j = 0; j < n; ++j) lhs += ineq[i][j] * (*x)[j];
            if (lhs > ineq_rhs[i]) return;
        }
        if (seen.insert(*x).second) out.vertices.push_back(StateVector{*x});
    };
    auto choose = [&](auto&& self, int start, int left) -> void {
        if (left == 0) {
            try_subset();
            return;
        }
        for (int i = start; i + left <= q; ++i) {
            pick.push_back(i);
            self(self, i + 1, left - 1);
            pick.pop_back();
        }
    };
    choose(choose, 0, d);

    // Existence of a full and proper subset reduces to: every incomparable
    // ordered pair is separated by some vertex, and every non-bound element
    // is taken strictly below and strictly above 1/2 by vertices.
    bool exists = true;
    for (int a = 0; a < n && exists; ++a)
        for (int b = 0; b < n && exists; ++b) {
            if (p.leq(a, b)) continue;
            bool sep = false;
            for (const auto& v : out.vertices)
                if (v.values[a] > v.values[b]) { sep = true; break; }
            exists = sep;
        }
    for (int e = 0; e < n && exists; ++e) {
        if (e == p.bottom() || e == p.top()) continue;
        bool below = false, above = false;
        for (const auto& v : out.vertices) {
            if (v.values[e] < rat_half()) below = true;
            if (v.values[e] > rat_half()) above = true;
        }
        exists = below && above;
    }
    out.full_proper_exists = exists;
    return out;
}

}  // namespace nek
