#include "nek/lp.hpp"

#include "nek/states.hpp"

namespace nek {

namespace {

// Dense exact tableau. Columns: n structural, then one slack per row, then
// artificials for rows whose right side started negative. Bland's rule on
// both the entering and the leaving choice.
class Simplex {
  public:
    Simplex(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b, int n)
        : n_(n), m_(static_cast<int>(A.size())) {
        cols_ = n_ + m_;
        tab_.assign(m_, std::vector<Rat>(cols_ + 1, Rat(0)));
        basis_.resize(m_);
        std::vector<int> art_rows;
        for (int r = 0; r < m_; ++r) {
            Rat sgn = b[r] < 0 ? Rat(-1) : Rat(1);
            for (int j = 0; j < n_; ++j) tab_[r][j] = sgn * A[r][j];
            tab_[r][n_ + r] = sgn;  // slack
            tab_[r][cols_] = sgn * b[r];
            if (b[r] < 0)
                art_rows.push_back(r);
            else
                basis_[r] = n_ + r;
        }
        for (std::size_t i = 0; i < art_rows.size(); ++i) {
            int r = art_rows[i];
            int col = cols_ + static_cast<int>(i);
            basis_[r] = col;
        }
        num_art_ = static_cast<int>(art_rows.size());
        if (num_art_ > 0) {
            for (auto& row : tab_) row.insert(row.end() - 1, num_art_, Rat(0));
            int c = cols_;
            for (int r : art_rows) tab_[r][c++] = 1;
            cols_ += num_art_;
        }
        banned_.assign(cols_, false);
    }

    LpStatus run(const std::vector<Rat>& c, std::vector<Rat>& x_out, Rat& obj_out) {
        if (num_art_ > 0) {
            std::vector<Rat> phase1(cols_, Rat(0));
            for (int j = cols_ - num_art_; j < cols_; ++j) phase1[j] = -1;
            load_objective(phase1);
            iterate();  // bounded below by 0, cannot be unbounded
            if (value_ != 0) return LpStatus::Infeasible;
            purge_artificials();
        }
        std::vector<Rat> full_c(cols_, Rat(0));
        for (int j = 0; j < n_; ++j) full_c[j] = c[j];
        load_objective(full_c);
        if (!iterate()) return LpStatus::Unbounded;
        x_out.assign(n_, Rat(0));
        for (int r = 0; r < m_; ++r)
            if (basis_[r] < n_) x_out[basis_[r]] = tab_[r][cols_];
        obj_out = value_;
        return LpStatus::Optimal;
    }

  private:
    void load_objective(const std::vector<Rat>& c) {
        z_.assign(cols_ + 1, Rat(0));
        for (int j = 0; j < cols_; ++j) z_[j] = c[j];
        value_ = 0;
        // Price out the current basis so reduced costs of basic vars are 0.
        for (int r = 0; r < m_; ++r) {
            const Rat f = z_[basis_[r]];
            if (f == 0) continue;
            for (int j = 0; j <= cols_; ++j) z_[j] -= f * tab_[r][j];
            value_ += f * tab_[r][cols_];
        }
    }

    // Returns false on unbounded.
    bool iterate() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < cols_; ++j)
                if (!banned_[j] && z_[j] > 0) { enter = j; break; }
            if (enter < 0) return true;
            int leave = -1;
            for (int r = 0; r < m_; ++r) {
                if (tab_[r][enter] <= 0) continue;
                if (leave < 0) { leave = r; continue; }
                const Rat cur = tab_[r][cols_] * tab_[leave][enter];
                const Rat best = tab_[leave][cols_] * tab_[r][enter];
                if (cur < best || (cur == best && basis_[r] < basis_[leave])) leave = r;
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void pivot(int r, int c) {
        const Rat piv = tab_[r][c];
        for (int j = 0; j <= cols_; ++j) tab_[r][j] /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == r || tab_[i][c] == 0) continue;
            const Rat f = tab_[i][c];
            for (int j = 0; j <= cols_; ++j) tab_[i][j] -= f * tab_[r][j];
        }
        const Rat f = z_[c];
        if (f != 0) {
            for (int j = 0; j <= cols_; ++j) z_[j] -= f * tab_[r][j];
            value_ += f * tab_[r][cols_];
        }
        basis_[r] = c;
    }

    void purge_artificials() {
        const int first_art = cols_ - num_art_;
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < first_art) continue;
            // Basic artificial at value zero: swap in any usable column, or
            // recognize the row as redundant and neutralize it.
            int col = -1;
            for (int j = 0; j < first_art; ++j)
                if (tab_[r][j] != 0) { col = j; break; }
            if (col >= 0) pivot(r, col);
        }
        for (int j = first_art; j < cols_; ++j) banned_[j] = true;
    }

    int n_, m_, cols_, num_art_ = 0;
    std::vector<std::vector<Rat>> tab_;
    std::vector<Rat> z_;
    Rat value_;
    std::vector<int> basis_;
    std::vector<bool> banned_;
};

}  // namespace

LpSolution solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                    const std::vector<Rat>& c) {
    LpSolution sol;
    const int n = static_cast<int>(c.size());
    if (A.empty()) {
        // Only x >= 0 remains; anything to gain is unbounded.
        for (int j = 0; j < n; ++j)
            if (c[j] > 0) {
                sol.status = LpStatus::Unbounded;
                return sol;
            }
        sol.x.assign(n, Rat(0));
        sol.objective = 0;
        return sol;
    }
    Simplex s(A, b, n);
    sol.status = s.run(c, sol.x, sol.objective);
    return sol;
}

StateProgram build_state_program(const InvolutivePoset& p) {
    StateProgram sp;
    sp.poset = p;
    const int n = p.size();
    sp.elem.assign(n, OrbitAffine{Rat(0), 0, -1});
    std::vector<bool> assigned(n, false);
    for (int e = 0; e < n; ++e) {
        if (assigned[e]) continue;
        if (e == p.bottom()) {
            sp.elem[e] = {Rat(0), 0, -1};
        } else if (e == p.top()) {
            sp.elem[e] = {Rat(1), 0, -1};
        } else if (p.prime(e) == e) {
            sp.elem[e] = {rat_half(), 0, -1};
        } else {
            const int v = sp.num_vars++;
            sp.elem[e] = {Rat(0), 1, v};
            sp.elem[p.prime(e)] = {Rat(1), -1, v};
            assigned[p.prime(e)] = true;
        }
        assigned[e] = true;
    }

    for (auto [a, b] : p.covers()) {
        std::vector<Rat> row(sp.num_vars, Rat(0));
        if (sp.elem[a].sign != 0) row[sp.elem[a].var] += sp.elem[a].sign;
        if (sp.elem[b].sign != 0) row[sp.elem[b].var] -= sp.elem[b].sign;
        const Rat rhs = sp.elem[b].constant - sp.elem[a].constant;
        bool zero = true;
        for (const Rat& r : row)
            if (r != 0) { zero = false; break; }
        if (zero) continue;  // structurally true rows (e.g. bottom under top)
        sp.rows.push_back(std::move(row));
        sp.rhs.push_back(rhs);
    }
    for (int v = 0; v < sp.num_vars; ++v) {
        std::vector<Rat> row(sp.num_vars, Rat(0));
        row[v] = 1;
        sp.rows.push_back(std::move(row));
        sp.rhs.push_back(Rat(1));
    }
    return sp;
}

StateOptimum optimize_state(const StateProgram& prog, const std::vector<Rat>& coeffs) {
    const InvolutivePoset& p = prog.poset;
    const int n = p.size();
    Rat constant = 0;
    std::vector<Rat> c(prog.num_vars, Rat(0));
    for (int e = 0; e < n; ++e) {
        constant += coeffs[e] * prog.elem[e].constant;
        if (prog.elem[e].sign != 0) c[prog.elem[e].var] += coeffs[e] * prog.elem[e].sign;
    }

    std::vector<Rat> x;
    Rat lp_value = 0;
    if (prog.num_vars > 0) {
        LpSolution sol = solve_lp(prog.rows, prog.rhs, c);
        // The polytope always contains the all-1/2 point and sits inside the
        // unit box, so anything but Optimal means the solver is broken.
        if (sol.status != LpStatus::Optimal)
            throw ConsistencyError("state polytope optimization did not come back optimal");
        x = std::move(sol.x);
        lp_value = sol.objective;
    }

    StateOptimum out;
    out.optimum = constant + lp_value;
    out.witness.values.resize(n);
    for (int e = 0; e < n; ++e) {
        const auto& a = prog.elem[e];
        out.witness.values[e] = a.constant + (a.sign == 0 ? Rat(0) : Rat(a.sign) * x[a.var]);
    }
    if (!is_state(p, out.witness))
        throw ConsistencyError("optimal vertex fails the state conditions");
    return out;
}

}  // namespace nek
