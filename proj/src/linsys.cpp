#include "knotscan/linsys.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotscan::gf2 {

void System::add_row(const std::vector<std::uint32_t>& vars, std::int64_t constant,
                     std::uint32_t id) {
    Row r;
    r.coeffs.resize(num_vars);
    for (std::uint32_t v : vars) {
        if (v >= num_vars) throw std::invalid_argument("variable index out of range");
        r.coeffs.flip(v);  // repeated variables cancel mod 2
    }
    r.rhs = ((constant % 2) + 2) % 2 == 1;
    r.id = id;
    rows.push_back(std::move(r));
}

namespace {

struct WorkRow {
    Bitset coeffs;
    bool rhs;
    Bitset prov;  // which original rows were combined into this one
};

// Plain feasibility check, no bookkeeping.
bool eliminate_feasible(std::vector<std::pair<Bitset, bool>> rows) {
    if (rows.empty()) return true;
    std::size_t rank_rows = 0;
    const std::size_t nv = rows.front().first.size();
    for (std::size_t col = 0; col < nv && rank_rows < rows.size(); ++col) {
        std::size_t pivot = rank_rows;
        while (pivot < rows.size() && !rows[pivot].first.test(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank_rows], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank_rows && rows[r].first.test(col)) {
                rows[r].first ^= rows[rank_rows].first;
                rows[r].second ^= rows[rank_rows].second;
            }
        }
        ++rank_rows;
    }
    for (const auto& [coeffs, rhs] : rows)
        if (rhs && coeffs.none()) return false;
    return true;
}

}  // namespace

bool is_feasible(const System& sys) {
    std::vector<std::pair<Bitset, bool>> rows;
    rows.reserve(sys.rows.size());
    for (const auto& r : sys.rows) rows.emplace_back(r.coeffs, r.rhs);
    return eliminate_feasible(std::move(rows));
}

Result solve(const System& sys) {
    const std::size_t nr = sys.rows.size();
    std::vector<WorkRow> rows(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        rows[i].coeffs = sys.rows[i].coeffs;
        rows[i].rhs = sys.rows[i].rhs;
        rows[i].prov.resize(nr);
        rows[i].prov.set(i);
    }

    Result res;
    std::vector<std::int64_t> pivot_of_col(sys.num_vars, -1);
    std::size_t rank_rows = 0;
    for (std::size_t col = 0; col < sys.num_vars && rank_rows < nr; ++col) {
        std::size_t pivot = rank_rows;
        while (pivot < nr && !rows[pivot].coeffs.test(col)) ++pivot;
        if (pivot == nr) continue;
        std::swap(rows[rank_rows], rows[pivot]);
        for (std::size_t r = 0; r < nr; ++r) {
            if (r != rank_rows && rows[r].coeffs.test(col)) {
                rows[r].coeffs ^= rows[rank_rows].coeffs;
                rows[r].rhs ^= rows[rank_rows].rhs;
                rows[r].prov ^= rows[rank_rows].prov;
            }
        }
        pivot_of_col[col] = static_cast<std::int64_t>(rank_rows);
        ++rank_rows;
    }

    for (const auto& row : rows) {
        if (!row.rhs || row.coeffs.any()) continue;
        // Contradiction 0 = 1. Its provenance is an infeasible subsystem;
        // prune it until every member is necessary.
        std::vector<std::size_t> members;
        for (auto p = row.prov.find_first(); p != Bitset::npos; p = row.prov.find_next(p))
            members.push_back(p);
        for (std::size_t k = 0; k < members.size();) {
            std::vector<std::pair<Bitset, bool>> sub;
            for (std::size_t j = 0; j < members.size(); ++j)
                if (j != k) sub.emplace_back(sys.rows[members[j]].coeffs, sys.rows[members[j]].rhs);
            if (!eliminate_feasible(std::move(sub)))
                members.erase(members.begin() + static_cast<std::ptrdiff_t>(k));
            else
                ++k;
        }
        for (std::size_t m : members) res.core.push_back(sys.rows[m].id);
        std::sort(res.core.begin(), res.core.end());
        res.feasible = false;
        return res;
    }

    res.feasible = true;
    res.solution.resize(sys.num_vars);
    // Reduced echelon form with free variables 0: pivot value is the row rhs.
    for (std::size_t col = 0; col < sys.num_vars; ++col)
        if (pivot_of_col[col] >= 0 && rows[static_cast<std::size_t>(pivot_of_col[col])].rhs)
            res.solution.set(col);
    return res;
}

}  // namespace knotscan::gf2

namespace knotscan::exact {

namespace {

struct QRow {
    std::vector<mpq_class> coeffs;
    mpq_class rhs;
    Bitset prov;
};

std::vector<QRow> to_dense(const System& sys, bool with_prov) {
    std::vector<QRow> rows(sys.rows.size());
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        rows[i].coeffs.assign(sys.num_vars, 0);
        for (const Term& t : sys.rows[i].terms) {
            if (t.var >= sys.num_vars) throw std::invalid_argument("variable index out of range");
            rows[i].coeffs[t.var] += t.coeff;
        }
        rows[i].rhs = sys.rows[i].rhs;
        if (with_prov) {
            rows[i].prov.resize(sys.rows.size());
            rows[i].prov.set(i);
        }
    }
    return rows;
}

bool rational_feasible(std::vector<QRow> rows, std::size_t num_vars) {
    std::size_t rank_rows = 0;
    for (std::size_t col = 0; col < num_vars && rank_rows < rows.size(); ++col) {
        std::size_t pivot = rank_rows;
        while (pivot < rows.size() && rows[pivot].coeffs[col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank_rows], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank_rows || rows[r].coeffs[col] == 0) continue;
            const mpq_class factor = rows[r].coeffs[col] / rows[rank_rows].coeffs[col];
            for (std::size_t c = col; c < num_vars; ++c)
                rows[r].coeffs[c] -= factor * rows[rank_rows].coeffs[c];
            rows[r].rhs -= factor * rows[rank_rows].rhs;
        }
        ++rank_rows;
    }
    for (const auto& row : rows) {
        if (row.rhs == 0) continue;
        if (std::all_of(row.coeffs.begin(), row.coeffs.end(),
                        [](const mpq_class& q) { return q == 0; }))
            return false;
    }
    return true;
}

}  // namespace

RationalResult solve_rational(const System& sys) {
    auto rows = to_dense(sys, true);
    RationalResult res;

    std::vector<std::int64_t> pivot_of_col(sys.num_vars, -1);
    std::size_t rank_rows = 0;
    for (std::size_t col = 0; col < sys.num_vars && rank_rows < rows.size(); ++col) {
        std::size_t pivot = rank_rows;
        while (pivot < rows.size() && rows[pivot].coeffs[col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank_rows], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank_rows || rows[r].coeffs[col] == 0) continue;
            const mpq_class factor = rows[r].coeffs[col] / rows[rank_rows].coeffs[col];
            for (std::size_t c = 0; c < sys.num_vars; ++c)
                rows[r].coeffs[c] -= factor * rows[rank_rows].coeffs[c];
            rows[r].rhs -= factor * rows[rank_rows].rhs;
            rows[r].prov ^= rows[rank_rows].prov;
        }
        pivot_of_col[col] = static_cast<std::int64_t>(rank_rows);
        ++rank_rows;
    }

    for (const auto& row : rows) {
        if (row.rhs == 0) continue;
        if (!std::all_of(row.coeffs.begin(), row.coeffs.end(),
                         [](const mpq_class& q) { return q == 0; }))
            continue;
        std::vector<std::size_t> members;
        for (auto p = row.prov.find_first(); p != Bitset::npos; p = row.prov.find_next(p))
            members.push_back(p);
        for (std::size_t k = 0; k < members.size();) {
            System sub;
            sub.num_vars = sys.num_vars;
            for (std::size_t j = 0; j < members.size(); ++j)
                if (j != k) sub.rows.push_back(sys.rows[members[j]]);
            if (!rational_feasible(to_dense(sub, false), sub.num_vars))
                members.erase(members.begin() + static_cast<std::ptrdiff_t>(k));
            else
                ++k;
        }
        for (std::size_t m : members) res.core.push_back(sys.rows[m].id);
        std::sort(res.core.begin(), res.core.end());
        res.feasible = false;
        return res;
    }

    res.feasible = true;
    res.solution.assign(sys.num_vars, 0);
    for (std::size_t col = 0; col < sys.num_vars; ++col) {
        if (pivot_of_col[col] < 0) continue;
        const auto& row = rows[static_cast<std::size_t>(pivot_of_col[col])];
        res.solution[col] = row.rhs / row.coeffs[col];
    }
    return res;
}

namespace {

using Mat = std::vector<std::vector<mpz_class>>;

Mat identity(std::size_t n) {
    Mat m(n, std::vector<mpz_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void swap_rows(Mat& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(Mat& m, std::size_t a, std::size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

void add_row(Mat& m, std::size_t dst, std::size_t src, const mpz_class& q) {
    for (std::size_t c = 0; c < m[dst].size(); ++c) m[dst][c] += q * m[src][c];
}

void add_col(Mat& m, std::size_t dst, std::size_t src, const mpz_class& q) {
    for (auto& row : m) row[dst] += q * row[src];
}

}  // namespace

IntegerResult solve_integer(const System& sys) {
    const std::size_t nr = sys.rows.size();
    const std::size_t nc = sys.num_vars;
    IntegerResult res;

    Mat d(nr, std::vector<mpz_class>(nc, 0));
    std::vector<mpz_class> b(nr);
    for (std::size_t i = 0; i < nr; ++i) {
        for (const Term& t : sys.rows[i].terms) {
            if (t.var >= nc) throw std::invalid_argument("variable index out of range");
            d[i][t.var] += t.coeff;
        }
        b[i] = sys.rows[i].rhs;
    }
    Mat v = identity(nc);  // column ops accumulate here; x = v * y

    const std::size_t steps = std::min(nr, nc);
    std::size_t rank = 0;
    for (std::size_t t = 0; t < steps; ++t) {
        // Move the smallest nonzero entry of the trailing submatrix to (t, t),
        // then clear its row and column by division with remainder.
        while (true) {
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j)
                    if (d[i][j] != 0 &&
                        (!found || cmp(abs(d[i][j]), abs(d[pi][pj])) < 0)) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
            if (!found) goto diagonal_done;
            if (pi != t) {
                swap_rows(d, t, pi);
                std::swap(b[t], b[pi]);
            }
            if (pj != t) {
                swap_cols(d, t, pj);
                swap_cols(v, t, pj);
            }
            bool reduced = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (d[i][t] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
                add_row(d, i, t, -q);
                b[i] -= q * b[t];
                if (d[i][t] != 0) reduced = false;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (d[t][j] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
                if (d[t][j] != 0) reduced = false;
            }
            if (reduced) break;
        }
        ++rank;
    }
diagonal_done:

    // D y = b with D diagonal of the given rank: divisibility on the pivots,
    // zero elsewhere.
    std::vector<mpz_class> y(nc, 0);
    for (std::size_t i = 0; i < nr; ++i) {
        if (i < rank) {
            mpz_class q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), b[i].get_mpz_t(), d[i][i].get_mpz_t());
            if (r != 0) return res;
            y[i] = q;
        } else if (b[i] != 0) {
            return res;
        }
    }

    res.feasible = true;
    res.solution.assign(nc, 0);
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            if (v[i][j] != 0) res.solution[i] += v[i][j] * y[j];
    return res;
}

}  // namespace knotscan::exact
