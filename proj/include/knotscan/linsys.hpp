#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "knotscan/common.hpp"

namespace knotscan::gf2 {

struct Row {
    Bitset coeffs;     // one bit per variable
    bool rhs = false;
    std::uint32_t id = 0;  // caller's equation id, reported in cores
};

struct System {
    std::size_t num_vars = 0;
    std::vector<Row> rows;

    void add_row(const std::vector<std::uint32_t>& vars, std::int64_t constant,
                 std::uint32_t id);
};

struct Result {
    bool feasible = false;
    Bitset solution;                 // free variables 0
    std::vector<std::uint32_t> core;  // infeasible only: row ids, every superset infeasible
};

// Gaussian elimination over GF(2) with bit-packed rows. On infeasibility the
// core is the provenance of the first contradiction row, pruned until
// removing any single member makes the subsystem feasible.
Result solve(const System& sys);

bool is_feasible(const System& sys);

}  // namespace knotscan::gf2

namespace knotscan::exact {

struct Term {
    std::uint32_t var;
    std::int64_t coeff;
};

struct Row {
    std::vector<Term> terms;
    std::int64_t rhs = 0;
    std::uint32_t id = 0;
};

struct System {
    std::size_t num_vars = 0;
    std::vector<Row> rows;

    void add_row(std::vector<Term> terms, std::int64_t rhs, std::uint32_t id) {
        rows.push_back(Row{std::move(terms), rhs, id});
    }
};

struct RationalResult {
    bool feasible = false;
    std::vector<mpq_class> solution;  // free variables 0
    std::vector<std::uint32_t> core;  // infeasible only
};

// Exact fraction elimination; any solution with free variables set to 0.
RationalResult solve_rational(const System& sys);

struct IntegerResult {
    bool feasible = false;
    std::vector<mpz_class> solution;
};

// Decides integer solvability exactly by unimodular row/column reduction to a
// diagonal form (Smith-style), and returns a witness when one exists.
IntegerResult solve_integer(const System& sys);

}  // namespace knotscan::exact
