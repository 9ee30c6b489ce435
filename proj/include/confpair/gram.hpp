#pragma once

#include "confpair/pairing.hpp"
#include "confpair/partition.hpp"

#include <string>
#include <vector>

namespace confpair {

// Pairings between the long graphs (rows) and tall forests (columns) with k
// edges / internal vertices, both in ordered-partition enumeration order.
struct GramMatrix {
    int n = 0;
    int k = 0;
    Parity parity = Parity::even;
    std::vector<Graph> rows;
    std::vector<Forest> cols;
    std::vector<int> entries; // row-major

    int at(std::size_t r, std::size_t c) const { return entries[r * cols.size() + c]; }
};

// The OpenMP kernel and its serial reference fill the same matrix.
GramMatrix gram_matrix_serial(int n, int k, Parity p, const PairFn& pair = pair_value);
GramMatrix gram_matrix_parallel(int n, int k, Parity p, const PairFn& pair = pair_value);
GramMatrix gram_matrix(int n, int k, Parity p);

// Degree d-1 block: rows i->j and columns [i,j] plus singletons, i < j.
GramMatrix first_degree_gram(int n, Parity p, const PairFn& pair = pair_value);

struct GramFailure {
    int k = 0;
    std::size_t row = 0;
    std::size_t col = 0;
    Graph graph;
    Forest forest;
    int value = 0;
    int expected = 0;
};

// Entries that differ from the identity once rows and columns are matched
// through ordered_partition (or, for the first-degree block, by position).
std::vector<GramFailure> identity_failures(const GramMatrix& m);
std::vector<GramFailure> first_degree_failures(const GramMatrix& m);

struct DegreeCheck {
    int k = 0;
    std::size_t size = 0;
    bool identity = false;
};

struct PerfectReport {
    int n = 0;
    Parity parity = Parity::even;
    std::vector<DegreeCheck> degrees;
    std::size_t first_degree_rank = 0;
    bool first_degree_identity = false;
    std::vector<GramFailure> failures;
    bool pass() const { return failures.empty(); }
};

PerfectReport verify_perfect(int n, Parity p, const PairFn& pair = pair_value);

// Betti numbers of the configuration space: q_k in degree k(d-1).
struct RankTable {
    int n = 0;
    int d = 2;
    std::vector<Coeff> q;
    int degree(std::size_t k) const { return static_cast<int>(k) * (d - 1); }
};

RankTable rank_table(int n, int d);
std::string to_csv(const RankTable& t);

} // namespace confpair
