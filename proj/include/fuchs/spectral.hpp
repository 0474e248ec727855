#pragma once

#include "fuchs/spectral_types.hpp"

#include <string>
#include <vector>

namespace fuchs {

// Combinatorics of spectral types. Part indices are 0-based and refer to the
// order in which parts are stored.

int ord(const PartitionTuple& m);
int idx_spec(const PartitionTuple& m);
// Indices past the end of a column (or missing entries of tau) contribute 0.
int d_tau(const PartitionTuple& m, const std::vector<std::size_t>& tau);
std::vector<std::size_t> tau_max(const PartitionTuple& m);
int d_max(const PartitionTuple& m);

// Subtracts d_max at the tau_max positions. When every part carries a label
// the labels follow the Riemann scheme of mc_max.
PartitionTuple partial_max(const PartitionTuple& m);

struct KatzReduction {
    PartitionTuple final_type;
    std::vector<PartitionTuple> steps;
};
KatzReduction katz_reduce(const PartitionTuple& m);

int oidx(const PartitionTuple& m);
bool is_basic(const PartitionTuple& m);
bool lemma_ineq_holds(const PartitionTuple& m);

// Labels dropped, parts sorted descending, trivial columns removed and
// columns sorted lexicographically ascending: two types are identified iff
// their canonical forms are equal.
PartitionTuple canonical_type(const PartitionTuple& m);

// The spectral types of Okubo systems of minimal rank ord + oidx reached
// from m, one per maximizing choice of the distinguished point.
std::vector<PartitionTuple> minimal_onf_types(const PartitionTuple& m);

std::vector<PartitionTuple> enumerate_basic(int target_idx, int max_ord, int max_points);

struct TableRow {
    std::string basic;
    int ord = 0;
    int onf_ord = 0;
    std::vector<std::string> onf;
};

// The published classification rows for index 0 and -2.
const std::vector<TableRow>& basic_table(int idx);

struct TableRowCheck {
    std::string basic;
    int ord = 0;
    int onf_ord = 0;
    std::vector<std::string> onf;
    // "matched", "mismatch", "not in table" or "missing from enumeration".
    std::string status;
};

struct TableComparison {
    bool matched = true;
    std::vector<TableRowCheck> rows;
};

// Enumerates with the given bounds and compares ord, ord + oidx and the
// minimal Okubo types with basic_table(idx). A row with several listed Okubo
// types matches when the computed alternatives hit any of them.
TableComparison compare_with_table(int idx, int max_ord, int max_points);

} // namespace fuchs
