#pragma once

#include "fuchs/gaussian.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fuchs {

// One entry [label]_(mult) of a column. Spectral types leave the label empty.
struct Part {
    std::optional<Gaussian> label;
    int mult = 0;

    friend bool operator==(const Part&, const Part&) = default;
};

using Column = std::vector<Part>;

// Multiplicity descending, ties broken by (re, im) of the label.
bool canonical_before(const Part& a, const Part& b);
void canonical_sort(Column& c);
int column_total(const Column& c);

// Column 0 is the point at infinity, column j the pole t_j.
struct PartitionTuple {
    std::vector<Column> columns;

    friend bool operator==(const PartitionTuple&, const PartitionTuple&) = default;
};

struct RiemannScheme {
    std::vector<Gaussian> poles;
    std::vector<Column> columns;

    friend bool operator==(const RiemannScheme&, const RiemannScheme&) = default;
};

void canonicalize(RiemannScheme& s);
PartitionTuple spectral_type(const RiemannScheme& s);
// Drops multiplicity-0 parts and sorts every column.
void prune_and_sort(std::vector<Column>& columns);

// "111111,222,33", parts of ten or more written "(10)".
PartitionTuple parse_spectral_type(std::string_view text);
std::string format_spectral_type(const PartitionTuple& m);
std::string format_column(const Column& c);
std::string format_scheme(const RiemannScheme& s);

} // namespace fuchs
