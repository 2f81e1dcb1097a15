#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gossip/design.hpp"

namespace gossip {

// Order in which a column key's rows receive the non-zero symbols.
// Canonical: ascending row order. Development: the key's listed order
// (cyclic development order for schemes built by development).
enum class SymbolAssign { Canonical, Development };

// A q-ary code in which every column carries each non-zero symbol exactly
// once and zeros elsewhere. `column_keys[j]` lists the rows of column j in
// symbol-assignment order: the i-th listed row holds symbol i+1. For the
// all-symbols square form (`zero_is_tracing`), keys have q rows and the i-th
// listed row holds symbol i, starting from 0.
struct GossipCode {
    int num_codewords = 0; // M
    int alphabet = 0;      // q
    int collusion = 0;     // c
    bool zero_is_tracing = false;
    bool design_backed = false; // keys form a c-(M, q-1, 1) block family
    std::vector<std::vector<int>> column_keys;
    std::vector<std::vector<int>> matrix; // M rows x l columns

    int length() const { return static_cast<int>(column_keys.size()); }

    // Rows holding non-zero symbols in column j (0-based column index).
    std::vector<int> key_support(int j) const;
};

struct CodeParams {
    long long length = 0;
    long long weight = 0;
    long long distance = 0;
};

// Code from a lambda=1 design: c = t, M = v, q = k+1, column j's key = block j.
GossipCode from_design(const Design& d, SymbolAssign assign = SymbolAssign::Canonical);

// Shortest-code parameters for (M, q, c); throws ParameterError when the
// binomial ratios are not integral (no shortest code with these parameters).
CodeParams code_params(int M, int q, int c);

// c = q-1 code whose keys are all (q-1)-subsets of 1..M in lexicographic order.
GossipCode full_gossip(int M, int q);

// The (q-1)-Gossip(q,q,q) square code: column j holds 0 at row j and 1..q-1
// ascending on the remaining rows; symbol 0 participates in tracing.
GossipCode square_gossip(int q);

// True iff the c-subsets of the column keys are pairwise disjoint as families
// and l * C(q-1,c) = C(M,c): every c-group is accused by exactly one column.
bool is_shortest(const GossipCode& code);

// All c-subsets of column j's key (of key plus the zero row for square codes),
// sorted. Column index is 1-based.
std::vector<std::vector<int>> accusation_groups(const GossipCode& code, int column);

// Matrix view: every inner codeword is the length-l prefix of some outer one.
bool is_embedded(const GossipCode& inner, const GossipCode& outer);

// Set-system view: inner points and column-key sets are contained in outer's.
bool is_embedded_sets(const GossipCode& inner, const GossipCode& outer);

// Reorders columns; order[j] is the 0-based source column for target j.
GossipCode permute_columns(const GossipCode& code, const std::vector<int>& order);

// Column bijection sigma with a.column[j] == b.column[sigma[j]], if one exists.
std::optional<std::vector<int>> find_column_permutation(const GossipCode& a, const GossipCode& b);

// Per-column multiset of rows holding non-zero symbols agrees, i.e. the codes
// are equal up to renaming the non-zero symbols within each column.
bool equal_up_to_symbol_permutation(const GossipCode& a, const GossipCode& b);

// Text format: line 1 `M q c l [zero_tracing]`, then M rows of l symbols.
GossipCode load_code(std::istream& in);
GossipCode load_code_text(const std::string& text);
void save_code(const GossipCode& code, std::ostream& out);
std::string save_code_text(const GossipCode& code);

// Plain matrix rendering, one row per line.
std::string render_matrix(const GossipCode& code);

} // namespace gossip
