#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gossip/code.hpp"

namespace gossip {

// A c-TS(k, b, v) key-assignment set system: b users, each holding k of the
// v base keys. Private keys preserve their listed (development) order.
struct TraceabilityScheme {
    int keys_per_user = 0; // k
    int users = 0;         // b
    int base_keys = 0;     // v
    std::vector<std::vector<int>> private_keys;
};

void check_scheme_structure(const TraceabilityScheme& ts);

// Exposed users for a pirate decoder F: all maximizers of |F ∩ P(U)|.
// Ties are all returned.
std::vector<int> ts_trace(const TraceabilityScheme& ts, const std::vector<int>& decoder);

// True iff all pairwise private-key intersections have size < c.
bool check_distinctness(const TraceabilityScheme& ts, int c);

// Gossip code with M = v, q = k+1, l = b; column j's key is P(j). Requires
// b = C(v,c)/C(k,c) and pairwise distinctness.
GossipCode ts_to_gossip(const TraceabilityScheme& ts, int c,
                        SymbolAssign assign = SymbolAssign::Canonical);

// Scheme whose private keys are the column keys of a shortest code, together
// with its traceability strength w = floor(sqrt((q-2)/(c-1))).
std::pair<int, TraceabilityScheme> gossip_to_ts(const GossipCode& code);

// Scheme developed from a base block mod v (residues written 1..v).
TraceabilityScheme ts_from_cyclic(const std::vector<int>& base_block, int v);

// Text format: line 1 `k b v`, then b lines of k key indices (listed order).
TraceabilityScheme load_scheme(std::istream& in);
TraceabilityScheme load_scheme_text(const std::string& text);
void save_scheme(const TraceabilityScheme& ts, std::ostream& out);
std::string save_scheme_text(const TraceabilityScheme& ts);

} // namespace gossip
