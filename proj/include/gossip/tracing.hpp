#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gossip/code.hpp"

namespace gossip {

// Distinguished non-alphabet value; written `e` in text formats.
constexpr int ERASURE = -1;

// Length-l vector over the alphabet plus ERASURE.
struct PirateWord {
    std::vector<int> symbols;
    bool out_of_model = false; // produced by a coalition larger than c

    int length() const { return static_cast<int>(symbols.size()); }
};

// Members are distinct user indices in 1..M, kept sorted.
using Coalition = std::vector<int>;

enum class Strategy { NoErasures, SelectiveErasures, OnlyErasures };

// How a detected position's symbol is picked when the pirates do not erase.
// The callback receives the 1-based position and the sorted feasible symbols.
struct ChoicePolicy {
    enum Kind { SeededRandom, FirstMember, Callback } kind = SeededRandom;
    std::function<int(int, const std::vector<int>&)> fn;
};

enum class TraceRule { None, NonZero, ZeroPattern, BruteForce };

struct TraceReport {
    std::vector<int> accused;                     // users
    std::vector<Coalition> coalitions;            // brute-force output
    TraceRule rule = TraceRule::None;
    bool untraceable = false;
    bool out_of_model = false;
    int stage = 0;                                // concatenated tracing stage, 0 otherwise
    std::vector<std::pair<int, int>> attributions; // (1-based position, user)
};

// 1-based positions where the members' symbols differ.
std::vector<int> detected_positions(const GossipCode& code, const Coalition& W);

// Builds the pirate word of W under the erasure model: undetected positions
// keep the common symbol; detected positions get ERASURE, a feasible member
// symbol (by policy), or a seeded coin between the two.
PirateWord make_pirate_word(const GossipCode& code, const Coalition& W, Strategy strategy, std::uint64_t seed,
                            const ChoicePolicy& policy = {}, bool allow_oversize = false);

// Feasibility of `word` for W: erasures only at detected positions, symbols
// only where some member holds them.
bool is_descendant(const GossipCode& code, const Coalition& W, const PirateWord& word);

// One accusation per traceable symbol: symbol s >= 1 at position j convicts
// the unique row holding s there (s >= 0 when symbol 0 also traces).
TraceReport trace_nonzero(const GossipCode& code, const PirateWord& word);

// Zero-pattern method: accuse every row that is zero wherever the word is.
TraceReport trace_only_erasures(const GossipCode& code, const PirateWord& word);

// All coalitions of size <= c whose descendant set contains `word`, sorted by
// size then lexicographically. The subset count is capped by `budget`.
TraceReport brute_force_trace(const GossipCode& code, const PirateWord& word, int c,
                              long long budget = 5'000'000);

// Number of undetectable (zero) positions in the only-erasures word of any
// coalition of the given size, by inclusion-exclusion over the block counts.
// Requires a design-backed code.
long long undetectable_count(const GossipCode& code, int coalition_size);

// Direct count of columns whose key avoids W; must equal the formula.
long long undetectable_count_checked(const GossipCode& code, const Coalition& W);

// Word file: one line of l tokens, digits or `e`.
PirateWord load_word(std::istream& in, int alphabet);
PirateWord load_word_text(const std::string& text, int alphabet);
std::string word_to_string(const PirateWord& word);
std::string word_tuple(const PirateWord& word); // "(e, e, 0, ...)" rendering

} // namespace gossip
