#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gossip/tracing.hpp"

namespace gossip {

enum class InnerKind { Gossip, Frameproof };

// Inner code of a concatenation: rows are the inner codewords, labelled by
// their 0-based index (outer symbol s encodes as row s).
struct InnerCode {
    InnerKind kind = InnerKind::Gossip;
    int alphabet = 0;  // inner symbol alphabet
    int collusion = 0; // coalition size the inner code withstands
    std::vector<std::vector<int>> matrix;

    int codewords() const { return static_cast<int>(matrix.size()); }
    int length() const { return matrix.empty() ? 0 : static_cast<int>(matrix.front().size()); }
};

struct ConcatenatedCode {
    InnerCode inner;
    GossipCode outer;
    std::vector<std::vector<int>> matrix; // outer rows with symbols replaced by inner codewords

    int length() const { return outer.length() * inner.length(); }
};

// The 2-FP(3,4,2) binary frameproof code: rows 100, 010, 001, 111.
InnerCode builtin_fp_342();

// Wraps a square all-symbols code (or any gossip code) as an inner code.
InnerCode inner_from_gossip(const GossipCode& code);

// Requires inner.codewords() == outer.alphabet.
ConcatenatedCode concatenate(const InnerCode& inner, const GossipCode& outer);

// One decoded segment of a concatenated pirate word.
struct SegmentDecode {
    int outer_symbol = ERASURE;            // exact inner codeword match, else ERASURE
    std::vector<int> candidates;           // inner rows present in every feasible inner coalition
    std::vector<std::vector<int>> feasible; // all feasible inner coalitions (0-based rows)
};

// Pirate word of a coalition over the concatenated matrix: per symbol
// position, undetected positions keep the common symbol; detected positions
// get an erasure, a member symbol, or a seeded coin between the two.
PirateWord make_concat_pirate_word(const ConcatenatedCode& cc, const Coalition& W, Strategy strategy,
                                   std::uint64_t seed);

// Splits the word into outer positions and decodes each segment: an exact
// match yields the outer symbol, anything else an outer erasure plus the
// brute-force inner candidate analysis.
std::pair<PirateWord, std::vector<SegmentDecode>> segment_and_decode(const ConcatenatedCode& cc,
                                                                     const PirateWord& word);

// Two-stage tracing: outer non-zero tracing on the decoded word first; then
// the forced inner participants of erased segments, mapped through the outer
// columns' unique non-zero symbols; zero-pattern tracing as the fallback.
TraceReport concat_trace(const ConcatenatedCode& cc, const PirateWord& word);

ConcatenatedCode load_ccode(std::istream& in);
ConcatenatedCode load_ccode_text(const std::string& text);
void save_ccode(const ConcatenatedCode& cc, std::ostream& out);
std::string save_ccode_text(const ConcatenatedCode& cc);

} // namespace gossip
