#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gossip/errors.hpp"

namespace gossip {

// A t-(v,k,lambda) set system. Points are 1..v. Blocks are kept sorted
// ascending, in construction order. `dev_blocks`, when non-empty, preserves a
// construction-specific element order per block (cyclic development order);
// it always lists the same blocks as `blocks`.
struct Design {
    int t = 0;
    int v = 0;
    int k = 0;
    int lambda = 0;
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> dev_blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }

    // Element order used for symbol assignment provenance: development order
    // when known, sorted order otherwise.
    const std::vector<std::vector<int>>& provenance_blocks() const {
        return dev_blocks.empty() ? blocks : dev_blocks;
    }
};

struct VerifyReport {
    bool valid = false;
    bool structural_ok = false;
    std::string error;                        // structural problem, if any
    std::optional<std::vector<int>> witness;  // first t-subset with a wrong count
    long long witness_count = 0;
    long long forced_b = -1;                  // lambda*C(v,t)/C(k,t), -1 if non-integral
    long long block_count = 0;

    explicit operator bool() const { return valid; }
};

// Checks the design property exhaustively: every t-subset of 1..v must occur
// in exactly lambda blocks. Structural problems (bad block size, duplicate or
// out-of-range point) are reported separately from design-property failures.
// `max_points` guards the C(v,t) enumeration.
VerifyReport verify_design(const Design& d, int max_points = 512);

// Block-counting functions of a t-design (exact integer arithmetic).
// lambda_s: number of blocks containing a fixed s-subset, 0 <= s <= t.
// lambda_bar_s: number of blocks disjoint from a fixed s-subset.
long long lambda_s(const Design& d, int s);
long long lambda_bar_s(const Design& d, int s);

// Checked variants: count directly for the given subset and require equality
// with the formula (ConsistencyError otherwise).
long long lambda_s_checked(const Design& d, const std::vector<int>& subset);
long long lambda_bar_s_checked(const Design& d, const std::vector<int>& subset);

// Text format: line 1 `t v k lambda b`, then b lines of k point indices.
// `#` starts a comment line. Save order: blocks in construction order,
// points ascending within a block.
Design load_design(std::istream& in, bool verify = true, int max_points = 512);
Design load_design_text(const std::string& text, bool verify = true, int max_points = 512);
void save_design(const Design& d, std::ostream& out);
std::string save_design_text(const Design& d);

// Structural validation shared by constructors and loaders.
void check_design_structure(const Design& d);

} // namespace gossip
