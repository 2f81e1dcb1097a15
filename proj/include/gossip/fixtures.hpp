#pragma once

#include <string>

#include "gossip/code.hpp"
#include "gossip/concat.hpp"
#include "gossip/design.hpp"
#include "gossip/traceability.hpp"

// Reference fixtures backing the `repro` targets and the acceptance suite.
// The constants hold the published tables verbatim; they are never written
// by the code under test.
namespace gossip::fixtures {

// The 7-point triple system whose blocks key the reference 7x7 code.
extern const char* kFanoDesign;

// 2-Gossip(7,7,4) reference matrix.
extern const char* kExample211Matrix;

// 2-Gossip(6,4,3) reference matrix, in the published column order.
extern const char* kExample431Matrix;

// 4-Gossip(5,5,5) square code, published column order.
extern const char* kExample411Matrix;

// 3-Gossip(4,4,4) square code, published column order.
extern const char* kExample511Matrix;

// Coalition -> only-erasures fingerprint tables.
extern const char* kTable1;
extern const char* kTable2;

// The 21 cyclic private keys, development order.
extern const char* kTable3;

// First 10 columns of the 2-Gossip(21,21,6) code in development-order
// symbol assignment.
extern const char* kAppendixMatrix10;

// Two-stage tracing outcomes for the two worked concatenated pirate words.
extern const char* kSec511Expected;

// Worked concatenated pirate words over the square-4 inner code (28 symbols)
// and the binary frameproof inner code (21 bits).
extern const char* kSec511Word1;
extern const char* kSec511Word2;
extern const char* kSec5Word;

// A 2-(13,4,1) design file, as written by hand for the loader tests.
extern const char* kPlane13Design;

// Constructed forms of the fixtures.
Design fano_design();
GossipCode example211_code();        // loads header + kExample211Matrix
GossipCode example431_code();
GossipCode example411_code();
GossipCode example511_code();
TraceabilityScheme appendix_scheme(); // developed from base {3,6,7,12,14} mod 21
GossipCode appendix_code();           // development-order 2-Gossip(21,21,6)
InnerCode builtin_square4();          // square-4 inner code in published column order
ConcatenatedCode example512_ccode();  // square-4 inner, 7x7 outer
ConcatenatedCode example52_ccode();   // frameproof inner, 7x7 outer

} // namespace gossip::fixtures
