#pragma once

#include <vector>

#include "gossip/design.hpp"

namespace gossip {

// 2-(p^2+p+1, p+1, 1) design from the projective plane over the prime field
// of order p. Points are the normalized homogeneous triples in lexicographic
// order, numbered 1..v; blocks are lines, enumerated the same way.
Design projective_plane(int p, int max_prime = 97);

// 2-(v,3,1) Steiner triple system; Bose construction for v = 3 (mod 6),
// Skolem construction for v = 1 (mod 6). Requires v >= 7.
Design steiner_triple(int v);

// Develops base_block + i (mod v) for i = 0..v-1, residues written 1..v.
// The result is declared t-(v,k,lambda) but NOT verified here; dev_blocks
// keeps the development element order. Defaults declare a 2-(v,k,1) system.
Design cyclic_design(const std::vector<int>& base_block, int v, int t = 2, int lambda = 1);

// 3-(p^2+1, p+1, 1) design on the projective line over the field of order
// p^2: blocks are the images of the prime subline under fractional-linear
// maps. Field elements a+b*w are numbered 1 + a*p + b, infinity last.
Design inversive_plane(int p, int max_prime = 13);

// Doubles a 2-(v,3,1) system into a 2-(2v+1,3,1) system whose block list
// starts with the input blocks; the new points are matched by a round-robin
// one-factorization of the complete graph on v+1 points.
Design embed_sts(const Design& sts);

bool is_prime(int n);

} // namespace gossip
