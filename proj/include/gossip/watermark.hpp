#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gossip/errors.hpp"

namespace gossip {

// 8-bit grayscale image, row-major. Both dimensions must be even for the
// single-level transform.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
};

// Single-level 2D Haar bands, each (width/2) x (height/2), row-major.
struct WaveletBands {
    int bw = 0;
    int bh = 0;
    std::vector<double> ll, hl, lh, hh;
};

// Orthonormal single-level Haar transform (1/2 normalization per 2x2 block)
// and its exact inverse on real coefficients.
WaveletBands haar_dwt2(const GrayImage& img);
std::vector<double> inverse_haar_dwt2_real(const WaveletBands& bands);

// Inverse transform back to pixels: round half to even, clamp to 0..255.
GrayImage inverse_haar_dwt2(const WaveletBands& bands);

// Deterministic +-1 sequence derived from a codeword: the symbols expand to a
// base-2 digit pattern which is tiled to `length` and whitened by a
// pseudorandom mask keyed by the seed and a digest of the codeword.
struct WatermarkSequence {
    std::vector<int> values; // entries in {-1, +1}
};
WatermarkSequence codeword_to_wm(const std::vector<int>& codeword, int alphabet, std::size_t length,
                                 std::uint64_t seed);

inline constexpr double kDefaultAlpha = 0.1;
inline constexpr double kDefaultThreshold = 0.3;

// Band-level embedding step: V += alpha*|V|*wm over HL then LH, in place.
// LL and HH are untouched. The sequence must cover both bands.
void wm_apply(WaveletBands& bands, const WatermarkSequence& wm, double alpha);

// Embeds the codeword into the HL and LH detail bands: V += alpha*|V|*wm.
// LL and HH are untouched.
GrayImage wm_embed(const GrayImage& img, const std::vector<int>& codeword, int alphabet, double alpha,
                   std::uint64_t seed);

struct DetectResult {
    double correlation = 0.0; // in [-1, 1]
    bool detected = false;
};

// Blind detection: regenerate the sequence from (codeword, seed) and score it
// against the sign-folded magnitude deviations of the HL/LH coefficients. The
// score is normalized so that an unwatermarked image has unit variance, then
// scaled into [-1, 1].
DetectResult wm_detect(const GrayImage& img, const std::vector<int>& codeword, int alphabet, std::uint64_t seed,
                       double threshold = kDefaultThreshold);

// PGM input/output, P5 (binary) and P2 (ASCII), maxval 255.
GrayImage load_pgm(std::istream& in);
GrayImage load_pgm_file(const std::string& path);
void save_pgm(const GrayImage& img, std::ostream& out, bool binary = true);
void save_pgm_file(const GrayImage& img, const std::string& path, bool binary = true);

// Seeded test pattern used by the tooling.
GrayImage noise_image(int width, int height, std::uint64_t seed);

} // namespace gossip
