#include "gossip/constructions.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <utility>

namespace gossip {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

} // namespace

Design projective_plane(int p, int max_prime) {
    if (!is_prime(p)) throw ParameterError("projective_plane: p = " + std::to_string(p) + " is not prime");
    if (p > max_prime)
        throw ResourceError("projective_plane: p = " + std::to_string(p) + " exceeds the limit of " +
                            std::to_string(max_prime));

    // Normalized triples (first non-zero coordinate is 1) in lexicographic order.
    std::vector<std::array<int, 3>> reps;
    for (int a = 0; a <= 1; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c) {
                std::array<int, 3> t{a, b, c};
                int first = t[0] != 0 ? 0 : (t[1] != 0 ? 1 : (t[2] != 0 ? 2 : -1));
                if (first < 0 || t[first] != 1) continue;
                bool normalized = true;
                for (int i = 0; i < first; ++i)
                    if (t[i] != 0) normalized = false;
                if (normalized) reps.push_back(t);
            }
    std::sort(reps.begin(), reps.end());
    const int v = p * p + p + 1;
    if (static_cast<int>(reps.size()) != v)
        throw ConsistencyError("projective_plane: point enumeration mismatch");

    Design d;
    d.t = 2;
    d.v = v;
    d.k = p + 1;
    d.lambda = 1;
    // Line (a,b,c) consists of the points (x,y,z) with ax+by+cz = 0.
    for (const auto& line : reps) {
        std::vector<int> block;
        for (int i = 0; i < v; ++i) {
            const auto& pt = reps[i];
            if ((line[0] * pt[0] + line[1] * pt[1] + line[2] * pt[2]) % p == 0) block.push_back(i + 1);
        }
        if (static_cast<int>(block.size()) != p + 1)
            throw ConsistencyError("projective_plane: line size mismatch");
        d.blocks.push_back(std::move(block));
    }
    return d;
}

Design steiner_triple(int v) {
    if (v < 7 || (v % 6 != 1 && v % 6 != 3))
        throw ParameterError("steiner_triple: v must be >= 7 and congruent to 1 or 3 (mod 6)");

    Design d;
    d.t = 2;
    d.v = v;
    d.k = 3;
    d.lambda = 1;

    if (v % 6 == 3) {
        // Bose: points Z_n x {0,1,2} with n = 2t+1; (i, level) -> 1 + i + level*n.
        const int n = v / 3;
        const int half = (n + 1) / 2; // inverse of 2 mod n
        auto pt = [&](int i, int level) { return 1 + mod(i, n) + level * n; };
        for (int i = 0; i < n; ++i) d.blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
        for (int level = 0; level < 3; ++level)
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    std::vector<int> b{pt(x, level), pt(y, level), pt(mod((x + y) * half, n), (level + 1) % 3)};
                    std::sort(b.begin(), b.end());
                    d.blocks.push_back(std::move(b));
                }
    } else {
        // Skolem: points Z_2t x {0,1,2} plus one extra; the half-idempotent
        // commutative quasigroup is x*y = h(x+y) with h(2i)=i, h(2i+1)=t+i.
        const int n = (v - 1) / 3; // n = 2t
        const int tt = n / 2;
        auto h = [&](int x) { return x % 2 == 0 ? x / 2 : tt + (x - 1) / 2; };
        auto pt = [&](int i, int level) { return 1 + mod(i, n) + level * n; };
        const int inf = v;
        for (int i = 0; i < tt; ++i) d.blocks.push_back({pt(i, 0), pt(i, 1), pt(i, 2)});
        for (int i = 0; i < tt; ++i) {
            for (int level = 0; level < 3; ++level) {
                std::vector<int> b{inf, pt(tt + i, level), pt(i, (level + 1) % 3)};
                std::sort(b.begin(), b.end());
                d.blocks.push_back(std::move(b));
            }
        }
        for (int level = 0; level < 3; ++level)
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y) {
                    std::vector<int> b{pt(x, level), pt(y, level), pt(h(mod(x + y, n)), (level + 1) % 3)};
                    std::sort(b.begin(), b.end());
                    d.blocks.push_back(std::move(b));
                }
    }
    return d;
}

Design cyclic_design(const std::vector<int>& base_block, int v, int t, int lambda) {
    if (v < 1) throw StructuralError("cyclic_design: v must be positive");
    std::set<int> seen;
    for (int p : base_block) {
        if (p < 1 || p > v)
            throw StructuralError("cyclic_design: base point " + std::to_string(p) + " out of range 1..v");
        if (!seen.insert(p).second)
            throw StructuralError("cyclic_design: duplicate base point " + std::to_string(p));
    }
    if (base_block.empty()) throw StructuralError("cyclic_design: empty base block");

    Design d;
    d.t = t;
    d.v = v;
    d.k = static_cast<int>(base_block.size());
    d.lambda = lambda;
    for (int shift = 0; shift < v; ++shift) {
        std::vector<int> dev;
        dev.reserve(base_block.size());
        for (int p : base_block) dev.push_back(mod(p - 1 + shift, v) + 1);
        std::set<int> uniq(dev.begin(), dev.end());
        if (uniq.size() != dev.size())
            throw StructuralError("cyclic_design: duplicate residues after reduction at shift " +
                                  std::to_string(shift));
        std::vector<int> sorted(dev.begin(), dev.end());
        std::sort(sorted.begin(), sorted.end());
        d.blocks.push_back(std::move(sorted));
        d.dev_blocks.push_back(std::move(dev));
    }
    return d;
}

namespace {

// Arithmetic in GF(p^2) = F_p[w]/(w^2 + c1*w + c0), elements as a + b*w.
struct QuadField {
    int p, c0, c1;
    using El = std::pair<int, int>;

    El add(El x, El y) const { return {mod(x.first + y.first, p), mod(x.second + y.second, p)}; }
    El mul(El x, El y) const {
        // (a+bw)(c+dw) = ac + (ad+bc)w + bd*w^2, w^2 = -c0 - c1*w
        int ac = x.first * y.first, bd = x.second * y.second;
        int cross = x.first * y.second + x.second * y.first;
        return {mod(ac - bd * c0, p), mod(cross - bd * c1, p)};
    }
    bool is_zero(El x) const { return x.first == 0 && x.second == 0; }
    El inv(El x) const {
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) {
                El y{a, b};
                El pr = mul(x, y);
                if (pr.first == 1 && pr.second == 0) return y;
            }
        throw ConsistencyError("QuadField: element has no inverse");
    }
    int index(El x) const { return x.first * p + x.second; } // lexicographic (a,b)
};

QuadField make_quad_field(int p) {
    // Lexicographically first monic irreducible x^2 + c1*x + c0 over F_p.
    for (int c1 = 0; c1 < p; ++c1)
        for (int c0 = 0; c0 < p; ++c0) {
            bool has_root = false;
            for (int x = 0; x < p && !has_root; ++x)
                if ((x * x + c1 * x + c0) % p == 0) has_root = true;
            if (!has_root) return QuadField{p, c0, c1};
        }
    throw ConsistencyError("make_quad_field: no irreducible quadratic found");
}

} // namespace

Design inversive_plane(int p, int max_prime) {
    if (!is_prime(p)) throw ParameterError("inversive_plane: p = " + std::to_string(p) + " is not prime");
    if (p > max_prime)
        throw ResourceError("inversive_plane: p = " + std::to_string(p) + " exceeds the limit of " +
                            std::to_string(max_prime));

    const QuadField F = make_quad_field(p);
    const int q = p * p;
    const int v = q + 1;
    const int INF = v; // point number of infinity

    // Point numbers: element a+bw -> 1 + a*p + b; infinity last.
    auto pt_of = [&](QuadField::El e) { return 1 + F.index(e); };

    // The subline: prime subfield plus infinity.
    std::vector<int> subline_ids;
    std::vector<QuadField::El> subline;
    for (int a = 0; a < p; ++a) subline.push_back({a, 0});

    // Enumerate all invertible 2x2 matrices and apply z -> (az+b)/(cz+d) to
    // the subline; distinct images are the blocks.
    std::vector<QuadField::El> elems;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) elems.push_back({a, b});

    auto apply = [&](QuadField::El a, QuadField::El b, QuadField::El c, QuadField::El d, bool at_inf,
                     QuadField::El z) -> int {
        if (at_inf) {
            // image of infinity: a/c, or infinity when c = 0
            if (F.is_zero(c)) return INF;
            return pt_of(F.mul(a, F.inv(c)));
        }
        QuadField::El num = F.add(F.mul(a, z), b);
        QuadField::El den = F.add(F.mul(c, z), d);
        if (F.is_zero(den)) return INF;
        return pt_of(F.mul(num, F.inv(den)));
    };

    std::set<std::vector<int>> block_set;
    for (const auto& a : elems)
        for (const auto& b : elems)
            for (const auto& c : elems)
                for (const auto& d : elems) {
                    // det = ad - bc
                    QuadField::El det = F.add(F.mul(a, d), F.mul({mod(-b.first, p), mod(-b.second, p)}, c));
                    if (F.is_zero(det)) continue;
                    std::vector<int> image;
                    image.reserve(p + 1);
                    for (const auto& z : subline) image.push_back(apply(a, b, c, d, false, z));
                    image.push_back(apply(a, b, c, d, true, {0, 0}));
                    std::sort(image.begin(), image.end());
                    block_set.insert(std::move(image));
                }

    Design des;
    des.t = 3;
    des.v = v;
    des.k = p + 1;
    des.lambda = 1;
    des.blocks.assign(block_set.begin(), block_set.end());
    const long long expected_b = static_cast<long long>(p) * v;
    if (des.block_count() != expected_b)
        throw ConsistencyError("inversive_plane: got " + std::to_string(des.block_count()) + " blocks, expected " +
                               std::to_string(expected_b));
    return des;
}

Design embed_sts(const Design& sts) {
    if (sts.t != 2 || sts.k != 3 || sts.lambda != 1)
        throw ParameterError("embed_sts: input must be a 2-(v,3,1) design");
    const auto rep = verify_design(sts);
    if (!rep.valid) throw ParameterError("embed_sts: input fails verification");

    const int v = sts.v;
    const int n = v + 1; // number of new points; even since v is odd
    Design d;
    d.t = 2;
    d.v = 2 * v + 1;
    d.k = 3;
    d.lambda = 1;
    d.blocks = sts.blocks;

    // Round-robin one-factorization of K_n on new points v+1 .. 2v+1:
    // circle labels 0..n-2 plus a hub; round r pairs the hub with r and
    // (r-i, r+i) mod n-1 for i = 1..n/2-1. Factor r is glued to old point r+1.
    auto new_pt = [&](int label) { return v + 1 + label; }; // labels 0..n-2
    const int hub = 2 * v + 1;
    const int m = n - 1; // = v, odd
    for (int r = 0; r < m; ++r) {
        const int old_point = r + 1;
        {
            std::vector<int> b{old_point, new_pt(r), hub};
            std::sort(b.begin(), b.end());
            d.blocks.push_back(std::move(b));
        }
        for (int i = 1; i <= (n - 2) / 2; ++i) {
            std::vector<int> b{old_point, new_pt(mod(r - i, m)), new_pt(mod(r + i, m))};
            std::sort(b.begin(), b.end());
            d.blocks.push_back(std::move(b));
        }
    }
    return d;
}

} // namespace gossip
