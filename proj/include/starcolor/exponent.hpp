#ifndef starcolor_exponent_hpp
#define starcolor_exponent_hpp

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "starcolor/bigint.hpp"
#include "starcolor/coloring.hpp"
#include "starcolor/graph.hpp"
#include "starcolor/oracles.hpp"
#include "starcolor/star_forest.hpp"

namespace starcolor {

/// One step of the exponent derivation. The base level is the largest star
/// of the pattern on its own (c = max(k, 1)); every further level adds one
/// more star with leaf count k on top of a pattern with exponent c_prev.
struct ExponentLevel {
    enum class Kind { base, peel };

    Kind kind = Kind::base;
    int k = 0;
    std::uint64_t c_prev = 0;
    std::uint64_t c = 0;

    friend bool operator==(const ExponentLevel&, const ExponentLevel&) = default;
};

/// Levels run from the innermost (base) outwards; the last level belongs to the
/// full pattern. An empty pattern has no levels and final_c = 0.
struct ExponentCertificate {
    std::vector<ExponentLevel> levels;
    std::uint64_t final_c = 0;

    friend bool operator==(const ExponentCertificate&, const ExponentCertificate&) = default;
};

/// Exponent for adding a star with k leaves to a pattern whose exponent is
/// c_prev. With e = max(k+1, k(k+2)+c_prev) and c = e + 3 we have, for x >= 2,
///   x^c - (x-1)^c >= x^(c-1) = x^(e+2) >= 4 x^e >= 1 + x^(k+1) + x^(k(k+2)+c_prev).
/// The same c also covers 1 + x^(k+2) + x^(k(k+2)+c_prev): for k >= 1 the
/// exponent k+2 is at most e, and for k = 0 it is at most e + 1 with c >= 4.
inline std::uint64_t peel_exponent(int k, std::uint64_t c_prev) {
    const auto kk = static_cast<std::uint64_t>(k);
    const std::uint64_t e = std::max(kk + 1, kk * (kk + 2) + c_prev);
    return std::max(kk + 2, e + 3);
}

/// Builds the exponent ledger for h: the largest star is the base case and the
/// remaining stars are added in descending order of leaf count, so the
/// smallest star is peeled first by the coloring recursion.
inline ExponentCertificate compute_exponent(const StarForest& h) {
    ExponentCertificate cert;
    const auto& stars = h.stars();
    if (stars.empty()) return cert;

    const int base = stars.back();
    cert.levels.push_back({ExponentLevel::Kind::base, base, 0,
                           static_cast<std::uint64_t>(std::max(base, 1))});
    for (std::size_t i = stars.size() - 1; i-- > 0;) {
        const std::uint64_t prev = cert.levels.back().c;
        cert.levels.push_back({ExponentLevel::Kind::peel, stars[i], prev, peel_exponent(stars[i], prev)});
    }
    cert.final_c = cert.levels.back().c;
    return cert;
}

namespace detail {

inline bool exponent_inequality(std::uint64_t center_exp, std::uint64_t block_exp, std::uint64_t c,
                                std::uint64_t x_max) {
    if (x_max < 2) throw std::invalid_argument("exponent inequality: x_max must be at least 2");
    BigInt prev_pow = 1; // (x-1)^c at x = 2
    for (std::uint64_t x = 2; x <= x_max; ++x) {
        const BigInt bx = x;
        const BigInt cur_pow = ipow(bx, c);
        if (cur_pow - prev_pow < 1 + ipow(bx, center_exp) + ipow(bx, block_exp)) return false;
        prev_pow = cur_pow;
    }
    return true;
}

} // namespace detail

/// True iff x^c - (x-1)^c >= 1 + x^(k+1) + x^(k(k+2)+c_prev) for every
/// integer x in [2, x_max], evaluated exactly.
inline bool verify_exponent_inequality(int k, std::uint64_t c_prev, std::uint64_t c, std::uint64_t x_max) {
    const auto kk = static_cast<std::uint64_t>(k);
    return detail::exponent_inequality(kk + 1, kk * (kk + 2) + c_prev, c, x_max);
}

/// Same inequality with the {v} + X term at its true size n*omega = x^(k+2),
/// which is what the palette accounting of a split node actually needs.
inline bool verify_accounting_inequality(int k, std::uint64_t c_prev, std::uint64_t c, std::uint64_t x_max) {
    const auto kk = static_cast<std::uint64_t>(k);
    return detail::exponent_inequality(kk + 2, kk * (kk + 2) + c_prev, c, x_max);
}

/// omega^c as an exact integer.
inline BigInt color_bound(std::uint64_t omega, std::uint64_t c) { return ipow(BigInt(omega), c); }

/// True iff the coloring's palette, and hence its number of distinct colors,
/// is at most omega(g)^final_c.
inline bool verify_bound(const Graph& g, const Coloring& col, const ExponentCertificate& cert) {
    const Color used = std::max<Color>(col.palette_size, col.colors_used());
    return BigInt(used) <= color_bound(clique_number(g), cert.final_c);
}

} // namespace starcolor

#endif // starcolor_exponent_hpp
