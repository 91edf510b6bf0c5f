#ifndef PV_ALGEBRA_SYMBOLS_HPP
#define PV_ALGEBRA_SYMBOLS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace pv {

// The fixed scalar symbol table. The declaration order below is the total
// order used everywhere (monomial order, canonical signs, printing), so it
// must never be reordered.
enum class Sym : int {
    x = 0,  // base coordinate
    X,      // base coordinate after a Moebius change
    q,      // apparent singularity position
    t,      // leading eigenvalue at the irregular pole
    phat,   // vertical coordinate on the moduli space
    k0,     // residual exponent at 0
    k1,     // residual exponent at the double pole
    kinf,   // residual exponent at infinity
    alpha,  // free trajectory slope
    beta,   // trajectory coefficient
    gamma,  // trajectory coefficient
    T,      // 1/t
    Q,      // 1/q
    R,      // q*t
    S,      // t/q
    A,      // t/(q-1)
    P0,     // vertical coordinate on the q=0 wall
    P1,     // vertical coordinate on the q=1 wall
    Pinf,   // vertical coordinate on the q=inf wall
    P10,    // vertical coordinate at the t=0, q=1 corner
    Pplus,  // vertical coordinate on the t=inf wall, upper section
    Pminus, // vertical coordinate on the t=inf wall, lower section
    rho,    // abbreviates ((k0+k1-1)^2 - kinf^2)/4
};

inline constexpr int kNumSymbols = 23;

inline constexpr std::array<std::string_view, kNumSymbols> kSymbolNames = {
    "x",  "X",  "q",  "t",  "phat",  "k0", "k1",   "kinf", "alpha", "beta",  "gamma", "T",
    "Q",  "R",  "S",  "A",  "P0",    "P1", "Pinf", "P10",  "Pplus", "Pminus", "rho",
};

inline std::string_view symbol_name(Sym s) { return kSymbolNames[static_cast<int>(s)]; }

inline std::optional<Sym> symbol_from_name(std::string_view name) {
    for (int i = 0; i < kNumSymbols; ++i) {
        if (kSymbolNames[i] == name) return static_cast<Sym>(i);
    }
    return std::nullopt;
}

} // namespace pv

#endif
