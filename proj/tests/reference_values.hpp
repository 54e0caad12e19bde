// Frozen reference values for the two built-in families at their default
// settings (paper1: 10x3, planted (1,0,1); paper2: 20x10, planted
// (1,0,1,1,1,0,1,1,1,0)).
//
// Low-precision tables carry 4-5 significant figures and are compared at
// matching tolerances. High-precision scalars were frozen from an
// independent prototype implementation and are compared near machine
// precision.
#pragma once

#include <array>
#include <cstddef>

namespace refvals {

// ---------------------------------------------------------------------------
// paper1 family, default spec (10x3)
// ---------------------------------------------------------------------------

// All 30 entries, 5 significant figures. Tolerance 5e-5.
inline constexpr std::array<std::array<double, 3>, 10> kA1Display = {{
    {0.81381, 0.90451, 0.65451},
    {1.0, 0.65451, 0.095492},
    {1.0, 0.34549, 0.095492},
    {0.81381, 0.095492, 0.65451},
    {0.51254, 0.0, 1.0},
    {0.21128, 0.095492, 0.65451},
    {0.025086, 0.34549, 0.095492},
    {0.025086, 0.65451, 0.095492},
    {0.21128, 0.90451, 0.65451},
    {0.51254, 1.0, 1.0},
}};

// Pseudo-inverse of columns {2,3}: 2x10, 5 significant figures, 5e-5.
inline constexpr std::array<std::array<double, 10>, 2> kP1Display = {{
    {0.22472, 0.28360, 0.13527, -0.16360, -0.32, -0.16360, 0.13527, 0.28360, 0.22472, 0.16},
    {0.02472, -0.16360, -0.06472, 0.28360, 0.47999, 0.28360, -0.06472, -0.16360, 0.02472, 0.16},
}};

// Pseudo-inverse of column {3}: 1x10, 6 significant figures, 5e-6.
inline constexpr std::array<double, 10> kP2Display = {
    0.174536, 0.0254645, 0.0254645, 0.174536, 0.266666,
    0.174536, 0.0254645, 0.0254645, 0.174536, 0.266666,
};

// Stage-by-stage branch SSE pairs (bit 0, bit 1) for the clean default
// instance. Entries below kTinySse are only bounded, not matched.
inline constexpr double kStage1Sse0 = 1.8389;              // 5 sig figs
inline constexpr double kStage1Sse0Exact = 1.8389009638183387;
inline constexpr double kStage2Sse1 = 2.0833;              // exact value 25/12
inline constexpr double kStage2Sse1Exact = 2.0833333333333335;
inline constexpr double kStage3Sse0 = 3.7500;              // exact value 15/4
inline constexpr double kStage3Sse0Exact = 3.75;
inline constexpr double kTinySse = 1e-20;

// Relaxed completions. Stage 1 bit 0: (x2, x3); stage 1 bit 1: (0, 1);
// stage 2 bit 1: x3 = 1/3.
inline constexpr std::array<double, 2> kStage1Bit0Completion = {0.410034, 1.41003};
inline constexpr std::array<double, 2> kStage1Bit0CompletionExact = {0.41003425237476643,
                                                                    1.4100342523747662};
inline constexpr double kStage2Bit1Completion = 0.3333333333333333;

// ---------------------------------------------------------------------------
// paper2 family, default spec (20x10)
// ---------------------------------------------------------------------------

// Reference rows of the 20x10 matrix (1-based row indices 1,2,3,18,19,20),
// 4 decimals (truncated, not rounded, in places). Tolerance 1.5e-4.
inline constexpr std::array<std::size_t, 6> kA2DisplayRows = {1, 2, 3, 18, 19, 20};
inline constexpr std::array<std::array<double, 10>, 6> kA2Display = {{
    {0.2955, 0.9663, 0.8355, 0.5649, 0.1494, 1.0, 0.6234, 0.8019, 0.1412, 1.0},
    {0.5649, 0.8355, 0.3694, 0.9334, 0.2955, 0.9663, -0.2225, 1.0, 0.2636, 0.8668},
    {0.7840, 0.6305, -0.2250, 0.9776, 0.4351, 0.9111, -0.9009, 0.4450, 0.3698, 0.7514},
    {-0.7840, 0.6305, -0.2250, -0.9776, 0.4351, -0.9111, -0.9009, -0.4450, 0.9798, 0.0881},
    {-0.5649, 0.8355, 0.3694, -0.9334, 0.2955, -0.9663, -0.2225, -1.0, 0.9906, 0.0764},
    {-0.2955, 0.9663, 0.8355, -0.5649, 0.1494, -1.0, 0.6234, -0.8019, 1.0, 0.0662},
}};

// Clean right-hand side at the same rows.
inline constexpr std::array<double, 6> kB2Display = {3.4122, 3.2046, 1.8856,
                                                     -1.9178, -1.0652, 0.9461};

// One published noisy instance at the same rows (its noise seed is
// unknown; used only for bound checks w = noisy - clean in [0, 0.2)).
inline constexpr std::array<double, 6> kB2NoisyDisplay = {3.5466, 3.2808, 2.0184,
                                                          -1.8409, -0.9618, 1.1094};

// Column 1 reference entries (1-based rows 1-5 and 17-20). 1.5e-4.
inline constexpr std::array<std::size_t, 9> kA2Col1Rows = {1, 2, 3, 4, 5, 17, 18, 19, 20};
inline constexpr std::array<double, 9> kA2Col1 = {0.2955, 0.5649, 0.7840, 0.9334, 1.0,
                                                  -0.9334, -0.7840, -0.5649, -0.2955};

// Last-stage reference rows of the published noisy run (1-based positions
// 1-5 and 16-20 of the length-20 vectors): incoming state s9, column a10,
// and the bit-1 state s9 - a10. Inputs carry 4 decimals, so the
// subtraction is checked at 2.5e-4.
inline constexpr std::array<double, 10> kS9Partial = {0.1344, 0.0762, 0.1328, 0.1616, 0.1294,
                                                      0.1919, 0.1881, 0.0769, 0.1033, 0.1633};
inline constexpr std::array<double, 10> kA10Partial = {1.0, 0.8668, 0.7514, 0.6514, 0.5647,
                                                       0.1173, 0.1017, 0.0881, 0.0764, 0.0662};
inline constexpr std::array<double, 10> kS10Partial = {-0.8655, -0.7906, -0.6186, -0.4897,
                                                       -0.4352, 0.0746, 0.0864, -0.0112,
                                                       0.0269, 0.0970};

// Unconstrained least-squares solution of the published noisy instance,
// 3 decimals; rounds to (0,0,0,0,1,0,0,0,0,1), not the planted vector.
inline constexpr std::array<double, 10> kNoisyRealXDisplay = {0.368, 0.092, 0.063, 0.096, 0.843,
                                                              -0.936, 0.063, 0.075, -1.0, 0.779};

inline constexpr std::array<int, 10> kPlanted2 = {1, 0, 1, 1, 1, 0, 1, 1, 1, 0};
inline constexpr std::array<int, 3> kPlanted1 = {1, 0, 1};

}  // namespace refvals
