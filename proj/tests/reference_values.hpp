#pragma once

// Frozen reference data for the test suite: ten-digit truncated level strings
// at xi = 1 (trailing zeros trimmed on comparison), converged levels to
// seventeen digits, and the exact deformation-series coefficients.

#include <array>
#include <string_view>
#include <utility>

namespace refvals {

struct ConvergenceRow {
  long size;
  std::array<std::string_view, 4> levels;
};

// Non-Hermitian model, xi = 1, four lowest levels per class as the basis grows.
inline constexpr std::array<ConvergenceRow, 6> m1_pp_rows{{
    {5, {"0", "2.705129367", "10.82054064", "24.39391541"}},
    {6, {"0", "2.705129365", "10.82051747", "24.34655624"}},
    {7, {"0", "2.705129365", "10.82051746", "24.34616541"}},
    {8, {"0", "2.705129365", "10.82051746", "24.34616429"}},
    {9, {"0", "2.705129365", "10.82051746", "24.34616429"}},
    {10, {"0", "2.705129365", "10.82051746", "24.34616429"}},
}};

inline constexpr std::array<ConvergenceRow, 6> m1_pm_rows{{
    {5, {"0.6762823414", "6.086541072", "16.9071682", "33.23425983"}},
    {6, {"0.6762823414", "6.086541072", "16.90705871", "33.13897689"}},
    {7, {"0.6762823414", "6.086541072", "16.90705853", "33.13783974"}},
    {8, {"0.6762823414", "6.086541072", "16.90705853", "33.13783474"}},
    {9, {"0.6762823414", "6.086541072", "16.90705853", "33.13783472"}},
    {10, {"0.6762823414", "6.086541072", "16.90705853", "33.13783472"}},
}};

// The (-,-) class reproduces the (+,-) rows entry for entry.
inline constexpr const std::array<ConvergenceRow, 6>& m1_mm_rows = m1_pm_rows;

inline constexpr std::array<ConvergenceRow, 6> m1_mp_rows{{
    {5, {"2.705129365", "10.82051747", "24.34655624", "43.45817399"}},
    {6, {"2.705129365", "10.82051746", "24.34616541", "43.28492974"}},
    {7, {"2.705129365", "10.82051746", "24.34616429", "43.28208765"}},
    {8, {"2.705129365", "10.82051746", "24.34616429", "43.2820699"}},
    {9, {"2.705129365", "10.82051746", "24.34616429", "43.28206985"}},
    {10, {"2.705129365", "10.82051746", "24.34616429", "43.28206985"}},
}};

// Hermitian model, xi = 1, basis size 14.
inline constexpr std::array<std::string_view, 5> m2_pp_levels{
    "0", "2.642467139", "10.81697747", "24.35498746", "43.29263030"};
inline constexpr std::array<std::string_view, 4> m2_mp_levels{
    "2.79431927", "10.84750548", "24.35945236", "43.29320664"};
inline constexpr std::array<std::string_view, 4> m2_pm_levels{
    "0.7959412608", "6.135514729", "16.92430649", "33.14957349"};
inline constexpr std::array<std::string_view, 4> m2_mm_levels{
    "0.5700037793", "6.062735007", "16.91237359", "33.1479519"};

// Converged levels at xi = 1 to full double precision (basis size 16 suffices).
inline constexpr std::array<double, 5> m1_pp_converged{
    0.0, 2.7051293656590225, 10.820517462635673, 24.346164290930545, 43.282069850542932};
inline constexpr std::array<double, 4> m1_pm_converged{
    0.67628234141469901, 6.0865410727326417, 16.907058535368254, 33.137834729322002};
inline constexpr std::array<double, 4> m2_pp_nonzero_converged{
    2.642467139047886, 10.816977474377575, 24.35498746553727, 43.292630302050966};
inline constexpr std::array<double, 4> m2_pm_converged{
    0.79594126085011563, 6.1355147292207404, 16.924306495318614, 33.149573491957398};
inline constexpr std::array<double, 4> m2_mp_converged{
    2.7943192707630433, 10.847505489542568, 24.359452364313245, 43.293206643224131};
inline constexpr std::array<double, 4> m2_mm_converged{
    0.57000377932495117, 6.0627350079840161, 16.912373594404126, 33.147951903483076};

using Frac = std::pair<long long, long long>;

// Ground series of the non-Hermitian model through order 7; every level n
// carries n^2 times these coefficients.
inline constexpr std::array<Frac, 8> m1_ground_series{{{1, 1},
                                                       {-1, 2},
                                                       {9, 32},
                                                       {-11, 64},
                                                       {917, 8192},
                                                       {-1257, 16384},
                                                       {14375, 262144},
                                                       {-21281, 524288}}};

struct SeriesRef {
  long level;
  std::string_view cls;
  std::array<Frac, 5> coeff;
};

// Hermitian-model series through order 4, both classes of each split pair.
inline constexpr std::array<SeriesRef, 10> m2_series{{
    {1, "mm", {{{1, 1}, {-3, 4}, {71, 128}, {-1655, 4096}, {113807, 393216}}}},
    {1, "pm", {{{1, 1}, {-1, 4}, {7, 128}, {-41, 4096}, {527, 393216}}}},
    {2, "pp", {{{4, 1}, {-2, 1}, {11, 12}, {-3, 8}, {1781, 13824}}}},
    {2, "mp", {{{4, 1}, {-2, 1}, {17, 12}, {-9, 8}, {12533, 13824}}}},
    {3, "mm", {{{9, 1}, {-9, 2}, {657, 256}, {-7281, 4096}, {7505613, 5242880}}}},
    {3, "pm", {{{9, 1}, {-9, 2}, {657, 256}, {-5823, 4096}, {3773133, 5242880}}}},
    {4, "pp", {{{16, 1}, {-8, 1}, {68, 15}, {-14, 5}, {5878, 3375}}}},
    {4, "mp", {{{16, 1}, {-8, 1}, {68, 15}, {-14, 5}, {6628, 3375}}}},
    {5, "mm", {{{25, 1}, {-25, 2}, {5425, 768}, {-2225, 512}, {566374475, 198180864}}}},
    {5, "pm", {{{25, 1}, {-25, 2}, {5425, 768}, {-2225, 512}, {566374475, 198180864}}}},
}};

}  // namespace refvals
