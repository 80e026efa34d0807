#pragma once

// Frozen reference values. Generated by tests/gen_oracle_values.py
// (mpmath at 50-digit precision, rounded to nearest double); edit
// that script, not this header.

#include <cstdint>

namespace oracle {

struct GpdCase {
  double y, mu, sigma, xi, cdf, sf;
};
inline constexpr GpdCase kGpdCases[] = {
    {2749.0, 10.0, 9.47, 0.56, 0.9998878457514353, 0.00011215424856469905},
    {11.0, 10.0, 9.47, 0.56, 0.09750516528570996, 0.90249483471429},
    {30.0, 0.0, 2.0, 0.34, 0.9950998839272087, 0.0049001160727912794},
    {3.0, 0.0, 2.0, -0.4, 0.8988071148746118, 0.10119288512538813},
    {4.999, 0.0, 2.0, -0.4, 0.9999999994343146, 5.656854249493186e-10},
    {15.0, 5.0, 10.0, 0.0, 0.6321205588285577, 0.36787944117144233},
    {15.0, 5.0, 10.0, 1e-09, 0.6321205588285577, 0.36787944117144233},
    {15.0, 5.0, 10.0, -1e-09, 0.6321205588285577, 0.36787944117144233},
    {100000.0, 0.0, 1.0, 1.5, 0.9996457820512393, 0.00035421794876062506},
    {25.0, 10.0, 15.0, 5.0, 0.30117288122842073, 0.6988271187715792},
};

struct EventProbCase {
  double y, mu, sigma, xi, p_hat;
  std::uint64_t n;
  double prob, per_event_sf;
};
inline constexpr EventProbCase kEventProbCases[] = {
    {2749.0, 10.0, 9.47, 0.56, 0.9357390387223143, 13274ULL, 0.09123424998805117, 7.207139824144058e-06},
    {2749.0, 50.0, 40.98, 0.34, 0.9923158053337351, 13274ULL, 0.009545590304256715, 7.225733014695777e-07},
    {2749.0, 100.0, 97.46, -0.03, 0.9975139370197378, 13274ULL, 1.1446493954082205e-23, 8.623243900920751e-28},
    {10000000.0, 0.0, 1.0, 0.1, 0.5, 1000ULL, 4.999950000275034e-58, 4.9999500002750344e-61},
    {40.0, 5.0, 2.0, 0.0, 0.9, 10000ULL, 2.5109676335765272e-05, 2.5109991557439813e-09},
    {1000.0, 10.0, 9.47, 0.56, 0.9357390387223143, 1ULL, 4.351206552560122e-05, 4.351206552560122e-05},
    {2749.0, 10.0, 9.47, 0.56, 0.9357390387223143, 100000000ULL, 1.0, 7.207139824144058e-06},
    {120.0, 10.0, 5.0, -0.04, 0.93, 13274ULL, 8.864025658133574e-21, 6.677735165084808e-25},
    {500.0, 10.0, 20.0, 1.2, 0.95, 500ULL, 0.7665845804309714, 0.0029056414215404463},
    {60.0, 10.0, 9.47, 1e-07, 0.9, 2000ULL, 0.6390145966027654, 0.000509329125496094},
};

struct ZetaCase {
  double s, a, value;
};
inline constexpr ZetaCase kZetaCases[] = {
    {2.5, 10.0, 0.02272869919453454},
    {2.0, 1.0, 1.6449340668482264},
    {3.0, 1.0, 1.2020569031595942},
    {2.4, 10.0, 0.030506186840988058},
    {1.5, 1.0, 2.612375348685488},
    {6.7, 3.25, 0.00045628266720655603},
    {1.0001, 2749.0, 9992.084323958892},
};

// raw splitmix64 streams and derived seeds
inline constexpr std::uint64_t kStreamSeed0[] = {
    0xE220A8397B1DCDAFULL, 0x6E789E6AA1B965F4ULL, 0x06C45D188009454FULL, 0xF88BB8A8724C81ECULL
};
inline constexpr std::uint64_t kStreamSeedPattern = 0x0123456789ABCDEFULL;
inline constexpr std::uint64_t kStreamPattern[] = {
    0x157A3807A48FAA9DULL, 0xD573529B34A1D093ULL, 0x2F90B72E996DCCBEULL, 0xA2D419334C4667ECULL
};
inline constexpr double kStreamPatternU01[] = {
    0.08389616190521443, 0.8337909344596774
};

struct DeriveCase {
  std::uint64_t master, index, seed;
};
inline constexpr DeriveCase kDeriveCases[] = {
    {0x2AULL, 0ULL, 0xBDD732262FEB6E95ULL},
    {0x2AULL, 7ULL, 0xCCF635EE9E9E2FA4ULL},
    {0xDEADBEEFULL, 123456ULL, 0x508078D96273B4DFULL},
};

}  // namespace oracle
