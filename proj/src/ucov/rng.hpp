/*
  Copyright (c) 2026 ucov developers

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef UCOV_RNG_HPP
#define UCOV_RNG_HPP

#include <cstdint>

namespace ucov {
namespace detail {

inline void mulhilo32(std::uint32_t a, std::uint32_t b, std::uint32_t* lo, std::uint32_t* hi) {
    std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    *lo = static_cast<std::uint32_t>(p);
    *hi = static_cast<std::uint32_t>(p >> 32);
}

// Philox4x32-10 (Salmon et al., SC 2011): a keyed bijection on 128-bit
// counter blocks. Being counter-based gives O(1) random access to any
// sample index, which keeps reruns reproducible regardless of thread
// count or evaluation order.
struct Philox4x32 {
    std::uint32_t v[4];

    static Philox4x32 eval(std::uint32_t c0, std::uint32_t c1, std::uint32_t c2,
                           std::uint32_t c3, std::uint32_t k0, std::uint32_t k1) {
        constexpr std::uint32_t m0 = 0xD2511F53u;
        constexpr std::uint32_t m1 = 0xCD9E8D57u;
        constexpr std::uint32_t w0 = 0x9E3779B9u;
        constexpr std::uint32_t w1 = 0xBB67AE85u;
        std::uint32_t x0 = c0, x1 = c1, x2 = c2, x3 = c3;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t lo0, hi0, lo1, hi1;
            mulhilo32(m0, x0, &lo0, &hi0);
            mulhilo32(m1, x2, &lo1, &hi1);
            std::uint32_t y0 = hi1 ^ x1 ^ k0;
            std::uint32_t y1 = lo1;
            std::uint32_t y2 = hi0 ^ x3 ^ k1;
            std::uint32_t y3 = lo0;
            x0 = y0;
            x1 = y1;
            x2 = y2;
            x3 = y3;
            k0 += w0;
            k1 += w1;
        }
        return Philox4x32{{x0, x1, x2, x3}};
    }
};

// Domain tags keep unrelated uses of one seed decorrelated: the same
// (seed, counter) pair never feeds two different purposes.
inline constexpr std::uint32_t k_domain_coords = 0;
inline constexpr std::uint32_t k_domain_substream = 1;

inline Philox4x32 philox_block(std::uint64_t key, std::uint64_t ctr, std::uint32_t block,
                               std::uint32_t domain) {
    return Philox4x32::eval(static_cast<std::uint32_t>(ctr),
                            static_cast<std::uint32_t>(ctr >> 32), block, domain,
                            static_cast<std::uint32_t>(key),
                            static_cast<std::uint32_t>(key >> 32));
}

}  // namespace detail

// Uniform double in [0,1) from the top 53 bits.
inline double unit_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Derived seed for trial `index`. Distinct indices give decorrelated
// streams while the whole experiment stays reproducible from one seed.
inline std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index) {
    auto b = detail::philox_block(base, index, 0, detail::k_domain_substream);
    return (static_cast<std::uint64_t>(b.v[1]) << 32) | b.v[0];
}

}  // namespace ucov

#endif
