//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file rng.cpp
//---------------------------------------------------------------------------//
#include "trigzero/rng.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <numbers>

namespace trigzero
{
namespace
{
constexpr std::uint32_t philox_m0 = 0xD2511F53u;
constexpr std::uint32_t philox_m1 = 0xCD9E8D57u;
constexpr std::uint32_t philox_w0 = 0x9E3779B9u;
constexpr std::uint32_t philox_w1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a,
                    std::uint32_t b,
                    std::uint32_t& hi,
                    std::uint32_t& lo)
{
    std::uint64_t const p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}
}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key)
{
    for (int round = 0; round < 10; ++round)
    {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(philox_m0, ctr[0], hi0, lo0);
        mulhilo(philox_m1, ctr[2], hi1, lo1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        key[0] += philox_w0;
        key[1] += philox_w1;
    }
    return ctr;
}

//---------------------------------------------------------------------------//
CounterStream::CounterStream(StreamKey const& key)
    : key_{static_cast<std::uint32_t>(key.seed),
           static_cast<std::uint32_t>(key.seed >> 32)}
    , stream_word_((static_cast<std::uint32_t>(key.purpose) << 24)
                   ^ (key.degree & 0x00FFFFFFu))
    , replicate_hi_(static_cast<std::uint32_t>(key.replicate >> 32))
    , replicate_lo_(static_cast<std::uint32_t>(key.replicate))
{
}

std::uint64_t CounterStream::next_u64()
{
    // Two 64-bit words per Philox block; counter word 0 indexes blocks.
    std::uint64_t const block_index = position_ >> 1;
    if ((position_ & 1) == 0)
    {
        buffer_ = Philox4x32::block({static_cast<std::uint32_t>(block_index),
                                     stream_word_,
                                     replicate_lo_,
                                     replicate_hi_},
                                    key_);
    }
    std::size_t const w = (position_ & 1) * 2;
    ++position_;
    return (static_cast<std::uint64_t>(buffer_[w]) << 32) | buffer_[w + 1];
}

double CounterStream::next_uniform()
{
    // 53 random bits, shifted by half an ulp so 0 and 1 are excluded
    return (static_cast<double>(this->next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double CounterStream::next_normal()
{
    return normal_quantile(this->next_uniform());
}

double normal_quantile(double u)
{
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2 * u);
}

}  // namespace trigzero
