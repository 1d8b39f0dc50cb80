//---------------------------------------------------------------------------//
// Copyright 2026 trigzero developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file trigzero/rng.hpp
//! Counter-based random streams.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>

namespace trigzero
{
//---------------------------------------------------------------------------//
/*!
 * Philox4x32-10 block function (Salmon et al., SC'11).
 *
 * Maps a 128-bit counter and 64-bit key to 128 random bits with no state.
 */
class Philox4x32
{
  public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter block(Counter ctr, Key key);
};

//! What a stream is used for; distinct purposes never share draws.
enum class StreamPurpose : std::uint32_t
{
    cosine_coefficients = 1,
    sine_coefficients = 2,
    limit_process = 3,
    clt_jitter = 4,
};

//! Identifies one independent stream: (seed, replicate, purpose, degree).
struct StreamKey
{
    std::uint64_t seed = 0;
    std::uint64_t replicate = 0;
    StreamPurpose purpose = StreamPurpose::cosine_coefficients;
    std::uint32_t degree = 0;
};

//---------------------------------------------------------------------------//
/*!
 * Sequential reader over one counter-based stream.
 *
 * Draw i of a stream depends only on (key, i), so replicates can be generated
 * in any order or on any thread with identical results. Each uniform
 * consumes exactly 64 bits; each normal consumes exactly one uniform.
 */
class CounterStream
{
  public:
    explicit CounterStream(StreamKey const& key);

    std::uint64_t next_u64();
    // Uniform on the open interval (0, 1)
    double next_uniform();
    // Standard normal by inverse-CDF transform
    double next_normal();

    std::uint64_t position() const { return position_; }

  private:
    Philox4x32::Key key_;
    std::uint32_t stream_word_;
    std::uint32_t replicate_hi_;
    std::uint32_t replicate_lo_;
    std::uint64_t position_ = 0;
    Philox4x32::Counter buffer_{};
};

// Inverse standard normal CDF
double normal_quantile(double u);

}  // namespace trigzero
