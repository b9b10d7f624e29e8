#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace regencheck {

// 64-bit FNV-1a. Used for seed derivation and content hashes.
std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ULL);

inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t seed = 0xcbf29ce484222325ULL) {
    return fnv1a64(s.data(), s.size(), seed);
}

// splitmix64 finalizer; decorrelates structured seed inputs.
std::uint64_t mix64(std::uint64_t x);

// Independent sub-stream seed for (master, stage-tag, index).
std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index = 0);

// All randomness in the toolkit flows through explicitly seeded engines.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(mix64(seed)); }

std::vector<double> gaussian_vector(std::size_t n, double mean, double stddev, std::uint64_t seed);
std::vector<double> uniform_vector(std::size_t n, double lo, double hi, std::uint64_t seed);

// Uniform sample of k distinct indices from [0, n), in draw order.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace regencheck
