#include "regencheck/rng.hpp"

#include <algorithm>
#include <numeric>

namespace regencheck {

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = fnv1a64(&master, sizeof(master));
    h = fnv1a64(tag, h);
    h = fnv1a64(&index, sizeof(index), h);
    return mix64(h);
}

std::vector<double> gaussian_vector(std::size_t n, double mean, double stddev, std::uint64_t seed) {
    std::vector<double> out(n);
    Rng rng = make_rng(seed);
    std::normal_distribution<double> dist(mean, stddev);
    for (auto& v : out) v = dist(rng);
    return out;
}

std::vector<double> uniform_vector(std::size_t n, double lo, double hi, std::uint64_t seed) {
    std::vector<double> out(n);
    Rng rng = make_rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    for (auto& v : out) v = dist(rng);
    return out;
}

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    Rng rng = make_rng(seed);
    // Partial Fisher-Yates: first k entries are the sample, in draw order.
    for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
        std::uniform_int_distribution<std::size_t> dist(i, n - 1);
        std::swap(idx[i], idx[dist(rng)]);
    }
    idx.resize(k);
    return idx;
}

}  // namespace regencheck
