#pragma once

#include "semiwalk/rational.hpp"

#include <cstdint>
#include <vector>

namespace testing_support {

/// Three exact probability vectors: uniform, a skewed fixed one, and a seeded random one.
inline std::vector<std::vector<semiwalk::Rational>> probability_vectors(int k, std::uint64_t seed = 7) {
    using semiwalk::Rational;
    std::vector<std::vector<Rational>> out;
    out.emplace_back(static_cast<std::size_t>(k), Rational(1, static_cast<unsigned long>(k)));
    std::vector<Rational> skew;
    Rational total = 0;
    for (int i = 0; i < k; ++i) {
        skew.emplace_back(i + 1);
        total += i + 1;
    }
    for (auto& v : skew) v /= total;
    out.push_back(skew);
    std::vector<Rational> rnd;
    total = 0;
    std::uint64_t s = seed;
    for (int i = 0; i < k; ++i) {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        rnd.emplace_back(static_cast<long>(1 + (s >> 33) % 97));
        total += rnd.back();
    }
    for (auto& v : rnd) v /= total;
    out.push_back(rnd);
    return out;
}

}  // namespace testing_support
