#pragma once

#include <boost/math/distributions/chi_squared.hpp>

#include <cstdint>
#include <map>
#include <string>

namespace testing {

/// Upper-tail p-value of Pearson's statistic for observed counts against a
/// uniform reference over `categories` cells (cells never seen count as 0).
inline double uniformChiSquarePValue(const std::map<std::string, std::uint64_t>& observed, std::uint64_t categories,
                                     std::uint64_t draws) {
    const double expected = static_cast<double>(draws) / static_cast<double>(categories);
    double stat = 0;
    std::uint64_t seen = 0;
    for (const auto& [key, count] : observed) {
        const double d = static_cast<double>(count) - expected;
        stat += d * d / expected;
        ++seen;
    }
    stat += static_cast<double>(categories - seen) * expected;
    if (categories < 2) return 1.0;
    boost::math::chi_squared dist(static_cast<double>(categories - 1));
    return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace testing
