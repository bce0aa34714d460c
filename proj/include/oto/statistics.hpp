#ifndef OTO_STATISTICS_HPP
#define OTO_STATISTICS_HPP

#include <span>

namespace oto {

double mean(std::span<const double> xs);

/// Sample standard deviation (n - 1 denominator); 0 for fewer than two values.
double sample_sd(std::span<const double> xs);

/// Spearman rank correlation, ties given their average rank. Returns 0 when
/// either side is constant.
double spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace oto

#endif  // OTO_STATISTICS_HPP
