#pragma once

#include <cstddef>
#include <span>

namespace lrw {

/// Mean, empirical SD and standard error of the mean over replicates.
struct ReplicateSummary {
    std::size_t count = 0;
    double mean = 0.0;
    double sd = 0.0;
    double se = 0.0;
};

/// Sums in index order, so equal inputs give bit-identical output. Throws
/// ConfigError for fewer than two values.
ReplicateSummary replicate_summary(std::span<const double> values);

}  // namespace lrw
