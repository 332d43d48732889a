#include "lrw/summary.hpp"

#include <cmath>

#include "lrw/error.hpp"

namespace lrw {

ReplicateSummary replicate_summary(std::span<const double> values) {
    if (values.size() < 2) throw ConfigError("replicate summary needs at least two values");
    ReplicateSummary s;
    s.count = values.size();
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / double(s.count);
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = std::sqrt(ss / double(s.count - 1));
    s.se = s.sd / std::sqrt(double(s.count));
    return s;
}

}  // namespace lrw
