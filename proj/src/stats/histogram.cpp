#include "perron/stats.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace perron {

double Histogram::density(std::size_t i) const
{
    const double width = edges.at(i + 1) - edges.at(i);
    return total > 0 ? static_cast<double>(counts.at(i)) / (static_cast<double>(total) * width) : 0.0;
}

Histogram make_histogram(const std::vector<double>& values, double lo, double hi, int bins, bool normalized)
{
    if (bins < 1 || !(lo < hi))
        throw std::invalid_argument("make_histogram: need bins >= 1 and lo < hi");
    Histogram h;
    h.normalized = normalized;
    h.edges.resize(static_cast<std::size_t>(bins) + 1);
    for (int i = 0; i <= bins; ++i)
        h.edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
    h.counts.assign(static_cast<std::size_t>(bins), 0);
    for (double v : values) {
        ++h.total;
        if (!(v >= lo && v <= hi)) {
            ++h.outside;
            continue;
        }
        auto b = static_cast<long>(std::floor((v - lo) / (hi - lo) * bins));
        b = std::min<long>(b, bins - 1);
        ++h.counts[static_cast<std::size_t>(b)];
    }
    return h;
}

std::string to_csv(const Histogram& h)
{
    std::ostringstream out;
    out.precision(17);
    out << (h.normalized ? "edge,density\n" : "edge,count\n");
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
        out << h.edges[i] << ',';
        if (h.normalized)
            out << h.density(i);
        else
            out << h.counts[i];
        out << '\n';
    }
    out << h.edges.back() << ",\n";
    return out.str();
}

}  // namespace perron
