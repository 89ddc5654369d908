// Copyright 2026 The Plateau Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "plateau/harness/fit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "plateau/errors.hpp"

namespace plateau {

namespace {

std::vector<double> ranks(std::span<const double> v) {
    std::vector<std::size_t> order(v.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) {
            ++j;
        }
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            r[order[k]] = avg;
        }
        i = j + 1;
    }
    return r;
}

bool as_number(const std::string &s, double &out) {
    if (s.empty()) {
        return false;
    }
    char *end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

} // namespace

DecayFit fit_exponential_decay(std::span<const std::pair<double, double>> points,
                               std::ostream *warn) {
    std::vector<double> xs;
    std::vector<double> ys;
    DecayFit fit;
    for (const auto &[x, var] : points) {
        if (!(var > 0.0) || !std::isfinite(var)) {
            ++fit.excluded;
            if (warn != nullptr) {
                *warn << "warning: excluding n=" << x << " with nonpositive variance " << var
                      << '\n';
            }
            continue;
        }
        xs.push_back(x);
        ys.push_back(std::log(var));
    }
    fit.n_points = xs.size();
    if (xs.size() < 3) {
        throw DomainError("exponential fit needs at least 3 positive variances, have " +
                          std::to_string(xs.size()));
    }
    const double k = static_cast<double>(xs.size());
    const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / k;
    const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / k;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0) {
        throw DomainError("exponential fit needs at least two distinct n");
    }
    const double slope = sxy / sxx;
    fit.rate = -slope;
    fit.intercept = my - slope * mx;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double e = ys[i] - (fit.intercept + slope * xs[i]);
        ss_res += e * e;
    }
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

DecayFit fit_exponential_decay(const std::vector<SweepRow> &rows, std::ostream *warn) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(rows.size());
    for (const auto &r : rows) {
        pts.emplace_back(static_cast<double>(r.n), r.variance.value_or(0.0));
    }
    return fit_exponential_decay(pts, warn);
}

RowFilter RowFilter::parse(std::string_view text) {
    RowFilter f;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        const std::string_view item = text.substr(start, comma - start);
        if (!item.empty()) {
            const std::size_t eq = item.find('=');
            if (eq == std::string_view::npos || eq == 0) {
                throw ParseError("--curve", "expected column=value, got '" + std::string(item) +
                                                "'");
            }
            std::string column(item.substr(0, eq));
            const auto &cols = csv_columns();
            if (std::find(cols.begin(), cols.end(), column) == cols.end()) {
                throw ParseError("--curve", "unknown column '" + column + "'");
            }
            f.terms_.emplace_back(std::move(column), std::string(item.substr(eq + 1)));
        }
        start = comma + 1;
    }
    return f;
}

bool RowFilter::matches(const SweepRow &row) const {
    for (const auto &[column, want] : terms_) {
        const std::string have = row_field(row, column);
        double a = 0.0;
        double b = 0.0;
        if (as_number(have, a) && as_number(want, b)) {
            if (a != b) {
                return false;
            }
        } else if (have != want) {
            return false;
        }
    }
    return true;
}

std::vector<SweepRow> RowFilter::apply(const std::vector<SweepRow> &rows) const {
    std::vector<SweepRow> out;
    std::copy_if(rows.begin(), rows.end(), std::back_inserter(out),
                 [&](const SweepRow &r) { return matches(r); });
    return out;
}

double spearman_rank_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw DomainError("rank correlation needs two equal-length series of length >= 2");
    }
    const auto rx = ranks(x);
    const auto ry = ranks(y);
    const double m = (static_cast<double>(x.size()) + 1.0) / 2.0;
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (rx[i] - m) * (ry[i] - m);
        sxx += (rx[i] - m) * (rx[i] - m);
        syy += (ry[i] - m) * (ry[i] - m);
    }
    if (sxx == 0.0 || syy == 0.0) {
        throw DomainError("rank correlation of a constant series");
    }
    return sxy / std::sqrt(sxx * syy);
}

} // namespace plateau
