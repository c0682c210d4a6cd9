// Copyright 2026 The EJM Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ejm/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <omp.h>

#include "ejm/errors.hpp"
#include "ejm/network.hpp"
#include "ejm/parallel.hpp"

namespace ejm::optimize {

namespace {

using std::numbers::pi;
using Point = std::array<double, 4>;

constexpr std::array<Param, 4> kAllParams{Param::z, Param::phi, Param::theta,
                                          Param::gamma};

Point to_point(const EjmParams &p) {
    return {p.z(), p.phi(), p.theta(), p.gamma()};
}

EjmParams from_point(const Point &x) { return {x[0], x[1], x[2], x[3]}; }

double score(const EjmParams &p) { return network::trilocal_score(p).S; }

// Throws DomainError naming the parameter if `value` is illegal for it.
void check_value(Param p, double value) {
    Point x{1.0, 0.0, 0.0, 0.0};
    x[static_cast<std::size_t>(p)] = value;
    (void)from_point(x);
}

void check_interval(Param p, double lo, double hi) {
    check_value(p, lo);
    check_value(p, hi);
    if (p == Param::z && (lo < 0.0) != (hi < 0.0)) {
        throw DomainError("z", "z range must not cross the gap between -1/sqrt(3) and 1/sqrt(3)");
    }
}

std::vector<double> sample_values(const SweepSpec &spec) {
    if (spec.points < 2) {
        throw ArgumentError("sweep: points must be at least 2");
    }
    if (!(spec.lo < spec.hi)) {
        throw ArgumentError("sweep: lo must be strictly less than hi");
    }
    check_interval(spec.varying, spec.lo, spec.hi);
    std::vector<double> values(static_cast<std::size_t>(spec.points));
    const double last = spec.points - 1;
    for (int k = 0; k < spec.points; ++k) {
        values[static_cast<std::size_t>(k)] =
            k == spec.points - 1 ? spec.hi : spec.lo + (spec.hi - spec.lo) * (k / last);
    }
    return values;
}

EjmParams with_value(const EjmParams &base, Param p, double value) {
    Point x = to_point(base);
    x[static_cast<std::size_t>(p)] = value;
    return from_point(x);
}

struct OutOfBudget {};

// Records evaluations for one start and enforces its share of the budget.
class Evaluator {
  public:
    explicit Evaluator(std::size_t limit) : limit_(limit) {}

    double operator()(const Point &x) {
        if (trace_.size() >= limit_) {
            throw OutOfBudget{};
        }
        const EjmParams params = from_point(x);
        const double s = score(params);
        trace_.push_back({params, s});
        return s;
    }

    [[nodiscard]] std::size_t remaining() const { return limit_ - trace_.size(); }
    std::vector<TraceEntry> take() { return std::move(trace_); }

  private:
    std::size_t limit_;
    std::vector<TraceEntry> trace_;
};

class NelderMead {
  public:
    NelderMead(const Bounds &bounds, std::vector<std::size_t> free_dims,
               double tol)
        : bounds_(bounds), free_(std::move(free_dims)), tol_(tol) {}

    // Maximizes from `start`; restarts from the best vertex while restarts
    // keep improving.
    void run(const Point &start, double start_value, Evaluator &eval) {
        Point best = start;
        double best_value = start_value;
        try {
            for (;;) {
                const double before = best_value;
                descend(best, best_value, eval);
                if (best_value - before <= 1e-12 || eval.remaining() < free_.size() + 1) {
                    return;
                }
            }
        } catch (const OutOfBudget &) {
        }
    }

  private:
    struct Vertex {
        Point x;
        double f;
    };

    Point clamp(Point x) const {
        for (std::size_t d : free_) {
            x[d] = std::clamp(x[d], bounds_.box[d].lo, bounds_.box[d].hi);
        }
        return x;
    }

    Point affine(const Point &from, const Point &to, double t) const {
        Point x = from;
        for (std::size_t d : free_) {
            x[d] = from[d] + t * (to[d] - from[d]);
        }
        return clamp(x);
    }

    double spread(const std::vector<Vertex> &simplex) const {
        double worst = 0.0;
        for (const auto &v : simplex) {
            for (std::size_t d : free_) {
                worst = std::max(worst, std::abs(v.x[d] - simplex.front().x[d]));
            }
        }
        return worst;
    }

    // One Nelder-Mead run; best/best_value are updated after every
    // accepted point so an OutOfBudget exit keeps the record.
    void descend(Point &best, double &best_value, Evaluator &eval) const {
        std::vector<Vertex> simplex{{best, best_value}};
        for (std::size_t d : free_) {
            const auto &box = bounds_.box[d];
            const double step = 0.1 * (box.hi - box.lo);
            Point x = best;
            x[d] = best[d] + step <= box.hi ? best[d] + step : best[d] - step;
            simplex.push_back({clamp(x), eval(clamp(x))});
        }
        const auto note = [&](const Vertex &v) {
            if (v.f > best_value) {
                best_value = v.f;
                best = v.x;
            }
        };
        for (const auto &v : simplex) {
            note(v);
        }

        for (;;) {
            std::stable_sort(simplex.begin(), simplex.end(),
                             [](const Vertex &a, const Vertex &b) { return a.f > b.f; });
            if (spread(simplex) < tol_) {
                return;
            }
            const std::size_t last = simplex.size() - 1;
            Point centroid{};
            for (std::size_t d = 0; d < 4; ++d) {
                centroid[d] = simplex.front().x[d];
            }
            for (std::size_t d : free_) {
                double sum = 0.0;
                for (std::size_t v = 0; v < last; ++v) {
                    sum += simplex[v].x[d];
                }
                centroid[d] = sum / static_cast<double>(last);
            }
            const Vertex &worst = simplex[last];

            const Point xr = affine(centroid, worst.x, -1.0);
            const Vertex reflected{xr, eval(xr)};
            note(reflected);
            if (reflected.f > simplex.front().f) {
                const Point xe = affine(centroid, worst.x, -2.0);
                const Vertex expanded{xe, eval(xe)};
                note(expanded);
                simplex[last] = expanded.f > reflected.f ? expanded : reflected;
                continue;
            }
            if (reflected.f > simplex[last - 1].f) {
                simplex[last] = reflected;
                continue;
            }
            const bool outside = reflected.f > worst.f;
            const Point xc = outside ? affine(centroid, reflected.x, 0.5)
                                     : affine(centroid, worst.x, 0.5);
            const Vertex contracted{xc, eval(xc)};
            note(contracted);
            if (outside ? contracted.f >= reflected.f : contracted.f > worst.f) {
                simplex[last] = contracted;
                continue;
            }
            for (std::size_t v = 1; v < simplex.size(); ++v) {
                const Point xs = affine(simplex.front().x, simplex[v].x, 0.5);
                simplex[v] = {xs, eval(xs)};
                note(simplex[v]);
            }
        }
    }

    const Bounds &bounds_;
    std::vector<std::size_t> free_;
    double tol_;
};

} // namespace

std::string_view to_string(Param p) {
    switch (p) {
    case Param::z:
        return "z";
    case Param::phi:
        return "phi";
    case Param::theta:
        return "theta";
    default:
        return "gamma";
    }
}

std::optional<Param> parse_param(std::string_view name) {
    for (Param p : kAllParams) {
        if (to_string(p) == name) {
            return p;
        }
    }
    return std::nullopt;
}

std::vector<SweepSample> sweep(const SweepSpec &spec) {
    const auto values = sample_values(spec);
    std::vector<SweepSample> out(values.size());
    const auto count = static_cast<long>(values.size());
#pragma omp parallel for num_threads(parallel::worker_count())
    for (long k = 0; k < count; ++k) {
        const double v = values[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(k)] = {v, score(with_value(spec.fixed, spec.varying, v))};
    }
    return out;
}

Bounds Bounds::standard() {
    return {{Interval{1.0 / std::numbers::sqrt3, 1.0}, Interval{0.0, pi},
             Interval{0.0, pi / 2}, Interval{0.0, pi / 2}}};
}

OptimumResult maximize(const Bounds &bounds, const MaximizeOptions &options) {
    if (options.budget < 100) {
        throw ArgumentError("maximize: budget must be at least 100");
    }
    if (options.grid_points < 2 || options.starts < 1) {
        throw ArgumentError("maximize: grid_points >= 2 and starts >= 1 required");
    }
    std::vector<std::size_t> free_dims;
    for (Param p : kAllParams) {
        const Interval &iv = bounds[p];
        if (iv.lo > iv.hi) {
            throw ArgumentError("maximize: empty interval for " + std::string(to_string(p)));
        }
        check_interval(p, iv.lo, iv.hi);
        if (iv.lo < iv.hi) {
            free_dims.push_back(static_cast<std::size_t>(p));
        }
    }

    Point anchor{};
    for (std::size_t d = 0; d < 4; ++d) {
        anchor[d] = bounds.box[d].lo;
    }
    const std::size_t dims = free_dims.size();

    // Grid with as many points per free dimension as the budget allows.
    std::size_t per_dim = static_cast<std::size_t>(options.grid_points);
    const auto grid_size = [&](std::size_t p) {
        std::size_t g = 1;
        for (std::size_t d = 0; d < dims; ++d) {
            g *= p;
        }
        return g;
    };
    while (per_dim > 2 && grid_size(per_dim) > options.budget) {
        --per_dim;
    }
    const std::size_t grid = grid_size(per_dim);

    std::vector<Point> grid_points(grid, anchor);
    for (std::size_t g = 0; g < grid; ++g) {
        std::size_t rest = g;
        for (std::size_t k = dims; k-- > 0;) {
            const std::size_t d = free_dims[k];
            const std::size_t step = rest % per_dim;
            rest /= per_dim;
            const auto &iv = bounds.box[d];
            grid_points[g][d] =
                step + 1 == per_dim
                    ? iv.hi
                    : iv.lo + (iv.hi - iv.lo) * (static_cast<double>(step) /
                                                 static_cast<double>(per_dim - 1));
        }
    }
    std::vector<double> grid_scores(grid);
    const auto grid_count = static_cast<long>(grid);
#pragma omp parallel for num_threads(parallel::worker_count())
    for (long g = 0; g < grid_count; ++g) {
        grid_scores[static_cast<std::size_t>(g)] =
            score(from_point(grid_points[static_cast<std::size_t>(g)]));
    }

    OptimumResult result{from_point(grid_points.front()), grid_scores.front(), {}, false};
    result.trace.reserve(options.budget);
    for (std::size_t g = 0; g < grid; ++g) {
        result.trace.push_back({from_point(grid_points[g]), grid_scores[g]});
    }

    const std::size_t remaining = options.budget - grid;
    std::size_t starts = std::min<std::size_t>(static_cast<std::size_t>(options.starts), grid);
    while (starts > 0 && remaining / starts < dims + 1) {
        --starts;
    }
    if (dims > 0 && starts == 0) {
        result.grid_only = true;
    }

    if (dims > 0 && starts > 0) {
        std::vector<std::size_t> order(grid);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return grid_scores[a] > grid_scores[b];
        });

        std::vector<std::vector<TraceEntry>> runs(starts);
        const auto start_count = static_cast<long>(starts);
#pragma omp parallel for schedule(static, 1) num_threads(parallel::worker_count())
        for (long s = 0; s < start_count; ++s) {
            const auto si = static_cast<std::size_t>(s);
            const std::size_t share = remaining / starts + (si < remaining % starts ? 1 : 0);
            Evaluator eval(share);
            NelderMead(bounds, free_dims, options.simplex_tol)
                .run(grid_points[order[si]], grid_scores[order[si]], eval);
            runs[si] = eval.take();
        }
        for (auto &run : runs) {
            result.trace.insert(result.trace.end(), run.begin(), run.end());
        }
    }

    // Maximum over the trace; the earliest entry wins ties.
    for (const auto &entry : result.trace) {
        if (entry.S > result.S) {
            result.S = entry.S;
            result.params = entry.params;
        }
    }
    return result;
}

namespace reference {

std::vector<SweepSample> sweep(const SweepSpec &spec) {
    const auto values = sample_values(spec);
    std::vector<SweepSample> out;
    out.reserve(values.size());
    for (double v : values) {
        out.push_back({v, score(with_value(spec.fixed, spec.varying, v))});
    }
    return out;
}

} // namespace reference

} // namespace ejm::optimize
