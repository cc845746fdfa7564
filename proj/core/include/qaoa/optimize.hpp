#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace qaoa {

struct AxisSpec {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    int points = 2;  // ≥ 2, endpoints included
    double value(int i) const;
};

// Dense grid of ⟨C⟩, row-major in axis declaration order (last axis fastest).
struct Landscape {
    std::vector<AxisSpec> axes;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    std::vector<double> point(std::size_t flat) const;
    // First maximum in row-major order.
    std::size_t argmax() const;

    void write_csv(std::ostream& os) const;
    void write_json(std::ostream& os) const;
    // Inverse of write_csv; rebuilds the axes from the coordinate columns.
    // Throws InvalidInput on a malformed or non-rectangular file.
    static Landscape read_csv(std::istream& is);
};

using Evaluator = std::function<double(const std::vector<double>&)>;

inline constexpr std::size_t kDefaultPointCap = std::size_t{1} << 22;

// Throws InvalidInput for bad axes, TooManyPoints above cap.
Landscape grid_scan(const Evaluator& eval, const std::vector<AxisSpec>& axes,
                    std::size_t cap = kDefaultPointCap);

struct RefineResult {
    std::vector<double> point;
    double value = 0.0;
    int evaluations = 0;
};

// Coordinate pattern search for a maximum: try ±step on each coordinate,
// halve the step when no move improves, stop once step < tol.
RefineResult refine(const Evaluator& eval, std::vector<double> start, double tol,
                    double initial_step = 0.1, int max_evaluations = 1000000);

// "%.17g"
std::string format_double(double x);

}  // namespace qaoa
