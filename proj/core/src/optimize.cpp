#include "qaoa/optimize.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "qaoa/errors.hpp"

namespace qaoa {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double AxisSpec::value(int i) const {
    if (i == points - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
}

std::vector<double> Landscape::point(std::size_t flat) const {
    std::vector<double> p(axes.size());
    for (std::size_t k = axes.size(); k-- > 0;) {
        const auto len = static_cast<std::size_t>(axes[k].points);
        p[k] = axes[k].value(static_cast<int>(flat % len));
        flat /= len;
    }
    return p;
}

std::size_t Landscape::argmax() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[best]) best = i;
    return best;
}

void Landscape::write_csv(std::ostream& os) const {
    for (const auto& a : axes) os << a.name << ',';
    os << "value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (double x : point(i)) os << format_double(x) << ',';
        os << format_double(values[i]) << '\n';
    }
}

void Landscape::write_json(std::ostream& os) const {
    os << "{\"axes\":[";
    for (std::size_t k = 0; k < axes.size(); ++k) {
        const auto& a = axes[k];
        os << (k ? "," : "") << "{\"name\":\"" << a.name << "\",\"lo\":" << format_double(a.lo)
           << ",\"hi\":" << format_double(a.hi) << ",\"points\":" << a.points << '}';
    }
    os << "],\"values\":[";
    for (std::size_t i = 0; i < values.size(); ++i)
        os << (i ? "," : "") << format_double(values[i]);
    os << "]}\n";
}

Landscape Landscape::read_csv(std::istream& is) {
    auto split = [](const std::string& line) {
        std::vector<std::string> out;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) out.push_back(cell);
        return out;
    };
    std::string line;
    if (!std::getline(is, line)) throw InvalidInput("landscape CSV is empty");
    auto header = split(line);
    if (header.size() < 2 || header.back() != "value") throw InvalidInput("landscape CSV header must end in value");
    const std::size_t k = header.size() - 1;
    std::vector<std::vector<double>> coords(k);
    Landscape land;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto cells = split(line);
        if (cells.size() != k + 1) throw InvalidInput("landscape CSV row has the wrong column count");
        try {
            for (std::size_t a = 0; a < k; ++a) coords[a].push_back(std::stod(cells[a]));
            land.values.push_back(std::stod(cells[k]));
        } catch (const std::logic_error&) {
            throw InvalidInput("landscape CSV has a non-numeric cell");
        }
    }
    // Axis a repeats each value stride(a) times, where stride is the product of later axis sizes.
    std::size_t stride = 1;
    land.axes.resize(k);
    for (std::size_t a = k; a-- > 0;) {
        AxisSpec& ax = land.axes[a];
        ax.name = header[a];
        std::size_t count = 1;
        while (count * stride < coords[a].size() && coords[a][count * stride] != coords[a][0]) ++count;
        if (count < 2) throw InvalidInput("landscape CSV axis " + ax.name + " has fewer than 2 points");
        ax.points = static_cast<int>(count);
        ax.lo = coords[a][0];
        ax.hi = coords[a][(count - 1) * stride];
        stride *= count;
    }
    if (stride != land.values.size()) throw InvalidInput("landscape CSV is not a full grid");
    for (std::size_t i = 0; i < land.values.size(); ++i) {
        const auto p = land.point(i);
        for (std::size_t a = 0; a < k; ++a)
            if (p[a] != coords[a][i]) throw InvalidInput("landscape CSV is not a row-major grid");
    }
    return land;
}

Landscape grid_scan(const Evaluator& eval, const std::vector<AxisSpec>& axes, std::size_t cap) {
    if (axes.empty() || axes.size() > 3) throw InvalidInput("grid scan takes 1 to 3 axes");
    std::size_t total = 1;
    for (const auto& a : axes) {
        if (a.points < 2) throw InvalidInput("axis " + a.name + " needs at least 2 points");
        if (!std::isfinite(a.lo) || !std::isfinite(a.hi))
            throw InvalidInput("axis " + a.name + " has a non-finite bound");
        total *= static_cast<std::size_t>(a.points);
        if (total > cap)
            throw TooManyPoints("grid has more than " + std::to_string(cap) + " points");
    }
    Landscape land;
    land.axes = axes;
    land.values.resize(total);
    for (std::size_t i = 0; i < total; ++i) land.values[i] = eval(land.point(i));
    return land;
}

RefineResult refine(const Evaluator& eval, std::vector<double> start, double tol,
                    double initial_step, int max_evaluations) {
    RefineResult r;
    r.point = std::move(start);
    r.value = eval(r.point);
    r.evaluations = 1;
    if (!std::isfinite(r.value)) throw InvalidInput("evaluator is not finite at the start point");
    double step = initial_step;
    while (step >= tol && r.evaluations < max_evaluations) {
        bool moved = false;
        for (std::size_t k = 0; k < r.point.size(); ++k) {
            for (double dir : {1.0, -1.0}) {
                std::vector<double> trial = r.point;
                trial[k] += dir * step;
                const double v = eval(trial);
                ++r.evaluations;
                if (v > r.value) {
                    r.value = v;
                    r.point = std::move(trial);
                    moved = true;
                    break;
                }
            }
        }
        if (!moved) step *= 0.5;
    }
    return r;
}

}  // namespace qaoa
