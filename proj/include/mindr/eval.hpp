#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "mindr/instance.hpp"

namespace mindr {

/// Distance cost of a choice vector: the double sum over ordered pairs, so
/// every unordered pair counts twice and diagonal terms are zero. One
/// shortest-path sweep per distinct chosen vertex.
inline double distance_cost(const Graph& g, std::span<const int> choices) {
    std::vector<int> distinct(choices.begin(), choices.end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::map<int, std::vector<double>> rows;
    for (int v : distinct) {
        if (v < 0 || v >= g.vertex_count()) throw InputError("distance_cost: vertex out of range");
        rows.emplace(v, shortest_paths(g, v).dist);
    }
    double total = 0.0;
    for (int a : choices) {
        const auto& row = rows.at(a);
        for (int b : choices) {
            double d = row[static_cast<std::size_t>(b)];
            if (d == kUnreachable) {
                throw InputError("distance_cost: chosen vertices are not mutually reachable");
            }
            total += d;
        }
    }
    return total;
}

/// Distance-cost ratios: each cost divided by the minimum, times 100, so
/// the best algorithm scores exactly 100. Returns nullopt when the minimum
/// cost is 0 (degenerate instance; the ratio is undefined there).
inline std::optional<std::vector<double>> ratios(std::span<const double> costs) {
    if (costs.empty()) throw InputError("ratios: no costs given");
    double min_cost = *std::min_element(costs.begin(), costs.end());
    if (min_cost <= 0.0) return std::nullopt;
    std::vector<double> out;
    out.reserve(costs.size());
    for (double c : costs) out.push_back(c / min_cost * 100.0);
    return out;
}

/// Fraction of selections that land in their set's fair subset. Absent when
/// any set lacks fair data.
inline std::optional<double> fair_value(const MindrInstance& inst, std::span<const int> choices) {
    if (choices.size() != inst.sets.size()) {
        throw InputError("fair_value: choice count does not match set count");
    }
    for (const auto& f : inst.fair) {
        if (f.empty()) return std::nullopt;
    }
    int hits = 0;
    for (std::size_t i = 0; i < choices.size(); ++i) {
        if (std::binary_search(inst.fair[i].begin(), inst.fair[i].end(), choices[i])) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(choices.size());
}

/// Jaccard coefficient of the chosen-vertex sets (duplicates collapsed).
inline double jaccard(const Solution& a, const Solution& b) {
    std::set<int> sa(a.choices.begin(), a.choices.end());
    std::set<int> sb(b.choices.begin(), b.choices.end());
    std::size_t both = 0;
    for (int v : sa) both += sb.count(v);
    std::size_t either = sa.size() + sb.size() - both;
    return either == 0 ? 0.0 : static_cast<double>(both) / static_cast<double>(either);
}

struct AlgorithmRun {
    std::string algorithm;
    Solution solution;
};

/// Metrics for one instance across several algorithms.
struct EvalReport {
    std::string instance_id;
    std::vector<std::string> algorithms;
    std::vector<double> costs;                  // recomputed distance costs
    std::optional<std::vector<double>> ratios;  // absent on degenerate instances
    std::vector<std::optional<double>> values;  // per algorithm
    std::vector<std::vector<double>> jaccard;   // pairwise over algorithms
    bool degenerate = false;                    // minimum cost was 0
};

inline EvalReport evaluate_instance(const std::string& instance_id, const MindrInstance& inst,
                                    std::span<const AlgorithmRun> runs) {
    if (runs.empty()) throw InputError("evaluate_instance: no runs given");
    EvalReport report;
    report.instance_id = instance_id;
    for (const AlgorithmRun& run : runs) {
        if (run.solution.choices.size() != inst.sets.size()) {
            throw InputError("evaluate_instance: solution set count does not match instance");
        }
        for (std::size_t i = 0; i < inst.sets.size(); ++i) {
            if (!std::binary_search(inst.sets[i].begin(), inst.sets[i].end(),
                                    run.solution.choices[i])) {
                throw InputError("evaluate_instance: choice for set " + std::to_string(i + 1) +
                                 " is not in the set");
            }
        }
        report.algorithms.push_back(run.algorithm);
        report.costs.push_back(distance_cost(inst.graph, run.solution.choices));
        report.values.push_back(fair_value(inst, run.solution.choices));
    }
    report.ratios = ratios(report.costs);
    report.degenerate = !report.ratios.has_value();
    report.jaccard.assign(runs.size(), std::vector<double>(runs.size(), 1.0));
    for (std::size_t a = 0; a < runs.size(); ++a) {
        for (std::size_t b = a + 1; b < runs.size(); ++b) {
            double j = jaccard(runs[a].solution, runs[b].solution);
            report.jaccard[a][b] = report.jaccard[b][a] = j;
        }
    }
    return report;
}

struct BatchRow {
    std::string algorithm;
    std::optional<double> mean_ratio;
    std::optional<double> se_ratio;
    std::optional<double> mean_value;
    std::optional<double> se_value;
    int ratio_instances = 0; // degenerate instances are excluded here
    int value_instances = 0;
};

namespace detail {

struct MeanSe {
    double mean;
    double se;
};

// Standard error = sample standard deviation / sqrt(n); 0 when n == 1.
inline MeanSe mean_and_se(const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    if (xs.size() == 1) return {mean, 0.0};
    double ssq = 0.0;
    for (double x : xs) ssq += (x - mean) * (x - mean);
    double sd = std::sqrt(ssq / static_cast<double>(xs.size() - 1));
    return {mean, sd / std::sqrt(static_cast<double>(xs.size()))};
}

inline std::string metric_string(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

} // namespace detail

/// Per-algorithm mean and standard error of ratio and value across
/// instances. Degenerate instances are excluded from the ratio aggregate;
/// instances without fair data are excluded from the value aggregate.
/// Algorithms appear in first-seen order.
inline std::vector<BatchRow> batch_report(std::span<const EvalReport> reports) {
    if (reports.empty()) throw InputError("batch_report: no reports given");
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> data;
    for (const EvalReport& report : reports) {
        for (std::size_t i = 0; i < report.algorithms.size(); ++i) {
            const std::string& name = report.algorithms[i];
            if (!data.count(name)) {
                order.push_back(name);
                data[name];
            }
            auto& [ratio_xs, value_xs] = data[name];
            if (report.ratios) ratio_xs.push_back((*report.ratios)[i]);
            if (report.values[i]) value_xs.push_back(*report.values[i]);
        }
    }
    std::vector<BatchRow> rows;
    for (const std::string& name : order) {
        const auto& [ratio_xs, value_xs] = data[name];
        BatchRow row;
        row.algorithm = name;
        row.ratio_instances = static_cast<int>(ratio_xs.size());
        row.value_instances = static_cast<int>(value_xs.size());
        if (!ratio_xs.empty()) {
            auto ms = detail::mean_and_se(ratio_xs);
            row.mean_ratio = ms.mean;
            row.se_ratio = ms.se;
        }
        if (!value_xs.empty()) {
            auto ms = detail::mean_and_se(value_xs);
            row.mean_value = ms.mean;
            row.se_value = ms.se;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// CSV with one row per (instance, algorithm): instance,algorithm,cost,ratio,value.
/// Ratio is empty on degenerate instances, value when fair data is missing.
inline std::string report_csv(std::span<const EvalReport> reports) {
    std::ostringstream out;
    out << "instance,algorithm,cost,ratio,value\n";
    for (const EvalReport& report : reports) {
        for (std::size_t i = 0; i < report.algorithms.size(); ++i) {
            out << report.instance_id << "," << report.algorithms[i] << ","
                << detail::metric_string(report.costs[i]) << ",";
            if (report.ratios) out << detail::metric_string((*report.ratios)[i]);
            out << ",";
            if (report.values[i]) out << detail::metric_string(*report.values[i]);
            out << "\n";
        }
    }
    return out.str();
}

/// Aligned text table for one instance, with the pairwise Jaccard matrix.
inline std::string report_text(const EvalReport& report) {
    std::ostringstream out;
    out << "instance " << report.instance_id;
    if (report.degenerate) out << "  [degenerate: minimum cost 0, ratios undefined]";
    out << "\n";
    std::size_t width = 9;
    for (const auto& name : report.algorithms) width = std::max(width, name.size());
    out << std::left << std::setw(static_cast<int>(width + 2)) << "algorithm" << std::right
        << std::setw(14) << "cost" << std::setw(12) << "ratio" << std::setw(9) << "value" << "\n";
    for (std::size_t i = 0; i < report.algorithms.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(width + 2)) << report.algorithms[i]
            << std::right << std::setw(14) << std::fixed << std::setprecision(3)
            << report.costs[i];
        if (report.ratios) {
            out << std::setw(12) << std::fixed << std::setprecision(3) << (*report.ratios)[i];
        } else {
            out << std::setw(12) << "-";
        }
        if (report.values[i]) {
            out << std::setw(9) << std::fixed << std::setprecision(3) << *report.values[i];
        } else {
            out << std::setw(9) << "-";
        }
        out << "\n";
    }
    out << "jaccard matrix:\n";
    for (std::size_t a = 0; a < report.algorithms.size(); ++a) {
        out << std::left << std::setw(static_cast<int>(width + 2)) << report.algorithms[a]
            << std::right;
        for (std::size_t b = 0; b < report.algorithms.size(); ++b) {
            out << std::setw(7) << std::fixed << std::setprecision(3) << report.jaccard[a][b];
        }
        out << "\n";
    }
    return out.str();
}

/// Aligned text table of batch aggregates.
inline std::string batch_text(std::span<const BatchRow> rows) {
    std::ostringstream out;
    std::size_t width = 9;
    for (const BatchRow& row : rows) width = std::max(width, row.algorithm.size());
    out << std::left << std::setw(static_cast<int>(width + 2)) << "algorithm" << std::right
        << std::setw(12) << "ratio" << std::setw(12) << "(+-se)" << std::setw(10) << "value"
        << std::setw(12) << "(+-se)" << "\n";
    for (const BatchRow& row : rows) {
        out << std::left << std::setw(static_cast<int>(width + 2)) << row.algorithm << std::right;
        if (row.mean_ratio) {
            out << std::setw(12) << std::fixed << std::setprecision(3) << *row.mean_ratio
                << std::setw(12) << std::fixed << std::setprecision(3) << *row.se_ratio;
        } else {
            out << std::setw(12) << "-" << std::setw(12) << "-";
        }
        if (row.mean_value) {
            out << std::setw(10) << std::fixed << std::setprecision(3) << *row.mean_value
                << std::setw(12) << std::fixed << std::setprecision(3) << *row.se_value;
        } else {
            out << std::setw(10) << "-" << std::setw(12) << "-";
        }
        out << "\n";
    }
    return out.str();
}

/// CSV of batch aggregates.
inline std::string batch_csv(std::span<const BatchRow> rows) {
    std::ostringstream out;
    out << "algorithm,mean_ratio,se_ratio,mean_value,se_value,ratio_instances,value_instances\n";
    for (const BatchRow& row : rows) {
        out << row.algorithm << ",";
        if (row.mean_ratio) out << detail::metric_string(*row.mean_ratio);
        out << ",";
        if (row.se_ratio) out << detail::metric_string(*row.se_ratio);
        out << ",";
        if (row.mean_value) out << detail::metric_string(*row.mean_value);
        out << ",";
        if (row.se_value) out << detail::metric_string(*row.se_value);
        out << "," << row.ratio_instances << "," << row.value_instances << "\n";
    }
    return out.str();
}

} // namespace mindr
