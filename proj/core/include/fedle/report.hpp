#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fedle/engine.hpp"

namespace fedle {

// Named groups of histories (one group per strategy, one history per seed).
// All histories must share client_count, fraction and dataset source.
struct ComparisonSet {
    struct Group {
        std::string name;
        std::vector<ExperimentHistory> histories;
    };
    std::vector<Group> groups;
};

// One polyline per group (per-round mean accuracy across seeds) with a shaded
// min-max band, axes and a legend. Returns a standalone SVG document.
std::string render_accuracy_chart(const ComparisonSet& set);

// K x K color grid; the color scale is linear over the off-diagonal range.
std::string render_similarity_heatmap(const SimilarityMatrix& m);

// One marker per client colored by cluster label; the anchor pair, when given,
// is annotated as alpha/beta.
std::string render_embedding_scatter(const Matrix& points, const std::vector<int>& labels,
                                     std::pair<int, int> anchor = {-1, -1});

// Median rounds_lasted per (variant row, strategy column).
struct RoundsTable {
    std::vector<std::string> columns;
    std::vector<std::string> row_labels;
    std::vector<std::vector<double>> cells;

    bool operator==(const RoundsTable&) const = default;
};

RoundsTable make_rounds_table(const std::vector<std::pair<std::string, ComparisonSet>>& rows);
std::string rounds_table_text(const RoundsTable& table);
std::string rounds_table_csv(const RoundsTable& table);
RoundsTable rounds_table_from_csv(const std::string& csv);

}  // namespace fedle
