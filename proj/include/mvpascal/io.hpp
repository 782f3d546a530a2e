#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "mvpascal/matrix.hpp"
#include "mvpascal/pointset.hpp"
#include "mvpascal/poly.hpp"
#include "mvpascal/series.hpp"

namespace mvpascal {

using nlohmann::json;

/// Point-set file: a JSON array of integer arrays, e.g. [[0,0],[1,0]].
/// Construction sorts and deduplicates. The dimension is read off the
/// points unless `expect_n` pins it; an empty array needs `expect_n`.
PointSet pointset_from_json(const json& j, std::optional<int> expect_n = std::nullopt);
json pointset_to_json(const PointSet& R);

/// Ideal file: {"n": 2, "generators": [[3,0],[1,1],[0,2]]}.
MonomialIdeal ideal_from_json(const json& j);
json ideal_to_json(const MonomialIdeal& ideal);

std::string entry_str(const Int& v);
std::string entry_str(const Rat& v);
std::string entry_str(const Polynomial& v);

/// Matrix file: {"n": ..., "index": [[...],...], "cols": "index" | c,
/// "entries": [[...],...]} with entries as strings, never JSON numbers.
/// "cols" is the literal "index" when columns are indexed by the same
/// point set, or the column count for integer-indexed columns.
template <class T>
json matrix_to_json(const Matrix<T>& m, const PointSet& index,
                    std::optional<unsigned> int_cols = std::nullopt) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(entry_str(m(i, j)));
        entries.push_back(std::move(row));
    }
    json cols;
    if (int_cols)
        cols = *int_cols;
    else
        cols = "index";
    return json{{"n", index.n()},
                {"index", pointset_to_json(index)},
                {"cols", std::move(cols)},
                {"entries", std::move(entries)}};
}

/// CSV: a header row of column labels, then one line of entries per row.
/// Multi-index labels are quoted since they contain commas.
template <class T>
std::string matrix_to_csv(const Matrix<T>& m, const PointSet& index,
                          std::optional<unsigned> int_cols = std::nullopt) {
    std::string out;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j) out += ',';
        if (int_cols)
            out += std::to_string(j);
        else
            out += '"' + index[j].str() + '"';
    }
    out += '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += entry_str(m(i, j));
        }
        out += '\n';
    }
    return out;
}

/// A sequence of values on a point set:
/// {"n": ..., "index": [[...],...], "values": ["...", ...]} with values as
/// integer or "p/q" strings aligned with "index".
struct Sequence {
    int n;
    std::vector<MultiIndex> index;
    std::vector<Rat> values;
};

Sequence sequence_from_json(const json& j);
json sequence_to_json(const PointSet& R, const std::vector<Rat>& values);

/// Values of the sequence at each point of W, in W's order. Throws
/// MissingValueError when a point of W is absent from the sequence.
std::vector<Rat> align_sequence(const Sequence& seq, const PointSet& W);

/// Series file: {"n": ..., "cap": ..., "coeffs": [{"exp": [...],
/// "num": "...", "den": "..."}, ...]}.
json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);

}  // namespace mvpascal
