#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace artin {

enum class OutputFormat { Csv, Json };

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One flat record. All emission goes through these so CSV and JSON stay in
// lockstep; field order is the column order.
using FieldValue = std::variant<std::int64_t, std::uint64_t, double, bool, std::string>;

struct OutputRecord {
    std::string kind;  // "rows", "agg", "residual", "density", "curve"
    std::vector<std::pair<std::string, FieldValue>> fields;

    void add(std::string name, FieldValue v) { fields.emplace_back(std::move(name), std::move(v)); }
};

// Shortest round-trip decimal form (so output is reproducible to the byte).
// Throws on non-finite values: no NaN or Inf may ever be emitted.
std::string format_double(double v);
std::string format_field(const FieldValue& v);

// All records must share one kind and one field layout; a schema column with
// value 1 is prepended.
void write_csv(std::ostream& os, std::span<const OutputRecord> records);

// Single JSON document: {"schema": 1, "<kind>": [ {...}, ... ], ...} with
// kinds in first-appearance order.
std::string render_json(std::span<const OutputRecord> records);

// Dispatches on format and destination. Empty out: stdout (CSV kinds are
// separated by "# kind=<kind>" comment lines). Nonempty out: JSON writes the
// file as given; CSV writes one file per kind named <base>_<kind>.csv where
// <base> is out with any trailing ".csv" removed. Unwritable paths raise
// io_error.
void write_report(std::span<const OutputRecord> records, OutputFormat format,
                  const std::string& out);

}  // namespace artin
