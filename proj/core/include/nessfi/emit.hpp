// emit.hpp: CSV / JSON-lines serialization of sweep tables
//
// Column order is fixed (see docs/output_schema.md and csv_columns()). Floats
// are written with 17 significant digits so that they round-trip exactly.
// Values that were not computed are written as `nan` in CSV and `null` in JSON.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nessfi/config.hpp"
#include "nessfi/sweep.hpp"

namespace nessfi {

const std::vector<std::string>& csv_columns();

// Shortest form is not used on purpose: every value has 17 significant digits.
std::string format_double(double value);

void write_csv(std::ostream& out, const SweepTable& table);
void write_jsonl(std::ostream& out, const SweepTable& table);
void write_table(std::ostream& out, const SweepTable& table, OutputFormat format);

// Writes to `path`; throws Error naming the path on I/O failure.
void write_table_file(const std::string& path, const SweepTable& table, OutputFormat format);

// Multi-line human-readable summary of one evaluated point.
std::string format_point_report(const ObservableRow& row);

} // namespace nessfi
