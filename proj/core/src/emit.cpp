#include "nessfi/emit.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "nessfi/errors.hpp"

namespace nessfi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

// Numeric cells of one row in csv_columns() order, excluding the
// point/status/flags/error text columns.
struct Cells {
    std::vector<double> before_status;  // axis0 .. mu2
    std::vector<double> after_error;    // residual .. epr
};

Cells numeric_cells(const ObservableRow& row) {
    Cells c;
    c.before_status = {
        row.axis_values.size() > 0 ? row.axis_values[0] : kNaN,
        row.axis_values.size() > 1 ? row.axis_values[1] : kNaN,
        row.params.omega1, row.params.omega2, row.params.delta,
        row.params.gamma1, row.params.gamma2,
        row.baths.t1, row.baths.t2, row.baths.mu1, row.baths.mu2};

    auto& a = c.after_error;
    if (!row.ok) {
        a.assign(22, kNaN);
        return c;
    }
    a.push_back(row.residual);
    for (int i = 0; i < 4; ++i) a.push_back(row.rho(i, i).real());
    a.push_back(row.rho(1, 2).real());
    a.push_back(row.rho(1, 2).imag());
    if (row.qfi) {
        a.insert(a.end(), {row.qfi->f_total, row.qfi->f_e, row.qfi->f_n, row.qfi->step});
    } else {
        a.insert(a.end(), 4, kNaN);
    }
    if (row.correlations) {
        const auto& k = *row.correlations;
        a.insert(a.end(), {k.coherence, k.linear_entropy, k.concurrence, k.qmi,
                           k.classical_corr, k.discord});
    } else {
        a.insert(a.end(), 6, kNaN);
    }
    if (row.thermo) {
        const auto& t = *row.thermo;
        a.insert(a.end(), {t.i1, t.i2, t.j1, t.j2, t.epr});
    } else {
        a.insert(a.end(), 5, kNaN);
    }
    return c;
}

std::string csv_quote(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string json_number(double v) { return std::isfinite(v) ? format_double(v) : "null"; }

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

} // namespace

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> columns = {
        "point", "axis0", "axis1",
        "omega1", "omega2", "delta", "gamma1", "gamma2", "t1", "t2", "mu1", "mu2",
        "status", "flags", "error",
        "residual", "rho11", "rho22", "rho33", "rho44", "rho23_re", "rho23_im",
        "qfi", "qfi_e", "qfi_n", "qfi_step",
        "coherence", "linear_entropy", "concurrence", "qmi", "classical_corr", "discord",
        "i1", "i2", "j1", "j2", "epr"};
    return columns;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& out, const SweepTable& table) {
    out << join(csv_columns(), ',') << '\n';
    for (const auto& row : table.rows) {
        const Cells c = numeric_cells(row);
        out << row.index;
        for (double v : c.before_status) out << ',' << format_double(v);
        out << ',' << (row.ok ? "ok" : "failed") << ',' << csv_quote(join(row.flags, ';'))
            << ',' << csv_quote(row.error);
        for (double v : c.after_error) out << ',' << format_double(v);
        out << '\n';
    }
}

void write_jsonl(std::ostream& out, const SweepTable& table) {
    const auto& cols = csv_columns();
    for (const auto& row : table.rows) {
        const Cells c = numeric_cells(row);
        std::size_t col = 0;
        out << "{\"point\":" << row.index;
        ++col;
        for (double v : c.before_status) out << ",\"" << cols[col++] << "\":" << json_number(v);
        out << ",\"status\":" << json_string(row.ok ? "ok" : "failed");
        out << ",\"flags\":[";
        for (std::size_t i = 0; i < row.flags.size(); ++i) {
            if (i) out << ',';
            out << json_string(row.flags[i]);
        }
        out << "],\"error\":" << (row.ok ? "null" : json_string(row.error));
        col += 3;
        for (double v : c.after_error) out << ",\"" << cols[col++] << "\":" << json_number(v);
        out << "}\n";
    }
}

void write_table(std::ostream& out, const SweepTable& table, OutputFormat format) {
    if (format == OutputFormat::csv) write_csv(out, table);
    else write_jsonl(out, table);
}

void write_table_file(const std::string& path, const SweepTable& table, OutputFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    write_table(out, table, format);
    out.flush();
    if (!out) throw Error("write to '" + path + "' failed");
}

std::string format_point_report(const ObservableRow& row) {
    std::ostringstream os;
    const auto& p = row.params;
    const auto& b = row.baths;
    os << "system   omega1=" << format_double(p.omega1) << " omega2=" << format_double(p.omega2)
       << " delta=" << format_double(p.delta) << " gamma1=" << format_double(p.gamma1)
       << " gamma2=" << format_double(p.gamma2) << '\n';
    os << "baths    t1=" << format_double(b.t1) << " t2=" << format_double(b.t2)
       << " mu1=" << format_double(b.mu1) << " mu2=" << format_double(b.mu2) << '\n';
    if (!row.ok) {
        os << "status   failed: " << row.error << '\n';
        return os.str();
    }
    os << "status   ok" << (row.flags.empty() ? "" : " [" + join(row.flags, ';') + "]") << '\n';
    os << "residual " << format_double(row.residual) << '\n';
    os << "rho      diag=(" << format_double(row.rho(0, 0).real()) << ", "
       << format_double(row.rho(1, 1).real()) << ", " << format_double(row.rho(2, 2).real())
       << ", " << format_double(row.rho(3, 3).real()) << ")\n";
    os << "         rho23=" << format_double(row.rho(1, 2).real()) << " + "
       << format_double(row.rho(1, 2).imag()) << "i\n";
    if (row.qfi) {
        os << "qfi      F=" << format_double(row.qfi->f_total)
           << " F_E=" << format_double(row.qfi->f_e) << " F_N=" << format_double(row.qfi->f_n)
           << " step=" << format_double(row.qfi->step) << '\n';
    }
    if (row.correlations) {
        const auto& c = *row.correlations;
        os << "corr     coherence=" << format_double(c.coherence)
           << " linear_entropy=" << format_double(c.linear_entropy)
           << " concurrence=" << format_double(c.concurrence) << '\n';
        os << "         qmi=" << format_double(c.qmi)
           << " classical=" << format_double(c.classical_corr)
           << " discord=" << format_double(c.discord) << '\n';
    }
    if (row.thermo) {
        const auto& t = *row.thermo;
        os << "currents I1=" << format_double(t.i1) << " I2=" << format_double(t.i2)
           << " J1=" << format_double(t.j1) << " J2=" << format_double(t.j2) << '\n';
        os << "epr      " << format_double(t.epr) << '\n';
    }
    return os.str();
}

} // namespace nessfi
