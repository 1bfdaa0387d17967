#include "cqed/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace cqed {

CsvWriter::CsvWriter(const std::string& path) : out_(path), path_(path) {
    if (!out_) {
        throw std::runtime_error("csv: cannot open for writing: " + path);
    }
}

std::string CsvWriter::format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
    out_ << "# " << key << " = " << value << "\n";
}

void CsvWriter::meta(const std::string& key, double value) {
    meta(key, format(value));
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out_ << (i ? "," : "") << columns[i];
    }
    out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        out_ << (i ? "," : "") << format(values[i]);
    }
    out_ << "\n";
}

void CsvWriter::text_row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out_ << (i ? "," : "") << cells[i];
    }
    out_ << "\n";
}

}  // namespace cqed
