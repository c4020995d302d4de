#include "secap/csv.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace secap {

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string format_number(int value) { return std::to_string(value); }

void CsvDocument::add_meta(const std::string& key, const std::string& value) {
    meta_.emplace_back(key, value);
}

void CsvDocument::set_columns(std::vector<std::string> columns) { columns_ = std::move(columns); }

void CsvDocument::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size())
        throw std::logic_error("CsvDocument: row width does not match header");
    rows_.push_back(std::move(cells));
}

void CsvDocument::write(std::ostream& out) const {
    for (const auto& [key, value] : meta_) out << "# " << key << " = " << value << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i)
        out << columns_[i] << (i + 1 < columns_.size() ? "," : "");
    out << "\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

std::string CsvDocument::to_string() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

}  // namespace secap
