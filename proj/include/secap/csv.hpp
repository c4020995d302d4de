#ifndef SECAP_CSV_HPP
#define SECAP_CSV_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

// CSV emission. Every document starts with '#'-prefixed comment lines
// carrying the full effective configuration (including seed and version), so
// a result file is reproducible from its own header. Numbers are printed
// with 12 significant digits; identical runs produce byte-identical files.

namespace secap {

/// Doubles as "%.12g", integers exact.
std::string format_number(double value);
std::string format_number(int value);

class CsvDocument {
public:
    void add_meta(const std::string& key, const std::string& value);
    void add_meta(const std::string& key, double value) { add_meta(key, format_number(value)); }
    void add_meta(const std::string& key, int value) { add_meta(key, format_number(value)); }
    void set_columns(std::vector<std::string> columns);
    void add_row(std::vector<std::string> cells);

    const std::vector<std::pair<std::string, std::string>>& meta() const { return meta_; }
    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    void write(std::ostream& out) const;
    std::string to_string() const;

private:
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::string> columns_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace secap

#endif
