#include "stabledrift/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace stabledrift {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

CsvBuilder::CsvBuilder() { buffer_ = "# stabledrift-csv v1\n"; }

void CsvBuilder::comment(const std::string& text) {
    buffer_ += "# ";
    buffer_ += text;
    buffer_ += '\n';
}

void CsvBuilder::header(const std::vector<std::string>& columns) { row(columns); }

void CsvBuilder::row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            buffer_ += ',';
        buffer_ += cells[i];
    }
    buffer_ += '\n';
}

void CsvBuilder::write_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << buffer_;
    if (!out)
        throw std::runtime_error("failed writing output file: " + path);
}

} // namespace stabledrift
