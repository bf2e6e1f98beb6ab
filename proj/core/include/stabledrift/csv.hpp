#pragma once

#include <string>
#include <vector>

namespace stabledrift {

// Deterministic CSV assembly: numbers are always formatted with the same
// printf conversion, so identical values give byte-identical files.
std::string format_double(double x);

class CsvBuilder {
public:
    CsvBuilder();

    void comment(const std::string& text);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);

    const std::string& str() const { return buffer_; }
    void write_file(const std::string& path) const;

private:
    std::string buffer_;
};

} // namespace stabledrift
