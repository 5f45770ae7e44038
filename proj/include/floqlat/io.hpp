#pragma once

#include <string>
#include <vector>

namespace floqlat {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::initializer_list<double> vals) { rows.emplace_back(vals); }
};

// 12 significant digits, shortest form ("%.12g").
std::string format_number(double v);

std::string to_csv(const Table& t);
std::string to_json(const Table& t);

void write_text_file(const std::string& path, const std::string& content);

} // namespace floqlat
