#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qder {

enum class OutputFormat { json, csv, pretty };

struct Record {
    std::string family;
    std::vector<std::pair<std::string, long long>> params;
    std::string lhs;
    std::string rhs;
    bool equal = false;
    bool conjectural = false;
    long long terms = 0;
    long long elapsed_ms = 0;
};

struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<Record> records;

    int checked() const { return static_cast<int>(records.size()); }
    int passed() const;
    int failed() const { return checked() - passed(); }
    bool all_equal() const { return failed() == 0; }

    void strip_timing();

    std::string render(OutputFormat fmt) const;
    std::string to_json() const;
    std::string to_csv() const;
    std::string to_pretty() const;
};

}  // namespace qder
