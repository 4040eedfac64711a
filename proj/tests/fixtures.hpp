#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace fixtures {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

// Pipe-separated table; the first line is the header (a leading "columns"
// marker is dropped so header and row cells line up).
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    int column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        return -1;
    }
};

inline Table load(const std::string& name) {
    std::ifstream in(std::string(ALPHALAB_FIXTURES) + "/" + name);
    Table t;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split(line, '|');
        if (first && !cells.empty() && cells[0] == "columns") cells.erase(cells.begin());
        if (first) t.header = cells;
        else t.rows.push_back(cells);
        first = false;
    }
    return t;
}

}  // namespace fixtures
