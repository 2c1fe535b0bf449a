#include "gk/tables.hpp"

#include <fstream>
#include <sstream>

#include "gk/data_path.hpp"
#include "gk/errors.hpp"

namespace gk {

namespace {

std::vector<std::string> read_rows(const std::string& name) {
    std::string path = data_file(name);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path, 0);
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(line);
    }
    return rows;
}

} // namespace

const std::vector<Table1Row>& table1_reference() {
    static const std::vector<Table1Row> rows = [] {
        std::vector<Table1Row> out;
        for (const std::string& r : read_rows("table1.txt")) {
            std::istringstream ss(r);
            Table1Row row;
            ss >> row.n >> row.order_text >> row.s;
            if (!ss) throw parse_error("table1.txt: bad row '" + r + "'", 0);
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

const std::vector<Table2Row>& table2_reference() {
    static const std::vector<Table2Row> rows = [] {
        std::vector<Table2Row> out;
        for (const std::string& r : read_rows("table2.txt")) {
            std::istringstream ss(r);
            Table2Row row;
            std::string degs;
            ss >> row.n >> degs;
            if (!ss) throw parse_error("table2.txt: bad row '" + r + "'", 0);
            std::size_t pos = 0;
            while (pos < degs.size()) {
                std::size_t end = degs.find(',', pos);
                if (end == std::string::npos) end = degs.size();
                row.degrees.push_back(static_cast<unsigned>(std::stoul(degs.substr(pos, end - pos))));
                pos = end + (end < degs.size() ? 1 : 0);
            }
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

const std::vector<Table3Row>& table3_reference() {
    static const std::vector<Table3Row> rows = [] {
        std::vector<Table3Row> out;
        for (const std::string& r : read_rows("table3.txt")) {
            std::istringstream ss(r);
            Table3Row row;
            ss >> row.printed_name >> row.order_text;
            if (!ss) throw parse_error("table3.txt: bad row '" + r + "'", 0);
            out.push_back(std::move(row));
        }
        return out;
    }();
    return rows;
}

} // namespace gk
