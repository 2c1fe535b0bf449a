#pragma once

#include <string>
#include <vector>

namespace gk {

// Reference rows shipped as data files under data/. They are stored
// verbatim and never re-derived, so diffs against computed values are
// meaningful.

struct Table1Row {
    unsigned n = 0;
    std::string order_text; // factored order, e.g. "2^10*3^2*5*7*31"
    unsigned s = 0;
};

struct Table2Row {
    unsigned n = 0;
    std::vector<unsigned> degrees;
};

struct Table3Row {
    std::string printed_name; // as published, e.g. "S_10(2)", "L_3(2^2)"
    std::string order_text;
};

const std::vector<Table1Row>& table1_reference();
const std::vector<Table2Row>& table2_reference();
const std::vector<Table3Row>& table3_reference();

} // namespace gk
