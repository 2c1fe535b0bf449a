#pragma once

#include <cstdlib>
#include <string>

namespace gk {

// Directory holding the shipped data files (reference tables, group
// constants, factor cache). GK_DATA_DIR overrides the configure-time default.
inline std::string data_dir() {
    if (const char* env = std::getenv("GK_DATA_DIR"); env && *env) return env;
#ifdef GK_DEFAULT_DATA_DIR
    return GK_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

inline std::string data_file(const std::string& name) { return data_dir() + "/" + name; }

} // namespace gk
