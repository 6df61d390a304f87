#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

inline std::string data_path(const std::string& name) {
    return std::string(FSMSYNTH_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}
