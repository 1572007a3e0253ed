#pragma once

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>

namespace test_support {

inline std::filesystem::path data_root() { return X0STAR_DEFAULT_DATA_DIR; }

inline nlohmann::json load_golden(const std::string& name)
{
    std::ifstream in(data_root() / "golden" / name);
    if (!in)
        throw std::runtime_error("missing golden file " + name);
    return nlohmann::json::parse(in);
}

} // namespace test_support
