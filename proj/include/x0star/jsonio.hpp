#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <string>

namespace x0star::jsonio {

// Parses JSON keeping integers too large for 64 bits as decimal strings, so
// no digits are lost to floating point.
nlohmann::json parse_exact(const std::string& text);

// Accepts a JSON integer or a decimal string.
mpz_class to_mpz(const nlohmann::json& v);

} // namespace x0star::jsonio
