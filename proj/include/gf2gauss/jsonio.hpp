// Wire formats. Field elements travel as hex bitmasks ("0x13" is
// x^4 + x + 1) so nothing depends on a basis-naming convention. Cubic-order
// values serialize in the two-coefficient form {"a","b"}, other orders as
// {"order","coeffs"}.
#pragma once

#include <cstdint>
#include <string>

#include "gf2gauss/charsum.hpp"
#include "json.hpp"

namespace gf2gauss {

std::string hex_string(std::uint32_t v);

// Accepts an optional 0x prefix; throws std::invalid_argument on junk.
std::uint32_t parse_hex(const std::string& text);

nlohmann::ordered_json to_json(const Eisenstein& e);
nlohmann::ordered_json to_json(const CycloSum& v);
nlohmann::ordered_json to_json(const GaussSumRecord& r);

}  // namespace gf2gauss
