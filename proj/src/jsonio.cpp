#include "gf2gauss/jsonio.hpp"

#include <sstream>
#include <stdexcept>

namespace gf2gauss {

std::string hex_string(std::uint32_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

std::uint32_t parse_hex(const std::string& text) {
  std::string body = text;
  if (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0) body = body.substr(2);
  if (body.empty() || body.find_first_not_of("0123456789abcdefABCDEF") !=
                          std::string::npos)
    throw std::invalid_argument("not a hex bitmask: " + text);
  unsigned long long v = std::stoull(body, nullptr, 16);
  if (v > 0xFFFFFFFFull)
    throw std::invalid_argument("bitmask out of range: " + text);
  return static_cast<std::uint32_t>(v);
}

nlohmann::ordered_json to_json(const Eisenstein& e) {
  return {{"a", e.a}, {"b", e.b}};
}

nlohmann::ordered_json to_json(const CycloSum& v) {
  if (v.order() == 3) return to_json(v.as_eisenstein());
  return {{"order", v.order()}, {"coeffs", v.coeffs()}};
}

nlohmann::ordered_json to_json(const GaussSumRecord& r) {
  nlohmann::ordered_json j;
  j["degree"] = r.degree;
  j["modulus"] = hex_string(r.modulus);
  j["generator"] = hex_string(r.generator);
  j["beta"] = hex_string(r.beta);
  j["method"] = method_name(r.method);
  j["value"] = to_json(r.value);
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace gf2gauss
