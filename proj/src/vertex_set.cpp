#include "skelrecon/vertex_set.hpp"

namespace skelrecon {

std::string to_string(std::span<const Vertex> set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(set[i]);
  }
  out += '}';
  return out;
}

}  // namespace skelrecon
