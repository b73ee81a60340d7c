#include "dtriple/ring.hpp"

#include <stdexcept>

namespace dtriple {

std::string_view ring_name(RingTag tag) { return tag == RingTag::integers ? "z" : "zi"; }

RingTag parse_ring(std::string_view text) {
  if (text == "z") return RingTag::integers;
  if (text == "zi") return RingTag::gaussian;
  throw std::invalid_argument("unknown ring '" + std::string(text) + "' (expected z or zi)");
}

}  // namespace dtriple
