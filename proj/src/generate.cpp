#include "lsape/generate.hpp"

namespace lsape {

std::string family_name(Family f) {
  switch (f) {
    case Family::UniformRandom: return "uniform-random";
    case Family::Product: return "product";
    case Family::FlippedProduct: return "flipped-product";
  }
  throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "uniform-random") return Family::UniformRandom;
  if (name == "product") return Family::Product;
  if (name == "flipped-product") return Family::FlippedProduct;
  throw std::invalid_argument("unknown family: " + name);
}

}  // namespace lsape
