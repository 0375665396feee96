// Builds the box representation of a random tree power and checks it.
#include <cstdlib>
#include <iostream>

#include "boxpow/boxpow.hpp"

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 30;
  std::size_t k = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 3;
  std::uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 1;

  boxpow::Graph tree = boxpow::randomTree(n, seed);
  boxpow::Graph target = boxpow::power(tree, k);
  boxpow::BoxRep rep = boxpow::buildBoxRep(tree, k);
  auto verdict = boxpow::verifyRepresentation(target, rep);

  std::cout << "T^" << k << ": " << target.vertexCount() << " vertices, " << target.edgeCount() << " edges\n"
            << "dimension " << rep.dimension() << ", " << (verdict ? "exact" : "MISMATCH") << "\n"
            << boxpow::io::toJson(verdict, &target).dump() << "\n";
  return verdict ? 0 : 1;
}
