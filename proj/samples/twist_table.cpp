// Prints minimal quandle orders of twist knots, computed both from the
// residue classification and by searching the quandle catalog.
//
//   twist_table [max_c]

#include "qcolor/qcolor.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  const int max_c = argc > 1 ? std::atoi(argv[1]) : 20;
  for (int c = 3; c <= max_c; ++c) {
    auto closed = qcolor::twist_min_quandle_order(c);
    auto searched = qcolor::minimal_quandle_order(qcolor::twist_diagram(c));
    std::cout << c << '\t' << qcolor::twist_alexander(c).to_string() << '\t'
              << (closed.q_value ? std::to_string(*closed.q_value) : ">=8") << '\t'
              << (searched.order ? std::to_string(*searched.order) : ">=8") << '\t'
              << qcolor::display_name(closed.witness) << '\n';
  }
}
