// Walks through one equivalence class: the torus over (1/4,1/2) in the
// rectangle of size 2, its bouncing points, a probe witness and its packing data.

#include <iostream>

#include "splittori/splittori.hpp"

int main() {
  using namespace splittori;
  const Scalar alpha(2);
  const Point p = parse_point("(1/4,1/2)");

  Trajectory t = bouncing_points(p, 0, 8);
  std::cout << "bouncing points of " << format_point(p) << ":\n";
  for (std::int64_t k = t.k_min; k <= t.k_max; ++k) std::cout << "  " << k << ": " << format_point(t.at(k)) << "\n";

  const Point q = parse_point("(5/4,1/2)");
  EquivalenceVerdict v = equivalent(p, q, alpha);
  std::cout << format_point(p) << " ~ " << format_point(q) << ": " << (v.equivalent ? "yes" : "no") << "\n";
  if (auto w = witness_sequence(p, q, alpha)) {
    for (const auto& s : *w)
      std::cout << "  probe (" << s.probe.direction.dx << "," << s.probe.direction.dy << "): " << format_point(s.from)
                << " -> " << format_point(s.to) << "\n";
    std::cout << "  induced map " << format_matrix(compose_monodromy(*w)) << "\n";
  }

  MonodromyGroup g = monodromy_group(p, alpha);
  std::cout << "monodromy: " << case_name(g.case_tag) << ", generated by " << format_matrix(g.generators.front())
            << "\n";
  std::cout << "toric packing number: " << toric_packing_number(p, alpha).str() << "\n";
}
