#include "dicrit/dual_graph.hpp"

#include <sstream>

namespace dicrit {

std::string emit_dual_graph_dot(const CharLadder& l) {
  std::ostringstream os;
  os << "graph dual {\n";
  os << "  // beta =";
  for (long b : l.beta) os << ' ' << b;
  os << "\n  rankdir=LR;\n  node [shape=point];\n";
  os << "  E0 [shape=circle, label=\"\", width=0.15];\n";
  os << "  F0 [shape=plaintext, label=\"F~0\"];\n  E0 -- F0 [dir=forward];\n";
  std::string prev = "E0";
  for (long i = 1; i <= l.g; ++i) {
    const std::string t = "T" + std::to_string(i);
    const std::string end = "E" + std::to_string(i);
    const std::string arrow = "F" + std::to_string(i);
    os << "  " << t << " [shape=star, label=\"\", xlabel=\"" << t << "\", width=0.3];\n";
    os << "  " << prev << " -- " << t << ";\n";
    os << "  " << end << " [shape=circle, label=\"\", width=0.15];\n";
    os << "  " << t << " -- " << end << ";\n";
    os << "  " << arrow << " [shape=plaintext, label=\"F~" << i << "\"];\n";
    os << "  " << end << " -- " << arrow << " [dir=forward];\n";
    prev = t;
  }
  const long last = l.g + 1;
  os << "  F" << last << " [shape=plaintext, label=\"F~" << last << "\"];\n";
  os << "  " << prev << " -- F" << last << " [dir=forward];\n";
  os << "}\n";
  return os.str();
}

}  // namespace dicrit
