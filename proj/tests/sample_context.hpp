#pragma once

#include <ostream>
#include <string>

#include "hadj/context_json.hpp"

// X -f-> Y -g-> Z with left adjoints fL, gL as axioms F and G, a second axiom
// Fb on the same pair, isos mu: fL => fL2, nu: f => f2, w: f => f.
inline hadj::ContextDocument sample_document() {
  return hadj::load_context_file(std::string(HADJ_TEST_DATA) + "/adjunctions.json");
}

inline std::string data_file(const char* name) { return std::string(HADJ_TEST_DATA) + "/" + name; }

namespace hadj {

// Readable gtest failure messages.
inline void PrintTo(const TwoCell& c, std::ostream* os) { *os << c.str(); }
inline void PrintTo(const OneCell& c, std::ostream* os) { *os << c.str(); }
inline void PrintTo(const Cell& c, std::ostream* os) { *os << c.str(); }

}  // namespace hadj
