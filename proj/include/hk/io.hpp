#pragma once

#include <iosfwd>
#include <string>

#include "hk/asym.hpp"
#include "hk/betti.hpp"
#include "hk/graph.hpp"

namespace hk {

// JSON schemas: graphs {"vertices": n, "edges": [[i,j],...]}, quivers
// additionally carry "v" and optional "w"; Betti polynomials serialize with
// decimal-string coefficients to survive 64-bit consumers.
Graph graph_from_json(const std::string& text);
Quiver quiver_from_json(const std::string& text);
std::string betti_to_json(const BettiPoly& p);

// CSV: header "degree,coefficient", decimal-string big integers, LF endings.
std::string betti_to_csv(const BettiPoly& p);
std::string laurent_to_csv(const UniLaurent& a);
std::string laurent_to_json(const UniLaurent& a, const std::string& family,
                            const std::map<std::string, long>& params);

// Parse a degree,coefficient CSV back into a Laurent polynomial (losslessly:
// decimal strings).
UniLaurent laurent_from_csv(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace hk
