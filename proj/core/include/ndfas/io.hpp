#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ndfas/graph.hpp"

namespace ndfas {

// Graph text format:
//   c <comment>
//   p ndfas <n> <m>
//   a <tail> <head> <weight>     (m lines, 1-indexed vertices)
// Arc ids are assigned 0..m-1 in file order.

WeightedDigraph parse_ndfas(std::string_view text);
std::string write_ndfas(const WeightedDigraph& g, const std::vector<std::string>& comments = {});

WeightedDigraph read_ndfas_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace ndfas
