#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lrs/classify.hpp"
#include "lrs/weyl.hpp"

namespace lrs {

// Wire formats shared by the CLI and its tests.
//
//   weights:  "1,0;0,1;1,1"  semicolon between weights, comma between
//             coordinates, no spaces
//   elements: "e" or "1.2.1"; a tuple joins elements with ';' (',' is also
//             accepted when parsing)

std::vector<Weight> parse_weights(std::string_view text, int rank);
std::string format_weight(const Weight& w);
std::string format_weights(const std::vector<Weight>& ws);

ElementTuple parse_tuple(std::string_view text, const WeylGroup& g);
std::string format_tuple(const WeylGroup& g, const ElementTuple& t, char sep = ',');

std::string to_string(StableMultOne s);

/// 64-bit FNV-1a, hex encoded; used as a content digest for golden files.
std::string fnv1a_hex(std::string_view data);

}  // namespace lrs
