#pragma once

#include <string>
#include <string_view>

namespace sbs {

// Porter's 1980 suffix-stripping algorithm for English. Expects a lowercase
// word; tokens shorter than three letters or containing characters outside
// a-z are returned unchanged.
std::string porter_stem(std::string_view word);

} // namespace sbs
