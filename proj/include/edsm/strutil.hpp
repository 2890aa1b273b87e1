#pragma once

#include <string>
#include <string_view>

namespace edsm {

// smallest period via KMP failure function
int min_period(std::string_view s);

// s is primitive iff it is not a proper integer power of a shorter string
bool is_primitive(std::string_view s);

// equal length and one is a rotation of the other
bool are_cyclic_equivalent(std::string_view a, std::string_view b);

std::string rotate_left(std::string_view s, int r);

} // namespace edsm
