#pragma once

// Built-in example problems (the same text as the files under data/).

#include <string_view>

#include "ordpref/dmp.hpp"
#include "ordpref/text_format.hpp"

namespace ordpref::fixtures {

std::string_view example1_text();
std::string_view example1_two_states_text();
std::string_view example2_text();
std::string_view example2_convolution_text();
std::string_view example3_text();
std::string_view example4_text();
std::string_view example4_extended_text();

/// Five-element lattice game with three states and no saddle point.
Dmp example1();
Dmp example1_two_states();
/// Vector payoffs whose alpha-greatest strategy changes under p+q.
Dmp example2();
MorphismSpec example2_convolution();
/// Alpha-equivalent strategies, one strictly Pareto-dominating the other.
Dmp example3();
Dmp example4();
/// example4 with non-realized outcomes f, g, h added.
Dmp example4_extended();

}  // namespace ordpref::fixtures
