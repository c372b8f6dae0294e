#include "ordpref/fixtures.hpp"

#include "ordpref/fixture_data.hpp"

namespace ordpref::fixtures {

std::string_view example1_text() { return data::example1_dmp; }
std::string_view example1_two_states_text() { return data::example1_two_states_dmp; }
std::string_view example2_text() { return data::example2_dmp; }
std::string_view example2_convolution_text() { return data::example2_convolution_morph; }
std::string_view example3_text() { return data::example3_dmp; }
std::string_view example4_text() { return data::example4_dmp; }
std::string_view example4_extended_text() { return data::example4_extended_dmp; }

Dmp example1() { return parse_dmp(example1_text()); }
Dmp example1_two_states() { return parse_dmp(example1_two_states_text()); }
Dmp example2() { return parse_dmp(example2_text()); }
MorphismSpec example2_convolution() {
  return parse_morphism(example2_convolution_text(), example2().outcome_set());
}
Dmp example3() { return parse_dmp(example3_text()); }
Dmp example4() { return parse_dmp(example4_text()); }
Dmp example4_extended() { return parse_dmp(example4_extended_text()); }

}  // namespace ordpref::fixtures
