#include "lieforge/engine.hpp"

namespace lieforge {

template class Engine<RationalField>;
template class Engine<PrimeField>;

}  // namespace lieforge
