#include "sllg/grid.hpp"

// Grid is header-only; this translation unit anchors the header for the build.
namespace sllg {}
