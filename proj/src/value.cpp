#include "axcheck/value.hpp"

// Value is header-only; this unit keeps the header self-contained under -Wall.
