#pragma once

// Umbrella header. JSON/CSV rendering lives in intpat/io.hpp and needs nlohmann/json.

#include "intpat/dataset.hpp"
#include "intpat/errors.hpp"
#include "intpat/extent.hpp"
#include "intpat/galois.hpp"
#include "intpat/generator_store.hpp"
#include "intpat/miner_closed.hpp"
#include "intpat/miner_generators.hpp"
#include "intpat/number.hpp"
#include "intpat/oracle.hpp"
#include "intpat/pattern.hpp"
#include "intpat/scaling.hpp"
