#pragma once

#include "unitdist/configuration.hpp"
#include "unitdist/errors.hpp"
#include "unitdist/graph.hpp"
#include "unitdist/io.hpp"
#include "unitdist/layout.hpp"
#include "unitdist/render.hpp"
#include "unitdist/solver.hpp"
#include "unitdist/verifier.hpp"
