#pragma once

#include "krein/core.hpp"
#include "krein/forward.hpp"
#include "krein/generators.hpp"
#include "krein/inversion.hpp"
#include "krein/io.hpp"
#include "krein/metrics.hpp"
#include "krein/moments.hpp"
#include "krein/transforms.hpp"
