#pragma once

#include "qcolor/alexander.hpp"
#include "qcolor/arith.hpp"
#include "qcolor/coloring_search.hpp"
#include "qcolor/diagram.hpp"
#include "qcolor/error.hpp"
#include "qcolor/laurent.hpp"
#include "qcolor/linear_coloring.hpp"
#include "qcolor/quandle.hpp"
#include "qcolor/smith.hpp"
#include "qcolor/twist.hpp"
