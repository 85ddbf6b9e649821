#pragma once

#include "pblp/rational.hpp"
#include "pblp/lp.hpp"
#include "pblp/problem.hpp"
#include "pblp/geometry.hpp"
#include "pblp/wsd.hpp"
#include "pblp/breakpoints.hpp"
#include "pblp/oracle.hpp"
#include "pblp/io.hpp"
