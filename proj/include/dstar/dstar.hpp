#pragma once

#include "dstar/exactnum.hpp"
#include "dstar/graph.hpp"
#include "dstar/io.hpp"
#include "dstar/starseq.hpp"
#include "dstar/zagreb.hpp"
