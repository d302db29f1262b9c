#pragma once

#include "circsign/circle.hpp"
#include "circsign/circular_chromatic.hpp"
#include "circsign/errors.hpp"
#include "circsign/gf2.hpp"
#include "circsign/graph.hpp"
#include "circsign/io.hpp"
#include "circsign/nsp.hpp"
#include "circsign/rational.hpp"
#include "circsign/relalg.hpp"
#include "circsign/sigma.hpp"
#include "circsign/signed_graph.hpp"
#include "circsign/truemper.hpp"
