#pragma once

#include "logcouple/compose.hpp"
#include "logcouple/couple.hpp"
#include "logcouple/errors.hpp"
#include "logcouple/eventual.hpp"
#include "logcouple/json.hpp"
#include "logcouple/normalize.hpp"
#include "logcouple/parser.hpp"
#include "logcouple/psi_subset.hpp"
#include "logcouple/rational.hpp"
#include "logcouple/sfunction.hpp"
#include "logcouple/solve.hpp"
#include "logcouple/term.hpp"
#include "logcouple/vector.hpp"
