#pragma once

#include "pbw/algebra.hpp"
#include "pbw/constraints.hpp"
#include "pbw/existence.hpp"
#include "pbw/oracle.hpp"
#include "pbw/parameters.hpp"
#include "pbw/polynomial.hpp"
#include "pbw/rational.hpp"
#include "pbw/shortcuts.hpp"
#include "pbw/survey.hpp"
