#pragma once

#include "crdom/builders.hpp"
#include "crdom/canonical.hpp"
#include "crdom/constructions.hpp"
#include "crdom/enumerate.hpp"
#include "crdom/error.hpp"
#include "crdom/formulas.hpp"
#include "crdom/graph.hpp"
#include "crdom/graph6.hpp"
#include "crdom/oracle.hpp"
#include "crdom/parallel.hpp"
#include "crdom/propositions.hpp"
#include "crdom/solver.hpp"
#include "crdom/verify.hpp"
