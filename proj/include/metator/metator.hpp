#pragma once

#include "batch.hpp"
#include "cyclotomic.hpp"
#include "finite_abelian.hpp"
#include "heisenberg.hpp"
#include "instance.hpp"
#include "integer.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "normal_form.hpp"
#include "random_instance.hpp"
#include "real.hpp"
#include "report.hpp"
#include "sublattice.hpp"
#include "tame_symbols.hpp"
#include "unramified.hpp"
