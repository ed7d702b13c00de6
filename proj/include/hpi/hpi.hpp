#pragma once

// Umbrella header: the whole library.

#include "hpi/algebra.hpp"
#include "hpi/characters.hpp"
#include "hpi/cli.hpp"
#include "hpi/codimension.hpp"
#include "hpi/errors.hpp"
#include "hpi/evaluation.hpp"
#include "hpi/exponent.hpp"
#include "hpi/group_algebra.hpp"
#include "hpi/haction.hpp"
#include "hpi/hgrouping.hpp"
#include "hpi/hpolynomial.hpp"
#include "hpi/matrix.hpp"
#include "hpi/model_io.hpp"
#include "hpi/modular.hpp"
#include "hpi/partition.hpp"
#include "hpi/perm.hpp"
#include "hpi/radical.hpp"
#include "hpi/rational.hpp"
#include "hpi/reports.hpp"
#include "hpi/section.hpp"
#include "hpi/semisimple.hpp"
#include "hpi/subspace.hpp"
#include "hpi/zoo.hpp"
