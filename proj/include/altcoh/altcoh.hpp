#pragma once

#include "altcoh/arith.hpp"
#include "altcoh/elemab.hpp"
#include "altcoh/error.hpp"
#include "altcoh/exterior.hpp"
#include "altcoh/fp_matrix.hpp"
#include "altcoh/group_table.hpp"
#include "altcoh/monomial.hpp"
#include "altcoh/perm.hpp"
#include "altcoh/perm_group.hpp"
#include "altcoh/stablecoh.hpp"
