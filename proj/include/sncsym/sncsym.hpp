#pragma once

#include "sncsym/algebra.hpp"
#include "sncsym/bridge.hpp"
#include "sncsym/element.hpp"
#include "sncsym/enumerate.hpp"
#include "sncsym/io.hpp"
#include "sncsym/oracle.hpp"
#include "sncsym/oracle_expand.hpp"
#include "sncsym/order.hpp"
#include "sncsym/schur.hpp"
#include "sncsym/ssym.hpp"
#include "sncsym/superpartition.hpp"
#include "sncsym/tableau.hpp"
#include "sncsym/transition.hpp"
#include "sncsym/verify.hpp"
