#pragma once

#include "orecontract/error.hpp"
#include "orecontract/pid.hpp"
#include "orecontract/poly.hpp"
#include "orecontract/ratfunc.hpp"
#include "orecontract/ore.hpp"
#include "orecontract/gb/module.hpp"
#include "orecontract/gb/ore_gb.hpp"
#include "orecontract/contraction.hpp"
#include "orecontract/complete.hpp"
#include "orecontract/closure.hpp"
#include "orecontract/parse.hpp"
#include "orecontract/report.hpp"
#include "orecontract/cli.hpp"
