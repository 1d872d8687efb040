#pragma once

// Umbrella header.

#include "z4nu/error.hpp"
#include "z4nu/ring.hpp"
#include "z4nu/binpoly.hpp"
#include "z4nu/cyclic_poly.hpp"
#include "z4nu/echelon.hpp"
#include "z4nu/z4_code.hpp"
#include "z4nu/code.hpp"
#include "z4nu/relations.hpp"
#include "z4nu/rank.hpp"
#include "z4nu/oracle.hpp"
#include "z4nu/parse.hpp"
#include "z4nu/random.hpp"
#include "z4nu/report.hpp"
