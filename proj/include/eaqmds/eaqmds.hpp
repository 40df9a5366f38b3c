#pragma once

#include "numtheory.hpp"
#include "gf.hpp"
#include "poly.hpp"
#include "matrix.hpp"
#include "tower.hpp"
#include "cosets.hpp"
#include "codes.hpp"
#include "eaqecc.hpp"
#include "published.hpp"
#include "families.hpp"
#include "oracle.hpp"
#include "record.hpp"
#include "errata.hpp"
#include "verify.hpp"
