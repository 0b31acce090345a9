#ifndef GALID_GALID_HPP
#define GALID_GALID_HPP

#include "galid/factor_type.hpp"
#include "galid/primes.hpp"
#include "galid/fp_poly.hpp"
#include "galid/int_poly.hpp"
#include "galid/numeric.hpp"
#include "galid/perm.hpp"
#include "galid/perm_group.hpp"
#include "galid/group_verify.hpp"
#include "galid/group_tables.hpp"
#include "galid/determine.hpp"
#include "galid/disc_bound.hpp"
#include "galid/poly_parse.hpp"
#include "galid/report_io.hpp"

#endif // GALID_GALID_HPP
