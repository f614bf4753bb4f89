#pragma once

#include "simplex_angles/angle_tables.hpp"
#include "simplex_angles/applications.hpp"
#include "simplex_angles/decimal.hpp"
#include "simplex_angles/gamma.hpp"
#include "simplex_angles/half_int.hpp"
#include "simplex_angles/json_io.hpp"
#include "simplex_angles/pi_expr.hpp"
#include "simplex_angles/rational.hpp"
#include "simplex_angles/trig_poly.hpp"
#include "simplex_angles/verification.hpp"
