#pragma once

#include "gaussorder/arith.hpp"
#include "gaussorder/bounds.hpp"
#include "gaussorder/error.hpp"
#include "gaussorder/field.hpp"
#include "gaussorder/order.hpp"
#include "gaussorder/partitions.hpp"
#include "gaussorder/polynomial.hpp"
#include "gaussorder/verify.hpp"
