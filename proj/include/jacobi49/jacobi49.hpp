#pragma once

#include "jacobi49/errors.hpp"
#include "jacobi49/checked.hpp"
#include "jacobi49/rational.hpp"
#include "jacobi49/prime_field.hpp"
#include "jacobi49/cyclotomic_ring.hpp"
#include "jacobi49/cyclotomy.hpp"
#include "jacobi49/order7.hpp"
#include "jacobi49/congruence49.hpp"
#include "jacobi49/artiad.hpp"
#include "jacobi49/certificate_json.hpp"
#include "jacobi49/selftest.hpp"
#include "jacobi49/scanner.hpp"
