#pragma once

#include "koszul/version.hpp"
#include "koszul/errors.hpp"
#include "koszul/digest.hpp"
#include "koszul/gauss_rat.hpp"
#include "koszul/poly.hpp"
#include "koszul/frac.hpp"
#include "koszul/check_report.hpp"
#include "koszul/exterior.hpp"
#include "koszul/star.hpp"
#include "koszul/operators.hpp"
#include "koszul/monomial_order.hpp"
#include "koszul/groebner.hpp"
#include "koszul/linalg.hpp"
#include "koszul/koszul_complex.hpp"
#include "koszul/residue.hpp"
#include "koszul/parse.hpp"
#include "koszul/spec_file.hpp"
#include "koszul/report.hpp"
#include "koszul/verify.hpp"
#include "koszul/commands.hpp"
