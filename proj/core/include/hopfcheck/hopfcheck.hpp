#pragma once

#include "hopfcheck/anchors.hpp"
#include "hopfcheck/coeff.hpp"
#include "hopfcheck/errors.hpp"
#include "hopfcheck/gmod.hpp"
#include "hopfcheck/hopf.hpp"
#include "hopfcheck/reduced.hpp"
#include "hopfcheck/report.hpp"
#include "hopfcheck/spec_io.hpp"
#include "hopfcheck/suites.hpp"
#include "hopfcheck/verify.hpp"
#include "hopfcheck/zoo.hpp"
