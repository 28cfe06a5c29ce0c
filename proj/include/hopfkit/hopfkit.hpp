#pragma once

#include "hopfkit/error.hpp"
#include "hopfkit/qpoly.hpp"
#include "hopfkit/scalar.hpp"
#include "hopfkit/ncpoly.hpp"
#include "hopfkit/rewrite.hpp"
#include "hopfkit/linalg.hpp"
#include "hopfkit/expr.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/hopf.hpp"
#include "hopfkit/structure.hpp"
#include "hopfkit/order.hpp"
#include "hopfkit/examples.hpp"
#include "hopfkit/presentation_io.hpp"
