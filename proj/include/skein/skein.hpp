#pragma once

#include "skein/bracket.hpp"
#include "skein/cabling.hpp"
#include "skein/diagram.hpp"
#include "skein/errors.hpp"
#include "skein/fixtures.hpp"
#include "skein/flat_eval.hpp"
#include "skein/gfp.hpp"
#include "skein/laurent.hpp"
#include "skein/localized.hpp"
#include "skein/poly_io.hpp"
#include "skein/polyxyz.hpp"
#include "skein/rational.hpp"
#include "skein/report_json.hpp"
#include "skein/surface_algebra.hpp"
#include "skein/symmetry.hpp"
#include "skein/temperley_lieb.hpp"
#include "skein/verify.hpp"
#include "skein/yamada.hpp"
