#pragma once

#include "diophantine.hpp"
#include "dynamics.hpp"
#include "errors.hpp"
#include "ext_int.hpp"
#include "gallery.hpp"
#include "matrix.hpp"
#include "render.hpp"
#include "semilinear.hpp"
#include "semimodule.hpp"
#include "teg.hpp"
