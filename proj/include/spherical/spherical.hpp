#pragma once

#include "spherical/classify.hpp"
#include "spherical/errors.hpp"
#include "spherical/grassmann.hpp"
#include "spherical/heads.hpp"
#include "spherical/lr.hpp"
#include "spherical/numeric.hpp"
#include "spherical/shapes.hpp"
#include "spherical/version.hpp"
