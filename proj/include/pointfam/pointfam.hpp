#pragma once

#include "pointfam/core.hpp"
#include "pointfam/diffraction.hpp"
#include "pointfam/errors.hpp"
#include "pointfam/many_body.hpp"
#include "pointfam/one_body.hpp"
#include "pointfam/parallel.hpp"
#include "pointfam/sampling.hpp"
#include "pointfam/scattering.hpp"
#include "pointfam/states.hpp"
#include "pointfam/verify.hpp"
