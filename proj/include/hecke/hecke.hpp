#pragma once

#include "characters.hpp"
#include "class_numbers.hpp"
#include "curves.hpp"
#include "finite_field.hpp"
#include "hypergeometric.hpp"
#include "kernels.hpp"
#include "modular_forms.hpp"
#include "numeric.hpp"
#include "trace_routes.hpp"
#include "verify.hpp"
