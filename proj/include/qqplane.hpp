#pragma once

#include "qqplane/error.hpp"
#include "qqplane/scalar_field.hpp"
#include "qqplane/incidence.hpp"
#include "qqplane/harmonicity.hpp"
#include "qqplane/survey.hpp"
#include "qqplane/figure_io.hpp"
#include "qqplane/commands.hpp"
