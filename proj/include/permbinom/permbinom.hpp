#pragma once

#include "permbinom/error.hpp"
#include "permbinom/number_theory.hpp"
#include "permbinom/field.hpp"
#include "permbinom/characters.hpp"
#include "permbinom/polynomial.hpp"
#include "permbinom/permutation.hpp"
#include "permbinom/curves.hpp"
#include "permbinom/closed_form.hpp"
#include "permbinom/sharpness.hpp"
#include "permbinom/sweep.hpp"
#include "permbinom/report.hpp"
