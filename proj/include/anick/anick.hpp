#pragma once

#include "anick/chains.hpp"
#include "anick/confluence.hpp"
#include "anick/differential.hpp"
#include "anick/g23.hpp"
#include "anick/hochschild.hpp"
#include "anick/morse.hpp"
#include "anick/polynomial.hpp"
#include "anick/presentation.hpp"
#include "anick/rewriting.hpp"
#include "anick/scalar.hpp"
#include "anick/word.hpp"
