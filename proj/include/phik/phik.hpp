#pragma once

#include "phik/factorization.hpp"
#include "phik/menon.hpp"
#include "phik/multiplicative.hpp"
#include "phik/summatory.hpp"
#include "phik/totient.hpp"
#include "phik/types.hpp"
