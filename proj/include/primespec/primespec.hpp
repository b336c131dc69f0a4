#pragma once

#include "primespec/version.hpp"
#include "primespec/sieve.hpp"
#include "primespec/transform.hpp"
#include "primespec/spectral.hpp"
#include "primespec/reconstruct.hpp"
#include "primespec/stats.hpp"
