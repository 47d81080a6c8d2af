#pragma once

#include <cmath>

#include <doctest.h>

#define CHECK_NEAR(actual, expected, tol)                                         \
    do {                                                                          \
        const double check_near_a = (actual);                                     \
        const double check_near_b = (expected);                                   \
        CHECK_MESSAGE(std::fabs(check_near_a - check_near_b) <= (tol),            \
                      check_near_a << " differs from " << check_near_b            \
                                   << " by more than " << (tol));                 \
    } while (0)
