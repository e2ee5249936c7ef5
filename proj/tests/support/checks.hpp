#pragma once

#include <cmath>

#include <doctest.h>

// Absolute-tolerance comparison that still reports both values on failure.
#define CHECK_CLOSE(got, want, tol)                      \
    do {                                                 \
        const double got_ = (got), want_ = (want);       \
        CAPTURE(got_);                                   \
        CAPTURE(want_);                                  \
        CHECK(std::abs(got_ - want_) <= (tol));          \
    } while (0)

#define REQUIRE_CLOSE(got, want, tol)                    \
    do {                                                 \
        const double got_ = (got), want_ = (want);       \
        CAPTURE(got_);                                   \
        CAPTURE(want_);                                  \
        REQUIRE(std::abs(got_ - want_) <= (tol));        \
    } while (0)
