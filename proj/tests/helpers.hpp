#pragma once

#include <cmath>

#include <doctest.h>

#define CHECK_NEAR(got, want, tol)                          \
  do {                                                      \
    const double got_ = (got), want_ = (want);              \
    INFO("got " << got_ << ", want " << want_);             \
    CHECK(std::abs(got_ - want_) <= (tol));                 \
  } while (0)
